#include "hopfoid/smash_context.hpp"

#include <algorithm>

namespace hopfoid {

Word SmashContext::a_part(const Word& w) const {
  Word part;
  part.data.assign(w.data.begin(), w.data.begin() + A_->word_size());
  part.deg = 0;
  part.deg = static_cast<int>(A_->a_degree(part) + A_->t_degree(part));
  return part;
}

Word SmashContext::t_part(const Word& w) const {
  Word part;
  part.data.assign(w.data.begin() + A_->word_size(), w.data.end());
  part.deg = 0;
  part.deg = static_cast<int>(T_->a_degree(part) + T_->t_degree(part));
  return part;
}

Word SmashContext::word_of(const Word& aw, const Word& tw) const {
  Word w;
  w.deg = aw.deg + tw.deg;
  w.data = aw.data;
  w.data.insert(w.data.end(), tw.data.begin(), tw.data.end());
  return w;
}

NCElement SmashContext::mul_words(const Word& a, const Word& b) const {
  auto key = std::make_pair(a, b);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  Word aw = a_part(a), pw = t_part(a);
  Word bw = a_part(b), qw = t_part(b);

  // (a#p)(b#q) = sum a (p_(1) |> b) # p_(2) q. Missing coproduct terms past
  // the table contribute only at result T-degree > table_degree - degA(b).
  LinComb<Word> acc;
  Valid v = vsub(static_cast<Valid>(prov_->table_degree()), A_->a_degree(bw));
  for (const auto& term : prov_->coproduct_terms(pw)) {
    NCElement hit = prov_->act(term.left, bw);
    v = vmin(v, hit.valid);
    if (hit.is_zero()) continue;
    NCElement left = A_->mul(A_->element(aw), hit);
    NCElement tp = T_->mul_words(term.right, qw);
    v = vmin(v, vmin(left.valid, tp.valid));
    for (const auto& [u, ca] : left.val.terms())
      for (const auto& [t, ct] : tp.val.terms())
        acc.add(word_of(u, t), term.c * ca * ct);
  }
  NCElement r = make(std::move(acc), v);
  memo_.emplace(std::move(key), r);
  return r;
}

std::vector<Word> SmashContext::basis(const Window& win) const {
  std::vector<Word> aw = A_->basis(win);
  std::vector<Word> tw = T_->basis(win);
  std::vector<Word> out;
  out.reserve(aw.size() * tw.size());
  for (const auto& u : aw)
    for (const auto& t : tw) out.push_back(word_of(u, t));
  std::sort(out.begin(), out.end());
  return out;
}

NCElement SmashContext::from_a(const NCElement& a) const {
  if (a.ctx != A_) throw ContextMismatch("from_a: element not in the A slot");
  LinComb<Word> v;
  for (const auto& [w, c] : a.val.terms()) v.add(word_of(w, T_->unit_word()), c);
  return make(std::move(v), a.valid);
}

NCElement SmashContext::from_t(const NCElement& t) const {
  if (t.ctx != T_) throw ContextMismatch("from_t: element not in the T slot");
  LinComb<Word> v;
  for (const auto& [w, c] : t.val.terms()) v.add(word_of(A_->unit_word(), w), c);
  return make(std::move(v), t.valid);
}

}  // namespace hopfoid
