#include "hopfoid/tensor_context.hpp"

#include <algorithm>

namespace hopfoid {

TensorContext::TensorContext(std::vector<const AlgebraContext*> slots, std::string name)
    : AlgebraContext(Kind::tensor, std::move(name)), slots_(std::move(slots)) {
  store_cap_ = 0;
  table_deg_ = kNoCap;
  for (const auto* s : slots_) {
    offsets_.push_back(total_size_);
    total_size_ += s->word_size();
    store_cap_ = std::min(store_cap_ + s->t_store_cap(), kNoCap);
    table_deg_ = std::min(table_deg_, s->coproduct_table_degree());
  }
}

Word TensorContext::unit_word() const {
  std::vector<Word> parts;
  for (const auto* s : slots_) parts.push_back(s->unit_word());
  return splice(parts);
}

Word TensorContext::slot_word(const Word& w, int i) const {
  const auto* s = slots_[i];
  Word part;
  part.data.assign(w.data.begin() + offsets_[i],
                   w.data.begin() + offsets_[i] + s->word_size());
  part.deg = 0;
  // Recover the slot's own degree stamp from a degree-zero shell.
  Word probe = part;
  probe.deg = static_cast<int>(s->a_degree(part) + s->t_degree(part));
  return probe;
}

Word TensorContext::splice(const std::vector<Word>& parts) const {
  Word w;
  for (const auto& p : parts) {
    w.deg += p.deg;
    w.data.insert(w.data.end(), p.data.begin(), p.data.end());
  }
  return w;
}

long TensorContext::a_degree(const Word& w) const {
  long d = 0;
  for (int i = 0; i < slots(); ++i) d += slots_[i]->a_degree(slot_word(w, i));
  return d;
}

long TensorContext::t_degree(const Word& w) const {
  long d = 0;
  for (int i = 0; i < slots(); ++i) d += slots_[i]->t_degree(slot_word(w, i));
  return d;
}

std::string TensorContext::word_str(const Word& w) const {
  std::string s;
  for (int i = 0; i < slots(); ++i) {
    if (i) s += " | ";
    s += slots_[i]->word_str(slot_word(w, i));
  }
  return s;
}

NCElement TensorContext::mul_words(const Word& a, const Word& b) const {
  std::vector<NCElement> parts;
  parts.reserve(slots());
  for (int i = 0; i < slots(); ++i)
    parts.push_back(slots_[i]->mul(slots_[i]->element(slot_word(a, i)),
                                   slots_[i]->element(slot_word(b, i))));
  return combine(parts);
}

NCElement TensorContext::combine(const std::vector<NCElement>& parts) const {
  Valid v = kValidInf;
  for (const auto& p : parts) v = vmin(v, p.valid);
  LinComb<Word> acc;
  std::vector<Word> pick(slots());
  auto rec = [&](auto&& self, int i, const Rational& c) -> void {
    if (i == slots()) {
      acc.add(splice(pick), c);
      return;
    }
    for (const auto& [w, pc] : parts[i].val.terms()) {
      pick[i] = w;
      self(self, i + 1, c * pc);
    }
  };
  rec(rec, 0, Rational(1));
  return make(std::move(acc), v);
}

std::vector<Word> TensorContext::basis(const Window& win) const {
  std::vector<std::vector<Word>> slot_words;
  for (const auto* s : slots_) slot_words.push_back(s->basis(win));
  std::vector<Word> out;
  std::vector<Word> pick(slots());
  auto rec = [&](auto&& self, int i, long t_used) -> void {
    if (i == slots()) {
      out.push_back(splice(pick));
      return;
    }
    for (const auto& w : slot_words[i]) {
      long t = slots_[i]->t_degree(w);
      if (t_used + t > win.t_total) continue;
      pick[i] = w;
      self(self, i + 1, t_used + t);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hopfoid
