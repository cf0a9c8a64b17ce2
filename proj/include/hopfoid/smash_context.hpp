#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfoid/context.hpp"

namespace hopfoid {

// Straightening data for a smash product A#T: the coproduct expansion of
// T-basis words (cached to table_degree in total T-degree) and the action of
// T-words on A-words. Supplied by the Hopf/YD layer.
class SmashProvider {
 public:
  struct CopTerm {
    Word left, right;
    Rational c;
  };

  virtual ~SmashProvider() = default;
  virtual const std::vector<CopTerm>& coproduct_terms(const Word& t) const = 0;
  virtual NCElement act(const Word& t, const Word& a) const = 0;
  virtual long table_degree() const = 0;
};

// Smash product A#T with multiplication
//   (a#t)(b#s) = a (t_(1) |> b) # t_(2) s.
// Words concatenate the A- and T-layouts.
class SmashContext : public AlgebraContext {
 public:
  SmashContext(const AlgebraContext* A, const AlgebraContext* T, const SmashProvider* prov,
               std::string name)
      : AlgebraContext(Kind::smash, std::move(name)), A_(A), T_(T), prov_(prov) {}

  const AlgebraContext* A() const { return A_; }
  const AlgebraContext* T() const { return T_; }

  int word_size() const override { return A_->word_size() + T_->word_size(); }
  Word unit_word() const override { return word_of(A_->unit_word(), T_->unit_word()); }
  long a_degree(const Word& w) const override { return A_->a_degree(a_part(w)); }
  long t_degree(const Word& w) const override { return T_->t_degree(t_part(w)); }
  long t_store_cap() const override { return T_->t_store_cap(); }
  long coproduct_table_degree() const override { return prov_->table_degree(); }

  std::string word_str(const Word& w) const override {
    return A_->word_str(a_part(w)) + "#" + T_->word_str(t_part(w));
  }

  NCElement mul_words(const Word& a, const Word& b) const override;
  std::vector<Word> basis(const Window& win) const override;

  Word a_part(const Word& w) const;
  Word t_part(const Word& w) const;
  Word word_of(const Word& aw, const Word& tw) const;

  // a # 1 and 1 # t embeddings of whole elements.
  NCElement from_a(const NCElement& a) const;
  NCElement from_t(const NCElement& t) const;

 private:
  const AlgebraContext* A_;
  const AlgebraContext* T_;
  const SmashProvider* prov_;
  mutable std::map<std::pair<Word, Word>, NCElement> memo_;
};

}  // namespace hopfoid
