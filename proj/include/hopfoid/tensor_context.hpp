#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfoid/context.hpp"

namespace hopfoid {

// Componentwise tensor product of contexts (homogeneous powers H⊗H, H⊗H⊗H
// and mixed pairs like A⊗T). Words concatenate the slot layouts; degrees and
// storage caps add across slots, the coproduct table horizon is the weakest
// slot's.
class TensorContext : public AlgebraContext {
 public:
  TensorContext(std::vector<const AlgebraContext*> slots, std::string name);

  int slots() const { return static_cast<int>(slots_.size()); }
  const AlgebraContext* slot_ctx(int i) const { return slots_[i]; }

  int word_size() const override { return total_size_; }
  Word unit_word() const override;
  long a_degree(const Word& w) const override;
  long t_degree(const Word& w) const override;
  long t_store_cap() const override { return store_cap_; }
  long coproduct_table_degree() const override { return table_deg_; }
  std::string word_str(const Word& w) const override;

  NCElement mul_words(const Word& a, const Word& b) const override;
  std::vector<Word> basis(const Window& win) const override;

  Word slot_word(const Word& w, int i) const;
  Word splice(const std::vector<Word>& parts) const;

  // Pure tensor of slot elements; sound total-degree horizon is the min of
  // the slot horizons (the cheapest missing component sits in one slot).
  NCElement combine(const std::vector<NCElement>& parts) const;

 private:
  std::vector<const AlgebraContext*> slots_;
  std::vector<int> offsets_;
  int total_size_ = 0;
  long store_cap_ = 0;
  long table_deg_ = 0;
};

}  // namespace hopfoid
