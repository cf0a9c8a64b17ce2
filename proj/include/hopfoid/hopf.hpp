#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hopfoid/check.hpp"
#include "hopfoid/group_context.hpp"
#include "hopfoid/pbw_context.hpp"
#include "hopfoid/sym_context.hpp"
#include "hopfoid/tensor_context.hpp"

namespace hopfoid {

// Hopf algebra structure on a context T: coproduct into T(x)T, counit, and
// antipode, given on basis words and extended linearly. Owns the tensor
// square and cube contexts used by the laws.
class HopfStructure {
 public:
  virtual ~HopfStructure() = default;

  const AlgebraContext& T() const { return *T_; }
  const TensorContext& square() const { return *TT_; }
  const TensorContext& cube() const { return *TTT_; }
  Valid valid_to() const { return valid_to_; }

  // Total output degree up to which coproduct tables are complete.
  virtual long coproduct_table() const { return kNoCap; }

  virtual NCElement coproduct_word(const Word& w) const = 0;  // in square()
  virtual Rational counit_word(const Word& w) const = 0;
  virtual NCElement antipode_word(const Word& w) const = 0;   // in T()

  NCElement coproduct(const NCElement& f) const;
  NCElement antipode(const NCElement& f) const;
  Rational counit(const NCElement& f) const;

 protected:
  void init_powers(const AlgebraContext* t, Valid valid_to);

  const AlgebraContext* T_ = nullptr;
  std::unique_ptr<TensorContext> TT_, TTT_;
  Valid valid_to_ = kValidInf;
};

// Group algebra kG: Delta(g) = g(x)g, eps(g) = 1, S(g) = g^-1.
class GroupHopf final : public HopfStructure {
 public:
  explicit GroupHopf(GroupTable table);
  const GroupContext& group() const { return *ctx_; }

  NCElement coproduct_word(const Word& w) const override;
  Rational counit_word(const Word& w) const override;
  NCElement antipode_word(const Word& w) const override;

 private:
  std::unique_ptr<GroupContext> ctx_;
};

// Enveloping algebra U(g) with primitive generators: Delta(x) = x(x)1 + 1(x)x,
// eps(x) = 0, S(x) = -x, extended (anti)multiplicatively. Exact.
class UgHopf final : public HopfStructure {
 public:
  explicit UgHopf(LieData g);                 // owns its PBW context
  explicit UgHopf(const PBWContext* shared);  // borrows an existing one
  const PBWContext& enveloping() const { return *U_; }

  NCElement coproduct_word(const Word& w) const override;
  Rational counit_word(const Word& w) const override;
  NCElement antipode_word(const Word& w) const override;

 private:
  std::unique_ptr<PBWContext> own_;
  const PBWContext* U_ = nullptr;
  mutable std::map<Word, NCElement> cop_memo_, anti_memo_;
};

// Truncated dual of U(g): commutative polynomials in the dual generators
// modulo degree > store_cap, with the coproduct dual to multiplication in
// U(g) under the pairing <d^a, sym(x^b)> = delta_{ab} a!. Coproduct
// components are tabulated for total output degree <= store_cap+table_extra.
class DualHopf final : public HopfStructure {
 public:
  DualHopf(LieData g, long store_cap, long table_extra);

  const PBWContext& enveloping() const { return *U_; }
  const SymContext& dual_ctx() const { return *Tctx_; }
  long coproduct_table() const override { return table_deg_; }

  // <d^f, x^u>: f a dual-basis word, u a PBW word.
  Rational pair_words(const Word& f, const Word& u) const;
  Rational pairing(const NCElement& f, const NCElement& u) const;

  // sym(x^exps) in U(g): average of all orderings, via the recursion
  // sym(x^b) = (1/|b|) sum_mu b_mu x_mu sym(x^{b - e_mu}).
  const NCElement& sym_image(const Word& exps) const;

  NCElement coproduct_word(const Word& w) const override;
  Rational counit_word(const Word& w) const override;
  NCElement antipode_word(const Word& w) const override;

 private:
  // Coefficients of a PBW word in the symmetrized basis (unitriangular
  // change of basis, inverted degree-by-degree).
  const LinComb<Word>& sym_coeffs(const Word& pbw) const;
  void build_coproduct_table();

  LieData g_;
  long store_cap_, table_deg_;
  std::unique_ptr<PBWContext> U_;
  std::unique_ptr<SymContext> Tctx_;
  mutable std::map<Word, NCElement> sym_memo_;
  mutable std::map<Word, LinComb<Word>> coeff_memo_;
  std::map<Word, NCElement> cop_tab_;
};

std::unique_ptr<GroupHopf> group_hopf(GroupTable table);
std::unique_ptr<UgHopf> ug_hopf(LieData g);
std::unique_ptr<DualHopf> dual_truncated_hopf(LieData g, long store_cap,
                                              long table_extra);

// Applies the coproduct to leg 0 or 1 of x in h.square(), landing in h.cube().
NCElement cop_leg(const HopfStructure& h, const NCElement& x, int leg);
// Contracts leg 0 or 1 of x with the counit, landing in h.T().
NCElement counit_leg(const HopfStructure& h, const NCElement& x, int leg);
// m(S (x) id) for leg 0 or m(id (x) S) for leg 1, landing in h.T().
NCElement antipode_mul(const HopfStructure& h, const NCElement& x, int leg);

// Checks coassociativity, counit laws and both antipode convolution laws on
// every basis word of T in the window.
std::vector<CheckResult> verify_hopf(const HopfStructure& h, const Window& win);

Rational word_factorial(const Word& exps);

}  // namespace hopfoid
