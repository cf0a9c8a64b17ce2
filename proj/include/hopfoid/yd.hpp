#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "hopfoid/hopf.hpp"
#include "hopfoid/smash_context.hpp"

namespace hopfoid {

// Braided-commutative left-right Yetter-Drinfeld module algebra A over the
// Hopf algebra T: left action T(x)A -> A and right coaction A -> A(x)T^op,
// given on basis words.
class YDStructure {
 public:
  virtual ~YDStructure() = default;

  const HopfStructure& hopf() const { return *hopf_; }
  const AlgebraContext& A() const { return *A_; }
  const TensorContext& AT() const { return *AT_; }    // A (x) T
  const TensorContext& ATT() const { return *ATT_; }  // A (x) T (x) T
  Valid valid_to() const { return valid_to_; }

  virtual NCElement act_word(const Word& t, const Word& a) const = 0;  // in A
  virtual NCElement coact_word(const Word& a) const = 0;               // in AT

  NCElement act(const NCElement& t, const NCElement& a) const;
  NCElement coact(const NCElement& a) const;

 protected:
  void init(const HopfStructure* h, const AlgebraContext* a, Valid valid_to);

  const HopfStructure* hopf_ = nullptr;
  const AlgebraContext* A_ = nullptr;
  std::unique_ptr<TensorContext> AT_, ATT_;
  Valid valid_to_ = kValidInf;
};

// Product in A (x) T^op: (a (x) t)(b (x) s) = ab (x) st.
NCElement op_mul(const TensorContext& AT, const NCElement& x, const NCElement& y);

// kG acting on itself by conjugation, with coaction h -> h (x) h^-1.
class AdjointYD final : public YDStructure {
 public:
  explicit AdjointYD(const GroupTable& table);
  NCElement act_word(const Word& t, const Word& a) const override;
  NCElement coact_word(const Word& a) const override;

 private:
  std::unique_ptr<GroupHopf> hopf_own_;
  std::unique_ptr<GroupContext> A_own_;
};

// A = U(g) over the truncated dual T: action t |> a = a_(1) <t, a_(2)>; the
// generator coactions are solved degree-by-degree from braided commutativity
// against every PBW basis word of degree <= the storage cap (the constraint
// system is unitriangular with diagonal a!, so the solution is unique), then
// extended to monomials as an algebra map into A (x) T^op.
class UgYD final : public YDStructure {
 public:
  UgYD(LieData g, long user_cap, long a_cap, long slack);

  const DualHopf& dual() const { return *dual_; }
  const UgHopf& lift() const { return *ahopf_; }  // Hopf structure on A = U(g)
  long user_cap() const { return user_cap_; }
  long store_cap() const { return store_cap_; }
  const NCElement& gen_coaction(int mu) const { return rho_[mu]; }
  std::vector<long> coaction_a_degrees() const;  // no ansatz: computed, reported

  NCElement act_word(const Word& t, const Word& a) const override;
  NCElement coact_word(const Word& a) const override;

 private:
  void solve_coaction();

  LieData g_;
  long user_cap_, store_cap_;
  std::unique_ptr<DualHopf> dual_;
  std::unique_ptr<UgHopf> ahopf_;
  std::vector<NCElement> rho_;
  mutable std::map<std::pair<Word, Word>, NCElement> act_memo_;
  mutable std::map<Word, NCElement> coact_memo_;
};

// Construction-validating factories: both run verify_yd over the stated
// window and throw StructureInvalid on any failed check.
std::unique_ptr<AdjointYD> adjoint_yd(const GroupTable& table);
std::unique_ptr<UgYD> ug_yd(LieData g, long user_cap, long a_cap, long slack = 2);

// Checks the Hopf-action laws, the coaction laws (algebra map into A(x)T^op,
// coassociativity, counit), the Yetter-Drinfeld compatibility, and braided
// commutativity in both forms, asserting the two forms agree pairwise.
std::vector<CheckResult> verify_yd(const YDStructure& yd, const Window& win);

// Adapts a YD structure to the straightening interface of the smash context.
class YDProvider final : public SmashProvider {
 public:
  explicit YDProvider(const YDStructure* yd) : yd_(yd) {}

  const std::vector<CopTerm>& coproduct_terms(const Word& t) const override;
  NCElement act(const Word& t, const Word& a) const override {
    return yd_->act_word(t, a);
  }
  long table_degree() const override { return yd_->hopf().coproduct_table(); }

 private:
  const YDStructure* yd_;
  mutable std::map<Word, std::vector<CopTerm>> cache_;
};

}  // namespace hopfoid
