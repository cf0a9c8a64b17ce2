#pragma once

#include <string>
#include <vector>

#include "hopfoid/smashoid.hpp"

namespace hopfoid {

// A named element of H (x) H; the name appears in check witnesses.
struct BGenerator {
  NCElement elem;
  std::string name;
};

// The balancing subalgebra of H (x) H and its companions, as windowed spans:
//
//   W      unital subalgebra generated by a (x) 1 and Sa_[1] (x) a_[0]
//   W0plus span of R(x) (x' (x) 1) over A-basis pairs, R(x) = x (x) 1 - Sx_[1] (x) x_[0]
//   Wplus  two-sided ideal of W generated by the R(a)
//   B      subalgebra generated by W together with Delta_T(T)
//   Bplus  two-sided ideal of B generated by the R(X)
//   ia_cap_b  the computed intersection I_A cap B
//
// The distinguished generators of B are X (x) 1 and SX_[1] (x) X_[0] for X in
// the A-basis plus Delta_T(t) for t in the T-basis, all within the window.
struct BalancingData {
  const SmashAlgebroid* parent = nullptr;
  Window window;
  WindowedSpan W, W0plus, Wplus, B, Bplus;
  WindowedSpan ia_cap_b;
  std::vector<BGenerator> w_generators;      // a (x) 1 and Sa_[1] (x) a_[0]
  std::vector<BGenerator> distinguished;     // w_generators plus Delta_T(t)
  std::vector<BGenerator> r_generators;      // R(a), a a non-unit basis word
};

BalancingData build_balancing(const SmashAlgebroid& E);

// g*u and u*g stay in I for every row u of I and every listed generator g.
// Products leaving the window are recorded as inconclusive, not failures.
CheckResult check_two_sided(const WindowedSpan& I, const std::vector<BGenerator>& gens,
                            const std::string& id, const std::string& statement);

// mu(id (x) tau) kills every basis row of I within the row's trusted horizon.
CheckResult check_annihilation(const SmashAlgebroid& E, const WindowedSpan& I,
                               const std::string& id, const std::string& statement);

// mu(id (x) tau) of any product of distinguished generators lands in A#1:
// exhaustive over products of length <= 3 on the group track, plus `samples`
// seeded random products of length <= 4 on every track.
CheckResult check_lemma_key(const SmashAlgebroid& E, const BalancingData& bd,
                            int samples, unsigned seed);

// The balancing suite: span inclusions, W+ = W0+, B+ = I_A cap B, (C3MI)
// two-sidedness, (C3Ma) image of delta_rep in B, (C3Mb) multiplicativity mod
// I_A cap B, mu(id (x) tau) annihilating W0+, W+ and B+, representative
// independence under B+ perturbations, and on the enveloping-algebra track
// the bracket relations of the R family.
std::vector<CheckResult> verify_balancing(const SmashAlgebroid& E, const BalancingData& bd,
                                          unsigned seed);

// The generator-level lemmas behind the suite: (x (x) 1)R(z) and R(x)R(z)
// and (Sx_[1] (x) x_[0])R(z) in W0+, W0+ two-sided in W, W+ = W0+, and the
// product lemma behind mu(id (x) tau) landing in A#1.
std::vector<CheckResult> verify_lemmas(const SmashAlgebroid& E, const BalancingData& bd,
                                       int samples, unsigned seed);

// Negative controls, each expected to FAIL on a sound structure: I_A
// two-sided in all of H (x) H, mu(id (x) tau) killing all of I_A, and
// mu(id (x) tau) multiplicative or antimultiplicative on H (x) H. The last
// two only fail off the commutative tracks.
std::vector<CheckResult> verify_balancing_controls(const SmashAlgebroid& E,
                                                   const BalancingData& bd);

}  // namespace hopfoid
