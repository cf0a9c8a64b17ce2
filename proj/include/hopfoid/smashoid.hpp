#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hopfoid/subspace.hpp"
#include "hopfoid/yd.hpp"

namespace hopfoid {

// Verdict of a windowed membership test. decided && in_span: the element
// agrees with a span member below `horizon`. decided && !in_span: a component
// below the horizon survives reduction against an unclipped span, which is a
// genuine failure. !decided: the residue may stem from products the window
// clipped, or the element itself left the window; nothing can be concluded.
struct Membership {
  bool in_span = false;
  bool decided = true;
  bool exceeded = false;  // the element had components outside the window
  Valid horizon = kValidInf;
  std::string witness;
};

// Windowed span of horizon-tagged rows in a tensor power of H. Feeding
// truncates T-components above the window, with the row tag recording the
// cut (T carries trust horizons), but an element whose A-part leaves the
// window is dropped whole and the span marked clipped: A-degrees are exact,
// so truncating there would silently change the element.
class WindowedSpan {
 public:
  WindowedSpan() = default;  // empty shell, usable only after assignment
  WindowedSpan(const AlgebraContext* space, Window win) : space_(space), win_(win) {}

  const AlgebraContext& space() const { return *space_; }
  const Window& window() const { return win_; }
  const SubspaceBasis<Word>& rows() const { return rows_; }
  std::size_t rank() const { return rows_.rank(); }
  bool clipped() const { return clipped_; }
  void mark_clipped() { clipped_ = true; }

  // T-degree ceiling of the span's universe.
  long t_cut() const { return std::min(win_.t_cap, win_.t_total); }

  struct Fed {
    bool inserted = false;
    LinComb<Word> fresh;  // normalized novel part, for closure worklists
    Valid tag = kValidInf;
  };
  Fed feed(const NCElement& p);

  Membership reduce(const NCElement& d) const;

  // Takes over an externally built echelon, e.g. an intersection of two
  // stored spans. Rows keep their tags even when components sit above them:
  // each row is literally a vector of the stored spans, and its tag still
  // bounds the horizon to which it tracks a true element, which is all
  // reduce() relies on when it min-combines tags into the result horizon.
  void adopt(SubspaceBasis<Word> rows) { rows_ = std::move(rows); }

 private:
  const AlgebraContext* space_ = nullptr;
  Window win_;
  SubspaceBasis<Word> rows_;
  bool clipped_ = false;
};

// Single-letter generator words of a context: algebra generators whose
// products reach every basis word (group elements, PBW/symmetric generators,
// their embeddings for smash and tensor contexts).
std::vector<Word> generator_words(const AlgebraContext& ctx);

// The scalar-extension Hopf algebroid H = A#T over a braided-commutative
// Yetter-Drinfeld module algebra A: source alpha(a) = a#1, target
// beta(a) = a_[0]#a_[1], coproduct representative
// delta_rep(a#t) = (a#t_(1)) (x) (1#t_(2)), counit eps(a#t) = a eps_T(t),
// antipode tau(a#t) = S(t) S^2(a_[1]) a_[0] with products in H, and the
// kernel ideal I_A of H (x) H -> H (x)_A H as a windowed span.
//
// H (x)_A H is never materialized as a quotient: every statement about it is
// phrased as a congruence mod the windowed I_A span, keeping computations
// exact and window-auditable. Caches are built eagerly; the object is
// immutable afterwards and all queries are const.
class SmashAlgebroid {
 public:
  SmashAlgebroid(const YDStructure* yd, Window win);

  const YDStructure& yd() const { return *yd_; }
  const AlgebraContext& A() const { return yd_->A(); }
  const SmashContext& H() const { return *H_; }
  const TensorContext& H2() const { return *H2_; }
  const TensorContext& H3() const { return *H3_; }
  const Window& window() const { return win_; }
  long t_cut() const { return std::min(win_.t_cap, win_.t_total); }

  // A-basis and H-basis within the window; H2 words whose slot-summed
  // degrees stay inside it (the universe of the I_A span).
  const std::vector<Word>& a_basis() const { return a_basis_; }
  const std::vector<Word>& h_basis() const { return h_basis_; }
  const std::vector<Word>& h2_basis() const { return h2_basis_; }

  NCElement alpha_word(const Word& a) const;
  NCElement beta_word(const Word& a) const;
  NCElement alpha(const NCElement& a) const;
  NCElement beta(const NCElement& a) const;
  NCElement epsilon(const NCElement& h) const;  // in A
  NCElement tau(const NCElement& h) const;
  NCElement delta_rep(const NCElement& h) const;  // in H2
  NCElement delta_rep_word(const Word& h) const;
  NCElement tau_word(const Word& h) const;

  // I(a) = beta(a) (x) 1 - 1 (x) alpha(a) and R(a) = a (x) 1 - Sa_[1] (x) a_[0]
  // for a basis word a of A; twisted_embed is the second R-term on its own.
  NCElement i_gen(const Word& a) const;
  NCElement r_gen(const Word& a) const;
  NCElement twisted_embed(const Word& a) const;

  const WindowedSpan& ia_basis() const { return *ia_; }

  // Congruence mod I_A. congruent throws WindowExceeded when u - v has
  // components outside the cached window; reduce_mod_ia reports the same
  // situation as an undecided Membership instead.
  Membership reduce_mod_ia(const NCElement& d) const;
  bool congruent(const NCElement& u, const NCElement& v) const;

  // u (x)_A-balanced right-multiplication test over every basis a of A that
  // keeps the products inside the window:
  //   u (beta(a) (x) 1) == u (1 (x) alpha(a)) mod I_A.
  Membership takeuchi_detail(const NCElement& u) const;
  bool takeuchi_member(const NCElement& u) const;

  // Canonicalizers onto H (x) (1#T) tensor legs: gamma maps
  // h (x) (a#t) -> beta(a) h (x) (1#t); gamma3 canonicalizes slot 3 into
  // slot 2, then slot 2 into slot 1. Both vanish on the respective
  // congruence spans, so equal canonical forms decide congruence.
  NCElement gamma(const NCElement& u) const;
  NCElement gamma3(const NCElement& u) const;

  // mu(id (x) tau): h (x) k -> h tau(k), and mu(tau (x) id): h (x) k ->
  // tau(h) k. Linear, deliberately not (anti)multiplicative.
  NCElement mu_id_tau(const NCElement& u) const;
  NCElement mu_tau_id(const NCElement& u) const;

 private:
  void build_ia();
  NCElement gamma_slot(const NCElement& u, int slot) const;
  // Horizon discount for maps built from tau: the action legs inside tau can
  // push a dropped T-component down by at most the A-degree of the element,
  // bounded by the window's A-cap for every verified instance.
  Valid tau_trust(Valid v) const;

  const YDStructure* yd_;
  Window win_;
  std::unique_ptr<YDProvider> prov_;
  std::unique_ptr<SmashContext> H_;
  std::unique_ptr<TensorContext> H2_, H3_;
  std::unique_ptr<WindowedSpan> ia_;
  std::vector<Word> a_basis_, h_basis_, h2_basis_;
  mutable std::map<Word, NCElement> tau_memo_, delta_memo_, beta_memo_;
};

// Per-instance recorders shared by the windowed suites: an Agreement, a
// Membership, or the vanishing of an element, each downgraded to
// inconclusive when the window leaves nothing to compare.
inline void rec_agree(Checker& ck, const Agreement& ag, const std::string& inst) {
  if (ag.horizon < 0)
    ck.inconclusive(inst + ": no comparable components at this window");
  else
    ck.record(ag.equal, inst, ag.horizon);
}

inline void rec_member(Checker& ck, const Membership& m, const std::string& inst) {
  if (!m.decided)
    ck.inconclusive(inst + (m.witness.empty() ? "" : ": " + m.witness));
  else
    ck.record(m.in_span, inst + ": " + m.witness, m.horizon);
}

inline void rec_vanish(Checker& ck, const AlgebraContext& ctx, const NCElement& z,
                       const std::string& inst) {
  if (z.valid < 0) {
    ck.inconclusive(inst + ": nothing trusted at this window");
    return;
  }
  for (const auto& [w, c] : z.val.terms()) {
    if (ctx.t_degree(w) > z.valid) continue;
    ck.fail(inst + ": " + rat_str(c) + "*" + ctx.word_str(w), z.valid);
    return;
  }
  ck.pass(z.valid);
}

// Axioms of the left bialgebroid structure: associativity, (C1), (C2),
// (C3a), (C3b), the counit laws and coassociativity mod the 3-fold
// congruence, plus the right-ideal consistency of the R(a) family.
std::vector<CheckResult> verify_bialgebroid(const SmashAlgebroid& E);

// Antipode laws phrased through the balancing route: tau antimultiplicative,
// tau(beta(a)) = alpha(a), mu(tau (x) id) killing I_A rows, and the two
// counit-antipode laws evaluated on delta_rep.
std::vector<CheckResult> verify_antipode(const SmashAlgebroid& E);

// Antipode laws phrased through a linear section gamma of the projection
// H (x) H -> H (x)_A H: gamma of delta_rep, gamma as a section, gamma
// vanishing on I_A, representative independence under randomized I_A
// perturbations, and the counit-antipode law routed through gamma.
std::vector<CheckResult> verify_lu(const SmashAlgebroid& E, unsigned seed);

}  // namespace hopfoid
