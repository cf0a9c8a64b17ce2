#include "hopfoid/hopf.hpp"

#include <utility>

namespace hopfoid {

Rational word_factorial(const Word& exps) {
  Rational f(1);
  for (int e : exps.data)
    for (int i = 2; i <= e; ++i) f *= Rational(i);
  return f;
}

// ---- base ----------------------------------------------------------------

void HopfStructure::init_powers(const AlgebraContext* t, Valid valid_to) {
  T_ = t;
  valid_to_ = valid_to;
  TT_ = std::make_unique<TensorContext>(std::vector<const AlgebraContext*>{t, t},
                                        t->name() + "^(x)2");
  TTT_ = std::make_unique<TensorContext>(
      std::vector<const AlgebraContext*>{t, t, t}, t->name() + "^(x)3");
}

NCElement HopfStructure::coproduct(const NCElement& f) const {
  if (f.ctx != T_) throw ContextMismatch("coproduct: element not in T");
  LinComb<Word> acc;
  Valid v = f.valid;
  for (const auto& [w, c] : f.val.terms()) {
    NCElement d = coproduct_word(w);
    v = vmin(v, d.valid);
    acc.add_scaled(d.val, c);
  }
  return TT_->make(std::move(acc), v);
}

NCElement HopfStructure::antipode(const NCElement& f) const {
  if (f.ctx != T_) throw ContextMismatch("antipode: element not in T");
  LinComb<Word> acc;
  Valid v = f.valid;
  for (const auto& [w, c] : f.val.terms()) {
    NCElement s = antipode_word(w);
    v = vmin(v, s.valid);
    acc.add_scaled(s.val, c);
  }
  return T_->make(std::move(acc), v);
}

Rational HopfStructure::counit(const NCElement& f) const {
  if (f.ctx != T_) throw ContextMismatch("counit: element not in T");
  Rational r(0);
  for (const auto& [w, c] : f.val.terms()) r += c * counit_word(w);
  return r;
}

// ---- kG ------------------------------------------------------------------

GroupHopf::GroupHopf(GroupTable table)
    : ctx_(std::make_unique<GroupContext>(std::move(table), "kG")) {
  init_powers(ctx_.get(), kValidInf);
}

NCElement GroupHopf::coproduct_word(const Word& w) const {
  return TT_->element(TT_->splice({w, w}));
}

Rational GroupHopf::counit_word(const Word&) const { return Rational(1); }

NCElement GroupHopf::antipode_word(const Word& w) const {
  return ctx_->element(ctx_->inverse_word(w));
}

// ---- U(g) ----------------------------------------------------------------

UgHopf::UgHopf(LieData g)
    : own_(std::make_unique<PBWContext>(std::move(g), "U(g)")), U_(own_.get()) {
  init_powers(U_, kValidInf);
}

UgHopf::UgHopf(const PBWContext* shared) : U_(shared) {
  init_powers(U_, kValidInf);
}

NCElement UgHopf::coproduct_word(const Word& w) const {
  auto it = cop_memo_.find(w);
  if (it != cop_memo_.end()) return it->second;

  NCElement r;
  if (w.deg == 0) {
    r = TT_->one();
  } else {
    int top = U_->dim() - 1;
    while (top > 0 && w.data[top] == 0) --top;
    Word rest = w;
    rest.data[top] -= 1;
    rest.deg -= 1;
    Word gen = U_->gen_word(top);
    LinComb<Word> prim;
    prim.add(TT_->splice({gen, U_->unit_word()}), Rational(1));
    prim.add(TT_->splice({U_->unit_word(), gen}), Rational(1));
    r = TT_->mul(coproduct_word(rest), TT_->make(std::move(prim), kValidInf));
  }
  cop_memo_.emplace(w, r);
  return r;
}

Rational UgHopf::counit_word(const Word& w) const {
  return w.deg == 0 ? Rational(1) : Rational(0);
}

NCElement UgHopf::antipode_word(const Word& w) const {
  auto it = anti_memo_.find(w);
  if (it != anti_memo_.end()) return it->second;

  NCElement r;
  if (w.deg == 0) {
    r = U_->one();
  } else {
    int top = U_->dim() - 1;
    while (w.data[top] == 0) --top;
    Word rest = w;
    rest.data[top] -= 1;
    rest.deg -= 1;
    // S antimultiplicative: S(x^w' x_top) = S(x_top) S(x^w') = -x_top S(x^w')
    r = Rational(-1) * U_->mul(U_->element(U_->gen_word(top)), antipode_word(rest));
  }
  anti_memo_.emplace(w, r);
  return r;
}

// ---- truncated dual ------------------------------------------------------

DualHopf::DualHopf(LieData g, long store_cap, long table_extra)
    : g_(g), store_cap_(store_cap), table_deg_(store_cap + table_extra) {
  U_ = std::make_unique<PBWContext>(g_, "U(g)");
  std::vector<std::string> dual_names;
  for (const auto& n : g_.names) dual_names.push_back("d" + n);
  Tctx_ = std::make_unique<SymContext>(g_.dim, store_cap_, std::move(dual_names),
                                       "T(dual)");
  init_powers(Tctx_.get(), store_cap_);
  build_coproduct_table();
}

const NCElement& DualHopf::sym_image(const Word& exps) const {
  auto it = sym_memo_.find(exps);
  if (it != sym_memo_.end()) return it->second;

  NCElement r;
  if (exps.deg == 0) {
    r = U_->one();
  } else {
    Rational total(exps.deg);
    LinComb<Word> acc;
    Valid v = kValidInf;
    for (int mu = 0; mu < g_.dim; ++mu) {
      if (exps.data[mu] == 0) continue;
      Word rest = exps;
      rest.data[mu] -= 1;
      rest.deg -= 1;
      NCElement part = U_->mul(U_->element(U_->gen_word(mu)), sym_image(rest));
      v = vmin(v, part.valid);
      acc.add_scaled(part.val, Rational(exps.data[mu]) / total);
    }
    r = U_->make(std::move(acc), v);
  }
  return sym_memo_.emplace(exps, std::move(r)).first->second;
}

const LinComb<Word>& DualHopf::sym_coeffs(const Word& pbw) const {
  auto it = coeff_memo_.find(pbw);
  if (it != coeff_memo_.end()) return it->second;

  LinComb<Word> res = LinComb<Word>::single(pbw);
  NCElement diff = U_->element(pbw) - sym_image(pbw);
  for (const auto& [w, c] : diff.val.terms()) res.add_scaled(sym_coeffs(w), c);
  return coeff_memo_.emplace(pbw, std::move(res)).first->second;
}

Rational DualHopf::pair_words(const Word& f, const Word& u) const {
  return sym_coeffs(u).coeff(f) * word_factorial(f);
}

Rational DualHopf::pairing(const NCElement& f, const NCElement& u) const {
  if (f.ctx != Tctx_.get()) throw ContextMismatch("pairing: left side not in T");
  if (u.ctx != U_.get()) throw ContextMismatch("pairing: right side not in U(g)");
  Rational r(0);
  for (const auto& [fw, fc] : f.val.terms())
    for (const auto& [uw, uc] : u.val.terms()) r += fc * uc * pair_words(fw, uw);
  return r;
}

void DualHopf::build_coproduct_table() {
  std::map<Word, LinComb<Word>> tab;
  for (auto& e : enumerate_exponents(g_.dim, store_cap_)) {
    Word p{0, e};
    for (int k : e) p.deg += k;
    tab[p];  // ensure an entry for every stored basis word
  }

  auto words_of = [](std::vector<std::vector<int>> exps) {
    std::vector<Word> out;
    for (auto& e : exps) {
      Word w{0, e};
      for (int k : e) w.deg += k;
      out.push_back(std::move(w));
    }
    return out;
  };
  std::vector<Word> sigmas = words_of(enumerate_exponents(g_.dim, table_deg_));

  for (const Word& sig : sigmas) {
    Rational sig_fact = word_factorial(sig);
    for (const Word& tau : sigmas) {
      if (sig.deg + tau.deg > table_deg_) continue;
      NCElement prod = U_->mul(sym_image(sig), sym_image(tau));
      LinComb<Word> in_sym;
      for (const auto& [w, c] : prod.val.terms())
        in_sym.add_scaled(sym_coeffs(w), c);
      Rational denom = sig_fact * word_factorial(tau);
      Word pair_word = TT_->splice({sig, tau});
      for (const auto& [p, sp] : in_sym.terms()) {
        if (p.deg > store_cap_) continue;
        // <Delta d^p, sym_sig (x) sym_tau> = <d^p, sym_sig sym_tau>
        tab[p].add(pair_word, sp * word_factorial(p) / denom);
      }
    }
  }

  for (auto& [p, terms] : tab)
    cop_tab_.emplace(p, TT_->make(std::move(terms), table_deg_));
}

NCElement DualHopf::coproduct_word(const Word& w) const {
  auto it = cop_tab_.find(w);
  if (it == cop_tab_.end())
    throw std::logic_error("coproduct requested outside the stored basis");
  return it->second;
}

Rational DualHopf::counit_word(const Word& w) const {
  return w.deg == 0 ? Rational(1) : Rational(0);
}

NCElement DualHopf::antipode_word(const Word& w) const {
  // Dual to the U(g) antipode: S(sym_a) has image (-1)^|a| sym_a, so the
  // transpose is diagonal.
  Rational sign = (w.deg % 2 == 0) ? Rational(1) : Rational(-1);
  return Tctx_->element(w, sign);
}

// ---- factories -----------------------------------------------------------

std::unique_ptr<GroupHopf> group_hopf(GroupTable table) {
  return std::make_unique<GroupHopf>(std::move(table));
}

std::unique_ptr<UgHopf> ug_hopf(LieData g) {
  return std::make_unique<UgHopf>(std::move(g));
}

std::unique_ptr<DualHopf> dual_truncated_hopf(LieData g, long store_cap,
                                              long table_extra) {
  return std::make_unique<DualHopf>(std::move(g), store_cap, table_extra);
}

// ---- leg helpers ---------------------------------------------------------

NCElement cop_leg(const HopfStructure& h, const NCElement& x, int leg) {
  const TensorContext& TT = h.square();
  const TensorContext& T3 = h.cube();
  if (x.ctx != &TT) throw ContextMismatch("cop_leg: element not in T^(x)2");
  long word_cap = h.T().t_store_cap();
  LinComb<Word> acc;
  Valid v = x.valid;
  for (const auto& [w, c] : x.val.terms()) {
    Word u = TT.slot_word(w, 0), t = TT.slot_word(w, 1);
    const Word& l = leg == 0 ? u : t;
    if (word_cap != kNoCap && h.T().t_degree(l) > word_cap) {
      // No stored coproduct for this leg: every output word it would have
      // produced has total degree >= that of w, so cut the horizon there.
      v = vmin(v, TT.t_degree(w) - 1);
      continue;
    }
    NCElement d = h.coproduct_word(l);
    if (d.valid != kValidInf)
      v = vmin(v, TT.t_degree(w) - h.T().t_degree(l) + d.valid);
    for (const auto& [dw, dc] : d.val.terms()) {
      Word p = TT.slot_word(dw, 0), q = TT.slot_word(dw, 1);
      acc.add(leg == 0 ? T3.splice({p, q, t}) : T3.splice({u, p, q}), c * dc);
    }
  }
  return T3.make(std::move(acc), v);
}

NCElement counit_leg(const HopfStructure& h, const NCElement& x, int leg) {
  const TensorContext& TT = h.square();
  if (x.ctx != &TT) throw ContextMismatch("counit_leg: element not in T^(x)2");
  LinComb<Word> acc;
  for (const auto& [w, c] : x.val.terms()) {
    Word u = TT.slot_word(w, 0), t = TT.slot_word(w, 1);
    acc.add(leg == 0 ? t : u, c * h.counit_word(leg == 0 ? u : t));
  }
  return h.T().make(std::move(acc), x.valid);
}

NCElement antipode_mul(const HopfStructure& h, const NCElement& x, int leg) {
  const TensorContext& TT = h.square();
  if (x.ctx != &TT) throw ContextMismatch("antipode_mul: element not in T^(x)2");
  NCElement acc = h.T().zero();
  Valid v = x.valid;
  for (const auto& [w, c] : x.val.terms()) {
    Word u = TT.slot_word(w, 0), t = TT.slot_word(w, 1);
    NCElement prod = leg == 0
                         ? h.T().mul(h.antipode_word(u), h.T().element(t))
                         : h.T().mul(h.T().element(u), h.antipode_word(t));
    acc = acc + c * prod;
  }
  return h.T().make(acc.val, vmin(v, acc.valid));
}

// ---- verifier ------------------------------------------------------------

std::vector<CheckResult> verify_hopf(const HopfStructure& h, const Window& win) {
  Checker co("hopf.coassoc", "(Delta (x) id)Delta = (id (x) Delta)Delta");
  Checker cu("hopf.counit", "(eps (x) id)Delta = id = (id (x) eps)Delta");
  Checker an("hopf.antipode", "m(S (x) id)Delta = eta eps = m(id (x) S)Delta");

  for (const Word& w : h.T().basis(win)) {
    std::string name = h.T().word_str(w);
    NCElement d = h.coproduct_word(w);

    Agreement a1 = agree(cop_leg(h, d, 0), cop_leg(h, d, 1));
    co.record(a1.equal, name, a1.horizon);

    NCElement idw = h.T().element(w);
    Agreement c1 = agree(counit_leg(h, d, 0), idw);
    Agreement c2 = agree(counit_leg(h, d, 1), idw);
    cu.record(c1.equal && c2.equal, name, vmin(c1.horizon, c2.horizon));

    NCElement target = h.counit_word(w) * h.T().one();
    Agreement s1 = agree(antipode_mul(h, d, 0), target);
    Agreement s2 = agree(antipode_mul(h, d, 1), target);
    an.record(s1.equal && s2.equal, name, vmin(s1.horizon, s2.horizon));
  }
  return {co.done(), cu.done(), an.done()};
}

}  // namespace hopfoid
