#include "hopfoid/yd.hpp"

#include <utility>

namespace hopfoid {

// ---- base ----------------------------------------------------------------

void YDStructure::init(const HopfStructure* h, const AlgebraContext* a,
                       Valid valid_to) {
  hopf_ = h;
  A_ = a;
  valid_to_ = valid_to;
  const AlgebraContext* t = &h->T();
  AT_ = std::make_unique<TensorContext>(std::vector<const AlgebraContext*>{a, t},
                                        a->name() + " (x) " + t->name());
  ATT_ = std::make_unique<TensorContext>(
      std::vector<const AlgebraContext*>{a, t, t},
      a->name() + " (x) " + t->name() + "^2");
}

NCElement YDStructure::act(const NCElement& t, const NCElement& a) const {
  if (t.ctx != &hopf_->T()) throw ContextMismatch("act: left factor not in T");
  if (a.ctx != A_) throw ContextMismatch("act: right factor not in A");
  LinComb<Word> acc;
  Valid v = a.valid;
  for (const auto& [tw, tc] : t.val.terms()) {
    for (const auto& [aw, ac] : a.val.terms()) {
      NCElement r = act_word(tw, aw);
      v = vmin(v, r.valid);
      acc.add_scaled(r.val, tc * ac);
    }
  }
  // Discarded T-components of t of degree <= deg_A(a) would have acted
  // nontrivially, so a horizon below that degree poisons the whole result.
  if (t.valid < AlgebraContext::max_a_degree(a)) v = kValidNone;
  return A_->make(std::move(acc), v);
}

NCElement YDStructure::coact(const NCElement& a) const {
  if (a.ctx != A_) throw ContextMismatch("coact: element not in A");
  LinComb<Word> acc;
  Valid v = a.valid;
  for (const auto& [aw, ac] : a.val.terms()) {
    NCElement r = coact_word(aw);
    v = vmin(v, r.valid);
    acc.add_scaled(r.val, ac);
  }
  return AT_->make(std::move(acc), v);
}

NCElement op_mul(const TensorContext& AT, const NCElement& x, const NCElement& y) {
  if (x.ctx != &AT || y.ctx != &AT) throw ContextMismatch("op_mul: foreign element");
  const AlgebraContext* A = AT.slot_ctx(0);
  const AlgebraContext* T = AT.slot_ctx(1);
  LinComb<Word> acc;
  Valid v = vmin(x.valid, y.valid);
  for (const auto& [xw, xc] : x.val.terms()) {
    Word xa = AT.slot_word(xw, 0), xt = AT.slot_word(xw, 1);
    for (const auto& [yw, yc] : y.val.terms()) {
      Word ya = AT.slot_word(yw, 0), yt = AT.slot_word(yw, 1);
      NCElement pa = A->mul_words(xa, ya);
      NCElement pt = T->mul(T->element(yt), T->element(xt));  // opposite order
      v = vmin(v, vmin(pa.valid, pt.valid));
      for (const auto& [aw, ac] : pa.val.terms())
        for (const auto& [tw, tc] : pt.val.terms())
          acc.add(AT.splice({aw, tw}), xc * yc * ac * tc);
    }
  }
  return AT.make(std::move(acc), v);
}

// ---- adjoint track -------------------------------------------------------

AdjointYD::AdjointYD(const GroupTable& table)
    : hopf_own_(group_hopf(table)),
      A_own_(std::make_unique<GroupContext>(table, "A=kG")) {
  init(hopf_own_.get(), A_own_.get(), kValidInf);
}

NCElement AdjointYD::act_word(const Word& t, const Word& a) const {
  const GroupTable& g = A_own_->table();
  int ti = t.data[0], ai = a.data[0];
  return A_->element(A_own_->word_of(g.mul[g.mul[ti][ai]][g.inv[ti]]));
}

NCElement AdjointYD::coact_word(const Word& a) const {
  const GroupTable& g = A_own_->table();
  return AT_->element(AT_->splice({a, Word{0, {g.inv[a.data[0]]}}}));
}

// ---- U(g) track ----------------------------------------------------------

UgYD::UgYD(LieData g, long user_cap, long a_cap, long slack)
    : g_(std::move(g)),
      user_cap_(user_cap),
      store_cap_(user_cap + slack * a_cap) {
  dual_ = dual_truncated_hopf(g_, store_cap_, a_cap);
  ahopf_ = std::make_unique<UgHopf>(&dual_->enveloping());
  init(dual_.get(), &dual_->enveloping(), store_cap_);
  solve_coaction();
}

NCElement UgYD::act_word(const Word& t, const Word& a) const {
  auto key = std::make_pair(t, a);
  auto it = act_memo_.find(key);
  if (it != act_memo_.end()) return it->second;

  const TensorContext& UU = ahopf_->square();
  NCElement d = ahopf_->coproduct_word(a);
  LinComb<Word> acc;
  for (const auto& [w, c] : d.val.terms()) {
    Word a2 = UU.slot_word(w, 1);
    Rational p = dual_->pair_words(t, a2);
    if (p != 0) acc.add(UU.slot_word(w, 0), c * p);
  }
  NCElement r = A_->make(std::move(acc), kValidInf);
  act_memo_.emplace(std::move(key), r);
  return r;
}

void UgYD::solve_coaction() {
  const PBWContext& U = dual_->enveloping();
  // Tests run over the PBW basis in ascending degree; the unknown of level d
  // at exponent gamma is pinned by the test at x^gamma because the top block
  // of the action matrix is diag(gamma!).
  std::vector<Word> tests;
  for (auto& e : enumerate_exponents(g_.dim, store_cap_)) {
    Word w{0, e};
    for (int k : e) w.deg += k;
    tests.push_back(std::move(w));
  }

  for (int mu = 0; mu < g_.dim; ++mu) {
    NCElement xmu = U.element(U.gen_word(mu));
    std::map<Word, NCElement> y;
    for (const Word& gamma : tests) {
      NCElement resid = U.mul(U.element(gamma), xmu);
      for (const auto& [beta, ycoef] : y)
        resid = resid - U.mul(ycoef, act_word(beta, gamma));
      y.emplace(gamma, Rational(1) / word_factorial(gamma) * resid);
    }
    LinComb<Word> acc;
    for (const auto& [beta, ycoef] : y)
      for (const auto& [aw, ac] : ycoef.val.terms())
        acc.add(AT_->splice({aw, beta}), ac);
    rho_.push_back(AT_->make(std::move(acc), store_cap_));

    // The solve zeroes each residual by construction; a nonzero recheck means
    // the triangularity assumption broke down.
    for (const Word& gamma : tests) {
      NCElement lhs = A_->zero();
      for (const auto& [beta, ycoef] : y)
        lhs = lhs + U.mul(ycoef, act_word(beta, gamma));
      NCElement rhs = U.mul(U.element(gamma), xmu);
      if (!(lhs.val == rhs.val))
        throw NoSolution("coaction solve inconsistent at test " +
                         U.word_str(gamma) + " for generator " + g_.names[mu]);
    }
  }
}

NCElement UgYD::coact_word(const Word& a) const {
  auto it = coact_memo_.find(a);
  if (it != coact_memo_.end()) return it->second;

  NCElement r;
  if (a.deg == 0) {
    r = AT_->one();
  } else {
    int top = g_.dim - 1;
    while (top > 0 && a.data[top] == 0) --top;
    Word rest = a;
    rest.data[top] -= 1;
    rest.deg -= 1;
    r = op_mul(*AT_, coact_word(rest), rho_[top]);
  }
  coact_memo_.emplace(a, r);
  return r;
}

std::vector<long> UgYD::coaction_a_degrees() const {
  std::vector<long> out;
  for (const auto& r : rho_) out.push_back(AlgebraContext::max_a_degree(r));
  return out;
}

// ---- verifier ------------------------------------------------------------

std::vector<CheckResult> verify_yd(const YDStructure& yd, const Window& win) {
  const HopfStructure& H = yd.hopf();
  const AlgebraContext& A = yd.A();
  const AlgebraContext& T = H.T();
  const TensorContext& TT = H.square();
  const TensorContext& AT = yd.AT();
  const TensorContext& ATT = yd.ATT();

  std::vector<Word> awords = A.basis(win);
  std::vector<Word> twords = T.basis(win);

  auto pair_name = [&](const Word& t, const Word& a) {
    return "t=" + T.word_str(t) + ", a=" + A.word_str(a);
  };

  Checker mod("yd.action_module", "(t s) |> a = t |> (s |> a)");
  for (const Word& tw : twords)
    for (const Word& sw : twords) {
      NCElement ts = T.mul_words(tw, sw);
      for (const Word& aw : awords) {
        NCElement lhs = yd.act(T.make(ts.val, ts.valid), A.element(aw));
        NCElement rhs = yd.act(T.element(tw), yd.act_word(sw, aw));
        Agreement ag = agree(lhs, rhs);
        mod.record(ag.equal, pair_name(tw, aw), ag.horizon);
      }
    }

  Checker uni("yd.action_unit", "1 |> a = a and t |> 1 = eps(t) 1");
  for (const Word& aw : awords) {
    Agreement ag = agree(yd.act_word(T.unit_word(), aw), A.element(aw));
    uni.record(ag.equal, A.word_str(aw), ag.horizon);
  }
  for (const Word& tw : twords) {
    Agreement ag = agree(yd.act_word(tw, A.unit_word()),
                         H.counit_word(tw) * A.one());
    uni.record(ag.equal, T.word_str(tw), ag.horizon);
  }

  Checker hop("yd.action_hopf", "t |> (ab) = (t_(1) |> a)(t_(2) |> b)");
  for (const Word& tw : twords) {
    NCElement d = H.coproduct_word(tw);
    for (const Word& aw : awords)
      for (const Word& bw : awords) {
        NCElement ab = A.mul_words(aw, bw);
        NCElement lhs = yd.act(T.element(tw), A.make(ab.val, ab.valid));
        LinComb<Word> acc;
        Valid v = d.valid;
        for (const auto& [w, c] : d.val.terms()) {
          NCElement left = yd.act_word(TT.slot_word(w, 0), aw);
          NCElement right = yd.act_word(TT.slot_word(w, 1), bw);
          NCElement pr = A.mul(left, right);
          v = vmin(v, pr.valid);
          acc.add_scaled(pr.val, c);
        }
        NCElement rhs = A.make(std::move(acc), v);
        Agreement ag = agree(lhs, rhs);
        hop.record(ag.equal, pair_name(tw, aw) + ", b=" + A.word_str(bw),
                   ag.horizon);
      }
  }

  Checker map("yd.coaction_map", "rho an algebra map A -> A (x) T^op");
  {
    Agreement ag = agree(yd.coact_word(A.unit_word()), AT.one());
    map.record(ag.equal, "1", ag.horizon);
  }
  for (const Word& aw : awords)
    for (const Word& bw : awords) {
      NCElement ab = A.mul_words(aw, bw);
      NCElement lhs = yd.coact(A.make(ab.val, ab.valid));
      NCElement rhs = op_mul(AT, yd.coact_word(aw), yd.coact_word(bw));
      Agreement ag = agree(lhs, rhs);
      map.record(ag.equal, "a=" + A.word_str(aw) + ", b=" + A.word_str(bw),
                 ag.horizon);
    }

  Checker coa("yd.coaction_coassoc", "(rho (x) id)rho = (id (x) Delta_T)rho");
  Checker cou("yd.coaction_counit", "(id (x) eps_T)rho = id");
  for (const Word& aw : awords) {
    NCElement ra = yd.coact_word(aw);

    LinComb<Word> l_acc, r_acc;
    Valid lv = ra.valid, rv = ra.valid;
    LinComb<Word> c_acc;
    for (const auto& [w, c] : ra.val.terms()) {
      Word u = AT.slot_word(w, 0), beta = AT.slot_word(w, 1);
      NCElement ru = yd.coact_word(u);
      lv = vmin(lv, ru.valid);
      for (const auto& [uw, uc] : ru.val.terms())
        l_acc.add(ATT.splice({AT.slot_word(uw, 0), AT.slot_word(uw, 1), beta}),
                  c * uc);
      NCElement db = H.coproduct_word(beta);
      rv = vmin(rv, db.valid);
      for (const auto& [dw, dc] : db.val.terms())
        r_acc.add(ATT.splice({u, TT.slot_word(dw, 0), TT.slot_word(dw, 1)}),
                  c * dc);
      c_acc.add(u, c * H.counit_word(beta));
    }
    Agreement ag = agree(ATT.make(std::move(l_acc), lv),
                         ATT.make(std::move(r_acc), rv));
    coa.record(ag.equal, A.word_str(aw), ag.horizon);
    Agreement bg = agree(A.make(std::move(c_acc), ra.valid), A.element(aw));
    cou.record(bg.equal, A.word_str(aw), bg.horizon);
  }

  Checker com("yd.compat",
              "(t_(1) |> a_[0]) (x) t_(2) a_[1] = (t_(2) |> a)_[0] (x) "
              "(t_(2) |> a)_[1] t_(1)");
  for (const Word& tw : twords) {
    NCElement d = H.coproduct_word(tw);
    for (const Word& aw : awords) {
      NCElement ra = yd.coact_word(aw);
      LinComb<Word> l_acc;
      Valid lv = vmin(d.valid, ra.valid);
      for (const auto& [dw, dc] : d.val.terms()) {
        Word t1 = TT.slot_word(dw, 0), t2 = TT.slot_word(dw, 1);
        for (const auto& [rw, rc] : ra.val.terms()) {
          Word a0 = AT.slot_word(rw, 0), a1 = AT.slot_word(rw, 1);
          NCElement left = yd.act_word(t1, a0);
          NCElement tp = T.mul_words(t2, a1);
          lv = vmin(lv, vmin(left.valid, tp.valid));
          for (const auto& [lw, lc] : left.val.terms())
            for (const auto& [pw, pc] : tp.val.terms())
              l_acc.add(AT.splice({lw, pw}), dc * rc * lc * pc);
        }
      }
      NCElement lhs = AT.make(std::move(l_acc), lv);

      LinComb<Word> r_acc;
      Valid rv = d.valid;
      for (const auto& [dw, dc] : d.val.terms()) {
        Word t1 = TT.slot_word(dw, 0), t2 = TT.slot_word(dw, 1);
        NCElement b = yd.act_word(t2, aw);
        NCElement rb = yd.coact(b);
        rv = vmin(rv, rb.valid);
        for (const auto& [rw, rc] : rb.val.terms()) {
          Word b0 = AT.slot_word(rw, 0), b1 = AT.slot_word(rw, 1);
          NCElement tp = T.mul(T.element(b1), T.element(t1));
          rv = vmin(rv, tp.valid);
          for (const auto& [pw, pc] : tp.val.terms())
            r_acc.add(AT.splice({b0, pw}), dc * rc * pc);
        }
      }
      NCElement rhs = AT.make(std::move(r_acc), rv);

      Agreement ag = agree(lhs, rhs);
      com.record(ag.equal, pair_name(tw, aw), ag.horizon);
    }
  }

  Checker br("yd.braided", "x_[0](x_[1] |> a) = a x");
  Checker ba("yd.braided_alt", "((S d_[1]) |> a) d_[0] = d a");
  Checker bj("yd.braided_agree", "the two braided-commutativity forms agree");
  for (const Word& xw : awords) {
    NCElement rx = yd.coact_word(xw);
    for (const Word& aw : awords) {
      LinComb<Word> acc1, acc2;
      Valid v1 = rx.valid, v2 = rx.valid;
      for (const auto& [rw, rc] : rx.val.terms()) {
        Word u = AT.slot_word(rw, 0), beta = AT.slot_word(rw, 1);
        NCElement pr = A.mul(A.element(u), yd.act_word(beta, aw));
        v1 = vmin(v1, pr.valid);
        acc1.add_scaled(pr.val, rc);

        NCElement sb = H.antipode_word(beta);
        NCElement hit = yd.act(sb, A.element(aw));
        NCElement pr2 = A.mul(hit, A.element(u));
        v2 = vmin(v2, pr2.valid);
        acc2.add_scaled(pr2.val, rc);
      }
      NCElement lhs1 = A.make(std::move(acc1), v1);
      NCElement lhs2 = A.make(std::move(acc2), v2);
      NCElement rhs1 = A.mul_words(aw, xw);
      NCElement rhs2 = A.mul_words(xw, aw);

      Agreement g1 = agree(lhs1, A.make(rhs1.val, rhs1.valid));
      Agreement g2 = agree(lhs2, A.make(rhs2.val, rhs2.valid));
      std::string name = "x=" + A.word_str(xw) + ", a=" + A.word_str(aw);
      br.record(g1.equal, name, g1.horizon);
      ba.record(g2.equal, name, g2.horizon);
      bj.record(g1.equal == g2.equal, name, vmin(g1.horizon, g2.horizon));
    }
  }

  return {mod.done(), uni.done(),  hop.done(), map.done(), coa.done(),
          cou.done(), com.done(),  br.done(),  ba.done(),  bj.done()};
}

// ---- factories -----------------------------------------------------------

std::unique_ptr<AdjointYD> adjoint_yd(const GroupTable& table) {
  auto yd = std::make_unique<AdjointYD>(table);
  for (const auto& r : verify_yd(*yd, Window{}))
    if (r.verdict == "fail")
      throw StructureInvalid("adjoint YD self-check failed: " + r.id + " at " +
                             r.witness);
  return yd;
}

std::unique_ptr<UgYD> ug_yd(LieData g, long user_cap, long a_cap, long slack) {
  auto yd = std::make_unique<UgYD>(std::move(g), user_cap, a_cap, slack);
  Window win;
  win.a_cap = a_cap;
  win.t_cap = user_cap;
  for (const auto& r : verify_yd(*yd, win))
    if (r.verdict == "fail")
      throw StructureInvalid("U(g) YD self-check failed: " + r.id + " at " +
                             r.witness);
  return yd;
}

// ---- smash provider ------------------------------------------------------

const std::vector<SmashProvider::CopTerm>& YDProvider::coproduct_terms(
    const Word& t) const {
  auto it = cache_.find(t);
  if (it != cache_.end()) return it->second;

  const TensorContext& TT = yd_->hopf().square();
  std::vector<CopTerm> terms;
  NCElement d = yd_->hopf().coproduct_word(t);
  for (const auto& [w, c] : d.val.terms())
    terms.push_back(CopTerm{TT.slot_word(w, 0), TT.slot_word(w, 1), c});
  return cache_.emplace(t, std::move(terms)).first->second;
}

}  // namespace hopfoid
