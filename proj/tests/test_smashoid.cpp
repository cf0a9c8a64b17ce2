#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hopfoid/smashoid.hpp"

using namespace hopfoid;

// ---- fixtures ------------------------------------------------------------

static GroupTable s3_table() {
  using Perm = std::array<int, 3>;
  std::vector<Perm> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1},  // e, r, r^2
      {0, 2, 1}, {2, 1, 0}, {1, 0, 2},  // s, sr, sr^2
  };
  auto compose = [](const Perm& p, const Perm& q) {
    return Perm{p[q[0]], p[q[1]], p[q[2]]};
  };
  auto index_of = [&](const Perm& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) mul[i][j] = index_of(compose(perms[i], perms[j]));
  return GroupTable::validated({"e", "r", "rr", "s", "sr", "srr"}, mul);
}

static GroupTable c2_table() {
  return GroupTable::validated({"e", "s"}, {{0, 1}, {1, 0}});
}

static LieData kappa2() {
  return LieData::validated(2, {"x0", "x1"}, {{0, 1, 1, Rational(1)}});
}

static std::map<std::string, CheckResult> by_id(const std::vector<CheckResult>& rs) {
  std::map<std::string, CheckResult> m;
  for (const auto& r : rs) m.emplace(r.id, r);
  return m;
}

// Test-side oracle: the n-fold adjacent congruence span, generated from
// scratch as the right ideal of slot-pair generators, fed with full basis
// multiplication until stable. Independent of build_ia's seeding order.
static SubspaceBasis<Word> congruence_span(const SmashAlgebroid& E,
                                           const TensorContext& Hn) {
  const SmashContext& H = E.H();
  Word aunit = E.A().unit_word();
  std::vector<NCElement> gens;
  for (const Word& a : E.a_basis()) {
    if (a == aunit) continue;
    NCElement b = E.beta_word(a), al = E.alpha_word(a), one = H.one();
    for (int s = 1; s < Hn.slots(); ++s) {
      std::vector<NCElement> lhs, rhs;
      for (int i = 0; i < Hn.slots(); ++i) {
        lhs.push_back(i == s - 1 ? b : one);
        rhs.push_back(i == s ? al : one);
      }
      gens.push_back(Hn.combine(lhs) - Hn.combine(rhs));
    }
  }
  SubspaceBasis<Word> rows;
  std::vector<Word> basis = Hn.basis(Window{});
  std::vector<LinComb<Word>> fresh;
  auto feed = [&](const NCElement& p) {
    auto r = rows.insert(p.val, kValidInf);
    if (!r.vec.is_zero()) fresh.push_back(r.vec);
  };
  for (const auto& g : gens)
    for (const Word& w : basis) feed(Hn.mul(g, Hn.element(w)));
  while (!fresh.empty()) {
    std::vector<LinComb<Word>> batch;
    batch.swap(fresh);
    for (const auto& v : batch) {
      NCElement row{&Hn, v, kValidInf};
      for (const Word& w : basis) feed(Hn.mul(row, Hn.element(w)));
    }
  }
  return rows;
}

// ==========================================================================

TEST_CASE("kC2 adjoint smashoid: dimensions and tau on group elements") {
  auto yd = adjoint_yd(c2_table());
  SmashAlgebroid E(yd.get(), Window{});
  CHECK(E.h_basis().size() == 4);
  CHECK(E.h2_basis().size() == 16);
  CHECK(E.ia_basis().rank() == 8);  // 16 - dim H (x)_A H = 16 - 4*2
  CHECK_FALSE(E.ia_basis().clipped());

  // On the adjoint example tau(h#1) = S(1) S^2(h^-1) h = beta(h).
  for (const Word& g : E.a_basis()) {
    NCElement t = E.tau(E.H().from_a(E.A().element(g)));
    CHECK(agree(t, E.beta_word(g)).equal);
  }

  CHECK(generator_words(E.H2()).size() == 4);  // (1 A-letter + 1 T-letter) per slot
}

TEST_CASE("kC2: gamma canonical form decides congruence mod I_A") {
  auto yd = adjoint_yd(c2_table());
  SmashAlgebroid E(yd.get(), Window{});
  const TensorContext& H2 = E.H2();
  const auto& wb = E.h2_basis();
  int same = 0;
  for (const Word& u : wb)
    for (const Word& v : wb) {
      bool cong = E.congruent(H2.element(u), H2.element(v));
      bool canon = agree(E.gamma(H2.element(u)), E.gamma(H2.element(v))).equal;
      CHECK(cong == canon);
      if (cong) ++same;
    }
  // 8 congruence classes of basis words, each hit twice (16 + 2*... ): the
  // diagonal plus the off-diagonal identifications.
  CHECK(same > 16);
}

TEST_CASE("kC2: gamma3 canonical form matches an independent 3-fold span") {
  auto yd = adjoint_yd(c2_table());
  SmashAlgebroid E(yd.get(), Window{});
  const TensorContext& H3 = E.H3();
  SubspaceBasis<Word> span = congruence_span(E, H3);
  CHECK(span.rank() == 48);  // 64 - dim H (x)_A H (x)_A H = 64 - 4*2*2
  std::vector<Word> basis = H3.basis(Window{});
  REQUIRE(basis.size() == 64);
  for (const Word& u : basis)
    for (const Word& v : basis) {
      LinComb<Word> d = LinComb<Word>::single(u);
      d.add(v, Rational(-1));
      bool in_span = span.reduce(d).vec.is_zero();
      bool canon = agree(E.gamma3(H3.element(u)), E.gamma3(H3.element(v))).equal;
      CHECK(in_span == canon);
    }
}

TEST_CASE("kC2: two-fold ia span matches the from-scratch oracle") {
  auto yd = adjoint_yd(c2_table());
  SmashAlgebroid E(yd.get(), Window{});
  SubspaceBasis<Word> span = congruence_span(E, E.H2());
  CHECK(span.rank() == E.ia_basis().rank());
  for (const auto& row : E.ia_basis().rows().rows())
    CHECK(span.reduce(row.vec).vec.is_zero());
}

TEST_CASE("kS3 adjoint smashoid: dimensions and Takeuchi polarity") {
  auto yd = adjoint_yd(s3_table());
  SmashAlgebroid E(yd.get(), Window{});
  CHECK(E.h_basis().size() == 36);
  CHECK(E.h2_basis().size() == 1296);
  CHECK(E.ia_basis().rank() == 1080);  // 1296 - 36*6
  CHECK_FALSE(E.ia_basis().clipped());

  const SmashContext& H = E.H();
  Word s = E.A().basis(Window{})[3];
  // (s#1) (x) (1#1) = alpha(s) (x) 1 is balanced; (1#s) (x) (1#1) is not.
  Word u1 = E.H2().splice({H.word_of(s, H.T()->unit_word()), H.unit_word()});
  Word u2 = E.H2().splice({H.word_of(E.A().unit_word(), s), H.unit_word()});
  Membership m1 = E.takeuchi_detail(E.H2().element(u1));
  CHECK(m1.decided);
  CHECK(m1.in_span);
  CHECK(E.takeuchi_member(E.H2().element(u1)));
  Membership m2 = E.takeuchi_detail(E.H2().element(u2));
  CHECK(m2.decided);
  CHECK_FALSE(m2.in_span);
  CHECK(m2.witness.find("residue") != std::string::npos);
}

TEST_CASE("kS3: all three suites pass exactly with exhaustive case counts") {
  auto yd = adjoint_yd(s3_table());
  SmashAlgebroid E(yd.get(), Window{});

  auto bial = by_id(verify_bialgebroid(E));
  auto anti = by_id(verify_antipode(E));
  auto lu = by_id(verify_lu(E, 20240601));
  for (const auto* m : {&bial, &anti, &lu})
    for (const auto& [id, r] : *m) {
      CAPTURE(id);
      CHECK(r.verdict == "pass");
      CHECK(r.horizon == kValidInf);
      CHECK(r.cases > 0);
    }
  CHECK(bial.at("smash.assoc").cases == 46656);   // 36^3 triples
  CHECK(bial.at("smash.c3a").cases == 180);       // 36 basis x 5 scalars
  CHECK(bial.at("smash.c3b").cases == 1296);      // all pairs
  CHECK(bial.at("smash.counit_left").cases == 36);
  CHECK(anti.at("tau.antihom").cases == 1296);
  CHECK(lu.at("lu.rep_independence").cases == 50);
}

TEST_CASE("kS3: mu(id (x) tau) maps R-generators into A#1") {
  auto yd = adjoint_yd(s3_table());
  SmashAlgebroid E(yd.get(), Window{});
  const SmashContext& H = E.H();
  for (const Word& g : E.a_basis()) {
    NCElement z = E.mu_id_tau(E.r_gen(g));
    for (const auto& [w, c] : z.val.terms()) CHECK(H.t_degree(w) == 0);
  }
}

TEST_CASE("truncated kappa smashoid: Todd series in the cross relation") {
  auto yd = ug_yd(kappa2(), 3, 3);
  SmashAlgebroid E(yd.get(), Window{3, 3, kNoCap});
  CHECK(E.h_basis().size() == 100);
  CHECK(E.h2_basis().size() == 1225);
  CHECK(E.ia_basis().rank() == 971);
  CHECK(E.ia_basis().clipped());

  // (1#dx1)(x1#1) = x1#dx1 + 1#(Todd series of -dx0): the Bernoulli
  // coefficients B_k/k! appear, odd ones vanishing past k = 1.
  const SmashContext& H = E.H();
  const auto& U = static_cast<const PBWContext&>(E.A());
  const auto& S = static_cast<const SymContext&>(*H.T());
  NCElement p = H.mul(H.element(H.word_of(U.unit_word(), S.gen_word(1))),
                      H.element(H.word_of(U.gen_word(1), S.unit_word())));
  auto sym = [&](std::vector<int> e) {
    Word w{0, std::move(e)};
    for (int k : w.data) w.deg += k;
    return w;
  };
  Word unit = U.unit_word();
  CHECK(p.valid == 8);
  CHECK(p.val.coeff(H.word_of(U.gen_word(1), S.gen_word(1))) == 1);
  CHECK(p.val.coeff(H.word_of(unit, sym({0, 0}))) == 1);
  CHECK(p.val.coeff(H.word_of(unit, sym({1, 0}))) == Rational(-1, 2));
  CHECK(p.val.coeff(H.word_of(unit, sym({2, 0}))) == Rational(1, 12));
  CHECK(p.val.coeff(H.word_of(unit, sym({3, 0}))) == 0);
  CHECK(p.val.coeff(H.word_of(unit, sym({4, 0}))) == Rational(-1, 720));
  CHECK(p.val.coeff(H.word_of(unit, sym({6, 0}))) == Rational(1, 30240));
  CHECK(p.val.coeff(H.word_of(unit, sym({8, 0}))) == Rational(-1, 1209600));
  CHECK(p.val.size() == 7);
}

TEST_CASE("truncated kappa: suites decide within the window") {
  auto yd = ug_yd(kappa2(), 3, 3);
  SmashAlgebroid E(yd.get(), Window{3, 3, kNoCap});
  auto anti = by_id(verify_antipode(E));
  for (const auto& [id, r] : anti) {
    CAPTURE(id);
    CHECK(r.verdict == "pass");
    CHECK(r.horizon >= 3);
  }
  auto lu = by_id(verify_lu(E, 20240601));
  for (const auto& [id, r] : lu) {
    CAPTURE(id);
    CHECK(r.verdict == "pass");
    CHECK(r.horizon >= 0);
  }
  // tau(x1#1) = x1 # exp(dx0): beta of x1, an exact small identity.
  CHECK(agree(E.tau(E.H().from_a(E.A().element(
                  static_cast<const PBWContext&>(E.A()).gen_word(1)))),
              E.beta_word(static_cast<const PBWContext&>(E.A()).gen_word(1)))
            .equal);
}

TEST_CASE("epsilon is exact on truncated elements") {
  auto yd = ug_yd(kappa2(), 3, 3);
  SmashAlgebroid E(yd.get(), Window{3, 3, kNoCap});
  const SmashContext& H = E.H();
  const auto& U = static_cast<const PBWContext&>(E.A());
  NCElement e = H.make(LinComb<Word>::single(H.word_of(U.gen_word(0), H.T()->unit_word())), 0);
  NCElement val = E.epsilon(e);
  CHECK(val.valid == kValidInf);
  CHECK(val.val.coeff(U.gen_word(0)) == 1);
  NCElement none = H.make(e.val, kValidNone);
  CHECK(E.epsilon(none).valid == kValidNone);
}

TEST_CASE("tau discounts its trust by the window A-cap") {
  auto yd = ug_yd(kappa2(), 3, 3);
  SmashAlgebroid E(yd.get(), Window{3, 3, kNoCap});
  const SmashContext& H = E.H();
  const auto& U = static_cast<const PBWContext&>(E.A());
  NCElement e = H.make(LinComb<Word>::single(H.word_of(U.gen_word(1), H.T()->unit_word())), 5);
  CHECK(E.tau(e).valid == 2);  // 5 - a_cap
}

TEST_CASE("windowed span semantics: A-overflow drops and marks, T-overflow truncates") {
  auto yd = ug_yd(kappa2(), 1, 1);
  SmashAlgebroid E(yd.get(), Window{1, 1, kNoCap});
  const TensorContext& H2 = E.H2();
  const SmashContext& H = E.H();
  const auto& U = static_cast<const PBWContext&>(E.A());
  const auto& S = static_cast<const SymContext&>(*H.T());
  Word x1 = H.word_of(U.gen_word(1), S.unit_word());
  Word dx1 = H.word_of(U.unit_word(), S.gen_word(1));

  WindowedSpan sp(&H2, Window{1, 1, 1});
  // A-part too big: dropped whole, span clipped.
  auto f0 = sp.feed(H2.element(H2.splice({x1, x1})));
  CHECK_FALSE(f0.inserted);
  CHECK(sp.clipped());

  WindowedSpan sp2(&H2, Window{1, 1, 1});
  // Mixed degrees: the T > cut component is truncated away, tag records it.
  LinComb<Word> v = LinComb<Word>::single(H2.splice({x1, H.unit_word()}));
  v.add(H2.splice({dx1, dx1}), Rational(3));
  auto f1 = sp2.feed(H2.make(v, kValidInf));
  CHECK(f1.inserted);
  CHECK(f1.tag == 1);
  CHECK(sp2.rank() == 1);
  CHECK_FALSE(sp2.clipped());
  // Untrusted element: rejected outright.
  auto f2 = sp2.feed(H2.make(LinComb<Word>::single(H2.splice({x1, x1})), kValidNone));
  CHECK_FALSE(f2.inserted);
  CHECK(sp2.clipped());

  // reduce: A-overflow is "exceeded", congruent() turns it into a throw.
  Membership m = E.reduce_mod_ia(H2.element(H2.splice({x1, x1})));
  CHECK(m.exceeded);
  CHECK_FALSE(m.decided);
  CHECK_THROWS_AS(E.congruent(H2.element(H2.splice({x1, x1})), H2.zero()),
                  WindowExceeded);
}

TEST_CASE("takeuchi_detail reports a window too small to test anything") {
  auto yd = ug_yd(kappa2(), 3, 3);
  SmashAlgebroid E(yd.get(), Window{3, 3, kNoCap});
  const auto& U = static_cast<const PBWContext&>(E.A());
  // Top A-degree word: no non-unit scalar fits next to it.
  Word x13 = U.exponent_word({0, 3});
  NCElement u = E.delta_rep_word(E.H().word_of(x13, E.H().T()->unit_word()));
  Membership m = E.takeuchi_detail(u);
  CHECK_FALSE(m.decided);
  CHECK(m.witness == "window leaves no scalar to test");
}

TEST_CASE("ia span is invariant under reversed closure-letter order") {
  // Same space generated with the basis enumeration reversed on the feeding
  // side: final echelon rows must agree row for row.
  auto yd = adjoint_yd(c2_table());
  SmashAlgebroid E(yd.get(), Window{});
  const TensorContext& H2 = E.H2();
  SubspaceBasis<Word> alt;
  std::vector<Word> wb = E.h2_basis();
  std::vector<NCElement> seeds;
  Word aunit = E.A().unit_word();
  for (auto it = wb.rbegin(); it != wb.rend(); ++it)
    for (const Word& a : E.a_basis())
      if (!(a == aunit)) seeds.push_back(H2.mul(E.i_gen(a), H2.element(*it)));
  for (const auto& s : seeds) alt.insert(s.val, kValidInf);
  const auto& rows = E.ia_basis().rows().rows();
  REQUIRE(alt.rank() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    CHECK(alt.rows()[i].vec == rows[i].vec);
}
