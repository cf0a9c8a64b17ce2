#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hopfoid/yd.hpp"

using namespace hopfoid;

// ---- fixtures ------------------------------------------------------------

static GroupTable s3_table() {
  using Perm = std::array<int, 3>;
  std::vector<Perm> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1},  // e, r, r^2
      {0, 2, 1}, {2, 1, 0}, {1, 0, 2},  // s, sr, sr^2  (s = swap 1,2)
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

static LieData abelian2() {
  return LieData::validated(2, {"y0", "y1"}, {});
}

static LieData heisenberg() {
  return LieData::validated(3, {"x", "y", "z"}, {{0, 1, 2, Rational(1)}});
}

static Word texp(std::vector<int> e) {
  Word w{0, std::move(e)};
  for (int k : w.data) w.deg += k;
  return w;
}

static std::map<std::string, CheckResult> by_id(const std::vector<CheckResult>& rs) {
  std::map<std::string, CheckResult> m;
  for (const auto& r : rs) m.emplace(r.id, r);
  return m;
}

// ==========================================================================

TEST_CASE("group Hopf structure on kS3") {
  auto h = group_hopf(s3_table());
  const AlgebraContext& T = h->T();
  const TensorContext& TT = h->square();
  for (const Word& g : T.basis(Window{})) {
    NCElement d = h->coproduct_word(g);
    CHECK(d.val == LinComb<Word>::single(TT.splice({g, g})));
    CHECK(h->counit_word(g) == 1);
  }
  // antipode inverts: sr is a transposition, r inverts to rr
  CHECK(T.word_str(h->antipode_word(Word{0, {4}}).val.leading()) == "sr");
  CHECK(T.word_str(h->antipode_word(Word{0, {1}}).val.leading()) == "rr");

  auto results = verify_hopf(*h, Window{});
  REQUIRE(results.size() == 3);
  for (const auto& r : results) {
    CHECK(r.verdict == "pass");
    CHECK(r.horizon == kValidInf);
    CHECK(r.cases == 6);
  }
}

// A deliberately broken Hopf structure: the antipode sends every group
// element to the identity, which breaks m(S (x) id)Delta on the non-unit.
namespace {
struct TamperedC2 : HopfStructure {
  GroupContext ctx;
  TamperedC2() : ctx(c2_table(), "kC2") { init_powers(&ctx, kValidInf); }
  NCElement coproduct_word(const Word& w) const override {
    return square().element(square().splice({w, w}));
  }
  Rational counit_word(const Word&) const override { return 1; }
  NCElement antipode_word(const Word&) const override { return T().one(); }
};
}  // namespace

TEST_CASE("tampered group antipode fails verification with a witness") {
  TamperedC2 h;
  auto m = by_id(verify_hopf(h, Window{}));
  CHECK(m.at("hopf.coassoc").verdict == "pass");
  CHECK(m.at("hopf.counit").verdict == "pass");
  CHECK(m.at("hopf.antipode").verdict == "fail");
  CHECK(m.at("hopf.antipode").witness.find("s") != std::string::npos);
}

TEST_CASE("enveloping Hopf lift: generators primitive, antipode reverses") {
  auto h = ug_hopf(kappa2());
  const PBWContext& U = h->enveloping();
  const TensorContext& TT = h->square();
  NCElement x1sq = U.element(U.exponent_word({0, 2}));

  NCElement d = h->coproduct(x1sq);
  Word x1 = U.gen_word(1), unit = U.unit_word();
  CHECK(d.val.coeff(TT.splice({x1sq.val.leading(), unit})) == 1);
  CHECK(d.val.coeff(TT.splice({x1, x1})) == 2);
  CHECK(d.val.coeff(TT.splice({unit, x1sq.val.leading()})) == 1);
  CHECK(d.val.size() == 3);

  // S(x0 x1) = S(x1) S(x0) = x1 x0 = x0 x1 - x1
  NCElement s = h->antipode(U.element(U.exponent_word({1, 1})));
  NCElement expect =
      mul(U.element(U.gen_word(0)), U.element(x1)) - U.element(x1);
  CHECK(s.val == expect.val);

  CHECK(h->counit_word(unit) == 1);
  CHECK(h->counit_word(U.exponent_word({2, 1})) == 0);
}

TEST_CASE("enveloping coproduct and antipode respect random products") {
  auto h = ug_hopf(heisenberg());
  const PBWContext& U = h->enveloping();
  const TensorContext& TT = h->square();
  std::mt19937 gen(90210);
  std::uniform_int_distribution<int> pick(0, 2), len(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    NCElement a = U.one(), b = U.one();
    for (int i = 0, n = len(gen); i < n; ++i)
      a = mul(a, U.element(U.gen_word(pick(gen))));
    for (int i = 0, n = len(gen); i < n; ++i)
      b = mul(b, U.element(U.gen_word(pick(gen))));
    NCElement ab = mul(a, b);
    CHECK(h->coproduct(ab).val == TT.mul(h->coproduct(a), h->coproduct(b)).val);
    CHECK(h->antipode(ab).val == mul(h->antipode(b), h->antipode(a)).val);
  }
}

TEST_CASE("enveloping Hopf axioms verify exactly") {
  auto h = ug_hopf(heisenberg());
  Window win;
  win.a_cap = 3;
  for (const auto& r : verify_hopf(*h, win)) {
    CHECK(r.verdict == "pass");
    CHECK(r.horizon == kValidInf);
    CHECK(r.cases == 20);
  }
}

TEST_CASE("truncated dual pairing is diagonal against symmetrized words") {
  auto h = dual_truncated_hopf(kappa2(), 5, 3);
  for (auto& ae : enumerate_exponents(2, 3))
    for (auto& be : enumerate_exponents(2, 3)) {
      Word f = texp(ae);
      Rational got = 0;
      const NCElement& sym = h->sym_image(texp(be));
      for (const auto& [w, c] : sym.val.terms()) got += c * h->pair_words(f, w);
      Rational expect = ae == be ? word_factorial(f) : Rational(0);
      CHECK(got == expect);
    }

  // spot values against plain PBW words
  CHECK(h->pair_words(texp({0, 1}), texp({0, 1})) == 1);
  CHECK(h->pair_words(texp({0, 2}), texp({0, 2})) == 2);
  CHECK(h->pair_words(texp({1, 1}), texp({1, 1})) == 1);
  // x0 x1 = sym(x0 x1) + (1/2)[x0, x1], so <dx1, x0 x1> picks up 1/2
  CHECK(h->pair_words(texp({0, 1}), texp({1, 1})) == Rational(1, 2));
  CHECK(h->pair_words(texp({1, 0}), texp({1, 1})) == 0);
}

TEST_CASE("dual coproduct is dual to enveloping multiplication") {
  auto h = dual_truncated_hopf(kappa2(), 5, 3);
  const PBWContext& U = h->enveloping();
  const TensorContext& TT = h->square();
  for (auto& fe : enumerate_exponents(2, 3)) {
    Word f = texp(fe);
    NCElement d = h->coproduct_word(f);
    for (auto& ue : enumerate_exponents(2, 2))
      for (auto& ve : enumerate_exponents(2, 2)) {
        Word u = texp(ue), v = texp(ve);
        Rational lhs = 0;
        for (const auto& [w, c] : d.val.terms())
          lhs += c * h->pair_words(TT.slot_word(w, 0), u) *
                 h->pair_words(TT.slot_word(w, 1), v);
        NCElement uv = U.mul_words(u, v);
        Rational rhs = 0;
        for (const auto& [w, c] : uv.val.terms()) rhs += c * h->pair_words(f, w);
        CHECK(lhs == rhs);
      }
  }

  // frozen low-degree components of Delta(dx1): the dx1 (x) dx0 cross terms
  // carry the first Bernoulli coefficient -1/2
  NCElement d1 = h->coproduct_word(texp({0, 1}));
  const TensorContext& T2 = h->square();
  Word one = texp({0, 0}), d0 = texp({1, 0}), dx1 = texp({0, 1});
  CHECK(d1.val.coeff(T2.splice({one, dx1})) == 1);
  CHECK(d1.val.coeff(T2.splice({dx1, one})) == 1);
  CHECK(d1.val.coeff(T2.splice({dx1, d0})) == Rational(-1, 2));
  CHECK(d1.val.coeff(T2.splice({d0, dx1})) == Rational(1, 2));
  // dx0 is primitive: nothing else below total degree 4
  NCElement dd0 = h->coproduct_word(d0);
  for (const auto& [w, c] : dd0.val.terms())
    if (T2.t_degree(w) <= 3)
      CHECK((w == T2.splice({one, d0}) || w == T2.splice({d0, one})));
}

TEST_CASE("dual antipode is dual to the enveloping antipode") {
  auto h = dual_truncated_hopf(kappa2(), 4, 2);
  auto lift = ug_hopf(kappa2());
  for (auto& fe : enumerate_exponents(2, 4)) {
    Word f = texp(fe);
    NCElement sf = h->antipode_word(f);
    CHECK(sf.val.size() == 1);
    CHECK(sf.val.coeff(f) == (f.deg % 2 ? Rational(-1) : Rational(1)));
    for (auto& ue : enumerate_exponents(2, 4)) {
      Word u = texp(ue);
      Rational lhs = 0;
      for (const auto& [w, c] : sf.val.terms()) lhs += c * h->pair_words(w, u);
      Rational rhs = 0;
      NCElement su = lift->antipode_word(u);
      for (const auto& [w, c] : su.val.terms()) rhs += c * h->pair_words(f, w);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("truncated dual Hopf axioms verify within the stated horizon") {
  auto h = dual_truncated_hopf(kappa2(), 5, 3);
  Window win;
  win.t_cap = 3;
  auto m = by_id(verify_hopf(*h, win));
  REQUIRE(m.size() == 3);
  for (const auto& [id, r] : m) {
    CHECK(r.verdict == "pass");
    CHECK(r.cases == 10);
    // decisive out to the storage cap even though the legs get clipped
    CHECK(r.horizon >= 5);
    CHECK(r.horizon < kValidInf);
  }
}

TEST_CASE("adjoint YD structure on kS3") {
  auto yd = adjoint_yd(s3_table());
  const GroupTable g = s3_table();
  const AlgebraContext& A = yd->A();
  const TensorContext& AT = yd->AT();

  // action is conjugation; cross-check the whole table against the
  // composition oracle
  for (int t = 0; t < 6; ++t)
    for (int a = 0; a < 6; ++a) {
      NCElement got = yd->act_word(Word{0, {t}}, Word{0, {a}});
      int expect = g.mul[g.mul[t][a]][g.inv[t]];
      CHECK(got.val == LinComb<Word>::single(Word{0, {expect}}));
    }
  CHECK(A.word_str(yd->act_word(Word{0, {1}}, Word{0, {3}}).val.leading()) ==
        "sr");

  // coaction pairs each element with its inverse
  for (int a = 0; a < 6; ++a)
    CHECK(yd->coact_word(Word{0, {a}}).val ==
          LinComb<Word>::single(AT.splice({Word{0, {a}}, Word{0, {g.inv[a]}}})));

  auto results = verify_yd(*yd, Window{});
  REQUIRE(results.size() == 10);
  auto m = by_id(results);
  for (const auto& [id, r] : m) {
    CHECK(r.verdict == "pass");
    CHECK(r.horizon == kValidInf);
  }
  CHECK(m.at("yd.action_module").cases == 216);
  CHECK(m.at("yd.braided").cases == 36);
}

// Correct conjugation action but a flipped coaction that pairs g with g
// instead of g^-1: an algebra map on kS3 it is not.
namespace {
struct FlippedAdjoint : YDStructure {
  std::unique_ptr<GroupHopf> h;
  GroupContext a;
  FlippedAdjoint() : h(group_hopf(s3_table())), a(s3_table(), "A=kS3") {
    init(h.get(), &a, kValidInf);
  }
  NCElement act_word(const Word& t, const Word& w) const override {
    const GroupTable& g = a.table();
    return A().element(Word{0, {g.mul[g.mul[t.data[0]][w.data[0]]][g.inv[t.data[0]]]}});
  }
  NCElement coact_word(const Word& w) const override {
    return AT().element(AT().splice({w, w}));
  }
};
}  // namespace

TEST_CASE("flipped adjoint coaction fails with witnesses") {
  FlippedAdjoint yd;
  auto m = by_id(verify_yd(yd, Window{}));
  CHECK(m.at("yd.coaction_map").verdict == "fail");
  CHECK(!m.at("yd.coaction_map").witness.empty());
  CHECK(m.at("yd.braided").verdict == "fail");
  CHECK(!m.at("yd.braided").witness.empty());
  // counit and coassociativity cannot see the flip
  CHECK(m.at("yd.coaction_counit").verdict == "pass");
  CHECK(m.at("yd.coaction_coassoc").verdict == "pass");
  // both braided forms break together, so their agreement still holds
  CHECK(m.at("yd.braided_agree").verdict == "pass");
}

TEST_CASE("abelian Lie data produces the trivial coaction") {
  auto yd = ug_yd(abelian2(), 3, 3);
  const TensorContext& AT = yd->AT();
  for (int mu = 0; mu < 2; ++mu) {
    const NCElement& r = yd->gen_coaction(mu);
    CHECK(r.val ==
          LinComb<Word>::single(AT.splice({texp(mu ? std::vector<int>{0, 1}
                                                   : std::vector<int>{1, 0}),
                                           texp({0, 0})})));
  }
  // action reduces to differentiation: <dy_mu, y_nu> = delta
  const PBWContext& U = yd->dual().enveloping();
  for (int mu = 0; mu < 2; ++mu)
    for (int nu = 0; nu < 2; ++nu) {
      NCElement got = yd->act_word(U.gen_word(mu), U.gen_word(nu));
      CHECK(got.val == (mu == nu ? LinComb<Word>::single(U.unit_word())
                                 : LinComb<Word>()));
    }
  CHECK(yd->coact_word(U.exponent_word({1, 1})).val ==
        LinComb<Word>::single(AT.splice({texp({1, 1}), texp({0, 0})})));
}

TEST_CASE("kappa coaction solved from the braided constraints") {
  auto yd = ug_yd(kappa2(), 3, 3);
  const TensorContext& AT = yd->AT();
  CHECK(yd->store_cap() == 9);
  CHECK(yd->coaction_a_degrees() == std::vector<long>{1, 1});

  Word x0 = texp({1, 0}), x1 = texp({0, 1});
  // rho(x1) = x1 (x) exp(dx0): geometric tail in the first dual direction
  const NCElement& r1 = yd->gen_coaction(1);
  CHECK(r1.val.coeff(AT.splice({x1, texp({0, 0})})) == 1);
  CHECK(r1.val.coeff(AT.splice({x1, texp({1, 0})})) == 1);
  CHECK(r1.val.coeff(AT.splice({x1, texp({2, 0})})) == Rational(1, 2));
  CHECK(r1.val.coeff(AT.splice({x1, texp({3, 0})})) == Rational(1, 6));
  // rho(x0) = x0 (x) 1 - x1 (x) (exp(dx0)-1)/dx0 * dx1 to this order
  const NCElement& r0 = yd->gen_coaction(0);
  CHECK(r0.val.coeff(AT.splice({x0, texp({0, 0})})) == 1);
  CHECK(r0.val.coeff(AT.splice({x1, texp({0, 1})})) == -1);
  CHECK(r0.val.coeff(AT.splice({x1, texp({1, 1})})) == Rational(-1, 2));
  CHECK(r0.val.coeff(AT.splice({x1, texp({2, 1})})) == Rational(-1, 6));
  for (const auto& [w, c] : r0.val.terms()) CHECK(AT.slot_word(w, 0).deg == 1);

  const PBWContext& U = yd->dual().enveloping();
  CHECK(yd->act_word(texp({1, 0}), U.exponent_word({1, 1})).val ==
        LinComb<Word>::single(U.gen_word(1)));
  NCElement a = yd->act_word(texp({0, 1}), U.exponent_word({1, 1}));
  CHECK(a.val.coeff(U.unit_word()) == Rational(1, 2));
  CHECK(a.val.coeff(U.gen_word(0)) == 1);
  CHECK(a.val.size() == 2);
}

// ---- dense oracle for the coaction solve ---------------------------------

// Row-reduce the augmented system and insist on a unique solution.
static bool dense_unique_solve(std::vector<std::vector<Rational>> m, int cols,
                               std::vector<Rational>& out) {
  int rows = static_cast<int>(m.size());
  std::vector<int> pivot_of(cols, -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) { p = r; break; }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    Rational inv = Rational(1) / m[rank][c];
    for (int j = c; j <= cols; ++j) m[rank][j] *= inv;
    for (int r = 0; r < rows; ++r)
      if (r != rank && m[r][c] != 0) {
        Rational f = m[r][c];
        for (int j = c; j <= cols; ++j) m[r][j] -= f * m[rank][j];
      }
    pivot_of[c] = rank;
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (m[r][cols] != 0) return false;  // inconsistent
  if (rank != cols) return false;       // underdetermined
  out.assign(cols, Rational(0));
  for (int c = 0; c < cols; ++c) out[c] = m[pivot_of[c]][cols];
  return true;
}

TEST_CASE("dense solve of the coaction constraints matches the structured solve") {
  // small caps so the dense system stays manageable
  UgYD yd(kappa2(), 1, 1, 2);
  const long cap = yd.store_cap();
  REQUIRE(cap == 3);
  const PBWContext& U = yd.dual().enveloping();
  const TensorContext& AT = yd.AT();

  std::vector<Word> betas, tests, awords;
  for (auto& e : enumerate_exponents(2, cap)) {
    betas.push_back(texp(e));
    tests.push_back(U.exponent_word(e));
  }
  // unknown A-support up to degree 2: one above the observed degree, so the
  // solve itself certifies the extra coefficients vanish
  for (auto& e : enumerate_exponents(2, 2)) awords.push_back(U.exponent_word(e));

  std::mt19937 gen(5150);
  for (int mu = 0; mu < 2; ++mu) {
    for (int variant = 0; variant < 2; ++variant) {
      std::vector<Word> bs = betas, ts = tests;
      if (variant == 1) {
        std::shuffle(bs.begin(), bs.end(), gen);
        std::shuffle(ts.begin(), ts.end(), gen);
      }
      // columns: (beta, u) pairs; rows: PBW words of each expanded test
      int cols = static_cast<int>(bs.size() * awords.size());
      std::map<Word, int> rowof;
      std::vector<std::vector<Rational>> m;
      auto row = [&](const Word& w) {
        auto it = rowof.find(w);
        if (it == rowof.end()) {
          it = rowof.emplace(w, static_cast<int>(m.size())).first;
          m.emplace_back(cols + 1, Rational(0));
        }
        return it->second;
      };
      std::vector<std::vector<Word>> rowkeys(ts.size());
      for (std::size_t ti = 0; ti < ts.size(); ++ti) {
        // each test contributes one A-valued equation; scalarize per word,
        // prefixing the test index so equations do not mix
        for (std::size_t bi = 0; bi < bs.size(); ++bi) {
          NCElement hit = yd.act_word(bs[bi], ts[ti]);
          for (std::size_t ui = 0; ui < awords.size(); ++ui) {
            NCElement prod = U.mul(U.element(awords[ui]), hit);
            for (const auto& [w, c] : prod.val.terms()) {
              Word key = w;
              key.data.push_back(static_cast<int>(ti));
              m[row(key)][bi * awords.size() + ui] += c;
            }
          }
        }
        NCElement rhs = U.mul(U.element(ts[ti]), U.element(U.gen_word(mu)));
        for (const auto& [w, c] : rhs.val.terms()) {
          Word key = w;
          key.data.push_back(static_cast<int>(ti));
          m[row(key)][cols] += c;
        }
      }
      std::vector<Rational> sol;
      REQUIRE(dense_unique_solve(std::move(m), cols, sol));
      for (std::size_t bi = 0; bi < bs.size(); ++bi)
        for (std::size_t ui = 0; ui < awords.size(); ++ui)
          CHECK(sol[bi * awords.size() + ui] ==
                yd.gen_coaction(mu).val.coeff(AT.splice({awords[ui], bs[bi]})));
    }
  }
}

TEST_CASE("kappa YD structure passes its own verification gate") {
  auto yd = ug_yd(kappa2(), 3, 3);
  Window win;
  win.a_cap = 2;
  win.t_cap = 2;
  auto m = by_id(verify_yd(*yd, win));
  REQUIRE(m.size() == 10);
  for (const auto& [id, r] : m) {
    CHECK(r.verdict == "pass");
    CHECK(r.horizon >= yd->user_cap());
  }
}

TEST_CASE("YD provider adapts the structures for smash straightening") {
  auto gyd = adjoint_yd(s3_table());
  YDProvider gp(gyd.get());
  CHECK(gp.table_degree() == kNoCap);
  const auto& terms = gp.coproduct_terms(Word{0, {2}});
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].left == Word{0, {2}});
  CHECK(terms[0].right == Word{0, {2}});
  CHECK(terms[0].c == 1);

  auto kyd = ug_yd(kappa2(), 3, 3);
  YDProvider kp(kyd.get());
  CHECK(kp.table_degree() == 12);
  const auto& unit_terms = kp.coproduct_terms(texp({0, 0}));
  REQUIRE(unit_terms.size() == 1);
  CHECK(unit_terms[0].left.deg == 0);
  CHECK(unit_terms[0].right.deg == 0);
  CHECK(kp.act(texp({1, 0}), kyd->lift().enveloping().gen_word(0)).val ==
        LinComb<Word>::single(kyd->A().unit_word()));
}
