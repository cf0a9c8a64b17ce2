#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfoid/context.hpp"

namespace hopfoid {

// Lie algebra structure constants over Q. Input triples give
// [x_mu, x_nu] = sum_lambda c x_lambda for mu < nu; validated() completes the
// table antisymmetrically and checks the Jacobi identity on all triples.
struct LieData {
  struct Triple {
    int mu, nu, lam;
    Rational c;
  };

  int dim = 0;
  std::vector<std::string> names;
  // bracket[mu][nu] = terms of [x_mu, x_nu]
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> bracket;

  Rational bracket_coeff(int mu, int nu, int lam) const;
  static LieData validated(int dim, std::vector<std::string> names,
                           const std::vector<Triple>& triples);
};

// Universal enveloping algebra U(g) on the PBW basis. Words are exponent
// vectors of the ordered monomials x_1^{k_1}...x_n^{k_n}; multiplication
// straightens out-of-order generators through the bracket. Exact: no T-grading.
class PBWContext : public AlgebraContext {
 public:
  PBWContext(LieData g, std::string name)
      : AlgebraContext(Kind::pbw, std::move(name)), g_(std::move(g)) {}

  const LieData& lie() const { return g_; }
  int dim() const { return g_.dim; }

  int word_size() const override { return g_.dim; }
  Word unit_word() const override { return Word{0, std::vector<int>(g_.dim, 0)}; }
  long a_degree(const Word& w) const override {
    long d = 0;
    for (int e : w.data) d += e;
    return d;
  }
  long t_degree(const Word&) const override { return 0; }
  std::string word_str(const Word& w) const override;

  NCElement mul_words(const Word& a, const Word& b) const override;
  std::vector<Word> basis(const Window& win) const override;

  Word gen_word(int mu) const;
  Word exponent_word(const std::vector<int>& exps) const;

  // x^w * x_mu straightened to the PBW basis; the workhorse of mul_words.
  const LinComb<Word>& mul_word_gen(const Word& w, int mu) const;

 private:
  LinComb<Word> mul_comb_gen(const LinComb<Word>& v, int mu) const;

  LieData g_;
  mutable std::map<std::pair<Word, int>, LinComb<Word>> gen_memo_;
  mutable std::map<std::pair<Word, Word>, LinComb<Word>> pair_memo_;
};

// Degree-lex exponent enumeration shared by PBW and truncated-symmetric
// contexts: within a degree block, words ordered letterwise (x1^2 before
// x1 x2 before x2^2).
std::vector<std::vector<int>> enumerate_exponents(int dim, long max_deg);

}  // namespace hopfoid
