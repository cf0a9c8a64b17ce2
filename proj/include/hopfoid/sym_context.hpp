#pragma once

#include <string>
#include <vector>

#include "hopfoid/pbw_context.hpp"

namespace hopfoid {

// Truncated symmetric algebra on dual generators d0..d{n-1}: commutative
// polynomials modulo (degree > cap). Words are exponent vectors carrying the
// T-grading; the storage cap is the internal horizon N_int, so products that
// leave it are dropped by make() with the horizon recording the loss.
class SymContext : public AlgebraContext {
 public:
  SymContext(int dim, long cap, std::vector<std::string> names, std::string ctx_name)
      : AlgebraContext(Kind::sym, std::move(ctx_name)),
        dim_(dim),
        cap_(cap),
        names_(std::move(names)) {}

  int dim() const { return dim_; }
  long cap() const { return cap_; }

  int word_size() const override { return dim_; }
  Word unit_word() const override { return Word{0, std::vector<int>(dim_, 0)}; }
  long a_degree(const Word&) const override { return 0; }
  long t_degree(const Word& w) const override {
    long d = 0;
    for (int e : w.data) d += e;
    return d;
  }
  long t_store_cap() const override { return cap_; }

  std::string word_str(const Word& w) const override {
    if (w.deg == 0) return "1";
    std::string s;
    for (int i = 0; i < dim_; ++i) {
      if (w.data[i] == 0) continue;
      if (!s.empty()) s += " ";
      s += names_[i];
      if (w.data[i] > 1) s += "^" + std::to_string(w.data[i]);
    }
    return s;
  }

  NCElement mul_words(const Word& a, const Word& b) const override {
    Word r = a;
    r.deg += b.deg;
    for (int i = 0; i < dim_; ++i) r.data[i] += b.data[i];
    return element(r);  // make() truncates past the storage cap
  }

  std::vector<Word> basis(const Window& win) const override {
    long cap = std::min({cap_, win.t_cap, win.t_total});
    std::vector<Word> out;
    for (auto& e : enumerate_exponents(dim_, cap)) {
      Word w{0, e};
      for (int k : e) w.deg += k;
      out.push_back(w);
    }
    return out;
  }

  Word gen_word(int mu) const {
    Word w = unit_word();
    w.data[mu] = 1;
    w.deg = 1;
    return w;
  }

  Word exponent_word(const std::vector<int>& exps) const {
    Word w{0, exps};
    for (int k : exps) w.deg += k;
    return w;
  }

 private:
  int dim_;
  long cap_;
  std::vector<std::string> names_;
};

}  // namespace hopfoid
