#include "hopfoid/pbw_context.hpp"

#include <algorithm>

#include "hopfoid/errors.hpp"

namespace hopfoid {

Rational LieData::bracket_coeff(int mu, int nu, int lam) const {
  for (const auto& [l, c] : bracket[mu][nu])
    if (l == lam) return c;
  return Rational(0);
}

LieData LieData::validated(int dim, std::vector<std::string> names,
                           const std::vector<Triple>& triples) {
  if (dim <= 0) throw ConfigError("lie dimension must be positive");
  if (static_cast<int>(names.size()) != dim) throw ConfigError("generator name count");
  LieData g;
  g.dim = dim;
  g.names = std::move(names);
  g.bracket.assign(dim, std::vector<std::vector<std::pair<int, Rational>>>(dim));

  auto add = [&](int mu, int nu, int lam, const Rational& c) {
    if (c == 0) return;
    for (auto& [l, v] : g.bracket[mu][nu]) {
      if (l == lam) {
        v += c;
        return;
      }
    }
    g.bracket[mu][nu].emplace_back(lam, c);
  };
  for (const auto& t : triples) {
    if (t.mu < 0 || t.mu >= dim || t.nu < 0 || t.nu >= dim || t.lam < 0 || t.lam >= dim)
      throw ConfigError("structure constant index out of range");
    if (t.mu == t.nu && t.c != 0)
      throw ConfigError("[x,x] must vanish: bad constant for mu == nu");
    add(t.mu, t.nu, t.lam, t.c);
    add(t.nu, t.mu, t.lam, -t.c);
  }
  for (auto& row : g.bracket)
    for (auto& cell : row) {
      std::sort(cell.begin(), cell.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      cell.erase(std::remove_if(cell.begin(), cell.end(),
                                [](const auto& p) { return p.second == 0; }),
                 cell.end());
    }

  // Jacobi: [[x_mu,x_nu],x_sig] + [[x_nu,x_sig],x_mu] + [[x_sig,x_mu],x_nu] = 0.
  for (int mu = 0; mu < dim; ++mu)
    for (int nu = mu + 1; nu < dim; ++nu)
      for (int sig = nu + 1; sig < dim; ++sig)
        for (int rho = 0; rho < dim; ++rho) {
          Rational s(0);
          for (const auto& [lam, c] : g.bracket[mu][nu]) s += c * g.bracket_coeff(lam, sig, rho);
          for (const auto& [lam, c] : g.bracket[nu][sig]) s += c * g.bracket_coeff(lam, mu, rho);
          for (const auto& [lam, c] : g.bracket[sig][mu]) s += c * g.bracket_coeff(lam, nu, rho);
          if (s != 0)
            throw JacobiViolation("Jacobi identity fails on (" + g.names[mu] + ", " +
                                  g.names[nu] + ", " + g.names[sig] + ") at " +
                                  g.names[rho] + ": sum " + rat_str(s));
        }
  return g;
}

std::vector<std::vector<int>> enumerate_exponents(int dim, long max_deg) {
  if (max_deg >= kNoCap) throw InfiniteWindow("degree cap required to enumerate basis");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(dim, 0);
  // Within a degree, letterwise order means the earliest generator takes the
  // largest exponent first.
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == dim - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      cur[pos] = 0;
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur[pos] = k;
      self(self, pos + 1, rem - k);
      cur[pos] = 0;
    }
  };
  for (long d = 0; d <= max_deg; ++d) rec(rec, 0, static_cast<int>(d));
  return out;
}

std::string PBWContext::word_str(const Word& w) const {
  if (w.deg == 0) return "1";
  std::string s;
  for (int i = 0; i < g_.dim; ++i) {
    if (w.data[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += g_.names[i];
    if (w.data[i] > 1) s += "^" + std::to_string(w.data[i]);
  }
  return s;
}

Word PBWContext::gen_word(int mu) const {
  Word w = unit_word();
  w.data[mu] = 1;
  w.deg = 1;
  return w;
}

Word PBWContext::exponent_word(const std::vector<int>& exps) const {
  Word w{0, exps};
  for (int k : exps) w.deg += k;
  return w;
}

const LinComb<Word>& PBWContext::mul_word_gen(const Word& w, int mu) const {
  auto key = std::make_pair(w, mu);
  auto it = gen_memo_.find(key);
  if (it != gen_memo_.end()) return it->second;

  int top = -1;
  for (int i = g_.dim - 1; i >= 0; --i) {
    if (w.data[i] > 0) {
      top = i;
      break;
    }
  }
  LinComb<Word> out;
  if (top <= mu) {
    Word r = w;
    r.data[mu] += 1;
    r.deg += 1;
    out = LinComb<Word>::single(r);
  } else {
    // w = w' x_top with top > mu:
    // x^w x_mu = (x^{w'} x_mu) x_top + x^{w'} [x_top, x_mu].
    Word wp = w;
    wp.data[top] -= 1;
    wp.deg -= 1;
    out = mul_comb_gen(mul_word_gen(wp, mu), top);
    for (const auto& [lam, c] : g_.bracket[top][mu])
      out.add_scaled(mul_word_gen(wp, lam), c);
  }
  return gen_memo_.emplace(std::move(key), std::move(out)).first->second;
}

LinComb<Word> PBWContext::mul_comb_gen(const LinComb<Word>& v, int mu) const {
  LinComb<Word> out;
  for (const auto& [w, c] : v.terms()) out.add_scaled(mul_word_gen(w, mu), c);
  return out;
}

NCElement PBWContext::mul_words(const Word& a, const Word& b) const {
  auto key = std::make_pair(a, b);
  auto it = pair_memo_.find(key);
  if (it == pair_memo_.end()) {
    LinComb<Word> acc = LinComb<Word>::single(a);
    for (int mu = 0; mu < g_.dim; ++mu)
      for (int k = 0; k < b.data[mu]; ++k) acc = mul_comb_gen(acc, mu);
    it = pair_memo_.emplace(std::move(key), std::move(acc)).first;
  }
  return NCElement{this, it->second, kValidInf};
}

std::vector<Word> PBWContext::basis(const Window& win) const {
  std::vector<Word> out;
  for (auto& e : enumerate_exponents(g_.dim, win.a_cap)) out.push_back(exponent_word(e));
  return out;
}

}  // namespace hopfoid
