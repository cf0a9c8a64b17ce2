#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfoid/errors.hpp"
#include "hopfoid/lincomb.hpp"
#include "hopfoid/valid.hpp"
#include "hopfoid/word.hpp"

namespace hopfoid {

enum class Kind { group, pbw, sym, smash, tensor };

class AlgebraContext;

// Element of a fixed context: sparse combination of basis words plus the
// horizon up to which the stored T-components equal the untruncated value.
struct NCElement {
  const AlgebraContext* ctx = nullptr;
  LinComb<Word> val;
  Valid valid = kValidInf;

  bool is_zero() const { return val.is_zero(); }
};

class AlgebraContext {
 public:
  AlgebraContext(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}
  virtual ~AlgebraContext() = default;

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  virtual int word_size() const = 0;
  virtual Word unit_word() const = 0;
  virtual long a_degree(const Word& w) const = 0;
  virtual long t_degree(const Word& w) const = 0;
  virtual std::string word_str(const Word& w) const = 0;

  // Product of two basis words, before the context-level horizon policy.
  virtual NCElement mul_words(const Word& a, const Word& b) const = 0;

  // Basis enumeration in degree-lexicographic order (letterwise, so for PBW
  // x1^2 < x1 x2 < x2^2). Throws InfiniteWindow when the window does not make
  // the universe finite.
  virtual std::vector<Word> basis(const Window& win) const = 0;

  // Storage horizon for T-components; pbw/group contexts have none.
  virtual long t_store_cap() const { return kNoCap; }

  // Total degree of the cached coproduct tables feeding straightening, if any
  // (smash contexts; tensor takes the min over slots).
  virtual long coproduct_table_degree() const { return kNoCap; }

  bool in_window(const Word& w, const Window& win) const {
    return a_degree(w) <= win.a_cap && t_degree(w) <= win.t_cap &&
           t_degree(w) <= win.t_total;
  }

  NCElement zero() const { return NCElement{this, {}, kValidInf}; }
  NCElement one() const { return element(unit_word()); }
  NCElement element(const Word& w, const Rational& c = Rational(1)) const {
    return make(LinComb<Word>::single(w, c), kValidInf);
  }

  // Applies the storage cap and drops components beyond the horizon (keeping
  // them would let untrusted terms leak into later exact comparisons).
  NCElement make(LinComb<Word> v, Valid valid) const {
    valid = vmin(valid, static_cast<Valid>(t_store_cap()));
    LinComb<Word> kept;
    for (const auto& [w, c] : v.terms())
      if (t_degree(w) <= valid) kept.add(w, c);
    return NCElement{this, std::move(kept), valid};
  }

  // Horizon of a product given both factors, before per-word contributions.
  // Discarded T-components of x (degree > valid) can surface at output degree
  // > valid(x) - degA(y) after the coproduct legs are consumed by the action
  // on y's A-parts, and the cached coproduct tables stop resolving products
  // at table_degree - degA(y); pure contexts reduce to min of inputs.
  Valid mul_valid(const NCElement& x, const NCElement& y) const {
    long da = max_a_degree(y);
    Valid v = vmin(x.valid, static_cast<Valid>(coproduct_table_degree()));
    return vmin(y.valid, vsub(v, da));
  }

  NCElement mul(const NCElement& x, const NCElement& y) const;

  static long max_a_degree(const NCElement& e);

 private:
  Kind kind_;
  std::string name_;
  // mul_words is a pure function of the two words; closures hit the same
  // pairs tens of thousands of times, so the memo pays for itself quickly.
  mutable std::map<std::pair<Word, Word>, NCElement> word_mul_cache_;
};

inline long AlgebraContext::max_a_degree(const NCElement& e) {
  long d = 0;
  for (const auto& [w, c] : e.val.terms()) d = std::max(d, e.ctx->a_degree(w));
  return d;
}

inline NCElement AlgebraContext::mul(const NCElement& x, const NCElement& y) const {
  if (x.ctx != this || y.ctx != this) throw ContextMismatch("mul: foreign element");
  LinComb<Word> acc;
  Valid wv = kValidInf;
  for (const auto& [wx, cx] : x.val.terms()) {
    for (const auto& [wy, cy] : y.val.terms()) {
      auto it = word_mul_cache_.find({wx, wy});
      if (it == word_mul_cache_.end())
        it = word_mul_cache_.emplace(std::make_pair(wx, wy), mul_words(wx, wy)).first;
      acc.add_scaled(it->second.val, cx * cy);
      wv = vmin(wv, it->second.valid);
    }
  }
  return make(std::move(acc), vmin(mul_valid(x, y), wv));
}

inline NCElement operator+(const NCElement& a, const NCElement& b) {
  if (a.ctx != b.ctx) throw ContextMismatch("add: mixed contexts");
  LinComb<Word> v = a.val;
  v += b.val;
  return a.ctx->make(std::move(v), vmin(a.valid, b.valid));
}

inline NCElement operator-(const NCElement& a, const NCElement& b) {
  if (a.ctx != b.ctx) throw ContextMismatch("sub: mixed contexts");
  LinComb<Word> v = a.val;
  v -= b.val;
  return a.ctx->make(std::move(v), vmin(a.valid, b.valid));
}

inline NCElement operator*(const Rational& c, const NCElement& a) {
  LinComb<Word> v = a.val;
  v *= c;
  return NCElement{a.ctx, std::move(v), a.valid};
}

inline NCElement mul(const NCElement& x, const NCElement& y) {
  if (x.ctx == nullptr) throw ContextMismatch("mul: null context");
  return x.ctx->mul(x, y);
}

// Comparison scoped to the common horizon. equal means every component of
// T-degree <= horizon matches; horizon < 0 means there is nothing comparable.
struct Agreement {
  bool equal = true;
  Valid horizon = kValidInf;
};

inline Agreement agree(const NCElement& a, const NCElement& b) {
  if (a.ctx != b.ctx) throw ContextMismatch("agree: mixed contexts");
  Valid h = vmin(a.valid, b.valid);
  LinComb<Word> d = a.val;
  d -= b.val;
  for (const auto& [w, c] : d.terms())
    if (a.ctx->t_degree(w) <= h) return Agreement{false, h};
  return Agreement{true, h};
}

inline std::string to_string(const NCElement& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : e.val.terms()) {
    if (!s.empty()) s += " + ";
    s += rat_str(c) + "*" + e.ctx->word_str(w);
  }
  return s;
}

}  // namespace hopfoid
