#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hopfoid/rational.hpp"

namespace hopfoid {

// Sparse linear combination of opaque keys with exact coefficients.
// Invariants: no stored coefficient is zero; iteration order is the key
// type's operator<, which is what fixes leading terms, echelon forms and
// report serialization.
template <class K>
class LinComb {
 public:
  using Terms = std::map<K, Rational>;

  LinComb() = default;

  static LinComb single(const K& k, const Rational& c = Rational(1)) {
    LinComb v;
    v.add(k, c);
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  void clear() { terms_.clear(); }

  void add(const K& k, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const LinComb& other, const Rational& c) {
    if (c == 0) return;
    for (const auto& [k, v] : other.terms_) add(k, v * c);
  }

  LinComb& operator+=(const LinComb& o) {
    add_scaled(o, Rational(1));
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add_scaled(o, Rational(-1));
    return *this;
  }
  LinComb& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }

  // Smallest key under the key order.
  const K& leading() const {
    if (terms_.empty()) throw std::logic_error("leading() of zero combination");
    return terms_.begin()->first;
  }
  const Rational& leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff() of zero combination");
    return terms_.begin()->second;
  }

  Rational coeff(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

}  // namespace hopfoid
