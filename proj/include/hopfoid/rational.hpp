#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hopfoid {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den > 0 once
// canonicalized; every construction path below canonicalizes, so stored
// coefficients are always in reduced form.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p" or "p/q" in base 10. Used by the config parser and tests.
inline Rational rat_parse(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

// Canonical "p/q" form; "/q" is omitted when q == 1.
inline std::string rat_str(const Rational& q) { return q.get_str(); }

}  // namespace hopfoid
