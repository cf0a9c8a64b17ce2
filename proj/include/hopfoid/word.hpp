#pragma once

#include <compare>
#include <vector>

namespace hopfoid {

// Basis word of an algebra context. The payload layout is context-defined
// (group: one element index; PBW/symmetric: exponent vector; smash/tensor:
// concatenation of the component layouts). deg is the total degree stamped by
// the owning context, so comparison (deg, then lex on data) needs no context
// and keeps map iteration, echelon forms and reports deterministic.
struct Word {
  int deg = 0;
  std::vector<int> data;

  auto operator<=>(const Word&) const = default;
};

// Per-slot degree caps for basis enumeration and windowed closures; t_total
// additionally caps the summed T-degree across tensor slots.
inline constexpr long kNoCap = 1L << 40;

struct Window {
  long a_cap = kNoCap;
  long t_cap = kNoCap;
  long t_total = kNoCap;
};

}  // namespace hopfoid
