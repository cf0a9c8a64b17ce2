#pragma once

#include <algorithm>

namespace hopfoid {

// Degree horizon attached to elements of truncated algebras: components of
// total T-degree <= valid are exactly the components of the untruncated value.
// kValidInf means the stored terms are the complete element. Exact tracks
// (finite group) use kValidInf throughout.
using Valid = long;

inline constexpr Valid kValidInf = 1L << 40;
inline constexpr Valid kValidNone = -1;

inline Valid vmin(Valid a, Valid b) { return std::min(a, b); }

// Saturating, infinity-aware "lower the horizon by d".
inline Valid vsub(Valid a, long d) {
  if (a >= kValidInf) return kValidInf;
  return std::max(a - d, kValidNone);
}

}  // namespace hopfoid
