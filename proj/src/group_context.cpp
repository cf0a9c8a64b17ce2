#include "hopfoid/group_context.hpp"

#include <set>

#include "hopfoid/errors.hpp"

namespace hopfoid {

GroupTable GroupTable::validated(std::vector<std::string> names,
                                 std::vector<std::vector<int>> mul) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw InvalidGroup("empty group");
  if (n > kMaxOrder)
    throw InvalidGroup("group order " + std::to_string(n) + " above supported bound " +
                       std::to_string(kMaxOrder));
  std::set<std::string> seen(names.begin(), names.end());
  if (static_cast<int>(seen.size()) != n) throw InvalidGroup("duplicate element name");
  if (static_cast<int>(mul.size()) != n) throw InvalidGroup("table is not square");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n) throw InvalidGroup("table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw InvalidGroup("table entry out of range");
  }

  GroupTable t;
  t.names = std::move(names);
  t.mul = std::move(mul);

  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      ok = t.mul[e][i] == i && t.mul[i][e] == i;
    if (ok) {
      t.identity = e;
      break;
    }
  }
  if (t.identity < 0) throw InvalidGroup("no two-sided identity");

  t.inv.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (t.mul[i][j] == t.identity && t.mul[j][i] == t.identity) {
        t.inv[i] = j;
        break;
      }
    }
    if (t.inv[i] < 0)
      throw InvalidGroup("element '" + t.names[i] + "' has no two-sided inverse");
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (t.mul[t.mul[i][j]][k] != t.mul[i][t.mul[j][k]])
          throw InvalidGroup("associativity fails at (" + t.names[i] + ", " + t.names[j] +
                             ", " + t.names[k] + ")");
  return t;
}

}  // namespace hopfoid
