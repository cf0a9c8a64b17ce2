#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hopfoid/lincomb.hpp"
#include "hopfoid/valid.hpp"

namespace hopfoid {

// Reduced row echelon span over the fixed key order. Invariants: rows sorted
// by strictly increasing leading key, leading coefficient 1, and no row's
// leading key occurs in any other row. The reduced echelon form of a span is
// unique, so row-by-row comparison decides span equality and reruns are
// byte-stable regardless of insertion order.
//
// Rows carry a horizon tag, min-combined through every row operation; exact
// tracks use kValidInf throughout and never look at it.
template <class K>
class SubspaceBasis {
 public:
  struct Row {
    LinComb<K> vec;
    Valid tag = kValidInf;
  };

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }

  // Full reduction: ascending sweep over v's terms, locating rows by binary
  // search on their leading keys. Cancelling a term only introduces keys above
  // it (a row's leading is its smallest key), so one forward sweep reaches the
  // canonical residue and rows v never touches are never visited. The
  // elimination arithmetic runs over flat sorted mirrors of the rows; building
  // a map per intermediate vector is what used to dominate dense closures.
  Row reduce(const LinComb<K>& v, Valid tag = kValidInf) const {
    Flat cur = flatten(v), done, next;
    done.reserve(cur.size());
    std::size_t head = 0;
    while (head < cur.size()) {
      std::size_t ri = idx_by_leading(cur[head].first);
      if (ri == npos) {
        done.push_back(std::move(cur[head]));
        ++head;
        continue;
      }
      tag = vmin(tag, rows_[ri].tag);
      sub_scaled(cur, head + 1, flat_[ri], 1, cur[head].second, next);
      cur.swap(next);
      head = 0;
    }
    LinComb<K> res;
    for (auto& [k, c] : done) res.add(k, c);
    return Row{std::move(res), tag};
  }

  bool contains(const LinComb<K>& v) const { return reduce(v).vec.is_zero(); }

  // Inserts v, returning the (unnormalized) residue; residue zero means v was
  // already in the span. The stored row is the normalized residue, and its
  // leading key is eliminated from all earlier rows.
  Row insert(const LinComb<K>& v, Valid tag = kValidInf) {
    Row res = reduce(v, tag);
    if (res.vec.is_zero()) return res;
    Row row;
    row.vec = res.vec;
    row.vec *= Rational(1) / res.vec.leading_coeff();
    row.tag = res.tag;
    Flat rowf = flatten(row.vec);
    const K& lead = rowf.front().first;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto it = std::lower_bound(
          flat_[i].begin(), flat_[i].end(), lead,
          [](const std::pair<K, Rational>& t, const K& k) { return t.first < k; });
      if (it == flat_[i].end() || !(it->first == lead) || it->second == 0) continue;
      Flat merged;
      sub_scaled(flat_[i], 0, rowf, 0, it->second, merged);
      flat_[i].swap(merged);
      LinComb<K> rebuilt;
      for (auto& [k, c] : flat_[i]) rebuilt.add(k, c);
      rows_[i].vec = std::move(rebuilt);
      rows_[i].tag = vmin(rows_[i].tag, row.tag);
    }
    std::size_t pos = 0;
    while (pos < rows_.size() && flat_[pos].front().first < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(row));
    flat_.insert(flat_.begin() + pos, std::move(rowf));
    return res;
  }

  bool same_span(const SubspaceBasis& o) const {
    if (rows_.size() != o.rows_.size()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (!(rows_[i].vec == o.rows_[i].vec)) return false;
    return true;
  }

 private:
  using Flat = std::vector<std::pair<K, Rational>>;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // A map iterates in key order, so the mirror comes out sorted.
  static Flat flatten(const LinComb<K>& v) {
    Flat f;
    f.reserve(v.size());
    for (const auto& [k, c] : v.terms()) f.emplace_back(k, c);
    return f;
  }

  // out = a[ai:] - c * b[bi:], two-pointer merge of sorted flats.
  static void sub_scaled(const Flat& a, std::size_t ai, const Flat& b, std::size_t bi,
                         const Rational& c, Flat& out) {
    out.clear();
    std::size_t i = ai, j = bi;
    while (i < a.size() && j < b.size()) {
      if (a[i].first < b[j].first) {
        out.push_back(a[i++]);
      } else if (b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -c * b[j].second);
        ++j;
      } else {
        Rational r = a[i].second - c * b[j].second;
        if (r != 0) out.emplace_back(a[i].first, std::move(r));
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.emplace_back(b[j].first, -c * b[j].second);
  }

  std::size_t idx_by_leading(const K& k) const {
    auto it = std::lower_bound(
        flat_.begin(), flat_.end(), k,
        [](const Flat& f, const K& key) { return f.front().first < key; });
    if (it == flat_.end() || !(it->front().first == k)) return npos;
    return static_cast<std::size_t>(it - flat_.begin());
  }

  std::vector<Row> rows_;
  std::vector<Flat> flat_;  // per-row sorted mirrors for elimination arithmetic
};

// Zassenhaus doubling trick: echelonize rows (u|u) for u in b1 and (w|0) for
// w in b2; rows with zero left half carry an intersection basis in the right
// half. Keys are tagged with the half index so the left half sorts first.
template <class K>
SubspaceBasis<K> intersect(const SubspaceBasis<K>& b1, const SubspaceBasis<K>& b2) {
  using DK = std::pair<int, K>;
  SubspaceBasis<DK> big;
  for (const auto& r : b1.rows()) {
    LinComb<DK> v;
    for (const auto& [k, c] : r.vec.terms()) {
      v.add(DK{0, k}, c);
      v.add(DK{1, k}, c);
    }
    big.insert(v, r.tag);
  }
  for (const auto& r : b2.rows()) {
    LinComb<DK> v;
    for (const auto& [k, c] : r.vec.terms()) v.add(DK{0, k}, c);
    big.insert(v, r.tag);
  }
  SubspaceBasis<K> out;
  for (const auto& r : big.rows()) {
    if (r.vec.leading().first == 0) continue;  // still has a left-half component
    LinComb<K> v;
    for (const auto& [k, c] : r.vec.terms()) v.add(k.second, c);
    out.insert(v, r.tag);
  }
  return out;
}

template <class K>
struct ClosureResult {
  SubspaceBasis<K> basis;
  bool clipped = false;     // some produced element left the window and was dropped
  std::size_t rounds = 0;
};

// Iterates a *linear* step map over freshly inserted rows until the rank
// stabilizes. Elements with any key outside the window are discarded whole
// (clipping a single term would silently change the element, which is exactly
// what the horizon bookkeeping exists to prevent). Terminates because the
// window admits finitely many keys, so the rank is bounded.
template <class K, class Step, class Pred>
ClosureResult<K> span_closure(const std::vector<typename SubspaceBasis<K>::Row>& seed,
                              Step step, Pred in_window, std::size_t max_rounds = 256) {
  ClosureResult<K> out;
  std::vector<typename SubspaceBasis<K>::Row> fresh;

  auto feed = [&](const LinComb<K>& v, Valid tag) {
    if (v.is_zero()) return;
    for (const auto& [k, c] : v.terms()) {
      if (!in_window(k)) {
        out.clipped = true;
        return;
      }
    }
    auto res = out.basis.insert(v, tag);
    if (!res.vec.is_zero()) {
      typename SubspaceBasis<K>::Row row;
      row.vec = res.vec;
      row.vec *= Rational(1) / res.vec.leading_coeff();
      row.tag = res.tag;
      fresh.push_back(std::move(row));
    }
  };

  for (const auto& s : seed) feed(s.vec, s.tag);
  while (!fresh.empty()) {
    if (++out.rounds > max_rounds)
      throw std::logic_error("span_closure failed to stabilize");
    std::vector<typename SubspaceBasis<K>::Row> batch;
    batch.swap(fresh);
    for (const auto& r : batch)
      for (auto& [v, tag] : step(r.vec, r.tag)) feed(v, tag);
  }
  return out;
}

}  // namespace hopfoid
