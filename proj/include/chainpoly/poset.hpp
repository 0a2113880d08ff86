#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "chainpoly/bitset.hpp"
#include "chainpoly/errors.hpp"

namespace chainpoly {

/// Canonical keys take the minimum over all n! relabelings, so they are
/// restricted to small ground sets. Exhaustive runs stay below this bound.
inline constexpr int kCanonicalKeyLimit = 8;

/// Finite strict partial order on elements 0..n-1. The relation is stored as
/// bit rows in both directions; values are immutable once constructed and
/// safe to share across threads.
class Poset {
 public:
  Poset() = default;

  static Poset antichain(int n) {
    Poset p;
    p.n_ = n;
    p.below_.assign(n, DynBitset(n));
    p.above_.assign(n, DynBitset(n));
    return p;
  }

  /// Builds the poset whose strict order is the transitive closure of the
  /// given cover pairs (a, b) meaning a < b. Throws CycleError if the pairs
  /// contain a directed cycle, RangeError on out-of-range indices.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n < 0) throw RangeError("from_covers: negative element count");
    Poset p = antichain(n);
    for (auto [a, b] : covers) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw RangeError("from_covers: cover index out of range");
      if (a == b) throw CycleError("from_covers: cover pair relates an element to itself");
      p.above_[a].set(b);
    }
    // Floyd-Warshall closure on bit rows.
    for (int k = 0; k < n; ++k)
      for (int x = 0; x < n; ++x)
        if (p.above_[x].test(k)) p.above_[x] |= p.above_[k];
    for (int x = 0; x < n; ++x)
      if (p.above_[x].test(x)) throw CycleError("from_covers: cover pairs contain a cycle");
    p.rebuild_below();
    return p;
  }

  /// Trusted constructor: below[x] must already be the transitive strict
  /// down-set of x. Used for induced orders such as lattice proper parts.
  static Poset from_below_rows(std::vector<DynBitset> below) {
    Poset p;
    p.n_ = static_cast<int>(below.size());
    p.below_ = std::move(below);
    p.above_.assign(p.n_, DynBitset(p.n_));
    for (int x = 0; x < p.n_; ++x)
      p.below_[x].for_each_bit([&](std::size_t y) { p.above_[y].set(x); });
    return p;
  }

  int size() const { return n_; }
  bool less(int x, int y) const { return above_[x].test(y); }
  const DynBitset& below(int x) const { return below_[x]; }
  const DynBitset& above(int x) const { return above_[x]; }

  bool is_antichain() const {
    for (const auto& row : above_)
      if (row.any()) return false;
    return true;
  }

  /// Hasse diagram edges (a, b) with a < b and nothing strictly between,
  /// sorted lexicographically.
  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
      above_[a].for_each_bit([&](std::size_t b) {
        if (!above_[a].intersects(below_[b])) out.emplace_back(a, static_cast<int>(b));
      });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Full invariant re-check: irreflexive, antisymmetric, transitive, and
  /// the two row directions agree. Intended for tests and input validation.
  void validate() const {
    for (int x = 0; x < n_; ++x) {
      if (above_[x].test(x) || below_[x].test(x)) throw CycleError("poset: relation is reflexive");
      above_[x].for_each_bit([&](std::size_t y) {
        if (above_[y].test(x)) throw CycleError("poset: relation is not antisymmetric");
        if (!below_[y].test(x)) throw Error("poset: row directions disagree");
        if (!above_[y].subset_of(above_[x]))
          throw Error("poset: relation is not transitive");
      });
    }
  }

  bool operator==(const Poset& o) const { return n_ == o.n_ && above_ == o.above_; }

 private:
  void rebuild_below() {
    below_.assign(n_, DynBitset(n_));
    for (int x = 0; x < n_; ++x)
      above_[x].for_each_bit([&](std::size_t y) { below_[y].set(x); });
  }

  int n_ = 0;
  std::vector<DynBitset> below_;  // below_[x]: all y with y < x
  std::vector<DynBitset> above_;  // above_[x]: all y with x < y
};

inline bool is_antichain(const Poset& p) { return p.is_antichain(); }

/// Isomorphism-invariant key: byte 0 is n, byte 1+i is the relation row of
/// element i under the relabeling that minimizes the byte string. Two posets
/// compare equal iff they are order-isomorphic.
inline std::string canonical_key(const Poset& p) {
  const int n = p.size();
  if (n > kCanonicalKeyLimit)
    throw SizeError("canonical_key: n exceeds the canonicalization limit (" +
                    std::to_string(kCanonicalKeyLimit) + ")");
  // Local above-masks; n <= 8 so one byte per row.
  std::array<std::uint8_t, 8> rows{};
  for (int x = 0; x < n; ++x)
    p.above(x).for_each_bit([&](std::size_t y) { rows[x] |= std::uint8_t(1u << y); });

  std::array<int, 8> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::array<std::uint8_t, 8> best{}, cur{};
  bool first = true;
  do {
    bool better = false, worse = false;
    for (int i = 0; i < n; ++i) {
      std::uint8_t row = 0;
      const std::uint8_t src = rows[perm[i]];
      for (int j = 0; j < n; ++j) row |= std::uint8_t(((src >> perm[j]) & 1u) << j);
      cur[i] = row;
      if (!first && !better) {
        if (row > best[i]) {
          worse = true;
          break;
        }
        if (row < best[i]) better = true;
      }
    }
    if (first || (better && !worse)) {
      best = cur;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + n));

  std::string key;
  key.reserve(1 + n);
  key.push_back(static_cast<char>(n));
  for (int i = 0; i < n; ++i) key.push_back(static_cast<char>(best[i]));
  return key;
}

namespace detail {

// Down-set masks of a poset built one element at a time; masks are already
// transitively closed because each new down-set is an order ideal of the
// prefix. Every isomorphism class on n elements shows up at least once
// (any linear extension orders the elements this way).
template <typename Fn>
void extend_naturally_labeled(int n, std::vector<std::uint32_t>& down, Fn&& emit) {
  const int k = static_cast<int>(down.size());
  if (k == n) {
    emit(down);
    return;
  }
  const std::uint32_t full = (k == 0) ? 0 : ((1u << k) - 1);
  std::uint32_t s = full;
  while (true) {  // all submasks of full, including 0
    bool ideal = true;
    for (std::uint32_t m = s; m; m &= m - 1) {
      const int x = std::countr_zero(m);
      if (down[x] & ~s) {
        ideal = false;
        break;
      }
    }
    if (ideal) {
      down.push_back(s);
      extend_naturally_labeled(n, down, emit);
      down.pop_back();
    }
    if (s == 0) break;
    s = (s - 1) & full;
  }
}

inline Poset poset_from_down_masks(const std::vector<std::uint32_t>& down) {
  const int n = static_cast<int>(down.size());
  std::vector<DynBitset> below(n, DynBitset(n));
  for (int x = 0; x < n; ++x)
    for (std::uint32_t m = down[x]; m; m &= m - 1) below[x].set(std::countr_zero(m));
  return Poset::from_below_rows(std::move(below));
}

}  // namespace detail

/// One representative per isomorphism class of posets on n elements, sorted
/// by canonical key. Candidates are generated by incremental extension
/// (each new element sits above an order ideal of the prefix) and then
/// deduplicated by canonical key.
inline std::vector<Poset> enumerate_posets(int n) {
  if (n < 0) throw RangeError("enumerate_posets: negative element count");
  if (n > kCanonicalKeyLimit)
    throw SizeError("enumerate_posets: n exceeds the canonicalization limit (" +
                    std::to_string(kCanonicalKeyLimit) + ")");
  std::map<std::string, std::vector<std::uint32_t>> classes;
  std::vector<std::uint32_t> down;
  detail::extend_naturally_labeled(n, down, [&](const std::vector<std::uint32_t>& masks) {
    Poset p = detail::poset_from_down_masks(masks);
    classes.emplace(canonical_key(p), masks);
  });
  std::vector<Poset> out;
  out.reserve(classes.size());
  for (const auto& [key, masks] : classes) out.push_back(detail::poset_from_down_masks(masks));
  return out;
}

}  // namespace chainpoly
