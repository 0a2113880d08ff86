#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include "chainpoly/errors.hpp"
#include "chainpoly/poset.hpp"

namespace chainpoly {

/// Default gate on the ground poset size of the Birkhoff construction; the
/// ideal count of an n-antichain is 2^n. May be raised up to the hard limit
/// (one machine word of ideal mask, minus headroom for the full-set mask).
inline constexpr int kIdealGroundDefaultLimit = 20;
inline constexpr int kIdealGroundHardLimit = 62;

/// The distributive lattice J(P) of order ideals of a ground poset,
/// ordered by inclusion. Ideals are characteristic masks over the ground
/// elements, sorted by (cardinality, bit pattern).
struct IdealLattice {
  Poset ground;
  std::vector<std::uint64_t> ideals;

  std::uint64_t full_mask() const {
    const int n = ground.size();
    return n == 0 ? 0 : ((std::uint64_t{1} << n) - 1);
  }
};

/// Birkhoff construction by BFS from the empty ideal, adding one available
/// element at a time. Every order ideal is reached this way.
inline IdealLattice ideal_lattice(const Poset& p, int limit = kIdealGroundDefaultLimit) {
  const int n = p.size();
  if (limit > kIdealGroundHardLimit) limit = kIdealGroundHardLimit;
  if (n > limit)
    throw SizeError("ideal_lattice: ground poset exceeds the ideal-lattice gate (" +
                    std::to_string(limit) + ")");
  std::vector<std::uint64_t> below(n, 0);
  for (int x = 0; x < n; ++x)
    p.below(x).for_each_bit([&](std::size_t y) { below[x] |= std::uint64_t{1} << y; });

  std::unordered_set<std::uint64_t> seen{0};
  std::queue<std::uint64_t> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    const std::uint64_t ideal = frontier.front();
    frontier.pop();
    for (int x = 0; x < n; ++x) {
      if (ideal & (std::uint64_t{1} << x)) continue;
      if (below[x] & ~ideal) continue;  // some predecessor missing
      const std::uint64_t next = ideal | (std::uint64_t{1} << x);
      if (seen.insert(next).second) frontier.push(next);
    }
  }
  IdealLattice lat{p, {seen.begin(), seen.end()}};
  std::sort(lat.ideals.begin(), lat.ideals.end(), [](std::uint64_t a, std::uint64_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  return lat;
}

/// Induced strict inclusion order on the ideals other than the empty set
/// and the full set; element labels follow the sorted ideal order. Empty
/// when the lattice has at most two elements.
inline Poset proper_part(const IdealLattice& lat) {
  const std::uint64_t full = lat.full_mask();
  std::vector<std::uint64_t> mid;
  mid.reserve(lat.ideals.size());
  for (std::uint64_t m : lat.ideals)
    if (m != 0 && m != full) mid.push_back(m);
  const int n = static_cast<int>(mid.size());
  std::vector<DynBitset> below(n, DynBitset(n));
  // mid is sorted by cardinality, so proper inclusions only point backwards.
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (!(mid[i] & ~mid[j]) && mid[i] != mid[j]) below[j].set(i);
  return Poset::from_below_rows(std::move(below));
}

/// Length of the longest chain of ideals (cardinality minus one), computed
/// by longest-path DP over the inclusion order. Equals the ground size.
inline int lattice_length(const IdealLattice& lat) {
  const int m = static_cast<int>(lat.ideals.size());
  std::vector<int> len(m, 1);
  int best = m > 0 ? 1 : 0;
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < j; ++i)
      if (!(lat.ideals[i] & ~lat.ideals[j]) && lat.ideals[i] != lat.ideals[j])
        len[j] = std::max(len[j], len[i] + 1);
    best = std::max(best, len[j]);
  }
  return best > 0 ? best - 1 : 0;
}

/// J(P) is Boolean exactly when the ground poset is an antichain.
inline bool is_boolean(const IdealLattice& lat) { return lat.ground.is_antichain(); }

/// Chain counts of the proper part: c_i is the number of chains of length i
/// (cardinality i+1), with exact integer arithmetic.
struct ChainVector {
  int d = 0;
  std::vector<mpz_class> c;

  bool operator==(const ChainVector&) const = default;
};

namespace detail {

// Kahn order; ready elements are taken in ascending index order, which is
// deterministic and keeps proper parts in their sorted-ideal order.
inline std::vector<int> topological_order(const Poset& q) {
  const int n = q.size();
  std::vector<int> pending(n), order;
  order.reserve(n);
  std::vector<int> ready;
  for (int x = 0; x < n; ++x) {
    pending[x] = static_cast<int>(q.below(x).count());
    if (pending[x] == 0) ready.push_back(x);
  }
  for (std::size_t head = 0; head < ready.size(); ++head) {
    const int x = ready[head];
    order.push_back(x);
    q.above(x).for_each_bit([&](std::size_t y) {
      if (--pending[y] == 0) ready.push_back(static_cast<int>(y));
    });
  }
  return order;
}

}  // namespace detail

/// Counts chains by the level recurrence N_0(x) = 1,
/// N_k(x) = sum over y < x of N_{k-1}(y), c_k = sum over x of N_k(x),
/// iterating in topological order. Throws DimensionError unless the longest
/// chain of q has exactly d elements.
inline ChainVector chain_vector(const Poset& q, int d) {
  if (d < 1) throw RangeError("chain_vector: need d >= 1");
  const int n = q.size();
  const std::vector<int> order = detail::topological_order(q);
  if (static_cast<int>(order.size()) != n)
    throw CycleError("chain_vector: input order contains a cycle");

  std::vector<int> height(n, 1);
  int longest = n > 0 ? 1 : 0;
  for (int x : order) {
    q.below(x).for_each_bit([&](std::size_t y) { height[x] = std::max(height[x], height[y] + 1); });
    longest = std::max(longest, height[x]);
  }
  if (longest != d)
    throw DimensionError("chain_vector: longest chain has " + std::to_string(longest) +
                         " elements, expected " + std::to_string(d));

  ChainVector cv{d, std::vector<mpz_class>(d, 0)};
  std::vector<mpz_class> level(n, 1), next(n);
  cv.c[0] = n;
  for (int k = 1; k < d; ++k) {
    for (int x = 0; x < n; ++x) next[x] = 0;
    for (int x : order)
      q.below(x).for_each_bit([&](std::size_t y) { next[x] += level[y]; });
    std::swap(level, next);
    for (int x = 0; x < n; ++x) cv.c[k] += level[x];
  }
  return cv;
}

}  // namespace chainpoly
