#pragma once

#include <gmpxx.h>

#include <mutex>
#include <shared_mutex>
#include <vector>

#include "chainpoly/errors.hpp"

namespace chainpoly {

namespace detail {

struct PascalTable {
  std::shared_mutex mu;
  std::vector<std::vector<mpz_class>> rows{{mpz_class(1)}};

  static PascalTable& instance() {
    static PascalTable t;
    return t;
  }
};

}  // namespace detail

/// Exact binomial coefficient C(n, k). Rows of Pascal's triangle are grown
/// on demand and cached; lookups after a row exists take a shared lock only.
/// Out-of-range k yields 0, as usual.
inline mpz_class binomial(int n, int k) {
  if (n < 0) throw RangeError("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  auto& t = detail::PascalTable::instance();
  {
    std::shared_lock lock(t.mu);
    if (static_cast<std::size_t>(n) < t.rows.size()) return t.rows[n][k];
  }
  std::unique_lock lock(t.mu);
  while (t.rows.size() <= static_cast<std::size_t>(n)) {
    const auto& prev = t.rows.back();
    std::vector<mpz_class> row(prev.size() + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    t.rows.push_back(std::move(row));
  }
  return t.rows[n][k];
}

}  // namespace chainpoly
