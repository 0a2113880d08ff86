#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "chainpoly/facenum.hpp"
#include "chainpoly/lattice.hpp"
#include "chainpoly/poset.hpp"
#include "chainpoly/simplicial.hpp"

namespace chainpoly {

inline constexpr int kBatchDefaultGate = 7;
inline constexpr int kBatchOracleLimit = 6;    // chain vector vs face enumeration
inline constexpr int kBatchBoundaryLimit = 5;  // boundary g-vector relation

inline FVector to_f_vector(const ChainVector& c) { return FVector{c.d, c.c}; }

/// Verdict on the two strict inequality ranges
///   c_0 < ... < c_epsilon  and  c_{descent_start} > ... > c_{d-1},
/// plus a unimodality scan of the whole sequence. Ranges with fewer than two
/// indices pass vacuously. The checker is purely arithmetic; whether a
/// falsification is actually asserted for a given lattice is the harness's
/// decision (Boolean lattices with d <= 2 are recorded informationally).
struct TheoremReport {
  struct Violation {
    enum class Kind { ascend_fail, descend_fail };
    int index = 0;
    Kind kind = Kind::ascend_fail;

    bool operator==(const Violation&) const = default;
  };

  int d = 0;
  bool ascending_ok = true;
  bool descending_ok = true;
  WindowIndices window;
  std::vector<Violation> violations;
  bool unimodal = true;
  std::vector<int> unimodality_violations;
  bool falsification = false;

  bool operator==(const TheoremReport&) const = default;
};

inline TheoremReport theorem1_check(const ChainVector& cv) {
  if (cv.d < 1 || cv.c.size() != static_cast<std::size_t>(cv.d))
    throw RangeError("theorem1_check: need a chain vector with d >= 1 entries");
  TheoremReport rep;
  rep.d = cv.d;
  rep.window = window_indices(cv.d);
  for (int i = 0; i + 1 <= rep.window.epsilon; ++i)
    if (!(cv.c[i] < cv.c[i + 1])) {
      rep.ascending_ok = false;
      rep.violations.push_back({i, TheoremReport::Violation::Kind::ascend_fail});
    }
  for (int j = rep.window.descent_start; j + 1 <= cv.d - 1; ++j)
    if (!(cv.c[j] > cv.c[j + 1])) {
      rep.descending_ok = false;
      rep.violations.push_back({j, TheoremReport::Violation::Kind::descend_fail});
    }
  const PeakResult peak = peak_interval(cv.c);
  rep.unimodal = peak.unimodal;
  rep.unimodality_violations = unimodality_violations(cv.c);
  rep.falsification = !rep.ascending_ok || !rep.descending_ok;
  return rep;
}

/// h_i >= h_{d-i} >= 0 for all 0 <= i <= floor(d/2).
inline bool prop4_check(const HVector& h) {
  check_h_shape(h);
  for (int i = 0; i <= h.d / 2; ++i)
    if (!(h.h[i] >= h.h[h.d - i] && h.h[h.d - i] >= 0)) return false;
  return true;
}

/// f_i < f_j for all i < j with i + j <= d - 2. This is the conclusion
/// only; it genuinely fails when the complex is a full simplex (f_0 = d),
/// so callers gate on the nondegeneracy hypothesis where appropriate.
inline bool prop2_conclusion_check(const FVector& f) {
  check_f_shape(f);
  for (int i = 0; i < f.d; ++i)
    for (int j = i + 1; j < f.d && i + j <= f.d - 2; ++j)
      if (!(f.f[i] < f.f[j])) return false;
  return true;
}

/// Whether the batch harness asserts the strict ranges for this lattice.
/// Boolean lattices with d <= 2 are the deferred corner (their order
/// complex is a sphere whose small-d descent range degenerates).
inline bool theorem1_asserted(bool boolean_lattice, int d) {
  return !(boolean_lattice && d <= 2);
}

/// h-vector / Euler-characteristic consistency for the order complex of the
/// proper part: h_d = (-1)^{d-1} * reduced Euler characteristic, and
/// h_d = 1 with a palindromic h-vector for Boolean lattices (sphere),
/// h_d = 0 otherwise (ball).
inline bool hd_euler_check(const FVector& f, const HVector& h, bool boolean_lattice) {
  const mpz_class chi = reduced_euler(f);
  const int sign = (h.d % 2 == 1) ? 1 : -1;
  if (h.h[h.d] != sign * chi) return false;
  if (boolean_lattice) return h.h[h.d] == 1 && dehn_sommerville_check(h);
  return h.h[h.d] == 0;
}

/// Boundary relation for a non-Boolean lattice with d >= 2: with Delta the
/// order complex of the proper part (a ball) and dDelta its boundary
/// sphere, h_i - h_{d-i} = g_i(dDelta) for 0 <= i <= floor((d-1)/2).
/// Everything is computed on the explicit-enumeration oracle path.
inline bool boundary_g_check(const IdealLattice& lat) {
  if (is_boolean(lat)) throw RangeError("boundary_g_check: lattice is Boolean");
  const int d = lattice_length(lat) - 1;
  if (d < 2) throw RangeError("boundary_g_check: need d >= 2");
  const SimplicialComplex delta = order_complex(proper_part(lat));
  const HVector h = f_to_h(f_vector_bruteforce(delta));
  const SimplicialComplex boundary = boundary_complex(delta);
  if (boundary.facets().empty()) return false;  // a ball has a nonempty boundary
  const FVector fb = f_vector_bruteforce(boundary);
  if (fb.d != d - 1) return false;
  const GVector gb = g_vector(f_to_h(fb));
  for (int i = 0; i <= (d - 1) / 2; ++i)
    if (h.h[i] - h.h[d - i] != gb.g[i]) return false;
  return true;
}

struct FalsificationExample {
  std::string key;  // canonical key bytes
  int n = 0;
  int d = 0;
  ChainVector c;

  bool operator==(const FalsificationExample&) const = default;
};

struct NonUnimodalExample {
  std::string key;
  int n = 0;
  int d = 0;
  std::vector<int> violation_indices;
  ChainVector c;

  bool operator==(const NonUnimodalExample&) const = default;
};

/// Raw strict-range outcome on a Boolean lattice with d <= 2, where the
/// harness does not assert the theorem.
struct BooleanSmallDNote {
  std::string key;
  int n = 0;
  int d = 0;
  ChainVector c;
  bool raw_falsification = false;

  bool operator==(const BooleanSmallDNote&) const = default;
};

struct BatchReport {
  int n_max = 0;
  std::int64_t posets_tested = 0;
  std::int64_t lattices_boolean = 0;
  std::int64_t lattices_nonboolean = 0;
  std::int64_t theorem_passes = 0;
  std::int64_t falsifications = 0;
  std::int64_t prop4_failures = 0;
  std::int64_t prop2_applicable = 0;
  std::int64_t prop2_failures = 0;
  std::int64_t hd_euler_failures = 0;
  std::int64_t oracle_checked = 0;
  std::int64_t oracle_mismatches = 0;
  std::int64_t boundary_checked = 0;
  std::int64_t boundary_failures = 0;
  std::int64_t unimodal_count = 0;
  std::vector<NonUnimodalExample> nonunimodal_examples;
  std::vector<FalsificationExample> falsification_examples;
  std::vector<BooleanSmallDNote> boolean_informational;

  bool clean() const { return falsifications == 0 && prop4_failures == 0; }

  bool operator==(const BatchReport&) const = default;
};

namespace detail {

struct ClassOutcome {
  int n = 0;
  int d = 0;
  bool boolean_lattice = false;
  bool theorem_pass = true;
  bool falsified = false;
  bool prop4_ok = true;
  bool prop2_applicable = false;
  bool prop2_ok = true;
  bool hd_euler_ok = true;
  bool oracle_ran = false;
  bool oracle_ok = true;
  bool boundary_ran = false;
  bool boundary_ok = true;
  bool unimodal = true;
  std::optional<FalsificationExample> falsification;
  std::optional<NonUnimodalExample> nonunimodal;
  std::optional<BooleanSmallDNote> informational;
};

inline ClassOutcome check_one_class(const Poset& p) {
  ClassOutcome out;
  out.n = p.size();
  const IdealLattice lat = ideal_lattice(p, kCanonicalKeyLimit);
  out.boolean_lattice = is_boolean(lat);
  out.d = lattice_length(lat) - 1;
  const int d = out.d;
  if (d <= 0) {
    // Proper part is empty; every check is vacuous, h = (1).
    return out;
  }
  const Poset q = proper_part(lat);
  const ChainVector cv = chain_vector(q, d);
  const FVector f = to_f_vector(cv);
  const HVector h = f_to_h(f);

  const TheoremReport rep = theorem1_check(cv);
  out.unimodal = rep.unimodal;
  if (!rep.unimodal)
    out.nonunimodal = NonUnimodalExample{canonical_key(p), out.n, d, rep.unimodality_violations, cv};
  if (rep.falsification) {
    if (theorem1_asserted(out.boolean_lattice, d)) {
      out.theorem_pass = false;
      out.falsified = true;
      out.falsification = FalsificationExample{canonical_key(p), out.n, d, cv};
    } else {
      out.informational = BooleanSmallDNote{canonical_key(p), out.n, d, cv, true};
    }
  }

  out.prop4_ok = prop4_check(h);
  // Nondegeneracy hypothesis: the complex must not be a full simplex.
  out.prop2_applicable = out.prop4_ok && d >= 3 && f.f[0] > d;
  if (out.prop2_applicable) out.prop2_ok = prop2_conclusion_check(f);
  out.hd_euler_ok = hd_euler_check(f, h, out.boolean_lattice);

  if (out.n <= kBatchOracleLimit) {
    out.oracle_ran = true;
    out.oracle_ok = (f_vector_bruteforce(order_complex(q)) == f);
  }
  if (out.n <= kBatchBoundaryLimit && !out.boolean_lattice && d >= 2) {
    out.boundary_ran = true;
    out.boundary_ok = boundary_g_check(lat);
  }
  return out;
}

}  // namespace detail

/// Runs the whole battery over every isomorphism class of posets with
/// 1 <= |P| <= n_max. Work is distributed over `jobs` threads; outcomes are
/// merged in canonical-key order, so the report does not depend on the
/// worker count.
inline BatchReport batch_verify(int n_max, int jobs = 1, bool force = false) {
  if (n_max < 1) throw RangeError("batch_verify: need n_max >= 1");
  if (n_max > kBatchDefaultGate && !force)
    throw SizeError("batch_verify: n_max exceeds the batch gate (" +
                    std::to_string(kBatchDefaultGate) + "); use force to lift");
  if (n_max > kCanonicalKeyLimit)
    throw SizeError("batch_verify: n_max exceeds the canonicalization limit (" +
                    std::to_string(kCanonicalKeyLimit) + ")");
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  std::vector<Poset> classes;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Poset> batch = enumerate_posets(n);
    classes.insert(classes.end(), batch.begin(), batch.end());
  }

  std::vector<detail::ClassOutcome> outcomes(classes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < classes.size(); i = next.fetch_add(1))
      outcomes[i] = detail::check_one_class(classes[i]);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  BatchReport rep;
  rep.n_max = n_max;
  for (const auto& out : outcomes) {
    ++rep.posets_tested;
    if (out.boolean_lattice)
      ++rep.lattices_boolean;
    else
      ++rep.lattices_nonboolean;
    if (out.theorem_pass) ++rep.theorem_passes;
    if (out.falsified) ++rep.falsifications;
    if (!out.prop4_ok) ++rep.prop4_failures;
    if (out.prop2_applicable) {
      ++rep.prop2_applicable;
      if (!out.prop2_ok) ++rep.prop2_failures;
    }
    if (!out.hd_euler_ok) ++rep.hd_euler_failures;
    if (out.oracle_ran) {
      ++rep.oracle_checked;
      if (!out.oracle_ok) ++rep.oracle_mismatches;
    }
    if (out.boundary_ran) {
      ++rep.boundary_checked;
      if (!out.boundary_ok) ++rep.boundary_failures;
    }
    if (out.unimodal) ++rep.unimodal_count;
    if (out.nonunimodal) rep.nonunimodal_examples.push_back(*out.nonunimodal);
    if (out.falsification) rep.falsification_examples.push_back(*out.falsification);
    if (out.informational) rep.boolean_informational.push_back(*out.informational);
  }
  return rep;
}

}  // namespace chainpoly
