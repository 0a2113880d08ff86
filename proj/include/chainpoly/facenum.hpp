#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <vector>

#include "chainpoly/binomial.hpp"
#include "chainpoly/errors.hpp"

namespace chainpoly {

/// Face counts f_0..f_{d-1} of a (d-1)-dimensional complex; f_{-1} = 1 is
/// implicit throughout. d = 0 (empty vector) is allowed and stands for the
/// complex with no nonempty faces.
struct FVector {
  int d = 0;
  std::vector<mpz_class> f;

  bool operator==(const FVector&) const = default;
};

/// h_0..h_d attached to an f-vector with parameter d.
struct HVector {
  int d = 0;
  std::vector<mpz_class> h;

  bool operator==(const HVector&) const = default;
};

/// g_0..g_{floor(d/2)} of an h-vector with parameter d.
struct GVector {
  int d = 0;
  std::vector<mpz_class> g;

  bool operator==(const GVector&) const = default;
};

/// One of the binomial window vectors the f-vector decomposes over:
/// plain entries are C(i, d-1-k); a tilde vector is the sum of the plain
/// vectors with superscripts i and d-i (or the middle one alone when 2i = d).
struct BasisVector {
  enum class Kind { plain, tilde };
  Kind kind = Kind::plain;
  int i = 0;
  int d = 0;
  std::vector<mpz_class> b;

  bool operator==(const BasisVector&) const = default;
};

/// The index arithmetic of the ascending/descending chain inequalities:
/// ascent is asserted through epsilon, descent from descent_start on, and
/// every window vector peaks inside [peak_lo, peak_hi].
struct WindowIndices {
  int d = 0;
  int delta = 0;          // floor(d/2)
  int epsilon = 0;        // floor((d-1)/2)
  int descent_start = 0;  // floor(3(d-1)/4)
  int peak_lo = 0;        // delta
  int peak_hi = 0;        // delta + floor(delta/2)

  bool operator==(const WindowIndices&) const = default;
};

inline void check_f_shape(const FVector& f) {
  if (f.d < 0 || f.f.size() != static_cast<std::size_t>(f.d))
    throw RangeError("f-vector: entry count does not match d");
}

inline void check_h_shape(const HVector& h) {
  if (h.d < 0 || h.h.size() != static_cast<std::size_t>(h.d) + 1)
    throw RangeError("h-vector: entry count does not match d+1");
}

/// h_k = sum_{i=0..k} (-1)^{k-i} C(d-i, k-i) f_{i-1}. Always gives h_0 = 1
/// and h_1 = f_0 - d.
inline HVector f_to_h(const FVector& f) {
  check_f_shape(f);
  const int d = f.d;
  HVector h{d, std::vector<mpz_class>(d + 1)};
  for (int k = 0; k <= d; ++k) {
    mpz_class acc = 0;
    for (int i = 0; i <= k; ++i) {
      const mpz_class fi = (i == 0) ? mpz_class(1) : f.f[i - 1];
      const mpz_class term = binomial(d - i, k - i) * fi;
      if ((k - i) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    h.h[k] = acc;
  }
  return h;
}

/// f_k = sum_{i=0..d} h_i C(d-i, d-1-k). Inverse of f_to_h.
inline FVector h_to_f(const HVector& h) {
  check_h_shape(h);
  const int d = h.d;
  FVector f{d, std::vector<mpz_class>(d)};
  for (int k = 0; k < d; ++k) {
    mpz_class acc = 0;
    for (int i = 0; i <= d; ++i) acc += h.h[i] * binomial(d - i, d - 1 - k);
    f.f[k] = acc;
  }
  return f;
}

/// g_0 = h_0 and g_i = h_i - h_{i-1} for 1 <= i <= floor(d/2).
inline GVector g_vector(const HVector& h) {
  check_h_shape(h);
  const int half = h.d / 2;
  GVector g{h.d, std::vector<mpz_class>(half + 1)};
  g.g[0] = h.h[0];
  for (int i = 1; i <= half; ++i) g.g[i] = h.h[i] - h.h[i - 1];
  return g;
}

/// Dehn-Sommerville palindrome test: h_i = h_{d-i} for all i.
inline bool dehn_sommerville_check(const HVector& h) {
  check_h_shape(h);
  for (int i = 0; i <= h.d; ++i)
    if (h.h[i] != h.h[h.d - i]) return false;
  return true;
}

/// b^i with entries b_k = C(i, d-1-k) for k = 0..d-1.
inline BasisVector basis_vector(int i, int d) {
  if (d < 1 || i < 0 || i > d) throw RangeError("basis_vector: need 0 <= i <= d, d >= 1");
  BasisVector v{BasisVector::Kind::plain, i, d, std::vector<mpz_class>(d)};
  for (int k = 0; k < d; ++k) v.b[k] = binomial(i, d - 1 - k);
  return v;
}

/// b~^i = b^i + b^{d-i} when 2i != d, and b^{d/2} when 2i = d.
inline BasisVector tilde_basis_vector(int i, int d) {
  if (d < 1 || i < 0 || 2 * i > d)
    throw RangeError("tilde_basis_vector: need 0 <= i <= floor(d/2), d >= 1");
  BasisVector v{BasisVector::Kind::tilde, i, d, std::vector<mpz_class>(d)};
  if (2 * i == d) {
    for (int k = 0; k < d; ++k) v.b[k] = binomial(d / 2, d - 1 - k);
  } else {
    for (int k = 0; k < d; ++k) v.b[k] = binomial(i, d - 1 - k) + binomial(d - i, d - 1 - k);
  }
  return v;
}

struct DecompositionTerm {
  mpz_class coefficient;
  BasisVector vec;

  bool operator==(const DecompositionTerm&) const = default;
};

struct Decomposition {
  std::vector<DecompositionTerm> terms;
  bool all_nonnegative = true;

  /// Entrywise sum of coefficient * vector over all terms.
  std::vector<mpz_class> reconstruct(int d) const {
    std::vector<mpz_class> out(d, 0);
    for (const auto& t : terms)
      for (int k = 0; k < d; ++k) out[k] += t.coefficient * t.vec.b[k];
    return out;
  }
};

/// Expands h over the binomial window vectors: (h_i - h_{d-i}) b^{d-i} for
/// i = 0..epsilon plus h_{d-i} b~^i for i = 0..delta. The term sum always
/// reconstructs h_to_f(h) exactly; negative coefficients are legal and only
/// clear the all_nonnegative flag.
inline Decomposition decompose(const HVector& h) {
  check_h_shape(h);
  const int d = h.d;
  const int delta = d / 2;
  const int epsilon = (d - 1) / 2;
  Decomposition out;
  if (d == 0) return out;
  for (int i = 0; i <= epsilon; ++i) {
    mpz_class coeff = h.h[i] - h.h[d - i];
    if (coeff < 0) out.all_nonnegative = false;
    out.terms.push_back({std::move(coeff), basis_vector(d - i, d)});
  }
  for (int i = 0; i <= delta; ++i) {
    mpz_class coeff = h.h[d - i];
    if (coeff < 0) out.all_nonnegative = false;
    out.terms.push_back({std::move(coeff), tilde_basis_vector(i, d)});
  }
  return out;
}

/// Outcome of the unimodality scan. When unimodal, [lo, hi] is the maximal
/// plateau of the maximum value; otherwise first_violation is the first
/// index that rises again after a strict descent.
struct PeakResult {
  bool unimodal = false;
  int lo = -1;
  int hi = -1;
  int first_violation = -1;
};

/// Weakly-rising-then-weakly-falling test. Plateaus are legal; the reported
/// interval is the full maximal plateau.
inline PeakResult peak_interval(const std::vector<mpz_class>& v) {
  if (v.empty()) throw RangeError("peak_interval: empty sequence");
  bool descending = false;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    if (v[j] > v[j + 1]) descending = true;
    else if (v[j] < v[j + 1] && descending)
      return {false, -1, -1, static_cast<int>(j)};
  }
  const mpz_class m = *std::max_element(v.begin(), v.end());
  int lo = 0;
  while (v[lo] != m) ++lo;
  int hi = lo;
  while (hi + 1 < static_cast<int>(v.size()) && v[hi + 1] == m) ++hi;
  return {true, lo, hi, -1};
}

/// All valley indices where the sequence rises again after a strict descent.
inline std::vector<int> unimodality_violations(const std::vector<mpz_class>& v) {
  std::vector<int> out;
  bool descending = false;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    if (v[j] > v[j + 1]) descending = true;
    else if (v[j] < v[j + 1] && descending)
      out.push_back(static_cast<int>(j));
  }
  return out;
}

/// The index d-1-floor((d-i)/2) where both b^{d-i} and b~^i peak.
/// Equivalently floor(d/2)+floor(i/2), minus 1 when d and i are both even.
inline int predicted_peak(int i, int d) {
  if (d < 1 || i < 0 || i > d) throw RangeError("predicted_peak: need 0 <= i <= d, d >= 1");
  return d - 1 - (d - i) / 2;
}

inline WindowIndices window_indices(int d) {
  if (d < 1) throw RangeError("window_indices: need d >= 1");
  WindowIndices w;
  w.d = d;
  w.delta = d / 2;
  w.epsilon = (d - 1) / 2;
  w.descent_start = 3 * (d - 1) / 4;
  w.peak_lo = w.delta;
  w.peak_hi = w.delta + w.delta / 2;
  return w;
}

}  // namespace chainpoly
