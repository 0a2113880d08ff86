#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chainpoly/bitset.hpp"
#include "chainpoly/errors.hpp"
#include "chainpoly/facenum.hpp"
#include "chainpoly/poset.hpp"

namespace chainpoly {

/// This module is the slow ground truth: everything here enumerates faces
/// explicitly, so instances are gated hard.
inline constexpr int kOracleFacetLimit = 10000;
inline constexpr int kOracleDimensionLimit = 12;

/// Pure-or-not simplicial complex given by its facet list (inclusion-maximal
/// faces as vertex masks). Facets are kept sorted by (cardinality, pattern).
class SimplicialComplex {
 public:
  SimplicialComplex(int vertices, std::vector<DynBitset> facets)
      : vertices_(vertices), facets_(std::move(facets)) {
    std::sort(facets_.begin(), facets_.end(), [](const DynBitset& a, const DynBitset& b) {
      const auto ca = a.count(), cb = b.count();
      return ca != cb ? ca < cb : a < b;
    });
  }

  int vertices() const { return vertices_; }
  const std::vector<DynBitset>& facets() const { return facets_; }

  /// Dimension of the largest facet; -1 for the empty facet list.
  int dimension() const {
    if (facets_.empty()) return -1;
    return static_cast<int>(facets_.back().count()) - 1;
  }

  bool is_pure() const {
    if (facets_.empty()) return true;
    return facets_.front().count() == facets_.back().count();
  }

  /// Antichain re-check: no facet contains another. Quadratic; test use.
  void validate() const {
    for (std::size_t i = 0; i < facets_.size(); ++i)
      for (std::size_t j = 0; j < facets_.size(); ++j)
        if (i != j && facets_[i].subset_of(facets_[j]))
          throw Error("complex: facet list is not an antichain");
  }

 private:
  int vertices_ = 0;
  std::vector<DynBitset> facets_;
};

/// Order complex of a poset: the facets are its inclusion-maximal chains,
/// enumerated as saturated cover paths from minimal to maximal elements.
inline SimplicialComplex order_complex(const Poset& q) {
  const int n = q.size();
  if (n == 0) throw EmptyError("order_complex: empty poset");

  // covers[x]: elements covering x.
  std::vector<std::vector<int>> covers(n);
  for (int x = 0; x < n; ++x)
    q.above(x).for_each_bit([&](std::size_t y) {
      if (!q.above(x).intersects(q.below(static_cast<int>(y)))) covers[x].push_back(static_cast<int>(y));
    });

  std::vector<DynBitset> facets;
  DynBitset chain(n);
  auto extend = [&](auto&& self, int x) -> void {
    chain.set(x);
    if (covers[x].empty()) {
      if (static_cast<int>(chain.count()) > kOracleDimensionLimit + 1)
        throw SizeError("order_complex: facet size exceeds the oracle dimension gate (" +
                        std::to_string(kOracleDimensionLimit) + ")");
      if (static_cast<int>(facets.size()) >= kOracleFacetLimit)
        throw SizeError("order_complex: facet count exceeds the oracle facet gate (" +
                        std::to_string(kOracleFacetLimit) + ")");
      facets.push_back(chain);
    }
    for (int y : covers[x]) self(self, y);
    chain.reset(x);
  };
  for (int x = 0; x < n; ++x)
    if (q.below(x).none()) extend(extend, x);
  return SimplicialComplex(n, std::move(facets));
}

/// Face counts by explicit enumeration: every nonempty subset of every
/// facet, deduplicated. f_i counts faces of cardinality i+1; the implicit
/// f_{-1} = 1 is not stored.
inline FVector f_vector_bruteforce(const SimplicialComplex& k) {
  std::set<DynBitset> faces;
  for (const DynBitset& facet : k.facets()) {
    const std::vector<int> vs = facet.bits();
    const std::size_t s = vs.size();
    if (s > static_cast<std::size_t>(kOracleDimensionLimit) + 1)
      throw SizeError("f_vector_bruteforce: facet size exceeds the oracle dimension gate (" +
                      std::to_string(kOracleDimensionLimit) + ")");
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << s); ++sub) {
      DynBitset face(k.vertices());
      for (std::size_t b = 0; b < s; ++b)
        if (sub & (std::uint64_t{1} << b)) face.set(vs[b]);
      faces.insert(std::move(face));
    }
  }
  const int d = k.dimension() + 1;
  FVector f{d, std::vector<mpz_class>(d, 0)};
  for (const DynBitset& face : faces) f.f[face.count() - 1] += 1;
  return f;
}

/// Boundary of a pure complex: the ridges (codimension-1 faces) lying in
/// exactly one facet. The facet list of the result may be empty.
inline SimplicialComplex boundary_complex(const SimplicialComplex& k) {
  if (!k.is_pure()) throw PurityError("boundary_complex: complex is not pure");
  if (k.dimension() < 1)
    throw RangeError("boundary_complex: dimension must be at least 1");
  std::map<DynBitset, int> ridge_count;
  for (const DynBitset& facet : k.facets()) {
    for (int v : facet.bits()) {
      DynBitset ridge = facet;
      ridge.reset(v);
      ++ridge_count[ridge];
    }
  }
  std::vector<DynBitset> boundary;
  for (const auto& [ridge, cnt] : ridge_count)
    if (cnt == 1) boundary.push_back(ridge);
  return SimplicialComplex(k.vertices(), std::move(boundary));
}

/// Reduced Euler characteristic -1 + f_0 - f_1 + f_2 - ...
inline mpz_class reduced_euler(const FVector& f) {
  check_f_shape(f);
  mpz_class chi = -1;
  for (int i = 0; i < f.d; ++i) {
    if (i % 2 == 0)
      chi += f.f[i];
    else
      chi -= f.f[i];
  }
  return chi;
}

}  // namespace chainpoly
