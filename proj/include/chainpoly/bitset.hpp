#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace chainpoly {

/// Runtime-sized bitset used for element subsets, relation rows and faces.
/// Ordering compares the size first, then the words from the most
/// significant end down, so sorted containers see the plain numeric order
/// of the bit pattern.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  static DynBitset from_mask(std::size_t nbits, std::uint64_t mask) {
    DynBitset b(nbits);
    if (!b.w_.empty()) b.w_[0] = mask;
    return b;
  }

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < nbits_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < nbits_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool subset_of(const DynBitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const DynBitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  DynBitset& operator|=(const DynBitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }

  bool operator==(const DynBitset& o) const = default;
  std::strong_ordering operator<=>(const DynBitset& o) const {
    if (auto c = nbits_ <=> o.nbits_; c != 0) return c;
    for (std::size_t i = w_.size(); i-- > 0;)
      if (auto c = w_[i] <=> o.w_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  template <typename Fn>
  void for_each_bit(Fn&& fn) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        fn(wi * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }
  std::vector<int> bits() const {
    std::vector<int> out;
    out.reserve(count());
    for_each_bit([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
    for (std::uint64_t w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

struct DynBitsetHash {
  std::size_t operator()(const DynBitset& b) const { return b.hash(); }
};

}  // namespace chainpoly
