#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "paveset/error.hpp"

namespace paveset {

/// Hard cap on finite ground sizes; dense 2^n tables stay desk-scale below it.
inline constexpr int kMaxGround = 16;
/// Cap for operations that enumerate every {0,1}-valued monotone set function.
inline constexpr int kMaxEnumGround = 5;

inline void check_ground_size(int n) {
  if (n < 1 || n > kMaxGround)
    throw Error("GroundTooLarge", "finite ground size must be in [1, " +
                                      std::to_string(kMaxGround) + "], got " + std::to_string(n));
}

/// Subset of a finite ground {0, ..., n-1}, stored as a bitmask.
struct Subset {
  int n = 0;
  std::uint32_t bits = 0;

  Subset() = default;
  Subset(int ground, std::uint32_t mask) : n(ground), bits(mask) {
    check_ground_size(ground);
    if (ground < 32 && (mask >> ground) != 0)
      throw Error("GroundMismatch", "subset mask exceeds ground size");
  }

  static Subset empty(int ground) { return Subset(ground, 0); }
  static Subset full(int ground) {
    return Subset(ground, ground == 32 ? ~0u : ((1u << ground) - 1));
  }
  static Subset of(int ground, const std::vector<int>& idx);

  bool member(int i) const { return (bits >> i) & 1u; }
  int card() const { return std::popcount(bits); }
  bool is_empty() const { return bits == 0; }
  bool is_full() const { return *this == full(n); }

  bool subset_of(const Subset& o) const { return (bits & ~o.bits) == 0; }

  Subset union_with(const Subset& o) const { return Subset(n, bits | o.bits); }
  Subset inter_with(const Subset& o) const { return Subset(n, bits & o.bits); }
  Subset minus(const Subset& o) const { return Subset(n, bits & ~o.bits); }
  Subset complement() const { return full(n).minus(*this); }

  std::vector<int> indices() const;
  std::string str() const;  // "{0 2}" for display

  bool operator==(const Subset& o) const { return n == o.n && bits == o.bits; }
};

/// Canonical order: cardinality first, then bitmask value. Used for every
/// deterministic scan and every serialized listing.
inline bool subset_less(const Subset& a, const Subset& b) {
  if (a.card() != b.card()) return a.card() < b.card();
  return a.bits < b.bits;
}

inline void check_same_ground(int a, int b) {
  if (a != b) throw Error("GroundMismatch", "objects over different grounds");
}

inline void check_same_ground(const Subset& a, const Subset& b) {
  check_same_ground(a.n, b.n);
}

}  // namespace paveset
