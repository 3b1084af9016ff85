#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paveset/extrat.hpp"
#include "paveset/error.hpp"

namespace paveset {

/// Subset of the naturals, either a finite set or the complement of one.
/// Elements are kept sorted and duplicate-free.
class NatSet {
 public:
  static NatSet finite(std::vector<std::uint64_t> elems);
  /// Complement of the given finite set.
  static NatSet cofinite(std::vector<std::uint64_t> excluded);
  static NatSet empty() { return finite({}); }
  static NatSet all() { return cofinite({}); }

  bool is_cofinite() const { return cofinite_; }
  bool is_empty() const { return !cofinite_ && elems_.empty(); }
  const std::vector<std::uint64_t>& base() const { return elems_; }

  bool member(std::uint64_t x) const;
  NatSet complement() const;

  bool operator==(const NatSet& o) const = default;

 private:
  NatSet(bool cof, std::vector<std::uint64_t> e) : cofinite_(cof), elems_(std::move(e)) {}
  bool cofinite_ = false;
  std::vector<std::uint64_t> elems_;  // the set itself, or the excluded set when cofinite
};

/// Closed-form tail of a function on the naturals, valid from the end of the
/// prefix onward. Every kind except TwoPoint has a limit.
struct TailDescriptor {
  enum class Kind { Constant, HarmonicAbove, HarmonicBelow, LinearGrowth, TwoPoint };

  Kind kind = Kind::Constant;
  ExtRat c;        // Constant value, harmonic scale, or linear slope
  ExtRat limit;    // L for the harmonic kinds
  ExtRat lo, hi;   // TwoPoint values (even index -> lo)

  static TailDescriptor constant(ExtRat c);
  /// f(n) = limit + c/(n+1), decreasing to the limit from above. c > 0, limit finite >= 0.
  static TailDescriptor harmonic_above(ExtRat limit, ExtRat c);
  /// f(n) = max(limit - c/(n+1), 0), increasing to the limit from below.
  static TailDescriptor harmonic_below(ExtRat limit, ExtRat c);
  /// f(n) = c * n. c > 0 finite.
  static TailDescriptor linear_growth(ExtRat c);
  /// Oscillates between lo (even n) and hi (odd n); lo < hi.
  static TailDescriptor two_point(ExtRat lo, ExtRat hi);

  ExtRat eval(std::uint64_t n) const;
  ExtRat liminf() const;
  ExtRat limsup() const;
  bool has_limit() const { return kind != Kind::TwoPoint; }
  /// Supremum of the tail values from index n0 onward.
  ExtRat sup_from(std::uint64_t n0) const;

  std::string kind_name() const;
};

/// Function on the naturals: explicit values on {0, ..., N-1}, closed form after.
class NatPointFn {
 public:
  static NatPointFn nonneg(std::vector<ExtRat> prefix, TailDescriptor tail);
  static NatPointFn signed_fn(std::vector<ExtRat> prefix, TailDescriptor tail);

  const std::vector<ExtRat>& prefix() const { return prefix_; }
  const TailDescriptor& tail() const { return tail_; }
  bool is_signed() const { return signed_; }

  ExtRat eval(std::uint64_t n) const;
  ExtRat liminf() const { return tail_.liminf(); }
  ExtRat limsup() const { return tail_.limsup(); }
  /// Supremum over all of the naturals.
  ExtRat sup() const;

 private:
  NatPointFn(std::vector<ExtRat> p, TailDescriptor t, bool s)
      : prefix_(std::move(p)), tail_(t), signed_(s) {}
  std::vector<ExtRat> prefix_;
  TailDescriptor tail_;
  bool signed_ = false;
};

}  // namespace paveset
