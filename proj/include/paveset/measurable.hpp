#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "paveset/capacity.hpp"
#include "paveset/natfn.hpp"
#include "paveset/paving.hpp"
#include "paveset/pointfn.hpp"
#include "paveset/staircase.hpp"

namespace paveset {

// Verdict of the sandwich criterion.  When measurable is false, failing_pair
// holds rationals a > b > 0 for which no member H of the paving satisfies
// {f >= a} ⊆ H ⊆ {f > b}; missing_level is that common level set.
struct MeasurabilityReport {
  bool measurable = true;
  std::optional<std::pair<ExtRat, ExtRat>> failing_pair;
  std::optional<Subset> missing_level;
};

// f is measurable w.r.t. E when for every a > b > 0 some H in E is squeezed
// between {f >= a} and {f > b}.  On a finite ground this reduces to: every
// positive level set {f >= v}, v a value of f (+inf counts), lies in E.
//   - For a just above b the two level sets coincide, forcing {f > b} ∈ E,
//     and b can sit just below any value v, so {f >= v} ∈ E is necessary.
//   - Conversely H = {f > b} itself works for every pair.
// On failure the reported pair brackets the smallest offending value v_j:
// b = (v_{j-1} + v_j)/2 and a = (v_{j-1} + 3 v_j)/4, with v_0 = 0; when
// v_j = +inf the pair is (v_{j-1} + 2, v_{j-1} + 1).
MeasurabilityReport is_measurable(const PointFn& f, const Paving& e);

// A signed function is measurable when both its parts are.
bool is_measurable_signed(const PointFn& f, const Paving& e);

// Independent route: f is measurable iff every two {0,1}-capacities that
// agree on E give f the same integral.  Enumerates all upward-closed
// families, so the ground is capped at kMaxEnumGround points.
bool oracle_is_measurable(const PointFn& f, const Paving& e);

// Dyadic lower approximation
//   g_n = (1/2^n) * sum_{i >= 1} phi({f >= (i+1)/2^n}),
// with the terms batched per distinct value of f.  For each x,
// g_n(x) = max(0, floor(2^n f(x)) - 1) / 2^n, so g_n <= f, g_n = +inf exactly
// where f is, and f - g_n <= 2^(1-n) on the finite part.  Every set used is a
// level set of f and hence lies in E.
Staircase staircase_approx(const PointFn& f, const Paving& e, int depth);

// Two monotone capacities that agree on E yet integrate g differently,
// certifying non-measurability.  tau1/tau2 are indexed by subset bitmask and
// take values in [0,1].  t_gap is a level in (0,1) with
// beta({g > t_gap}) > 1 > alpha({g > t_gap}).
struct WitnessReport {
  PointFn g;                   // rescaled truncation, two-valued {0,1}
  std::vector<ExtRat> tau1;
  std::vector<ExtRat> tau2;
  Capacity alpha;
  Capacity beta;
  ExtRat t_gap;
};

WitnessReport nonmeasurability_witness(const PointFn& f, const Paving& e);

// Increasing continuous map [0,+inf] -> [0,+inf]: piecewise linear between
// rational breakpoints starting at (0,0), extended past the last breakpoint
// with a fixed slope.  The value at +inf is the supremum of the range: +inf
// when the extension slope is positive, the last image otherwise.
class MonotoneMap {
 public:
  MonotoneMap(std::vector<std::pair<ExtRat, ExtRat>> breakpoints, ExtRat final_slope);

  static MonotoneMap identity();
  static MonotoneMap zero();

  ExtRat eval(const ExtRat& t) const;

  const std::vector<std::pair<ExtRat, ExtRat>>& breakpoints() const { return pts_; }
  const ExtRat& final_slope() const { return slope_; }

 private:
  std::vector<std::pair<ExtRat, ExtRat>> pts_;
  ExtRat slope_;
};

// Pointwise psi(f).  Measurability survives the composition: the level sets
// of psi∘f are level sets of f (psi is increasing with psi(0) = 0).
PointFn compose_monotone(const PointFn& f, const MonotoneMap& psi);

// On a finite algebra the ultrafilters are principal at the atoms, so the
// limit-along-every-ultrafilter criterion degenerates to: f is constant on
// each atom.  Accepts signed functions.
bool is_measurable_algebra(const PointFn& f, const Paving& a);

// Partition of the ground set into algebra members on which f oscillates by
// at most `gap` (each cell within gap, or entirely above 1/gap, or entirely
// below -1/gap).  The atom partition satisfies this with zero oscillation.
std::vector<Subset> t3_partition(const PointFn& f, const Paving& a, const ExtRat& gap);

// Measurability over the naturals, decided from the tail descriptor:
//   FiniteSets        -- every {f >= a}, a > 0, finite: tail limsup = 0.
//   CofinitePlusEmpty -- every {f > b}, 0 < b < sup f, cofinite.
//   FiniteOrCofinite  -- the tail has a limit.
bool nat_is_measurable(const NatPointFn& f, NatPavingKind kind);

// Ultrafilter limits on the finite-or-cofinite algebra over the naturals.
// Principal ultrafilters give point values (reported for the prefix and the
// first two tail points); the free ultrafilters all give the tail limit,
// absent when the tail oscillates.
struct NatLimitsReport {
  std::vector<ExtRat> principal;
  std::optional<ExtRat> frechet;
};

NatLimitsReport nat_ultrafilter_limits(const NatPointFn& f);

}  // namespace paveset
