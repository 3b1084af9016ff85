#pragma once

#include "paveset/capacity.hpp"
#include "paveset/extrat.hpp"
#include "paveset/natfn.hpp"
#include "paveset/pointfn.hpp"
#include "paveset/staircase.hpp"

namespace paveset {

// Layer-cake integral of a nonnegative function against a capacity: with the
// distinct positive values v_1 < ... < v_m of f (possibly ending in +∞),
//
//   ∫f dα = Σ_k (v_k − v_{k−1}) · α({f ≥ v_k}),   v_0 = 0,
//
// where the last term degenerates to ∞ · α({f = ∞}) and 0 · ∞ = 0.
ExtRat choquet(const PointFn& f, const Capacity& a);

// Integral over a subset: the function is silenced outside A first.
ExtRat choquet_over(const PointFn& f, const Capacity& a, const Subset& A);

// Signed integral, split as ∫f⁺ − ∫f⁻ against the same capacity.  Undefined
// exactly when both halves are infinite.
struct IntegralValue {
  bool defined = true;
  ExtRat value;

  static IntegralValue undefined() { return {false, ExtRat(0)}; }
  static IntegralValue of(ExtRat v) { return {true, std::move(v)}; }

  bool operator==(const IntegralValue& o) const {
    return defined == o.defined && (!defined || value == o.value);
  }
};

IntegralValue choquet_signed(const PointFn& f, const Capacity& a);

// Σ c_k α(H_k) read straight off the staircase terms.  For weakly decreasing
// H_k this agrees with the layer-cake value of the pointwise function.
ExtRat staircase_integral(const Staircase& s, const Capacity& a);
ExtRat staircase_integral(const Staircase& s, const PartialCapacity& d);

// Integral of a function on ℕ against a two-valued filter capacity; equals
// liminf, limsup or a point evaluation depending on the kind.
ExtRat nat_filter_integral(const NatPointFn& f, const NatFilterCapacity& a);

}  // namespace paveset
