#include "paveset/integral.hpp"

#include "paveset/error.hpp"

namespace paveset {

ExtRat choquet(const PointFn& f, const Capacity& a) {
  check_same_ground(f.n(), a.ground());
  if (f.is_signed()) throw Error("PreconditionFailed", "layer-cake integral needs f >= 0");
  ExtRat total(0);
  ExtRat prev(0);
  for (const auto& v : positive_values(f)) {
    total += (v - prev) * a.at(level_geq(f, v));
    prev = v;
  }
  return total;
}

ExtRat choquet_over(const PointFn& f, const Capacity& a, const Subset& A) {
  return choquet(restrict_to(f, A), a);
}

IntegralValue choquet_signed(const PointFn& f, const Capacity& a) {
  ExtRat plus = choquet(pos_part(f), a);
  ExtRat minus = choquet(neg_part(f), a);
  if (plus.is_pos_inf() && minus.is_pos_inf()) return IntegralValue::undefined();
  if (plus.is_pos_inf()) return IntegralValue::of(ExtRat::inf());
  if (minus.is_pos_inf()) return IntegralValue::of(ExtRat::neg_inf());
  return IntegralValue::of(plus - minus);
}

ExtRat staircase_integral(const Staircase& s, const Capacity& a) {
  check_same_ground(s.n(), a.ground());
  ExtRat total(0);
  for (const auto& [c, h] : s.terms()) total += c * a.at(h);
  return total;
}

ExtRat staircase_integral(const Staircase& s, const PartialCapacity& d) {
  check_same_ground(s.n(), d.ground());
  ExtRat total(0);
  for (const auto& [c, h] : s.terms()) total += c * d.at(h);
  return total;
}

ExtRat nat_filter_integral(const NatPointFn& f, const NatFilterCapacity& a) {
  if (f.is_signed()) throw Error("PreconditionFailed", "layer-cake integral needs f >= 0");
  switch (a.kind) {
    case NatFilterKind::LowerFrechet: return f.liminf();
    case NatFilterKind::UpperFrechet: return f.limsup();
    case NatFilterKind::Principal: return f.eval(a.point);
  }
  throw Error("Internal", "unknown filter kind");
}

}  // namespace paveset
