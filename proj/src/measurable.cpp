#include "paveset/measurable.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "paveset/error.hpp"
#include "paveset/integral.hpp"

namespace paveset {

namespace {

void require_nonneg(const PointFn& f, const char* op) {
  if (f.is_signed())
    throw Error("PreconditionFailed", std::string(op) + " needs f >= 0");
}

}  // namespace

MeasurabilityReport is_measurable(const PointFn& f, const Paving& e) {
  check_same_ground(f.n(), e.ground());
  require_nonneg(f, "measurability check");

  ExtRat prev(0);
  for (const ExtRat& v : positive_values(f)) {
    const Subset level = level_geq(f, v);
    if (!e.contains(level)) {
      // Bracket the offending value: any a > b inside (prev, v] with
      // {f >= a} = {f > b} = level works; no other candidate set exists.
      ExtRat a, b;
      if (v.is_pos_inf()) {
        a = prev + ExtRat(2);
        b = prev + ExtRat(1);
      } else {
        b = (prev + v) / ExtRat(2);
        a = (b + v) / ExtRat(2);
      }
      return MeasurabilityReport{false, std::make_pair(a, b), level};
    }
    prev = v;
  }
  return MeasurabilityReport{};
}

bool is_measurable_signed(const PointFn& f, const Paving& e) {
  return is_measurable(pos_part(f), e).measurable &&
         is_measurable(neg_part(f), e).measurable;
}

bool oracle_is_measurable(const PointFn& f, const Paving& e) {
  check_same_ground(f.n(), e.ground());
  require_nonneg(f, "measurability oracle");
  if (f.n() > kMaxEnumGround)
    throw Error("GroundTooLarge",
                "oracle enumerates all {0,1}-capacities; ground capped at " +
                    std::to_string(kMaxEnumGround));

  // Group the {0,1}-capacities by their trace on E; capacities in the same
  // group agree on E, so their integrals of f must coincide.
  std::map<std::uint64_t, ExtRat> group_value;
  bool agree = true;
  for_each_zero_one(f.n(), [&](const ZeroOneCapacity& zo) {
    if (!agree) return;
    const ExtRat val = choquet(f, zo.to_capacity());
    auto [it, inserted] = group_value.try_emplace(trace_mask(zo, e), val);
    if (!inserted && !(it->second == val)) agree = false;
  });
  return agree;
}

Staircase staircase_approx(const PointFn& f, const Paving& e, int depth) {
  check_same_ground(f.n(), e.ground());
  require_nonneg(f, "staircase approximation");
  if (depth < 1 || depth > 64)
    throw Error("PreconditionFailed", "staircase depth must lie in [1, 64]");
  const MeasurabilityReport rep = is_measurable(f, e);
  if (!rep.measurable)
    throw Error("NotMeasurable",
                "level set " + rep.missing_level->str() + " is not in the paving");

  // Indices i >= 1 with (i+1)/2^depth in (v_{j-1}, v_j] all contribute the
  // same set {f >= v_j}; their count is c_j - c_{j-1} for
  // c_j = max(0, floor(2^depth v_j) - 1).
  const BigInt pow2 = BigInt(1) << depth;
  std::vector<Staircase::Term> terms;
  BigInt c_prev = 0;
  for (const ExtRat& v : positive_values(f)) {
    if (v.is_pos_inf()) {
      // Every remaining index keeps {f = +inf}, so that set gets weight +inf.
      terms.emplace_back(ExtRat::inf(), level_geq(f, v));
      break;
    }
    BigInt c = rat_floor(BigRat(pow2) * v.rat()) - 1;
    if (c < 0) c = 0;
    terms.emplace_back(ExtRat(BigRat(c - c_prev, pow2)), level_geq(f, v));
    c_prev = c;
  }
  return Staircase::collapsed(std::move(terms), f.n());
}

WitnessReport nonmeasurability_witness(const PointFn& f, const Paving& e) {
  check_same_ground(f.n(), e.ground());
  require_nonneg(f, "non-measurability witness");
  const MeasurabilityReport rep = is_measurable(f, e);
  if (rep.measurable)
    throw Error("IsMeasurable", "no witness exists for a measurable function");

  const auto& [a, b] = *rep.failing_pair;
  const Subset missing = *rep.missing_level;
  const int n = f.n();
  const std::size_t subsets = std::size_t{1} << n;

  // g = (f ∧ a - f ∧ b) / (a - b).  The open interval (b, a) contains no
  // value of f, so g is two-valued {0,1} and {g = 1} is the missing level.
  std::vector<ExtRat> gv(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    gv[static_cast<std::size_t>(x)] =
        (min(f.at(x), a) - min(f.at(x), b)) / (a - b);
  const PointFn g = PointFn::nonneg(std::move(gv));
  for (int x = 0; x < n; ++x) {
    const bool one = g.at(x) == ExtRat(1);
    if (!one && !g.at(x).is_zero())
      throw Error("Internal", "witness rescaling is not two-valued");
    if (one != missing.member(x))
      throw Error("Internal", "witness support differs from the missing level");
  }

  // tau1(A) = 0 if A = X else sup{g(x) : x not in A};
  // tau2(A) = 1 if A = ∅ else inf{g(x) : x in A}.  Both are decreasing.
  std::vector<ExtRat> tau1(subsets), tau2(subsets);
  for (std::uint32_t bits = 0; bits < subsets; ++bits) {
    const Subset s(n, bits);
    if (s.is_full()) {
      tau1[bits] = ExtRat(0);
    } else {
      ExtRat sup(0);
      for (int x = 0; x < n; ++x)
        if (!s.member(x)) sup = max(sup, g.at(x));
      tau1[bits] = sup;
    }
    if (s.is_empty()) {
      tau2[bits] = ExtRat(1);
    } else {
      ExtRat inf(1);
      for (int x = 0; x < n; ++x)
        if (s.member(x)) inf = min(inf, g.at(x));
      tau2[bits] = inf;
    }
  }

  const auto score = [&](std::uint32_t h) {
    return ExtRat(2) - tau1[h] - tau2[h];
  };

  // The score 2 - tau1 - tau2 is increasing, so the envelopes below are
  // monotone.  Both vanish at ∅ because tau1(∅) = sup g = 1 and tau2(∅) = 1.
  std::vector<ExtRat> alpha_table(subsets), beta_table(subsets);
  for (std::uint32_t bits = 0; bits < subsets; ++bits) {
    const Subset s(n, bits);
    ExtRat best(0);
    for (const Subset& h : e.members())
      if (h.subset_of(s)) best = max(best, score(h.bits));
    alpha_table[bits] = best;

    // inf over the members containing A; an empty collection would give
    // +inf, clamped to the maximal score 2 to keep beta finite and monotone.
    ExtRat least(2);
    for (const Subset& h : e.members())
      if (s.subset_of(h)) least = min(least, score(h.bits));
    beta_table[bits] = least;
  }

  // The proof's corrected inequalities at t = t_gap, for H in E:
  //   H ⊇ {g > t}:  tau1(H) <= t and tau2(H) = 0;
  //   H ⊆ {g > t}:  tau1(H) = 1 and tau2(H) >= t.
  const ExtRat t_gap(1, 2);
  for (const Subset& h : e.members()) {
    if (missing.subset_of(h)) {
      if (!(tau1[h.bits] <= t_gap) || !tau2[h.bits].is_zero())
        throw Error("Internal", "witness inequality fails above the gap");
    }
    if (h.subset_of(missing)) {
      if (!(tau1[h.bits] == ExtRat(1)) || !(tau2[h.bits] >= t_gap))
        throw Error("Internal", "witness inequality fails below the gap");
    }
  }
  if (!(beta_table[missing.bits] > ExtRat(1)) ||
      !(alpha_table[missing.bits] < ExtRat(1)))
    throw Error("Internal", "witness envelopes do not separate at the gap");

  Capacity alpha(n, std::move(alpha_table));
  Capacity beta(n, std::move(beta_table));
  return WitnessReport{g, std::move(tau1), std::move(tau2),
                       std::move(alpha), std::move(beta), t_gap};
}

MonotoneMap::MonotoneMap(std::vector<std::pair<ExtRat, ExtRat>> breakpoints,
                         ExtRat final_slope)
    : pts_(std::move(breakpoints)), slope_(std::move(final_slope)) {
  if (pts_.empty() || !pts_.front().first.is_zero() || !pts_.front().second.is_zero())
    throw Error("PreconditionFailed", "monotone map must start at (0, 0)");
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (!pts_[i].first.is_finite() || !pts_[i].second.is_finite())
      throw Error("PreconditionFailed", "monotone map breakpoints must be finite");
    if (i > 0 && !(pts_[i - 1].first < pts_[i].first))
      throw Error("PreconditionFailed", "monotone map breakpoints must increase");
    if (i > 0 && pts_[i].second < pts_[i - 1].second)
      throw Error("PreconditionFailed", "monotone map images must not decrease");
  }
  if (!slope_.is_finite() || slope_.is_negative())
    throw Error("PreconditionFailed", "monotone map extension slope must be finite and >= 0");
}

MonotoneMap MonotoneMap::identity() {
  return MonotoneMap({{ExtRat(0), ExtRat(0)}}, ExtRat(1));
}

MonotoneMap MonotoneMap::zero() {
  return MonotoneMap({{ExtRat(0), ExtRat(0)}}, ExtRat(0));
}

ExtRat MonotoneMap::eval(const ExtRat& t) const {
  if (t.is_negative())
    throw Error("PreconditionFailed", "monotone map domain is [0, +inf]");
  if (t.is_pos_inf())
    return slope_.is_zero() ? pts_.back().second : ExtRat::inf();
  if (pts_.back().first < t)
    return pts_.back().second + slope_ * (t - pts_.back().first);
  // Segment with pts_[i].first <= t <= pts_[i+1].first, interpolated.
  std::size_t i = pts_.size() - 1;
  while (t < pts_[i].first) --i;
  if (t == pts_[i].first) return pts_[i].second;
  const auto& [t0, y0] = pts_[i];
  const auto& [t1, y1] = pts_[i + 1];
  return y0 + (y1 - y0) * (t - t0) / (t1 - t0);
}

PointFn compose_monotone(const PointFn& f, const MonotoneMap& psi) {
  require_nonneg(f, "monotone composition");
  std::vector<ExtRat> vals;
  vals.reserve(f.values().size());
  for (const ExtRat& v : f.values()) vals.push_back(psi.eval(v));
  return PointFn::nonneg(std::move(vals));
}

bool is_measurable_algebra(const PointFn& f, const Paving& a) {
  check_same_ground(f.n(), a.ground());
  for (const Subset& atom : atoms(a)) {
    const std::vector<int> pts = atom.indices();
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (!(f.at(pts[i]) == f.at(pts[0]))) return false;
  }
  return true;
}

std::vector<Subset> t3_partition(const PointFn& f, const Paving& a, const ExtRat& gap) {
  if (!(gap > ExtRat(0)) || !gap.is_finite())
    throw Error("PreconditionFailed", "oscillation bound must be a positive rational");
  if (!is_measurable_algebra(f, a))
    throw Error("NotMeasurable", "function is not constant on the atoms");
  // f has zero oscillation on each atom, so the atom partition satisfies the
  // within-gap clause outright; the 1/gap escape clauses are never needed.
  return atoms(a);
}

bool nat_is_measurable(const NatPointFn& f, NatPavingKind kind) {
  if (f.is_signed())
    throw Error("PreconditionFailed", "measurability over the naturals needs f >= 0");

  ExtRat prefix_max(0);
  for (const ExtRat& v : f.prefix()) prefix_max = max(prefix_max, v);
  const TailDescriptor& tail = f.tail();

  switch (kind) {
    case NatPavingKind::FiniteSets:
      // {f >= a} finite for all a > 0: the prefix is finite anyway, and the
      // tail eventually stays below every positive level iff limsup = 0.
      return tail.limsup().is_zero();

    case NatPavingKind::FiniteOrCofinite:
      // The ultrafilter-limit criterion: point values always exist, so only
      // the limit along the cofinite filter matters.
      return tail.has_limit();

    case NatPavingKind::CofinitePlusEmpty:
      // {f > b} must be empty or cofinite for every b in (0, sup f).
      switch (tail.kind) {
        case TailDescriptor::Kind::Constant:
          // Levels below c catch the whole tail; a prefix point above c
          // would make {f > b} a nonempty finite set for b in [c, sup f).
          return prefix_max <= tail.c;
        case TailDescriptor::Kind::HarmonicAbove:
          // Levels in (limit, limit + c) cut a nonempty finite piece of the
          // tail itself.
          return false;
        case TailDescriptor::Kind::HarmonicBelow:
          // The tail climbs to its limit, so levels below it work; prefix
          // points above the limit break just as in the constant case.
          return prefix_max <= tail.limit;
        case TailDescriptor::Kind::LinearGrowth:
          // Every level is eventually exceeded.
          return true;
        case TailDescriptor::Kind::TwoPoint:
          // Levels between lo and hi pick out one parity class: infinite
          // but not cofinite.
          return false;
      }
      return false;
  }
  return false;
}

NatLimitsReport nat_ultrafilter_limits(const NatPointFn& f) {
  NatLimitsReport rep;
  const std::uint64_t upto = f.prefix().size() + 2;
  for (std::uint64_t i = 0; i < upto; ++i) rep.principal.push_back(f.eval(i));
  if (f.tail().has_limit()) rep.frechet = f.liminf();
  return rep;
}

}  // namespace paveset
