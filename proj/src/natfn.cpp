#include "paveset/natfn.hpp"

#include <algorithm>

namespace paveset {

NatSet NatSet::finite(std::vector<std::uint64_t> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return NatSet(false, std::move(elems));
}

NatSet NatSet::cofinite(std::vector<std::uint64_t> excluded) {
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  return NatSet(true, std::move(excluded));
}

bool NatSet::member(std::uint64_t x) const {
  bool in_base = std::binary_search(elems_.begin(), elems_.end(), x);
  return cofinite_ ? !in_base : in_base;
}

NatSet NatSet::complement() const { return NatSet(!cofinite_, elems_); }

static void need_finite_nonneg(const ExtRat& v, const char* what) {
  if (!v.is_finite() || v.is_negative())
    throw Error("PreconditionFailed", std::string(what) + " must be finite and nonnegative");
}

static void need_positive(const ExtRat& v, const char* what) {
  if (!v.is_finite() || !(v > ExtRat(0)))
    throw Error("PreconditionFailed", std::string(what) + " must be a positive rational");
}

TailDescriptor TailDescriptor::constant(ExtRat c) {
  TailDescriptor t;
  t.kind = Kind::Constant;
  t.c = c;
  return t;
}

TailDescriptor TailDescriptor::harmonic_above(ExtRat limit, ExtRat c) {
  need_finite_nonneg(limit, "harmonic limit");
  need_positive(c, "harmonic scale");
  TailDescriptor t;
  t.kind = Kind::HarmonicAbove;
  t.limit = limit;
  t.c = c;
  return t;
}

TailDescriptor TailDescriptor::harmonic_below(ExtRat limit, ExtRat c) {
  need_finite_nonneg(limit, "harmonic limit");
  need_positive(c, "harmonic scale");
  TailDescriptor t;
  t.kind = Kind::HarmonicBelow;
  t.limit = limit;
  t.c = c;
  return t;
}

TailDescriptor TailDescriptor::linear_growth(ExtRat c) {
  need_positive(c, "growth slope");
  TailDescriptor t;
  t.kind = Kind::LinearGrowth;
  t.c = c;
  return t;
}

TailDescriptor TailDescriptor::two_point(ExtRat lo, ExtRat hi) {
  if (!(lo < hi)) throw Error("PreconditionFailed", "two-point tail needs lo < hi");
  TailDescriptor t;
  t.kind = Kind::TwoPoint;
  t.lo = lo;
  t.hi = hi;
  return t;
}

ExtRat TailDescriptor::eval(std::uint64_t n) const {
  ExtRat nn(static_cast<long long>(n));
  switch (kind) {
    case Kind::Constant: return c;
    case Kind::HarmonicAbove: return limit + c / (nn + ExtRat(1));
    case Kind::HarmonicBelow: return max(limit - c / (nn + ExtRat(1)), ExtRat(0));
    case Kind::LinearGrowth: return c * nn;
    case Kind::TwoPoint: return (n % 2 == 0) ? lo : hi;
  }
  throw Error("Internal", "bad tail kind");
}

ExtRat TailDescriptor::liminf() const {
  switch (kind) {
    case Kind::Constant: return c;
    case Kind::HarmonicAbove:
    case Kind::HarmonicBelow: return limit;
    case Kind::LinearGrowth: return ExtRat::inf();
    case Kind::TwoPoint: return lo;
  }
  throw Error("Internal", "bad tail kind");
}

ExtRat TailDescriptor::limsup() const { return kind == Kind::TwoPoint ? hi : liminf(); }

ExtRat TailDescriptor::sup_from(std::uint64_t n0) const {
  switch (kind) {
    case Kind::Constant: return c;
    case Kind::HarmonicAbove: return eval(n0);  // decreasing
    case Kind::HarmonicBelow: return limit;     // approached from below, never exceeded
    case Kind::LinearGrowth: return ExtRat::inf();
    case Kind::TwoPoint: return hi;
  }
  throw Error("Internal", "bad tail kind");
}

std::string TailDescriptor::kind_name() const {
  switch (kind) {
    case Kind::Constant: return "constant";
    case Kind::HarmonicAbove: return "harmonic_above";
    case Kind::HarmonicBelow: return "harmonic_below";
    case Kind::LinearGrowth: return "linear_growth";
    case Kind::TwoPoint: return "two_point";
  }
  return "?";
}

NatPointFn NatPointFn::nonneg(std::vector<ExtRat> prefix, TailDescriptor tail) {
  for (const ExtRat& v : prefix)
    if (v.is_negative()) throw Error("PreconditionFailed", "nonnegative function has value " + v.str());
  if (tail.liminf().is_negative())
    throw Error("PreconditionFailed", "nonnegative function with a negative tail");
  return NatPointFn(std::move(prefix), tail, false);
}

NatPointFn NatPointFn::signed_fn(std::vector<ExtRat> prefix, TailDescriptor tail) {
  return NatPointFn(std::move(prefix), tail, true);
}

ExtRat NatPointFn::eval(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[static_cast<size_t>(n)];
  return tail_.eval(n);
}

ExtRat NatPointFn::sup() const {
  ExtRat s = tail_.sup_from(prefix_.size());
  for (const ExtRat& v : prefix_) s = max(s, v);
  return s;
}

}  // namespace paveset
