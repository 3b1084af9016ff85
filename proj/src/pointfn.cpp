#include "paveset/pointfn.hpp"

#include <algorithm>

namespace paveset {

PointFn PointFn::nonneg(std::vector<ExtRat> values) {
  check_ground_size(static_cast<int>(values.size()));
  for (const ExtRat& v : values)
    if (v.is_negative())
      throw Error("PreconditionFailed", "nonnegative function has value " + v.str());
  return PointFn(std::move(values), false);
}

PointFn PointFn::signed_fn(std::vector<ExtRat> values) {
  check_ground_size(static_cast<int>(values.size()));
  return PointFn(std::move(values), true);
}

PointFn PointFn::indicator(const Subset& a) {
  std::vector<ExtRat> v(static_cast<size_t>(a.n), ExtRat(0));
  for (int i = 0; i < a.n; ++i)
    if (a.member(i)) v[static_cast<size_t>(i)] = ExtRat(1);
  return PointFn(std::move(v), false);
}

Subset level_geq(const PointFn& f, const ExtRat& v) {
  std::uint32_t bits = 0;
  for (int i = 0; i < f.n(); ++i)
    if (f.at(i) >= v) bits |= 1u << i;
  return Subset(f.n(), bits);
}

Subset level_gt(const PointFn& f, const ExtRat& v) {
  std::uint32_t bits = 0;
  for (int i = 0; i < f.n(); ++i)
    if (f.at(i) > v) bits |= 1u << i;
  return Subset(f.n(), bits);
}

std::vector<ExtRat> positive_values(const PointFn& f) {
  std::vector<ExtRat> vals;
  for (int i = 0; i < f.n(); ++i)
    if (f.at(i) > ExtRat(0)) vals.push_back(f.at(i));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

static std::vector<ExtRat> map_values(const PointFn& f, auto&& fn) {
  std::vector<ExtRat> out;
  out.reserve(static_cast<size_t>(f.n()));
  for (int i = 0; i < f.n(); ++i) out.push_back(fn(f.at(i)));
  return out;
}

PointFn truncate(const PointFn& f, const ExtRat& a) {
  if (a.is_negative())
    throw Error("PreconditionFailed", "truncation level must be nonnegative");
  auto vals = map_values(f, [&](const ExtRat& v) { return min(v, a); });
  return f.is_signed() ? PointFn::signed_fn(std::move(vals)) : PointFn::nonneg(std::move(vals));
}

PointFn upper_shift(const PointFn& f, const ExtRat& a) {
  if (!a.is_finite() || a.is_negative())
    throw Error("PreconditionFailed", "shift level must be finite and nonnegative");
  if (f.is_signed()) throw Error("PreconditionFailed", "upper_shift needs a nonnegative function");
  auto vals = map_values(f, [&](const ExtRat& v) { return max(v, a) - a; });
  return PointFn::nonneg(std::move(vals));
}

PointFn scale(const PointFn& f, const ExtRat& c) {
  if (c.is_negative()) throw Error("PreconditionFailed", "scale factor must be nonnegative");
  if (f.is_signed()) throw Error("PreconditionFailed", "scale needs a nonnegative function");
  return PointFn::nonneg(map_values(f, [&](const ExtRat& v) { return c * v; }));
}

static PointFn zip(const PointFn& f, const PointFn& g, auto&& fn) {
  if (f.n() != g.n()) throw Error("GroundMismatch", "functions over different grounds");
  std::vector<ExtRat> out;
  out.reserve(static_cast<size_t>(f.n()));
  for (int i = 0; i < f.n(); ++i) out.push_back(fn(f.at(i), g.at(i)));
  bool s = f.is_signed() || g.is_signed();
  return s ? PointFn::signed_fn(std::move(out)) : PointFn::nonneg(std::move(out));
}

PointFn pointwise_min(const PointFn& f, const PointFn& g) {
  return zip(f, g, [](const ExtRat& a, const ExtRat& b) { return min(a, b); });
}

PointFn pointwise_max(const PointFn& f, const PointFn& g) {
  return zip(f, g, [](const ExtRat& a, const ExtRat& b) { return max(a, b); });
}

PointFn pointwise_add(const PointFn& f, const PointFn& g) {
  return zip(f, g, [](const ExtRat& a, const ExtRat& b) { return a + b; });
}

PointFn restrict_to(const PointFn& f, const Subset& a) {
  if (f.n() != a.n) throw Error("GroundMismatch", "subset over a different ground");
  std::vector<ExtRat> out;
  out.reserve(static_cast<size_t>(f.n()));
  for (int i = 0; i < f.n(); ++i) out.push_back(a.member(i) ? f.at(i) : ExtRat(0));
  return f.is_signed() ? PointFn::signed_fn(std::move(out)) : PointFn::nonneg(std::move(out));
}

PointFn pos_part(const PointFn& f) {
  return PointFn::nonneg(map_values(f, [](const ExtRat& v) { return max(v, ExtRat(0)); }));
}

PointFn neg_part(const PointFn& f) {
  return PointFn::nonneg(map_values(f, [](const ExtRat& v) { return max(-v, ExtRat(0)); }));
}

bool leq_pointwise(const PointFn& f, const PointFn& g) {
  if (f.n() != g.n()) throw Error("GroundMismatch", "functions over different grounds");
  for (int i = 0; i < f.n(); ++i)
    if (f.at(i) > g.at(i)) return false;
  return true;
}

}  // namespace paveset
