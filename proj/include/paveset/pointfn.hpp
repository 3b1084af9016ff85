#pragma once

#include <vector>

#include "paveset/extrat.hpp"
#include "paveset/ground.hpp"

namespace paveset {

/// Numerical function on a finite ground {0, ..., n-1}.
///
/// Nonnegative by default; the signed factory admits negative and -inf values.
/// All integral and measurability operations state which flavour they accept.
class PointFn {
 public:
  static PointFn nonneg(std::vector<ExtRat> values);
  static PointFn signed_fn(std::vector<ExtRat> values);
  static PointFn zero(int n) { return nonneg(std::vector<ExtRat>(static_cast<size_t>(n), ExtRat(0))); }
  static PointFn indicator(const Subset& a);

  int n() const { return static_cast<int>(v_.size()); }
  bool is_signed() const { return signed_; }
  const ExtRat& at(int i) const { return v_[static_cast<size_t>(i)]; }
  const std::vector<ExtRat>& values() const { return v_; }

  bool operator==(const PointFn& o) const { return v_ == o.v_; }

 private:
  PointFn(std::vector<ExtRat> v, bool s) : v_(std::move(v)), signed_(s) {}
  std::vector<ExtRat> v_;
  bool signed_ = false;
};

/// {x : f(x) >= v}. For v <= 0 this is the whole ground.
Subset level_geq(const PointFn& f, const ExtRat& v);
/// {x : f(x) > v}.
Subset level_gt(const PointFn& f, const ExtRat& v);

/// Distinct positive values of f in increasing order, +inf included when taken.
std::vector<ExtRat> positive_values(const PointFn& f);

/// Pointwise min with the constant a >= 0; a == +inf leaves f unchanged.
PointFn truncate(const PointFn& f, const ExtRat& a);
/// Pointwise max with a, then shifted back down by a: (f v a) - a.
PointFn upper_shift(const PointFn& f, const ExtRat& a);
/// c * f for a scalar c in [0, +inf]; 0 * inf == 0 applies pointwise.
PointFn scale(const PointFn& f, const ExtRat& c);

PointFn pointwise_min(const PointFn& f, const PointFn& g);
PointFn pointwise_max(const PointFn& f, const PointFn& g);
PointFn pointwise_add(const PointFn& f, const PointFn& g);

/// f restricted to A: equals f on A and 0 elsewhere.
PointFn restrict_to(const PointFn& f, const Subset& a);

/// Positive and negative parts of a signed function; both are nonnegative.
PointFn pos_part(const PointFn& f);
PointFn neg_part(const PointFn& f);

bool leq_pointwise(const PointFn& f, const PointFn& g);

}  // namespace paveset
