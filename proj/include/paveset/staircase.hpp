#pragma once

#include <utility>
#include <vector>

#include "paveset/pointfn.hpp"

namespace paveset {

/// Finite weighted sum of indicators sum_i a_i * phi(H_i) with a_i in [0, +inf]
/// and the sets weakly decreasing: H_1 >= H_2 >= ... (each contains the next).
class Staircase {
 public:
  using Term = std::pair<ExtRat, Subset>;

  /// Validates coefficients and the decreasing-set invariant.
  explicit Staircase(std::vector<Term> terms, int ground);

  /// Merges consecutive terms that share a set by summing their coefficients,
  /// drops zero coefficients, then validates.
  static Staircase collapsed(std::vector<Term> terms, int ground);

  int n() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }

  ExtRat eval(int x) const;
  PointFn to_fn() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

/// True when every set of the staircase belongs to the given family.
template <typename SetFamily>
bool staircase_in(const Staircase& s, const SetFamily& fam) {
  for (const auto& [a, h] : s.terms())
    if (!fam.contains(h)) return false;
  return true;
}

}  // namespace paveset
