#include "paveset/staircase.hpp"

namespace paveset {

Staircase::Staircase(std::vector<Term> terms, int ground) : n_(ground), terms_(std::move(terms)) {
  check_ground_size(ground);
  for (size_t i = 0; i < terms_.size(); ++i) {
    const auto& [a, h] = terms_[i];
    if (h.n != ground) throw Error("GroundMismatch", "staircase set over a different ground");
    if (a.is_negative()) throw Error("PreconditionFailed", "staircase coefficient must be nonnegative");
    if (i > 0 && !h.subset_of(terms_[i - 1].second))
      throw Error("PreconditionFailed", "staircase sets must be weakly decreasing");
  }
}

Staircase Staircase::collapsed(std::vector<Term> terms, int ground) {
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (t.first.is_zero()) continue;
    if (!merged.empty() && merged.back().second == t.second)
      merged.back().first += t.first;
    else
      merged.push_back(std::move(t));
  }
  return Staircase(std::move(merged), ground);
}

ExtRat Staircase::eval(int x) const {
  ExtRat s(0);
  for (const auto& [a, h] : terms_)
    if (h.member(x)) s += a;
  return s;
}

PointFn Staircase::to_fn() const {
  std::vector<ExtRat> v;
  v.reserve(static_cast<size_t>(n_));
  for (int x = 0; x < n_; ++x) v.push_back(eval(x));
  return PointFn::nonneg(std::move(v));
}

}  // namespace paveset
