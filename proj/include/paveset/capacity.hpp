#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "paveset/extrat.hpp"
#include "paveset/ground.hpp"
#include "paveset/paving.hpp"

namespace paveset {

// Arbitrary nonnegative set function with μ(∅) = 0, stored densely over the
// power set.  No monotonicity is required; +∞ values are allowed.
class SetFunction {
 public:
  SetFunction(int ground, std::vector<ExtRat> table);

  int ground() const { return ground_; }
  const ExtRat& at(const Subset& s) const;
  const std::vector<ExtRat>& table() const { return table_; }

 private:
  int ground_;
  std::vector<ExtRat> table_;  // indexed by Subset::bits
};

// Monotone set function vanishing at ∅ (a capacity).  Values may be +∞.
class Capacity {
 public:
  Capacity(int ground, std::vector<ExtRat> table);

  int ground() const { return ground_; }
  const ExtRat& at(const Subset& s) const;
  const std::vector<ExtRat>& table() const { return table_; }
  SetFunction as_set_function() const { return SetFunction(ground_, table_); }

  bool operator==(const Capacity& o) const {
    return ground_ == o.ground_ && table_ == o.table_;
  }

 private:
  int ground_;
  std::vector<ExtRat> table_;
};

// {0,1}-valued capacity, i.e. an upward closed family of subsets that does
// not contain ∅.  Kept as a bitmask over subset indices, so the ground set is
// capped at kMaxEnumGround points.
class ZeroOneCapacity {
 public:
  ZeroOneCapacity(int ground, const std::vector<Subset>& family);
  static ZeroOneCapacity from_mask(int ground, std::uint64_t family_mask);

  int ground() const { return ground_; }
  std::uint64_t family_mask() const { return mask_; }
  bool contains(const Subset& s) const;
  ExtRat value(const Subset& s) const { return contains(s) ? ExtRat(1) : ExtRat(0); }
  std::vector<Subset> family() const;
  Capacity to_capacity() const;

  bool operator==(const ZeroOneCapacity& o) const {
    return ground_ == o.ground_ && mask_ == o.mask_;
  }

 private:
  ZeroOneCapacity(int ground, std::uint64_t mask, bool) : ground_(ground), mask_(mask) {}
  int ground_;
  std::uint64_t mask_;
};

// Enumerate every {0,1}-capacity on the given ground set.  The order is
// deterministic: subsets are decided in (cardinality, bits) order and for
// each the "absent" branch is explored before the "present" branch.
void for_each_zero_one(int ground, const std::function<void(const ZeroOneCapacity&)>& fn);
std::vector<ZeroOneCapacity> all_zero_one(int ground);
std::uint64_t count_zero_one(int ground);

// Which members of the paving lie in the capacity's family, one bit per
// member in the paving's canonical order.
std::uint64_t trace_mask(const ZeroOneCapacity& a, const Paving& p);

// Capacity known only on the members of a paving; monotone there, zero at ∅.
class PartialCapacity {
 public:
  PartialCapacity(Paving domain, std::vector<ExtRat> values);

  const Paving& domain() const { return domain_; }
  int ground() const { return domain_.ground(); }
  const ExtRat& at(const Subset& h) const;  // h must be a member of the domain
  const std::vector<ExtRat>& values() const { return values_; }

 private:
  Paving domain_;
  std::vector<ExtRat> values_;  // aligned with domain_.members()
};

// Extensions of a partial capacity to all subsets:
//   inner(A) = sup { δ(H) : H in the domain, H ⊆ A }
//   outer(A) = inf { δ(H) : H in the domain, H ⊇ A }, +∞ when no such H
// Both are capacities again.
Capacity inner_extension(const PartialCapacity& d);
Capacity outer_extension(const PartialCapacity& d);

PartialCapacity restrict_to_paving(const SetFunction& mu, const Paving& p);
PartialCapacity to_partial(const Capacity& a);

enum class ModularKind { Modular, Submodular, Supermodular };

struct ModularReport {
  bool holds = true;
  std::optional<std::pair<Subset, Subset>> witness;  // first violating pair
};

// Checks δ(A∪B) + δ(A∩B) {=, ≤, ≥} δ(A) + δ(B) over all pairs of domain
// members.  The domain must be stable under union and intersection; otherwise
// Error("DomainNotLattice") is thrown.
ModularReport is_modular(const PartialCapacity& d, ModularKind kind);
ModularReport is_modular(const Capacity& a, ModularKind kind);

bool agree_on(const Capacity& a, const Capacity& b, const Paving& p);

// Subsets A that split every test set additively:
//   μ(E) = μ(E ∩ A) + μ(E ∖ A) for all E.
// The result is an algebra for any nonnegative μ with μ(∅) = 0.
Paving caratheodory_algebra(const SetFunction& mu);

// ---- {0,1}-capacities on ℕ -----------------------------------------------

enum class NatFilterKind {
  LowerFrechet,  // 1 on cofinite sets
  UpperFrechet,  // 1 on infinite sets
  Principal,     // 1 on sets containing a fixed point
};

struct NatFilterCapacity {
  NatFilterKind kind = NatFilterKind::LowerFrechet;
  long long point = 0;  // used by Principal only

  bool value_one(const NatSet& s) const;
};

}  // namespace paveset
