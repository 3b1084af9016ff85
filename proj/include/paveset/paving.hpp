#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paveset/ground.hpp"
#include "paveset/natfn.hpp"

namespace paveset {

// A paving is a family of subsets of a finite ground set that contains the
// empty set.  Members are kept deduplicated and sorted by (cardinality, bits),
// so two pavings over the same ground compare equal iff they have the same
// members.
class Paving {
 public:
  Paving(int ground, std::vector<Subset> members);

  static Paving power_set(int ground);
  static Paving trivial(int ground);  // {∅} only

  int ground() const { return ground_; }
  const std::vector<Subset>& members() const { return members_; }
  bool contains(const Subset& s) const;
  std::size_t size() const { return members_.size(); }

  bool operator==(const Paving& o) const {
    return ground_ == o.ground_ && members_ == o.members_;
  }

 private:
  int ground_;
  std::vector<Subset> members_;
};

// The defining condition alone: does the family contain the empty set?
// (The Paving constructor enforces it; this answers without throwing.)
bool is_paving(int ground, const std::vector<Subset>& family);

enum class SetOp { Union, Intersection };

// First pair (in canonical member order) whose op-combination escapes the
// family, if any.
struct StabilityReport {
  bool stable = true;
  std::optional<std::pair<Subset, Subset>> witness;
};

StabilityReport is_stable(const Paving& p, SetOp op);

// Smallest superfamily closed under the given ops (fixed point of pairwise
// combination).  Ops are applied repeatedly, so the result is closed under
// finite iterated unions/intersections as requested.
Paving close_under(const Paving& p, bool unions, bool intersections);

// Contains ∅ and X, closed under union, intersection and complement.
bool is_algebra(const Paving& p);

// Atoms of an algebra: the equivalence classes of "lie in exactly the same
// members".  Throws Error("NotAnAlgebra") otherwise.  Classes come back as a
// partition of the ground set, sorted by smallest element.
std::vector<Subset> atoms(const Paving& p);

Paving algebra_from_partition(int ground, const std::vector<Subset>& blocks);

// ---- pavings on ℕ --------------------------------------------------------

enum class NatPavingKind {
  FiniteSets,         // all finite subsets (and ∅)
  CofinitePlusEmpty,  // cofinite subsets together with ∅
  FiniteOrCofinite,   // union of the two
};

bool nat_member(NatPavingKind kind, const NatSet& s);

std::string nat_paving_name(NatPavingKind kind);

// Whether every decreasing sequence of nonempty members has nonempty
// intersection.  For the kinds above this is decidable; when false the report
// carries the canonical counterexample chain H_n = ℕ ∖ {0..n}.
struct SemicompactReport {
  bool semicompact = true;
  std::string chain_description;  // empty if semicompact
};

SemicompactReport nat_semicompact(NatPavingKind kind);

}  // namespace paveset
