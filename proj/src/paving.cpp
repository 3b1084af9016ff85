#include "paveset/paving.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "paveset/error.hpp"

namespace paveset {

Paving::Paving(int ground, std::vector<Subset> members)
    : ground_(ground), members_(std::move(members)) {
  check_ground_size(ground_);
  for (const auto& s : members_) {
    if (s.n != ground_) throw Error("GroundMismatch", "paving member over wrong ground");
  }
  std::sort(members_.begin(), members_.end(), subset_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || !members_.front().is_empty())
    throw Error("NotAPaving", "a paving must contain the empty set");
}

Paving Paving::power_set(int ground) {
  check_ground_size(ground);
  std::vector<Subset> m;
  m.reserve(std::size_t(1) << ground);
  for (uint32_t bits = 0; bits < (uint32_t(1) << ground); ++bits)
    m.push_back(Subset(ground, bits));
  return Paving(ground, std::move(m));
}

Paving Paving::trivial(int ground) {
  return Paving(ground, {Subset::empty(ground)});
}

bool is_paving(int ground, const std::vector<Subset>& family) {
  check_ground_size(ground);
  for (const auto& s : family) {
    check_same_ground(ground, s.n);
    if (s.is_empty()) return true;
  }
  return false;
}

bool Paving::contains(const Subset& s) const {
  check_same_ground(ground_, s.n);
  return std::binary_search(members_.begin(), members_.end(), s, subset_less);
}

StabilityReport is_stable(const Paving& p, SetOp op) {
  const auto& m = p.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      Subset combined = op == SetOp::Union ? m[i].union_with(m[j]) : m[i].inter_with(m[j]);
      if (!p.contains(combined)) return {false, std::make_pair(m[i], m[j])};
    }
  }
  return {true, std::nullopt};
}

Paving close_under(const Paving& p, bool unions, bool intersections) {
  std::set<uint32_t> have;
  for (const auto& s : p.members()) have.insert(s.bits);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint32_t> cur(have.begin(), have.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i; j < cur.size(); ++j) {
        if (unions && have.insert(cur[i] | cur[j]).second) grew = true;
        if (intersections && have.insert(cur[i] & cur[j]).second) grew = true;
      }
    }
  }
  std::vector<Subset> out;
  out.reserve(have.size());
  for (uint32_t bits : have) out.push_back(Subset(p.ground(), bits));
  return Paving(p.ground(), std::move(out));
}

bool is_algebra(const Paving& p) {
  if (!p.contains(Subset::full(p.ground()))) return false;
  for (const auto& s : p.members())
    if (!p.contains(s.complement())) return false;
  // With complements present, union stability implies intersection stability.
  return is_stable(p, SetOp::Union).stable;
}

std::vector<Subset> atoms(const Paving& p) {
  if (!is_algebra(p)) throw Error("NotAnAlgebra", "atoms are defined for algebras");
  int n = p.ground();
  // signature of a point = the set of members containing it
  std::map<std::vector<int>, uint32_t> classes;
  for (int x = 0; x < n; ++x) {
    std::vector<int> sig;
    for (std::size_t k = 0; k < p.members().size(); ++k)
      if (p.members()[k].member(x)) sig.push_back(int(k));
    classes[sig] |= uint32_t(1) << x;
  }
  std::vector<Subset> blocks;
  for (const auto& [sig, bits] : classes) blocks.push_back(Subset(n, bits));
  std::sort(blocks.begin(), blocks.end(), [](const Subset& a, const Subset& b) {
    return (a.bits & -a.bits) < (b.bits & -b.bits);  // by smallest element
  });
  return blocks;
}

Paving algebra_from_partition(int ground, const std::vector<Subset>& blocks) {
  check_ground_size(ground);
  uint32_t seen = 0;
  for (const auto& b : blocks) {
    check_same_ground(ground, b.n);
    if (b.is_empty()) throw Error("PreconditionFailed", "partition block is empty");
    if (seen & b.bits) throw Error("PreconditionFailed", "partition blocks overlap");
    seen |= b.bits;
  }
  if (ground > 0 && seen != Subset::full(ground).bits)
    throw Error("PreconditionFailed", "partition does not cover the ground set");
  std::vector<Subset> out;
  std::size_t k = blocks.size();
  out.reserve(std::size_t(1) << k);
  for (uint32_t pick = 0; pick < (uint32_t(1) << k); ++pick) {
    uint32_t bits = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (pick & (uint32_t(1) << i)) bits |= blocks[i].bits;
    out.push_back(Subset(ground, bits));
  }
  return Paving(ground, std::move(out));
}

bool nat_member(NatPavingKind kind, const NatSet& s) {
  switch (kind) {
    case NatPavingKind::FiniteSets:
      return !s.is_cofinite();
    case NatPavingKind::CofinitePlusEmpty:
      return s.is_cofinite() || s.is_empty();
    case NatPavingKind::FiniteOrCofinite:
      return true;
  }
  return false;
}

std::string nat_paving_name(NatPavingKind kind) {
  switch (kind) {
    case NatPavingKind::FiniteSets: return "FiniteSets";
    case NatPavingKind::CofinitePlusEmpty: return "CofinitePlusEmpty";
    case NatPavingKind::FiniteOrCofinite: return "FiniteOrCofinite";
  }
  return "?";
}

SemicompactReport nat_semicompact(NatPavingKind kind) {
  if (kind == NatPavingKind::FiniteSets) return {true, ""};
  // H_n = ℕ ∖ {0..n} is a decreasing chain of nonempty members with empty
  // intersection, and each H_n is cofinite.
  return {false, "H_n = N \\ {0..n}"};
}

}  // namespace paveset
