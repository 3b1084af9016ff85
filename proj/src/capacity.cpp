#include "paveset/capacity.hpp"

#include <algorithm>
#include <bit>

#include "paveset/error.hpp"

namespace paveset {

namespace {

void check_table_shape(int ground, const std::vector<ExtRat>& table) {
  check_ground_size(ground);
  if (table.size() != (std::size_t(1) << ground))
    throw Error("PreconditionFailed", "set function table has wrong size");
  for (const auto& v : table) {
    if (v.is_neg_inf() || v.is_negative())
      throw Error("PreconditionFailed", "set function value is negative");
  }
  if (!table[0].is_zero()) throw Error("NonzeroEmpty", "value at the empty set must be 0");
}

}  // namespace

SetFunction::SetFunction(int ground, std::vector<ExtRat> table)
    : ground_(ground), table_(std::move(table)) {
  check_table_shape(ground_, table_);
}

const ExtRat& SetFunction::at(const Subset& s) const {
  check_same_ground(ground_, s.n);
  return table_[s.bits];
}

Capacity::Capacity(int ground, std::vector<ExtRat> table)
    : ground_(ground), table_(std::move(table)) {
  check_table_shape(ground_, table_);
  for (uint32_t bits = 0; bits < (uint32_t(1) << ground_); ++bits) {
    for (int i = 0; i < ground_; ++i) {
      uint32_t up = bits | (uint32_t(1) << i);
      if (up == bits) continue;
      if (table_[up] < table_[bits])
        throw Error("NotMonotone", "capacity decreases from " + Subset(ground_, bits).str() +
                                       " to " + Subset(ground_, up).str());
    }
  }
}

const ExtRat& Capacity::at(const Subset& s) const {
  check_same_ground(ground_, s.n);
  return table_[s.bits];
}

namespace {

std::uint64_t validated_mask(int ground, std::uint64_t mask) {
  check_ground_size(ground);
  if (ground > kMaxEnumGround)
    throw Error("GroundTooLarge", "two-valued capacities are capped at " +
                                      std::to_string(kMaxEnumGround) + " points");
  if (mask & 1) throw Error("EmptySetIncluded", "a two-valued capacity vanishes at the empty set");
  uint32_t full = uint32_t(1) << ground;
  for (uint32_t s = 0; s < full; ++s) {
    if (!(mask >> s & 1)) continue;
    for (int i = 0; i < ground; ++i) {
      uint32_t up = s | (uint32_t(1) << i);
      if (up != s && !(mask >> up & 1))
        throw Error("NotUpwardClosed", Subset(ground, s).str() + " is in the family but " +
                                           Subset(ground, up).str() + " is not");
    }
  }
  return mask;
}

}  // namespace

ZeroOneCapacity::ZeroOneCapacity(int ground, const std::vector<Subset>& family)
    : ground_(ground), mask_(0) {
  for (const auto& s : family) {
    check_same_ground(ground, s.n);
    mask_ |= std::uint64_t(1) << s.bits;
  }
  mask_ = validated_mask(ground_, mask_);
}

ZeroOneCapacity ZeroOneCapacity::from_mask(int ground, std::uint64_t family_mask) {
  return ZeroOneCapacity(ground, validated_mask(ground, family_mask), true);
}

bool ZeroOneCapacity::contains(const Subset& s) const {
  check_same_ground(ground_, s.n);
  return mask_ >> s.bits & 1;
}

std::vector<Subset> ZeroOneCapacity::family() const {
  std::vector<Subset> out;
  for (uint32_t s = 0; s < (uint32_t(1) << ground_); ++s)
    if (mask_ >> s & 1) out.push_back(Subset(ground_, s));
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

Capacity ZeroOneCapacity::to_capacity() const {
  std::vector<ExtRat> table;
  table.reserve(std::size_t(1) << ground_);
  for (uint32_t s = 0; s < (uint32_t(1) << ground_); ++s)
    table.push_back(mask_ >> s & 1 ? ExtRat(1) : ExtRat(0));
  return Capacity(ground_, std::move(table));
}

namespace {

struct EnumState {
  int ground;
  std::vector<uint32_t> order;     // subset indices in (cardinality, bits) order
  std::vector<std::uint64_t> sub;  // sub[s] = mask of all t ⊆ s
  std::uint64_t included = 0;
  const std::function<void(const ZeroOneCapacity&)>* fn;
  std::uint64_t count = 0;

  void dfs(std::size_t pos) {
    if (pos == order.size()) {
      ++count;
      if (fn) (*fn)(ZeroOneCapacity::from_mask(ground, included));
      return;
    }
    uint32_t s = order[pos];
    std::uint64_t bit = std::uint64_t(1) << s;
    // absent first; allowed only if no included subset of s forces it in
    if ((included & sub[s] & ~bit) == 0) dfs(pos + 1);
    if (s != 0) {
      included |= bit;
      dfs(pos + 1);
      included &= ~bit;
    }
  }
};

EnumState make_enum_state(int ground) {
  check_ground_size(ground);
  if (ground > kMaxEnumGround)
    throw Error("GroundTooLarge", "enumeration is capped at " +
                                      std::to_string(kMaxEnumGround) + " points");
  EnumState st;
  st.ground = ground;
  uint32_t full = uint32_t(1) << ground;
  for (uint32_t s = 0; s < full; ++s) st.order.push_back(s);
  std::sort(st.order.begin(), st.order.end(), [](uint32_t a, uint32_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  st.sub.assign(full, 0);
  for (uint32_t s = 0; s < full; ++s) {
    uint32_t t = s;
    while (true) {
      st.sub[s] |= std::uint64_t(1) << t;
      if (t == 0) break;
      t = (t - 1) & s;
    }
  }
  return st;
}

}  // namespace

void for_each_zero_one(int ground, const std::function<void(const ZeroOneCapacity&)>& fn) {
  EnumState st = make_enum_state(ground);
  st.fn = &fn;
  st.dfs(0);
}

std::vector<ZeroOneCapacity> all_zero_one(int ground) {
  std::vector<ZeroOneCapacity> out;
  for_each_zero_one(ground, [&](const ZeroOneCapacity& a) { out.push_back(a); });
  return out;
}

std::uint64_t count_zero_one(int ground) {
  EnumState st = make_enum_state(ground);
  st.fn = nullptr;
  st.dfs(0);
  return st.count;
}

std::uint64_t trace_mask(const ZeroOneCapacity& a, const Paving& p) {
  check_same_ground(a.ground(), p.ground());
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < p.members().size(); ++k)
    if (a.contains(p.members()[k])) out |= std::uint64_t(1) << k;
  return out;
}

PartialCapacity::PartialCapacity(Paving domain, std::vector<ExtRat> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.size())
    throw Error("PreconditionFailed", "one value per paving member is required");
  for (const auto& v : values_) {
    if (v.is_neg_inf() || v.is_negative())
      throw Error("PreconditionFailed", "capacity value is negative");
  }
  if (!values_[0].is_zero()) throw Error("NonzeroEmpty", "value at the empty set must be 0");
  const auto& m = domain_.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[i].subset_of(m[j]) && values_[j] < values_[i])
        throw Error("NotMonotone",
                    "capacity decreases from " + m[i].str() + " to " + m[j].str());
    }
  }
}

const ExtRat& PartialCapacity::at(const Subset& h) const {
  const auto& m = domain_.members();
  auto it = std::lower_bound(m.begin(), m.end(), h, subset_less);
  if (it == m.end() || !(*it == h))
    throw Error("PreconditionFailed", h.str() + " is not in the capacity's domain");
  return values_[std::size_t(it - m.begin())];
}

Capacity inner_extension(const PartialCapacity& d) {
  int n = d.ground();
  const auto& m = d.domain().members();
  std::vector<ExtRat> table;
  table.reserve(std::size_t(1) << n);
  for (uint32_t bits = 0; bits < (uint32_t(1) << n); ++bits) {
    Subset a(n, bits);
    ExtRat best(0);  // ∅ is always below A
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k].subset_of(a)) best = max(best, d.values()[k]);
    table.push_back(best);
  }
  return Capacity(n, std::move(table));
}

Capacity outer_extension(const PartialCapacity& d) {
  int n = d.ground();
  const auto& m = d.domain().members();
  std::vector<ExtRat> table;
  table.reserve(std::size_t(1) << n);
  for (uint32_t bits = 0; bits < (uint32_t(1) << n); ++bits) {
    Subset a(n, bits);
    ExtRat best = ExtRat::inf();  // inf over nothing
    for (std::size_t k = 0; k < m.size(); ++k)
      if (a.subset_of(m[k])) best = min(best, d.values()[k]);
    table.push_back(best);
  }
  return Capacity(n, std::move(table));
}

PartialCapacity restrict_to_paving(const SetFunction& mu, const Paving& p) {
  check_same_ground(mu.ground(), p.ground());
  std::vector<ExtRat> vals;
  vals.reserve(p.size());
  for (const auto& h : p.members()) vals.push_back(mu.at(h));
  return PartialCapacity(p, std::move(vals));
}

PartialCapacity to_partial(const Capacity& a) {
  return restrict_to_paving(a.as_set_function(), Paving::power_set(a.ground()));
}

namespace {

bool modular_ok(const ExtRat& lhs, const ExtRat& rhs, ModularKind kind) {
  switch (kind) {
    case ModularKind::Modular: return lhs == rhs;
    case ModularKind::Submodular: return lhs <= rhs;
    case ModularKind::Supermodular: return rhs <= lhs;
  }
  return false;
}

}  // namespace

ModularReport is_modular(const PartialCapacity& d, ModularKind kind) {
  for (SetOp op : {SetOp::Union, SetOp::Intersection}) {
    auto st = is_stable(d.domain(), op);
    if (!st.stable)
      throw Error("DomainNotLattice",
                  "domain is not stable: " + st.witness->first.str() + " and " +
                      st.witness->second.str());
  }
  const auto& m = d.domain().members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      ExtRat lhs = d.at(m[i].union_with(m[j])) + d.at(m[i].inter_with(m[j]));
      ExtRat rhs = d.values()[i] + d.values()[j];
      if (!modular_ok(lhs, rhs, kind)) return {false, std::make_pair(m[i], m[j])};
    }
  }
  return {true, std::nullopt};
}

ModularReport is_modular(const Capacity& a, ModularKind kind) {
  int n = a.ground();
  for (uint32_t x = 0; x < (uint32_t(1) << n); ++x) {
    for (uint32_t y = x; y < (uint32_t(1) << n); ++y) {
      ExtRat lhs = a.table()[x | y] + a.table()[x & y];
      ExtRat rhs = a.table()[x] + a.table()[y];
      if (!modular_ok(lhs, rhs, kind))
        return {false, std::make_pair(Subset(n, x), Subset(n, y))};
    }
  }
  return {true, std::nullopt};
}

bool agree_on(const Capacity& a, const Capacity& b, const Paving& p) {
  check_same_ground(a.ground(), p.ground());
  check_same_ground(b.ground(), p.ground());
  for (const auto& h : p.members())
    if (!(a.at(h) == b.at(h))) return false;
  return true;
}

Paving caratheodory_algebra(const SetFunction& mu) {
  int n = mu.ground();
  uint32_t full_bits = n == 0 ? 0 : (uint32_t(1) << n) - 1;
  std::vector<Subset> good;
  for (uint32_t a = 0; a < (uint32_t(1) << n); ++a) {
    bool splits = true;
    for (uint32_t e = 0; splits && e < (uint32_t(1) << n); ++e) {
      if (!(mu.table()[e] == mu.table()[e & a] + mu.table()[e & full_bits & ~a])) splits = false;
    }
    if (splits) good.push_back(Subset(n, a));
  }
  return Paving(n, std::move(good));
}

bool NatFilterCapacity::value_one(const NatSet& s) const {
  switch (kind) {
    case NatFilterKind::LowerFrechet:
      return s.is_cofinite();
    case NatFilterKind::UpperFrechet:
      // every representable set is finite or cofinite, so infinite = cofinite
      return s.is_cofinite();
    case NatFilterKind::Principal:
      return s.member(point);
  }
  return false;
}

}  // namespace paveset
