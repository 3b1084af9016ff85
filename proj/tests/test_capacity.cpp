#include <bit>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "paveset/capacity.hpp"
#include "paveset/error.hpp"

using namespace paveset;

namespace {

// Independent route to the {0,1}-capacity counts: brute force over all
// 2^(2^n) Boolean tables, keeping the monotone ones that vanish at the empty
// set. Feasible through n = 4.
std::uint64_t brute_monotone_count(int n, bool require_zero_at_empty) {
  int subsets = 1 << n;
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < (std::uint64_t(1) << subsets); ++t) {
    if (require_zero_at_empty && (t & 1)) continue;
    bool mono = true;
    for (int s = 0; mono && s < subsets; ++s) {
      for (int i = 0; mono && i < n; ++i) {
        int up = s | (1 << i);
        if (((t >> s) & 1) > ((t >> up) & 1)) mono = false;
      }
    }
    if (mono) ++count;
  }
  return count;
}

// All monotone Boolean tables on 4 points, as 16-bit masks.
std::vector<std::uint16_t> monotone_tables_4() {
  std::vector<std::uint16_t> out;
  for (std::uint32_t t = 0; t < (1u << 16); ++t) {
    bool mono = true;
    for (int s = 0; mono && s < 16; ++s)
      for (int i = 0; mono && i < 4; ++i) {
        int up = s | (1 << i);
        if (((t >> s) & 1) > ((t >> up) & 1)) mono = false;
      }
    if (mono) out.push_back(static_cast<std::uint16_t>(t));
  }
  return out;
}

Capacity cap2(ExtRat e, ExtRat a, ExtRat b, ExtRat x) {
  return Capacity(2, {std::move(e), std::move(a), std::move(b), std::move(x)});
}

}  // namespace

TEST_CASE("capacity validation") {
  CHECK_NOTHROW(cap2(0, 1, 2, 2));
  CHECK_THROWS_AS(cap2(1, 1, 2, 2), Error);  // nonzero at the empty set
  try {
    cap2(0, 2, 0, 1);  // alpha({0}) = 2 > alpha(X) = 1
    FAIL("expected a monotonicity error");
  } catch (const Error& e) {
    CHECK(e.kind() == "NotMonotone");
  }
  CHECK_THROWS_AS(Capacity(2, {ExtRat(0), ExtRat(1)}), Error);     // short table
  CHECK_THROWS_AS(cap2(0, ExtRat(-1), 0, 0), Error);               // negative value
  CHECK_NOTHROW(cap2(0, 0, 0, ExtRat::inf()));                     // +inf is fine
}

TEST_CASE("two-valued capacities are upward-closed families without the empty set") {
  ZeroOneCapacity a(2, {Subset::full(2)});
  CHECK(a.value(Subset::full(2)) == ExtRat(1));
  CHECK(a.value(Subset::of(2, {0})) == ExtRat(0));

  try {
    ZeroOneCapacity b(2, {Subset::of(2, {0})});
    FAIL("expected an upward-closure error");
  } catch (const Error& e) {
    CHECK(e.kind() == "NotUpwardClosed");
  }
  try {
    ZeroOneCapacity c(2, {Subset::empty(2), Subset::full(2)});
    FAIL("expected an empty-set error");
  } catch (const Error& e) {
    CHECK(e.kind() == "EmptySetIncluded");
  }
  CHECK(ZeroOneCapacity(2, {}).family().empty());  // the zero capacity
  CHECK_THROWS_AS(ZeroOneCapacity(6, {}), Error);  // beyond the enumeration cap
}

TEST_CASE("family round-trips through the dense capacity table") {
  for (const auto& zo : all_zero_one(3)) {
    Capacity c = zo.to_capacity();
    std::vector<Subset> family;
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
      Subset s(3, bits);
      if (c.at(s) == ExtRat(1)) family.push_back(s);
    }
    CHECK(ZeroOneCapacity(3, family) == zo);
  }
}

TEST_CASE("enumeration counts match the independent brute-force oracle") {
  for (int n = 1; n <= 4; ++n)
    CHECK(count_zero_one(n) == brute_monotone_count(n, true));
  CHECK(count_zero_one(1) == 2);
  CHECK(count_zero_one(2) == 5);
  CHECK(count_zero_one(3) == 19);
  CHECK(count_zero_one(4) == 167);
}

TEST_CASE("five points, via the split-pair recursion") {
  // A monotone table on 5 points is a pair (g, h) of monotone tables on 4
  // points with g <= h pointwise (the two slices along the fifth point).
  auto tables = monotone_tables_4();
  CHECK(tables.size() == brute_monotone_count(4, false));
  std::uint64_t pairs = 0;
  for (auto g : tables)
    for (auto h : tables)
      if ((g & ~h) == 0) ++pairs;
  // every monotone table except the all-ones one vanishes at the empty set
  CHECK(count_zero_one(5) == pairs - 1);
  CHECK(count_zero_one(5) == 7580);
}

TEST_CASE("enumeration order is deterministic: absent-first over (cardinality, bits)") {
  auto all = all_zero_one(2);
  REQUIRE(all.size() == 5);
  CHECK(all[0].family_mask() == 0u);        // {}
  CHECK(all[1].family_mask() == 0b1000u);   // {X}
  CHECK(all[2].family_mask() == 0b1100u);   // {{1}, X}
  CHECK(all[3].family_mask() == 0b1010u);   // {{0}, X}
  CHECK(all[4].family_mask() == 0b1110u);   // {{0}, {1}, X}
  std::uint64_t seen = 0;
  for_each_zero_one(2, [&](const ZeroOneCapacity&) { ++seen; });
  CHECK(seen == 5);
}

TEST_CASE("trace on a paving") {
  Paving e(2, {Subset::empty(2), Subset::of(2, {0}), Subset::full(2)});
  ZeroOneCapacity a(2, {Subset::full(2)});
  CHECK(trace_mask(a, e) == 0b100u);  // members: {}, {0}, X
  ZeroOneCapacity b(2, {Subset::of(2, {0}), Subset::full(2)});
  CHECK(trace_mask(b, e) == 0b110u);
}

TEST_CASE("envelope extensions of a partial capacity") {
  Paving e(2, {Subset::empty(2), Subset::full(2)});
  PartialCapacity d(e, {ExtRat(0), ExtRat(1)});
  Capacity lo = inner_extension(d);
  Capacity hi = outer_extension(d);
  CHECK(lo.table() == std::vector<ExtRat>{0, 0, 0, 1});
  CHECK(hi.table() == std::vector<ExtRat>{0, 1, 1, 1});
  CHECK(agree_on(lo, hi, e));
  CHECK(lo.at(Subset::of(2, {0})) != hi.at(Subset::of(2, {0})));

  // over the full power set both envelopes are the function itself
  Capacity c = cap2(0, ExtRat(1, 2), ExtRat(1, 3), 2);
  PartialCapacity full = to_partial(c);
  CHECK(inner_extension(full) == c);
  CHECK(outer_extension(full) == c);

  // over the trivial paving: inner is zero, outer is +inf off the empty set
  PartialCapacity triv(Paving::trivial(2), {ExtRat(0)});
  CHECK(inner_extension(triv).table() == std::vector<ExtRat>(4, ExtRat(0)));
  CHECK(outer_extension(triv).table() ==
        std::vector<ExtRat>{ExtRat(0), ExtRat::inf(), ExtRat::inf(), ExtRat::inf()});
}

TEST_CASE("partial capacities validate monotonicity on their domain") {
  Paving e(2, {Subset::empty(2), Subset::of(2, {0}), Subset::full(2)});
  CHECK_NOTHROW(PartialCapacity(e, {ExtRat(0), ExtRat(1), ExtRat(1)}));
  CHECK_THROWS_AS(PartialCapacity(e, {ExtRat(0), ExtRat(2), ExtRat(1)}), Error);
  CHECK_THROWS_AS(PartialCapacity(e, {ExtRat(1), ExtRat(1), ExtRat(1)}), Error);
  CHECK_THROWS_AS(PartialCapacity(e, {ExtRat(0), ExtRat(1)}), Error);
  PartialCapacity d(e, {ExtRat(0), ExtRat(1), ExtRat(2)});
  CHECK(d.at(Subset::of(2, {0})) == ExtRat(1));
  CHECK_THROWS_AS(d.at(Subset::of(2, {1})), Error);
}

TEST_CASE("modularity check with witness") {
  // cardinality is modular on the power set
  std::vector<ExtRat> card;
  for (std::uint32_t b = 0; b < 8; ++b) card.push_back(ExtRat(std::popcount(b)));
  Capacity counting(3, card);
  CHECK(is_modular(counting, ModularKind::Modular).holds);
  CHECK(is_modular(counting, ModularKind::Submodular).holds);
  CHECK(is_modular(counting, ModularKind::Supermodular).holds);

  Capacity unanimity = cap2(0, 0, 0, 1);
  auto eq = is_modular(unanimity, ModularKind::Modular);
  CHECK(!eq.holds);
  CHECK(eq.witness->first == Subset::of(2, {0}));
  CHECK(eq.witness->second == Subset::of(2, {1}));
  CHECK(is_modular(unanimity, ModularKind::Supermodular).holds);
  CHECK(!is_modular(unanimity, ModularKind::Submodular).holds);

  // chain domains are vacuously modular
  Paving chain(2, {Subset::empty(2), Subset::full(2)});
  PartialCapacity d(chain, {ExtRat(0), ExtRat(7)});
  CHECK(is_modular(d, ModularKind::Modular).holds);

  Paving bad(2, {Subset::empty(2), Subset::of(2, {0}), Subset::of(2, {1})});
  PartialCapacity on_bad(bad, {ExtRat(0), ExtRat(1), ExtRat(1)});
  try {
    is_modular(on_bad, ModularKind::Modular);
    FAIL("expected a lattice error");
  } catch (const Error& e) {
    CHECK(e.kind() == "DomainNotLattice");
  }
}

TEST_CASE("splitting sets of an arbitrary set function form an algebra") {
  // additive: everything splits
  SetFunction additive(2, {ExtRat(0), ExtRat(1), ExtRat(2), ExtRat(3)});
  CHECK(caratheodory_algebra(additive) == Paving::power_set(2));

  // constant 1 off the empty set: only the trivial splits remain
  SetFunction lumpy(2, {ExtRat(0), ExtRat(1), ExtRat(1), ExtRat(1)});
  Paving alg = caratheodory_algebra(lumpy);
  CHECK(alg.size() == 2);
  CHECK(alg.contains(Subset::empty(2)));
  CHECK(alg.contains(Subset::full(2)));
  CHECK(is_algebra(alg));

  SetFunction zero(2, std::vector<ExtRat>(4, ExtRat(0)));
  CHECK(caratheodory_algebra(zero) == Paving::power_set(2));

  // a non-monotone set function still yields an algebra
  SetFunction dip(3, {ExtRat(0), ExtRat(3), ExtRat(3), ExtRat(1), ExtRat(3), ExtRat(1),
                      ExtRat(1), ExtRat(4)});
  CHECK(is_algebra(caratheodory_algebra(dip)));
}

TEST_CASE("restriction of a set function to a paving") {
  SetFunction lumpy(2, {ExtRat(0), ExtRat(1), ExtRat(1), ExtRat(1)});
  PartialCapacity d = restrict_to_paving(lumpy, caratheodory_algebra(lumpy));
  CHECK(d.domain().size() == 2);
  CHECK(d.at(Subset::full(2)) == ExtRat(1));
  CHECK(is_modular(d, ModularKind::Modular).holds);
}

TEST_CASE("filter capacities on the naturals") {
  NatFilterCapacity lower{NatFilterKind::LowerFrechet, 0};
  NatFilterCapacity principal{NatFilterKind::Principal, 3};
  CHECK(lower.value_one(NatSet::cofinite({0})));
  CHECK(!lower.value_one(NatSet::finite({1, 2, 3})));
  CHECK(principal.value_one(NatSet::finite({1, 3})));
  CHECK(!principal.value_one(NatSet::cofinite({3})));
}
