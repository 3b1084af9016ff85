#include <algorithm>

#include "doctest.h"
#include "paveset/error.hpp"
#include "paveset/paving.hpp"

using namespace paveset;

namespace {

Paving make(int n, std::vector<std::vector<int>> sets) {
  std::vector<Subset> m;
  for (auto& s : sets) m.push_back(Subset::of(n, s));
  return Paving(n, std::move(m));
}

}  // namespace

TEST_CASE("a paving is any family containing the empty set") {
  CHECK(is_paving(2, {Subset::empty(2)}));
  CHECK(!is_paving(2, {Subset::of(2, {0})}));
  CHECK(is_paving(2, Paving::power_set(2).members()));
  CHECK_THROWS_AS(make(2, {{0}}), Error);  // constructor enforces it
  CHECK(Paving::trivial(3).size() == 1);
  CHECK(Paving::power_set(2).size() == 4);
}

TEST_CASE("members are canonical: sorted and deduplicated") {
  Paving p = make(2, {{}, {0, 1}, {0}, {0}});
  CHECK(p.size() == 3);
  CHECK(p.members()[0] == Subset::empty(2));
  CHECK(p.members()[1] == Subset::of(2, {0}));
  CHECK(p.members()[2] == Subset::full(2));
  CHECK(p.contains(Subset::of(2, {0})));
  CHECK(!p.contains(Subset::of(2, {1})));
}

TEST_CASE("stability and its witness pair") {
  Paving e = make(2, {{}, {0}, {1}});
  auto un = is_stable(e, SetOp::Union);
  CHECK(!un.stable);
  CHECK(un.witness->first == Subset::of(2, {0}));
  CHECK(un.witness->second == Subset::of(2, {1}));
  CHECK(is_stable(e, SetOp::Intersection).stable);

  Paving ps = Paving::power_set(3);
  CHECK(is_stable(ps, SetOp::Union).stable);
  CHECK(is_stable(ps, SetOp::Intersection).stable);

  Paving chain = make(2, {{}, {0}, {0, 1}});
  CHECK(is_stable(chain, SetOp::Union).stable);
  CHECK(is_stable(chain, SetOp::Intersection).stable);
}

TEST_CASE("closure under set operations") {
  Paving e = make(2, {{}, {0}, {1}});
  Paving closed = close_under(e, true, false);
  CHECK(closed == Paving::power_set(2));

  // already closed families are fixed points
  CHECK(close_under(closed, true, true) == closed);
  CHECK(close_under(Paving::trivial(2), true, true) == Paving::trivial(2));

  // monotone in the input family
  Paving f = make(3, {{}, {0}, {1}});
  Paving g = make(3, {{}, {0}, {1}, {2}});
  Paving cf = close_under(f, true, true);
  Paving cg = close_under(g, true, true);
  for (const auto& s : cf.members()) CHECK(cg.contains(s));
}

TEST_CASE("algebra recognition") {
  CHECK(is_algebra(make(2, {{}, {0, 1}})));
  CHECK(!is_algebra(make(2, {{}, {0}, {0, 1}})));  // complement of {0} missing
  CHECK(is_algebra(Paving::power_set(3)));
  CHECK(!is_algebra(Paving::trivial(2)));  // X missing
}

TEST_CASE("atoms of an algebra") {
  Paving a = algebra_from_partition(4, {Subset::of(4, {0, 1}), Subset::of(4, {2, 3})});
  CHECK(a.size() == 4);
  CHECK(is_algebra(a));
  auto blocks = atoms(a);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == Subset::of(4, {0, 1}));
  CHECK(blocks[1] == Subset::of(4, {2, 3}));

  auto singles = atoms(Paving::power_set(3));
  REQUIRE(singles.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(singles[std::size_t(i)] == Subset::of(3, {i}));

  auto whole = atoms(make(2, {{}, {0, 1}}));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].is_full());

  CHECK_THROWS_AS(atoms(make(2, {{}, {0}, {0, 1}})), Error);
}

TEST_CASE("atoms are the minimal members; members are unions of atoms") {
  Paving a = algebra_from_partition(4, {Subset::of(4, {0}), Subset::of(4, {1, 3}), Subset::of(4, {2})});
  auto blocks = atoms(a);
  for (const auto& b : blocks) {
    CHECK(a.contains(b));
    for (const auto& m : a.members())
      if (!m.is_empty() && m.subset_of(b)) CHECK(m == b);
  }
  for (const auto& m : a.members()) {
    Subset rebuilt = Subset::empty(4);
    for (const auto& b : blocks)
      if (b.subset_of(m)) rebuilt = rebuilt.union_with(b);
    CHECK(rebuilt == m);
  }
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(algebra_from_partition(2, {Subset::of(2, {0})}), Error);  // not covering
  CHECK_THROWS_AS(algebra_from_partition(2, {Subset::of(2, {0, 1}), Subset::of(2, {1})}), Error);
  CHECK_THROWS_AS(algebra_from_partition(2, {Subset::empty(2), Subset::full(2)}), Error);
}

TEST_CASE("families on the naturals") {
  CHECK(nat_member(NatPavingKind::FiniteOrCofinite, NatSet::finite({1, 2})));
  CHECK(!nat_member(NatPavingKind::FiniteSets, NatSet::cofinite({0})));
  CHECK(nat_member(NatPavingKind::CofinitePlusEmpty, NatSet::empty()));
  CHECK(!nat_member(NatPavingKind::CofinitePlusEmpty, NatSet::finite({3})));
  CHECK(nat_member(NatPavingKind::FiniteSets, NatSet::empty()));
}

TEST_CASE("emptying chains: which families are semi-compact") {
  CHECK(nat_semicompact(NatPavingKind::FiniteSets).semicompact);
  auto co = nat_semicompact(NatPavingKind::CofinitePlusEmpty);
  CHECK(!co.semicompact);
  CHECK(!co.chain_description.empty());
  CHECK(!nat_semicompact(NatPavingKind::FiniteOrCofinite).semicompact);
}

TEST_CASE("the witness chain really does what the report says") {
  // H_n = N minus {0..n}: cofinite, decreasing, nonempty, empty overall intersection
  std::vector<NatSet> chain;
  for (std::uint64_t n = 0; n < 10; ++n) {
    std::vector<std::uint64_t> cut;
    for (std::uint64_t i = 0; i <= n; ++i) cut.push_back(i);
    chain.push_back(NatSet::cofinite(cut));
  }
  for (std::size_t n = 0; n < chain.size(); ++n) {
    CHECK(nat_member(NatPavingKind::CofinitePlusEmpty, chain[n]));
    CHECK(nat_member(NatPavingKind::FiniteOrCofinite, chain[n]));
    CHECK(chain[n].member(n + 1));  // nonempty
    CHECK(!chain[n].member(n));     // x = n leaves the chain at step n
    if (n > 0)
      for (std::uint64_t x = 0; x < 20; ++x)
        if (chain[n].member(x)) CHECK(chain[n - 1].member(x));  // decreasing
  }
}
