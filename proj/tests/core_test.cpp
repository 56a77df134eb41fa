// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "ebase/closure_space.hpp"
#include "ebase/errors.hpp"
#include "ebase/implication.hpp"
#include "support.hpp"

namespace ebase {
namespace {

using testing::fixture;
using testing::set;
using testing::sets;
namespace oracle = testing::oracle;

TEST(ElementSet, BasicAlgebra) {
  const ElementSet a = ElementSet::singleton(0).with(2);
  EXPECT_EQ(a.size(), 2);
  EXPECT_TRUE(a.contains(2));
  EXPECT_FALSE(a.contains(1));
  EXPECT_TRUE(ElementSet::singleton(2).proper_subset_of(a));
  EXPECT_FALSE(a.proper_subset_of(a));
  EXPECT_EQ((a | ElementSet::singleton(1)).size(), 3);
  EXPECT_EQ(a - ElementSet::singleton(0), ElementSet::singleton(2));
  EXPECT_EQ(ElementSet::prefix(3).bits(), 7U);
  EXPECT_EQ(ElementSet().lowest(), -1);
  std::vector<int> members;
  for (int i : a) members.push_back(i);
  EXPECT_EQ(members, (std::vector<int>{0, 2}));
}

TEST(ElementSet, CanonicalOrderIsSizeThenLexicographic) {
  std::vector<ElementSet> family = {ElementSet(0b110), ElementSet(0b001), ElementSet(0b011),
                                    ElementSet(), ElementSet(0b101), ElementSet(0b011)};
  canonicalize(family);
  EXPECT_EQ(family, (std::vector<ElementSet>{ElementSet(), ElementSet(0b001), ElementSet(0b011),
                                             ElementSet(0b101), ElementSet(0b110)}));
}

TEST(GroundSet, RendersAndParses) {
  const GroundSet letters = GroundSet::letters(4);
  EXPECT_EQ(letters.render(ElementSet(0b1011)), "abd");
  EXPECT_EQ(letters.render(ElementSet()), "∅");
  EXPECT_EQ(letters.parse("bd"), ElementSet(0b1010));
  EXPECT_EQ(letters.parse("b d"), ElementSet(0b1010));
  EXPECT_THROW(letters.parse("bz"), ParseError);

  const GroundSet words({"x1", "x2", "y"});
  EXPECT_FALSE(words.single_char_labels());
  EXPECT_EQ(words.render(ElementSet(0b101)), "x1 y");
  EXPECT_EQ(words.parse("y x1"), ElementSet(0b101));
  EXPECT_THROW(GroundSet({"a", "a"}), InvalidArgument);
}

TEST(Closure, Examples) {
  const ClosureSpace leaf = fixture("leaf.imp");
  EXPECT_EQ(leaf.closure(set(leaf, "ad")), set(leaf, "abcd"));
  EXPECT_EQ(leaf.closure(ElementSet()), ElementSet());
  const ClosureSpace carpet = fixture("carpet.imp");
  EXPECT_EQ(carpet.closure(set(carpet, "bg")), set(carpet, "abcdfg"));
}

TEST(Closure, RejectsSetsOutsideTheGround) {
  const ClosureSpace leaf = fixture("leaf.imp");
  EXPECT_THROW(leaf.closure(ElementSet::singleton(4)), GroundMismatch);
  EXPECT_THROW(leaf.binary_closure(ElementSet::singleton(7)), GroundMismatch);
}

TEST(BinaryClosure, Examples) {
  const ClosureSpace carpet = fixture("carpet.imp");
  EXPECT_EQ(carpet.binary_closure(set(carpet, "be")), set(carpet, "abce"));
  EXPECT_EQ(carpet.binary_closure(set(carpet, "de")), set(carpet, "abcde"));
  EXPECT_EQ(carpet.binary_closure(ElementSet()), ElementSet());
}

TEST(MeetJoin, Examples) {
  const ClosureSpace m3 = fixture("m3.sets");
  EXPECT_EQ(m3.join(set(m3, "a"), set(m3, "b")), set(m3, "abc"));
  EXPECT_EQ(m3.meet(set(m3, "a"), set(m3, "b")), ElementSet());
  const ClosureSpace modp = fixture("modp.imp");
  EXPECT_EQ(modp.join(set(modp, "cd"), set(modp, "ce")), set(modp, "abcde"));
  for (ElementSet c : modp.closed_sets()) {
    EXPECT_EQ(modp.meet(c, c), c);
    EXPECT_EQ(modp.join(c, c), c);
  }
  EXPECT_THROW(modp.join(set(modp, "d"), set(modp, "c")), NotClosed);
  EXPECT_THROW(modp.meet(set(modp, "ab"), set(modp, "c")), NotClosed);
}

TEST(Interval, Examples) {
  const ClosureSpace m3 = fixture("m3.sets");
  EXPECT_EQ(m3.interval(ElementSet(), m3.full()).size(), 5U);

  const ClosureSpace modp = fixture("modp.imp");
  const oracle::Family f(modp);
  std::vector<ElementSet> expected;
  const ElementSet low = set(modp, "c");
  for (oracle::Mask c : f.closed) {
    if (oracle::sub(low.bits(), c)) expected.push_back(ElementSet(c));
  }
  EXPECT_EQ(modp.interval(low, modp.full()), testing::sorted(expected));
  EXPECT_EQ(expected.size(), 5U);

  for (ElementSet c : modp.closed_sets()) {
    EXPECT_EQ(modp.interval(c, c), std::vector<ElementSet>{c});
  }
  EXPECT_THROW(modp.interval(set(modp, "cd"), set(modp, "ce")), NotComparable);
  EXPECT_THROW(modp.interval(set(modp, "d"), modp.full()), NotClosed);
}

TEST(SpaceFromClosedSets, AcceptsThePowerset) {
  const ClosureSpace s = space_from_closed_sets(
      GroundSet::letters(2), {ElementSet(), ElementSet(0b01), ElementSet(0b10), ElementSet(0b11)});
  EXPECT_EQ(s.closed_count(), 4);
  EXPECT_EQ(s.covers().size(), 4U);
}

TEST(SpaceFromClosedSets, RejectsNonStandardWithWitness) {
  const GroundSet g = GroundSet::letters(2);
  try {
    space_from_closed_sets(g, {ElementSet(), g.full()});
    FAIL() << "expected NotStandard";
  } catch (const NotStandard& e) {
    EXPECT_EQ(e.element(), 0);
  }
}

TEST(SpaceFromClosedSets, RejectsMissingTop) {
  const GroundSet g = GroundSet::letters(2);
  EXPECT_THROW(space_from_closed_sets(g, {ElementSet(), ElementSet(0b01), ElementSet(0b10)}),
               MissingTop);
}

TEST(SpaceFromClosedSets, RejectsMissingIntersectionWithWitnessPair) {
  const GroundSet g = GroundSet::letters(3);
  try {
    space_from_closed_sets(g, {ElementSet(0b011), ElementSet(0b110), g.full(), ElementSet(),
                               ElementSet(0b001), ElementSet(0b100)});
    FAIL() << "expected NotIntersectionClosed";
  } catch (const NotIntersectionClosed& e) {
    EXPECT_EQ(e.first() & e.second(), ElementSet(0b010));
  }
}

TEST(SpaceFromClosedSets, RejectsForeignElementsAndOversizedGrounds) {
  const GroundSet g = GroundSet::letters(2);
  EXPECT_THROW(space_from_closed_sets(g, {ElementSet(), ElementSet(0b111), g.full()}),
               GroundMismatch);
  EXPECT_THROW(space_from_closed_sets(GroundSet::letters(25), {ElementSet::prefix(25)}),
               CapacityExceeded);
}

TEST(SpaceFromClosedSets, CloseUnderIntersectionRepairsForExploration) {
  const GroundSet g = GroundSet::letters(3);
  const std::vector<ElementSet> closed =
      close_under_intersection(g.full(), {ElementSet(0b011), ElementSet(0b110)});
  EXPECT_EQ(closed, (std::vector<ElementSet>{ElementSet(0b010), ElementSet(0b011),
                                             ElementSet(0b110), ElementSet(0b111)}));
}

TEST(SpaceFromClosedSets, LeafModelsMatchBruteForce) {
  const ClosureSpace leaf = fixture("leaf.imp");
  // Brute force over all 16 subsets against ac -> b, bd -> c, ad -> bc.
  const std::vector<oracle::Rule> rules = {{0b0101, 0b0010}, {0b1010, 0b0100}, {0b1001, 0b0110}};
  std::vector<ElementSet> expected;
  for (oracle::Mask x = 0; x < 16; ++x) {
    if (oracle::chain(rules, x) == x) expected.push_back(ElementSet(x));
  }
  EXPECT_EQ(std::vector<ElementSet>(leaf.closed_sets().begin(), leaf.closed_sets().end()),
            testing::sorted(expected));
  EXPECT_EQ(leaf.closed_count(), 11);
}

TEST(SpaceFromClosedSets, DiamondAndPowerset) {
  EXPECT_EQ(diamond_space(3).closed_count(), 5);
  EXPECT_EQ(diamond_space(4).closed_count(), 6);
  EXPECT_EQ(powerset_space(4).closed_count(), 16);
  EXPECT_EQ(powerset_space(4).height(), 4);
  EXPECT_EQ(diamond_space(3).height(), 2);
}

// Closure axioms, binary closure and covers against brute force.
void check_core_invariants(const ClosureSpace& space) {
  const oracle::Family f(space);
  const oracle::Mask full = f.full;
  for (oracle::Mask x = 0; x <= full; ++x) {
    const ElementSet c = space.closure(ElementSet(x));
    ASSERT_EQ(c.bits(), f.closure(x));
    ASSERT_TRUE(ElementSet(x).subset_of(c));
    ASSERT_EQ(space.closure(c), c);
    ASSERT_TRUE(space.binary_closure(ElementSet(x)).subset_of(c));
    ASSERT_EQ(space.binary_closure(ElementSet(x)).bits(), f.binary_closure(x));
    ASSERT_EQ(space.is_closed(ElementSet(x)), f.is_closed(x));
    for (int i = 0; i < space.element_count(); ++i) {
      if (x >> i & 1U) continue;
      ASSERT_TRUE(c.subset_of(space.closure(ElementSet(x).with(i))));
    }
  }
  for (int i = 0; i < space.closed_count(); ++i) {
    std::vector<oracle::Mask> expected = f.predecessors(space.closed_set(i).bits());
    std::vector<oracle::Mask> actual;
    for (int p : space.predecessors(i)) actual.push_back(space.closed_set(p).bits());
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    ASSERT_EQ(actual, expected);
  }
  for (std::size_t i = 1; i < space.closed_sets().size(); ++i) {
    ASSERT_TRUE(canonical_less(space.closed_sets()[i - 1], space.closed_sets()[i]));
  }
  EXPECT_EQ(space.closed_set(0), ElementSet());
  EXPECT_EQ(space.closed_set(space.closed_count() - 1), space.full());
}

TEST(CoreInvariants, HoldOnEveryFixture) {
  for (const std::string& name : testing::all_fixtures()) {
    SCOPED_TRACE(name);
    check_core_invariants(fixture(name));
  }
}

TEST(CoreInvariants, HoldOnRandomSpaces) {
  testing::RandomSpaces random(7);
  for (int k = 0; k < 40; ++k) check_core_invariants(random.next(2, 8));
}

TEST(ImplicationalBase, StripsTrivialPartsAndSorts) {
  const GroundSet g = GroundSet::letters(3);
  const ImplicationalBase base(g, {Implication(g.parse("ab"), g.parse("abc")),
                                   Implication(g.parse("a"), g.parse("a")),
                                   Implication(g.parse("c"), g.parse("b")),
                                   Implication(g.parse("c"), g.parse("b"))});
  ASSERT_EQ(base.size(), 2U);
  EXPECT_EQ(base.implications()[0], Implication(g.parse("c"), g.parse("b")));
  EXPECT_EQ(base.implications()[1].conclusion, g.parse("c"));
  EXPECT_EQ(base.render(), "c -> b\nab -> c\n");
}

TEST(ImplicationalBase, AggregatesAndSplits) {
  const GroundSet g = GroundSet::letters(4);
  const ImplicationalBase unit(g, {Implication(g.parse("ad"), g.parse("b")),
                                   Implication(g.parse("ad"), g.parse("c"))});
  const ImplicationalBase agg = unit.aggregated();
  ASSERT_EQ(agg.size(), 1U);
  EXPECT_EQ(agg.implications()[0], Implication(g.parse("ad"), g.parse("bc")));
  EXPECT_EQ(agg.unit(), unit);
  EXPECT_TRUE(ImplicationalBase(g, {}).aggregated().empty());
}

TEST(ImplicationalBase, ForwardChainingMatchesOracle) {
  const GroundSet g = GroundSet::letters(4);
  const ImplicationalBase base(g, {Implication(g.parse("ac"), g.parse("b")),
                                   Implication(g.parse("bd"), g.parse("c"))});
  EXPECT_EQ(base.closure(g.parse("ad")), g.parse("ad"));
  EXPECT_EQ(base.closure(g.parse("abd")), g.parse("abcd"));
  EXPECT_EQ(base.closure(g.full()), g.full());
  const std::vector<oracle::Rule> rules = oracle::rules_of(base);
  for (oracle::Mask x = 0; x < 16; ++x) {
    EXPECT_EQ(base.closure(ElementSet(x)).bits(), oracle::chain(rules, x));
  }
}

TEST(ImplicationalBase, OnePassStopsAfterOneSweep) {
  const GroundSet g = GroundSet::letters(3);
  // Stored order puts b -> a before c -> b, so one pass from c misses a.
  const ImplicationalBase base(g, {Implication(g.parse("c"), g.parse("b")),
                                   Implication(g.parse("b"), g.parse("a"))});
  EXPECT_EQ(base.one_pass(g.parse("c")), g.parse("bc"));
  EXPECT_EQ(base.closure(g.parse("c")), g.full());
}

TEST(Models, MatchBruteForceOnRandomBases) {
  std::mt19937 rng(11);
  for (int k = 0; k < 50; ++k) {
    const int n = 5;
    const GroundSet g = GroundSet::letters(n);
    std::vector<Implication> imps;
    for (int i = 0; i < 4; ++i) {
      imps.emplace_back(ElementSet(rng() & 31U), ElementSet(rng() & 31U));
    }
    const ImplicationalBase base(g, imps);
    std::vector<ElementSet> expected;
    for (oracle::Mask x = 0; x < 32; ++x) {
      if (oracle::chain(oracle::rules_of(base), x) == x) expected.push_back(ElementSet(x));
    }
    EXPECT_EQ(models(base), testing::sorted(expected));
  }
}

TEST(Holds, ChecksConclusionInsideClosure) {
  const ClosureSpace leaf = fixture("leaf.imp");
  EXPECT_TRUE(holds(leaf, Implication(set(leaf, "ad"), set(leaf, "bc"))));
  EXPECT_FALSE(holds(leaf, Implication(set(leaf, "ab"), set(leaf, "c"))));
}

}  // namespace
}  // namespace ebase
