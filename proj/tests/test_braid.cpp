#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "legch/braid.hpp"
#include "support/oracles.hpp"

using namespace legch;

TEST(Permutation, CyclesStartAtTheirSmallestElement) {
  const Permutation sigma({3, 1, 2, 5, 4, 6});
  const auto cycles = sigma.cycles();
  ASSERT_EQ(cycles.size(), 3u);
  EXPECT_EQ(cycles[0], (std::vector<int>{1, 3, 2}));
  EXPECT_EQ(cycles[1], (std::vector<int>{4, 5}));
  EXPECT_EQ(cycles[2], (std::vector<int>{6}));
  EXPECT_EQ(sigma.inverse(3), 1);
  EXPECT_FALSE(sigma.is_identity());
  EXPECT_TRUE(Permutation::identity(4).is_identity());
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1}), Error);
  EXPECT_THROW(Permutation({0, 1}), Error);
}

TEST(Braid, ParsingAndValidation) {
  const BraidWord b = parse_braid(3, "1, 2,1");
  EXPECT_EQ(b.length(), 3);
  EXPECT_EQ(b.to_string(), "1,2,1");
  EXPECT_EQ(parse_braid(1, "").length(), 0);
  EXPECT_THROW(parse_braid(2, "3"), Error);
  EXPECT_THROW(parse_braid(2, "0"), Error);
  EXPECT_THROW(parse_braid(2, "1,x"), Error);
  EXPECT_THROW(parse_braid(0, ""), Error);
}

TEST(Braid, TorusWordShape) {
  const BraidWord b = torus_braid(3, 4);
  EXPECT_EQ(b.strands(), 4);
  EXPECT_EQ(b.to_string(), "1,2,3,1,2,3,1,2,3");
  ASSERT_TRUE(b.torus().has_value());
  EXPECT_EQ(*b.torus(), (TorusShape{3, 4}));
  EXPECT_EQ(torus_gen(TorusShape{3, 4}, 2, 3), (GenId{7}));
}

TEST(Braid, TrefoilLabels) {
  const CrossingTable t = label_crossings(torus_braid(3, 2));
  ASSERT_EQ(t.crossings().size(), 3u);
  EXPECT_EQ(to_string(t.at_position(1).label), "(1,1,1)");
  EXPECT_EQ(to_string(t.at_position(2).label), "(2,2,1)");
  EXPECT_EQ(to_string(t.at_position(3).label), "(1,1,2)");
  EXPECT_EQ(to_string(*t.at_position(3).torus), "b[1,3]");
  const Alphabet names = t.alphabet();
  EXPECT_EQ(names.resolve("b[1,2]"), names.resolve("(2,2,1)"));
}

TEST(Braid, LabelsAreUniqueAndConsistentWithThePermutation) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord b = oracle::random_braid(rng, 6, 16);
    const CrossingTable t = label_crossings(b);
    std::set<Label> seen;
    for (const Crossing& c : t.crossings()) {
      ASSERT_TRUE(seen.insert(c.label).second);
      ASSERT_GE(c.label.t, 1);
      const auto same = t.with_pair(c.label.i, c.label.j);
      ASSERT_GE(static_cast<int>(same.size()), c.label.t);
      ASSERT_EQ(same[c.label.t - 1].position, c.position);
      ASSERT_EQ(t.find(c.label)->id, c.id);
    }
  }
}

TEST(Braid, ConjugateShiftCarriesIdentities) {
  const BraidWord b = torus_braid(2, 3);
  const BraidWord s = conjugate_shift(b);
  EXPECT_EQ(s.to_string(), "2,1,2,1");
  EXPECT_EQ(s.id_at(4), b.id_at(1));
  EXPECT_EQ(s.position_of(b.id_at(2)), 1);
  EXPECT_FALSE(s.torus().has_value());
  BraidWord r = b;
  for (int k = 0; k < b.length(); ++k) r = conjugate_shift(r);
  EXPECT_EQ(r.letters().size(), b.letters().size());
  EXPECT_TRUE(std::equal(r.letters().begin(), r.letters().end(), b.letters().begin()));
  EXPECT_TRUE(std::equal(r.ids().begin(), r.ids().end(), b.ids().begin()));
}

TEST(Braid, TorusPermutationIsAQCycleWhenCoprime) {
  for (int p = 1; p <= 8; ++p) {
    for (int q = 2; q <= 8; ++q) {
      const auto cycles = underlying_permutation(torus_braid(p, q)).cycles();
      EXPECT_EQ(static_cast<int>(cycles.size()), std::gcd(p, q)) << p << "," << q;
    }
  }
}

TEST(Invariants, TorusKnotsAndUnknot) {
  for (int p = 2; p <= 12; ++p) {
    for (int q = 2; q <= 12; ++q) {
      const ClosureInvariants inv = closure_invariants(torus_braid(p, q));
      EXPECT_EQ(inv.tb, p * q - p - q);
      EXPECT_EQ(inv.rotation, 0);
      for (int mu : inv.maslov) EXPECT_EQ(mu, 0);
    }
  }
  EXPECT_EQ(closure_invariants(parse_braid(1, "")).tb, -1);
}
