#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sbal/canonical.hpp"
#include "sbal/enumerate.hpp"
#include "sbal/h2.hpp"

using namespace sbal;

namespace {

// Bottoms 0..2, tops 3..5.
Poset left_six() { return from_covers(6, {{0, 3}, {0, 4}, {1, 4}, {2, 5}}); }
Poset middle_six() { return from_covers(6, {{0, 3}, {1, 4}, {2, 5}, {0, 4}, {1, 5}}); }
Poset right_six() { return from_covers(6, {{0, 3}, {1, 4}, {2, 5}, {0, 4}, {0, 5}, {1, 5}}); }
Poset no_tableau() { return from_covers(6, {{0, 3}, {1, 3}, {0, 4}, {1, 4}, {2, 5}}); }

}  // namespace

TEST(Lift, Examples) {
  EXPECT_EQ(build_A(GoodSet::minimal(chain(1))), chain(2));
  const Poset two_one = disjoint_union(chain(2), chain(1));
  EXPECT_EQ(enumerate_good_sets(two_one).size(), 1u);
  EXPECT_EQ(build_A(GoodSet::minimal(two_one)), left_six());
  EXPECT_EQ(count_extensions(left_six()), 75);
  EXPECT_EQ(build_A(GoodSet::minimal(chain(3))), middle_six());
  EXPECT_EQ(build_A(GoodSet::maximal(chain(3))), right_six());
  EXPECT_EQ(count_extensions(middle_six()), 61);
  EXPECT_EQ(count_extensions(right_six()), 57);
  EXPECT_TRUE(is_isomorphic(middle_six(), zigzag(6)));
}

TEST(Lift, GoodSetCounts) {
  EXPECT_EQ(enumerate_good_sets(chain(3)).size(), 2u);
  EXPECT_EQ(enumerate_good_sets(chain(4)).size(), 8u);
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(enumerate_good_sets(antichain(n)).size(), 1u);
}

TEST(Lift, BadGoodSets) {
  const Poset c = chain(3);
  EXPECT_THROW(GoodSet(c, {bit(1), bit(1) | bit(2), bit(2)}), BadGoodSet);
  EXPECT_THROW(GoodSet(c, {bit(0), bit(1) | bit(2), bit(2)}), BadGoodSet);
  EXPECT_THROW(GoodSet(c, {bit(0) | bit(1), bit(1) | bit(2), bit(2) | bit(0)}), BadGoodSet);
  EXPECT_THROW(GoodSet(c, {bit(0) | bit(1)}), BadGoodSet);
  const std::vector<Relation> outside{{2, 0}};
  EXPECT_THROW(GoodSet::with_pairs(c, outside), BadGoodSet);
  const std::vector<Relation> range{{0, 9}};
  EXPECT_THROW(GoodSet::with_pairs(c, range), BadGoodSet);
  EXPECT_NO_THROW(GoodSet(c, {bit(0) | bit(1) | bit(2), bit(1) | bit(2), bit(2)}));
}

TEST(Lift, ImbalanceEqualsBaseCount) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const Poset& p : poset_classes(n))
      for (const GoodSet& r : enumerate_good_sets(p)) {
        const Poset a = build_A(r);
        ASSERT_EQ(BigInt(oracle::extensions(a).imbalance()), count_extensions(p));
      }
}

TEST(Decompose, Examples) {
  const auto d = decompose(left_six());
  EXPECT_EQ(d.kind, H2Kind::Lift);
  ASSERT_TRUE(d.lift.has_value());
  EXPECT_TRUE(is_isomorphic(d.lift->base(), disjoint_union(chain(2), chain(1))));
  EXPECT_EQ(d.rebuild(), left_six());
  EXPECT_EQ(decompose(no_tableau()).kind, H2Kind::SignBalanced);
  EXPECT_EQ(decompose(antichain(2)).kind, H2Kind::SignBalanced);
  EXPECT_EQ(decompose(antichain(3)).kind, H2Kind::SignBalanced);
  EXPECT_THROW(decompose(chain(3)), HeightExceeded);
  const auto odd = decompose(disjoint_union(zigzag(6), chain(1)));
  EXPECT_EQ(odd.kind, H2Kind::LiftPlusIsolated);
  EXPECT_EQ(odd.isolated, Element{6});
  EXPECT_EQ(odd.rebuild(), disjoint_union(zigzag(6), chain(1)));
  EXPECT_THROW(H2Decomposition{}.rebuild(), VerificationError);
}

TEST(Decompose, SignBalancedIsCorrect) {
  for (std::size_t n = 0; n <= 7; ++n)
    for (const Poset& q : height_two_classes(n)) {
      const auto d = decompose(q);
      const auto o = oracle::extensions(q);
      if (d.kind == H2Kind::SignBalanced) {
        ASSERT_EQ(o.imbalance(), 0);
      } else {
        ASSERT_EQ(d.rebuild(), q);
        ASSERT_EQ(BigInt(o.imbalance()), count_extensions(d.lift->base()));
      }
    }
}

TEST(H2sb, Examples) {
  // si of a lift is e of its base: 1 for the chain.
  EXPECT_TRUE(h2sb_decide(middle_six(), 1));
  EXPECT_FALSE(h2sb_decide(middle_six(), 2));
  EXPECT_TRUE(h2sb_decide(left_six(), 3));
  EXPECT_FALSE(h2sb_decide(left_six(), 4));
  EXPECT_FALSE(h2sb_decide(no_tableau(), 1));
  EXPECT_TRUE(h2sb_decide(no_tableau(), 0));
  EXPECT_THROW(h2sb_decide(chain(3), 1), HeightExceeded);
  const auto r = h2sb_evaluate(build_A(GoodSet::minimal(antichain(6))), 5);
  EXPECT_TRUE(r.at_least);
  EXPECT_EQ(r.enumerated, 5u);
}

TEST(F, Counts) {
  auto f6 = count_f(6);
  EXPECT_EQ(f6.formula, 3);
  EXPECT_EQ(f6.direct, 3);
  EXPECT_EQ(f6.witnesses.size(), 3u);
  EXPECT_EQ(count_f(7).direct, 3);
  const auto f8 = count_f(8);
  EXPECT_EQ(f8.formula, f8.direct);
  EXPECT_GT(f8.direct, 8);
  EXPECT_LT(f8.direct, 64);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(count_f(2 * n + 1).direct, count_f(2 * n).direct);
  EXPECT_THROW(count_f(12), ResourceLimit);
}

TEST(F, ModQ) {
  EXPECT_EQ(count_f_q(6, 2), 3u);
  for (std::uint64_t q : {3, 5, 7}) EXPECT_EQ(count_f_q(2, q), 2u);
  for (std::size_t m = 0; m <= 6; ++m) EXPECT_LE(count_f_q(m, 3), height_two_classes(m).size());
  EXPECT_THROW(count_f_q(4, 4), std::invalid_argument);
}

TEST(Bounds, SmallSizes) {
  const auto b1 = odd_e_bounds(1);
  EXPECT_EQ(b1.values, std::vector<BigInt>{1});
  EXPECT_EQ(b1.lower, 1);
  EXPECT_EQ(b1.upper, 1);
  const auto b2 = odd_e_bounds(2);
  EXPECT_EQ(b2.lower, 4);
  EXPECT_EQ(b2.upper, 6);
  EXPECT_EQ(b2.values, std::vector<BigInt>{5});
  const auto b3 = odd_e_bounds(3);
  EXPECT_EQ(b3.lower, 36);
  EXPECT_EQ(b3.upper, 90);
  EXPECT_EQ(b3.values, (std::vector<BigInt>{57, 61, 75}));
}

TEST(Divisibility, FiveVertices) {
  const auto r = odd_e_divisibility(5);
  EXPECT_GT(r.odd_classes, 0u);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_TRUE(odd_e_divisibility(7).violations.empty());
}

TEST(Spectrum, Values) {
  const auto s = spectrum(6);
  EXPECT_TRUE(s.witnesses.contains(1));
  EXPECT_TRUE(s.witnesses.contains(2));
  ASSERT_TRUE(s.witnesses.contains(61));
  EXPECT_TRUE(is_isomorphic(s.witnesses.at(61), middle_six()));
  for (const auto& [e, w] : s.witnesses) EXPECT_EQ(count_extensions(w), e);
  for (const auto& g : s.gaps) EXPECT_FALSE(s.witnesses.contains(g));
}

TEST(Primes, IsPrime) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(599));
  EXPECT_FALSE(is_prime(601 * 7));
}
