#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sbal/enumerate.hpp"
#include "sbal/linext.hpp"

using namespace sbal;

namespace {

// A1 < B1 > A2 < B2 and A3 < B3, elements A1, B1, A2, B2, A3, B3 = 0..5.
Poset path_plus_cover() { return from_covers(6, {{0, 1}, {2, 1}, {2, 3}, {4, 5}}); }

LinearExtension bottom_top(const std::vector<std::size_t>& bottom, const std::vector<std::size_t>& top) {
  LinearExtension e;
  for (std::size_t i = 0; i < bottom.size(); ++i) {
    e.labels.push_back(bottom[i]);
    e.labels.push_back(top[i]);
  }
  return e;
}

}  // namespace

TEST(Count, Examples) {
  EXPECT_EQ(count_extensions(zigzag(6)), 61);
  EXPECT_EQ(count_extensions(Poset(0)), 1);
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(count_extensions(chain(n)), 1);
  EXPECT_EQ(count_extensions(antichain(12)), BigInt("479001600"));
  EXPECT_EQ(count_extensions(antichain(18)), BigInt("6402373705728000"));
}

TEST(Count, LargeAntichainHitsCap) { EXPECT_THROW(count_extensions(antichain(30), 1000), ResourceLimit); }

TEST(Count, AgreesWithOracle) {
  for (std::size_t n = 0; n <= 6; ++n)
    for (const Poset& p : poset_classes(n)) {
      const auto o = oracle::extensions(p);
      const auto sc = signed_count(p);
      ASSERT_EQ(sc.total, o.total);
      ASSERT_EQ(sc.signed_sum, o.plus - o.minus);
      ASSERT_EQ(sc.imbalance, o.imbalance());
      const auto b = brute_signed_count(p);
      ASSERT_EQ(b.total, o.total);
      ASSERT_EQ(b.signed_sum, o.plus - o.minus);
    }
}

TEST(Count, SignedExamples) {
  EXPECT_EQ(sign_imbalance(zigzag(6)), 1);
  EXPECT_EQ(sign_imbalance(antichain(2)), 0);
  const auto o = oracle::extensions(zigzag(6));
  EXPECT_EQ(std::max(o.plus, o.minus), 31);
  EXPECT_EQ(std::min(o.plus, o.minus), 30);
}

TEST(Count, Modular) {
  EXPECT_EQ(count_mod(zigzag(6), 2), 1u);
  EXPECT_EQ(count_mod(antichain(3), 3), 0u);
  EXPECT_EQ(count_mod(antichain(10), 1000003), 3628800u % 1000003);
  EXPECT_THROW(count_mod(chain(2), 1), std::invalid_argument);
  for (const Poset& p : poset_classes(5))
    for (std::uint64_t q : {2, 3, 7}) ASSERT_EQ(BigInt(count_mod(p, q)), count_extensions(p) % q);
}

TEST(Sign, Basics) {
  const Poset p = grid(2, 3);
  LinearExtension id;
  for (std::size_t i = 1; i <= 6; ++i) id.labels.push_back(i);
  EXPECT_EQ(sign(p, id), 1);
  // Elements 2 and 3 carry labels 3, 4 and are incomparable.
  LinearExtension sw = id;
  std::swap(sw.labels[2], sw.labels[3]);
  EXPECT_EQ(sign(p, sw), -1);
}

TEST(Sign, RejectsBadLabelings) {
  const Poset c = chain(3);
  EXPECT_THROW(sign(c, LinearExtension{{1, 2}}), InvalidExtension);
  EXPECT_THROW(sign(c, LinearExtension{{1, 1, 3}}), InvalidExtension);
  EXPECT_THROW(sign(c, LinearExtension{{0, 1, 2}}), InvalidExtension);
  EXPECT_THROW(sign(c, LinearExtension{{2, 1, 3}}), InvalidExtension);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_extensions(antichain(3)).size(), 6u);
  const auto c = enumerate_extensions(chain(4));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].labels, (std::vector<std::size_t>{1, 2, 3, 4}));
  const auto z = enumerate_extensions(zigzag(6));
  EXPECT_EQ(z.size(), 61u);
  EXPECT_TRUE(std::is_sorted(z.begin(), z.end()));
  EXPECT_THROW(enumerate_extensions(antichain(6), 100), ResourceLimit);
}

TEST(Enumerate, AtLeastK) {
  const Poset p = disjoint_union(chain(9), chain(1));
  EXPECT_TRUE(at_least_k(p, 10));
  EXPECT_FALSE(at_least_k(p, 11));
  EXPECT_EQ(count_up_to(antichain(10), 5), 5u);
  EXPECT_EQ(count_up_to(p, 0), 0u);
}

TEST(Phi, FigureInstance) {
  const Poset p = path_plus_cover();
  const auto l = bottom_top({4, 1, 3}, {5, 2, 6});
  const auto expected = bottom_top({3, 1, 4}, {5, 2, 6});
  EXPECT_EQ(phi(p, l), expected);
  EXPECT_EQ(phi(p, expected), l);
  EXPECT_EQ(sign(p, l), -sign(p, expected));
}

TEST(Phi, FixedPoints) {
  const auto c = enumerate_extensions(chain(5));
  EXPECT_TRUE(is_phi_fixed(chain(5), c[0]));
  EXPECT_TRUE(is_phi_fixed(path_plus_cover(), bottom_top({5, 1, 3}, {6, 2, 4})));
}

TEST(Phi, InvolutionOnZigzag) {
  const Poset z = zigzag(8);
  std::size_t fixed = 0;
  int fixed_sign = 0;
  for (const auto& e : enumerate_extensions(z)) {
    const auto f = phi(z, e);
    ASSERT_EQ(phi(z, f), e);
    if (f == e) {
      ++fixed;
      fixed_sign += sign(z, e);
    } else {
      ASSERT_EQ(sign(z, f), -sign(z, e));
    }
  }
  EXPECT_EQ(BigInt(std::abs(fixed_sign)), sign_imbalance(z));
  EXPECT_GE(fixed, 1u);
}
