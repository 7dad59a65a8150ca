#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "sbal/acceptance.hpp"
#include "sbal/canonical.hpp"
#include "sbal/domino.hpp"
#include "sbal/enumerate.hpp"

using namespace sbal;

namespace {

Poset shuffled(const Poset& p, std::mt19937& rng) {
  std::vector<Element> perm(p.size());
  std::iota(perm.begin(), perm.end(), Element{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return p.relabeled(perm);
}

}  // namespace

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(11);
  for (std::size_t n = 0; n <= 6; ++n)
    for (const Poset& p : poset_classes(n))
      for (int t = 0; t < 3; ++t) ASSERT_EQ(canonical_form(shuffled(p, rng)), canonical_form(p));
  const Poset g = grid(4, 4);
  EXPECT_EQ(canonical_form(shuffled(g, rng)), canonical_form(g));
}

TEST(Canonical, LabelingProducesCanonicalPoset) {
  std::mt19937 rng(3);
  const Poset z = zigzag(7);
  const Poset a = canonical_poset(z);
  const Poset b = canonical_poset(shuffled(z, rng));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(oracle::isomorphic(a, z));
}

TEST(Canonical, AgreesWithOracle) {
  std::mt19937 rng(5);
  const auto& five = poset_classes(5);
  for (std::size_t i = 0; i < five.size(); i += 3)
    for (std::size_t j = 0; j < five.size(); j += 5)
      ASSERT_EQ(is_isomorphic(five[i], five[j]), oracle::isomorphic(five[i], five[j]));
  for (const Poset& p : five) ASSERT_TRUE(is_isomorphic(p, shuffled(p, rng)));
}

TEST(Canonical, Examples) {
  const std::vector<Element> perm{2, 0, 1};
  EXPECT_TRUE(is_isomorphic(chain(3), chain(3).relabeled(perm)));
  EXPECT_FALSE(is_isomorphic(zigzag(4), chain(4)));
  EXPECT_FALSE(is_isomorphic(chain(2), chain(3)));
  const Poset crown = acceptance::eight_cycle();
  const auto tabs = enumerate_tableaux(crown);
  ASSERT_EQ(tabs.size(), 2u);
  EXPECT_FALSE(is_isomorphic(quotient(crown, tabs[0]), quotient(crown, tabs[1])));
}

TEST(Enumerate, ClassCounts) {
  const std::vector<std::size_t> all{1, 1, 2, 5, 16, 63, 318, 2045};
  for (std::size_t n = 0; n < all.size(); ++n) EXPECT_EQ(poset_classes(n).size(), all[n]) << n;
  const std::vector<std::size_t> h2{1, 1, 2, 4, 9, 21, 56, 164, 557};
  for (std::size_t n = 0; n < h2.size(); ++n) EXPECT_EQ(height_two_classes(n).size(), h2[n]) << n;
}

TEST(Enumerate, ClassesArePairwiseDistinct) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto& cls = poset_classes(n);
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j) ASSERT_FALSE(oracle::isomorphic(cls[i], cls[j]));
  }
}

TEST(Enumerate, FilterAndLimits) {
  const auto h2 = enumerate_posets(4, [](const Poset& p) { return height(p) <= 2; });
  EXPECT_EQ(h2.size(), height_two_classes(4).size());
  for (const auto& p : h2) EXPECT_LE(height(p), 2u);
  EXPECT_EQ(enumerate_posets(0).size(), 1u);
  EXPECT_THROW(poset_classes(kMaxEnumerationSize + 1), ResourceLimit);
  EXPECT_THROW(height_two_classes(kMaxHeightTwoEnumerationSize + 1), ResourceLimit);
}
