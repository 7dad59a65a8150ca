#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sbal/euler.hpp"
#include "sbal/parallel.hpp"

using namespace sbal;

TEST(Euler, Table) {
  const auto t = euler_numbers(30);
  EXPECT_EQ(t(1), 1);
  EXPECT_EQ(t(6), 61);
  const std::vector<int> head{1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
  for (std::size_t n = 1; n <= head.size(); ++n) EXPECT_EQ(t(n), head[n - 1]);
  EXPECT_THROW(euler_numbers(0), std::invalid_argument);
}

TEST(Euler, MatchesOracles) {
  const auto t = euler_numbers(12);
  for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(t(n), oracle::alternating(n)) << n;
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(t(n), count_extensions(zigzag(n))) << n;
  EXPECT_EQ(euler_numbers(10)(10), count_extensions(zigzag(10)));
}

// 2 E_{n+1} = sum_k C(n, k) E_k E_{n-k} with E_0 = 1.
TEST(Euler, BinomialRecurrence) {
  const auto t = euler_numbers(31);
  auto e = [&](std::size_t k) { return k == 0 ? BigInt(1) : t(k); };
  for (std::size_t n = 1; n <= 30; ++n) {
    BigInt sum = 0;
    BigInt binom = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      sum += binom * e(k) * e(n - k);
      binom = binom * (n - k) / (k + 1);
    }
    ASSERT_EQ(2 * t(n + 1), sum) << n;
  }
}

TEST(Euler, Modular) {
  const auto t = euler_numbers(40);
  for (std::uint64_t q : {2, 3, 7, 1000000007}) {
    const auto m = euler_numbers_mod(40, q);
    for (std::size_t n = 1; n <= 40; ++n) ASSERT_EQ(BigInt(m[n - 1]), t(n) % q);
  }
}

TEST(Congruence, OddPrimes) {
  for (std::uint64_t q : {3, 5, 7, 11})
    for (std::size_t n = q + 1; n <= 30; ++n) EXPECT_TRUE(check_congruence(n, q)) << n << " " << q;
  EXPECT_TRUE(check_congruence(4, 3));
  for (std::uint64_t q : {3, 5, 7, 11, 13}) {
    const auto r = euler_numbers_mod(q, q)[q - 1];
    EXPECT_TRUE(r == 1 || r == q - 1) << q;
  }
}

TEST(Congruence, FailsAtTwo) {
  // E_3 = 2 is even while E_2 = 1, so E_3 != E_2 * E_2 (mod 2).
  EXPECT_FALSE(check_congruence(3, 2));
}

TEST(Congruence, Preconditions) {
  EXPECT_THROW(check_congruence(5, 4), std::invalid_argument);
  EXPECT_THROW(check_congruence(3, 3), std::invalid_argument);
}

TEST(Primes, List) {
  const std::vector<std::uint64_t> to250{3, 7, 11, 23, 83, 107, 163, 167, 179, 191, 199, 211, 227, 239};
  EXPECT_EQ(primes_never_dividing(250), to250);
  const auto scan = scan_primes_never_dividing(600);
  EXPECT_EQ(scan.primes.size(), 21u);
  EXPECT_EQ(scan.primes.back(), 599u);
  EXPECT_EQ(scan.spot_check_failures, std::vector<std::uint64_t>{2});
  EXPECT_EQ(std::count(scan.primes.begin(), scan.primes.end(), 5u), 0);
  EXPECT_THROW(primes_never_dividing(10001), ResourceLimit);
  EXPECT_EQ(primes_up_to(20), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19}));
}

TEST(Primes, ListedPrimesNeverDivide) {
  for (std::uint64_t q : primes_never_dividing(120)) {
    const auto m = euler_numbers_mod(6 * q, q);
    for (auto r : m) ASSERT_NE(r, 0u) << q;
  }
}

TEST(PrimeAvoiding, Examples) {
  for (const std::set<std::uint64_t>& qs :
       {std::set<std::uint64_t>{2}, {3}, {2, 3}, {3, 7, 11}, {2, 5, 13}}) {
    const auto r = prime_avoiding_poset(qs);
    EXPECT_GE(r.n, 2u);
    EXPECT_EQ(r.poset, zigzag(r.n));
    for (auto q : qs) EXPECT_EQ(count_mod(r.poset, q), 1u);
  }
  EXPECT_EQ(prime_avoiding_poset({2}).n, 2u);
  const auto later = prime_avoiding_poset({3}, 3);
  EXPECT_GE(later.n, 3u);
  EXPECT_EQ(count_mod(later.poset, 3), 1u);
  EXPECT_THROW(prime_avoiding_poset({4}), std::invalid_argument);
  EXPECT_THROW(prime_avoiding_poset({3}, 3, 4), ResourceLimit);
}

TEST(Parallel, DeterministicOrder) {
  auto f = [](std::size_t i) { return i * i; };
  EXPECT_EQ(parallel_map(100, 1, f), parallel_map(100, 4, f));
  EXPECT_TRUE(parallel_map(0, 4, f).empty());
  EXPECT_THROW(parallel_map(10, 3, [](std::size_t i) -> int {
                 if (i == 7) throw std::runtime_error("x");
                 return 0;
               }),
               std::runtime_error);
}
