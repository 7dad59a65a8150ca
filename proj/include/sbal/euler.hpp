#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbal/errors.hpp"
#include "sbal/h2.hpp"
#include "sbal/linext.hpp"
#include "sbal/parallel.hpp"
#include "sbal/poset.hpp"

namespace sbal {

// E_1..E_N. Indexing starts at 1; E_n = e(zigzag(n)).
class EulerTable {
 public:
  explicit EulerTable(std::vector<BigInt> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  const BigInt& operator()(std::size_t n) const { return values_.at(n - 1); }
  const std::vector<BigInt>& values() const noexcept { return values_; }

 private:
  std::vector<BigInt> values_;
};

// Boustrophedon (Seidel-Entringer) triangle: row 0 is the seed {1};
// row n has T(n, 0) = 0 and T(n, k) = T(n, k - 1) + T(n - 1, n - k);
// E_n = T(n, n).
template <class T, class Reduce>
std::vector<T> boustrophedon(std::size_t n_max, Reduce&& reduce) {
  std::vector<T> out;
  out.reserve(n_max);
  std::vector<T> row{T(1)};
  std::vector<T> next;
  for (std::size_t n = 1; n <= n_max; ++n) {
    next.assign(n + 1, T(0));
    for (std::size_t k = 1; k <= n; ++k) next[k] = reduce(next[k - 1] + row[n - k]);
    row.swap(next);
    out.push_back(row[n]);
  }
  return out;
}

inline EulerTable euler_numbers(std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("euler_numbers requires N >= 1");
  return EulerTable(boustrophedon<BigInt>(n_max, [](BigInt v) { return v; }));
}

// E_1..E_N mod q; result[n - 1] = E_n mod q.
inline std::vector<std::uint64_t> euler_numbers_mod(std::size_t n_max, std::uint64_t q) {
  if (q < 2 || q > (std::uint64_t{1} << 62)) throw std::invalid_argument("modulus out of range");
  return boustrophedon<std::uint64_t>(n_max, [q](std::uint64_t v) { return v % q; });
}

// E_n == E_q * E_{n-(q-1)} (mod q) for prime q and n > q.
inline bool check_congruence(std::size_t n, std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("check_congruence requires a prime q");
  if (n <= q) throw std::invalid_argument("check_congruence requires n > q");
  const auto e = euler_numbers_mod(n, q);
  const std::uint64_t lhs = e[n - 1];
  const std::uint64_t rhs = (e[q - 1] * e[n - q]) % q;
  return lhs == rhs;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

inline constexpr std::uint64_t kMaxPrimeBound = 10'000;

struct PrimeScan {
  std::vector<std::uint64_t> primes;            // q with q never dividing E_n
  std::vector<std::uint64_t> spot_check_failures;  // passed n <= q but some E_n, q < n <= 3q, is divisible
};

// A prime q is reported when q does not divide E_1..E_q; combined with the
// congruence and E_q = +-1 (mod q) that covers every n. Each candidate is
// also checked directly up to n = 3q, and candidates failing that check are
// listed separately rather than reported.
inline PrimeScan scan_primes_never_dividing(std::uint64_t bound, std::size_t threads = 1) {
  if (bound > kMaxPrimeBound) throw ResourceLimit("prime bound is limited to 10000");
  const auto candidates = primes_up_to(bound);
  // 0: reported; otherwise the first n with q | E_n.
  const auto first_zero = parallel_map(candidates.size(), threads, [&](std::size_t i) -> std::size_t {
    const std::uint64_t q = candidates[i];
    std::vector<std::uint64_t> row{1 % q};
    std::vector<std::uint64_t> next;
    for (std::size_t n = 1; n <= 3 * q; ++n) {
      next.assign(n + 1, 0);
      for (std::size_t k = 1; k <= n; ++k) next[k] = (next[k - 1] + row[n - k]) % q;
      row.swap(next);
      if (row[n] == 0) return n;
    }
    return 0;
  });
  PrimeScan scan;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (first_zero[i] == 0)
      scan.primes.push_back(candidates[i]);
    else if (first_zero[i] > candidates[i])
      scan.spot_check_failures.push_back(candidates[i]);
  }
  return scan;
}

inline std::vector<std::uint64_t> primes_never_dividing(std::uint64_t bound, std::size_t threads = 1) {
  return scan_primes_never_dividing(bound, threads).primes;
}

struct PrimeAvoidingPoset {
  std::size_t n = 0;
  Poset poset;  // zigzag(n)
};

// The least n >= min_n with e(zigzag(n)) = E_n == 1 (mod q) for every q in
// primes, re-verified by the down-set DP in Z/q.
inline PrimeAvoidingPoset prime_avoiding_poset(const std::set<std::uint64_t>& primes, std::size_t min_n = 2,
                                               std::size_t max_n = 40, std::size_t cap = kDefaultDownsetCap) {
  for (std::uint64_t q : primes)
    if (!is_prime(q)) throw std::invalid_argument("prime_avoiding_poset requires primes");
  if (max_n > kMaxElements) max_n = kMaxElements;
  const EulerTable table = euler_numbers(std::max<std::size_t>(max_n, 1));
  for (std::size_t n = std::max<std::size_t>(min_n, 1); n <= max_n; ++n) {
    bool ok = true;
    for (std::uint64_t q : primes) ok = ok && table(n) % q == 1 % q;
    if (!ok) continue;
    Poset z = zigzag(n);
    for (std::uint64_t q : primes)
      if (count_mod(z, q, cap) != 1 % q)
        throw VerificationError("zigzag(" + std::to_string(n) + ") failed the count_mod re-check");
    return {n, std::move(z)};
  }
  throw ResourceLimit("no qualifying zigzag poset with n <= " + std::to_string(max_n));
}

}  // namespace sbal
