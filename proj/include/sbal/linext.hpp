#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sbal/errors.hpp"
#include "sbal/poset.hpp"

namespace sbal {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultDownsetCap = std::size_t{1} << 24;
inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// labels[x] is the label in 1..n assigned to element x.
struct LinearExtension {
  std::vector<std::size_t> labels;

  std::size_t size() const noexcept { return labels.size(); }

  // order()[k] is the element carrying label k + 1.
  std::vector<Element> order() const {
    std::vector<Element> inv(labels.size());
    for (Element x = 0; x < labels.size(); ++x) inv[labels[x] - 1] = x;
    return inv;
  }

  static LinearExtension from_order(const std::vector<Element>& order) {
    LinearExtension e;
    e.labels.resize(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) e.labels[order[k]] = k + 1;
    return e;
  }

  friend auto operator<=>(const LinearExtension&, const LinearExtension&) = default;
};

// e(P) together with the signed sum; imbalance is si(P).
struct SignedCount {
  BigInt total;
  BigInt signed_sum;
  BigInt imbalance;
};

inline void check_extension(const Poset& p, const LinearExtension& ext) {
  const std::size_t n = p.size();
  if (ext.labels.size() != n) throw InvalidExtension("label array has the wrong length");
  std::vector<bool> used(n + 1, false);
  for (std::size_t l : ext.labels) {
    if (l < 1 || l > n || used[l]) throw InvalidExtension("labels are not a bijection onto 1..n");
    used[l] = true;
  }
  for (Element y = 0; y < n; ++y)
    for_each_bit(p.below(y), [&](Element x) {
      if (ext.labels[x] >= ext.labels[y])
        throw InvalidExtension("label of " + std::to_string(x) + " is not below label of " + std::to_string(y));
    });
}

// Parity of the inversion count of a sequence of distinct values.
inline int permutation_sign(const std::vector<std::size_t>& values) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] > values[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Sign relative to the identity reference labeling of element indices.
inline int sign(const Poset& p, const LinearExtension& ext) {
  check_extension(p, ext);
  return permutation_sign(ext.labels);
}

// ---------------------------------------------------------------------------
// Down-set dynamic programming

// Folds over the lattice of down-sets level by level. `step(acc, from, d, x)`
// accumulates the value of down-set d into d | {x}, where x is a minimal
// element of the complement of d. Returns the value at the full set.
template <class Value, class Step>
Value fold_downsets(const Poset& p, Value seed, Step&& step, std::size_t cap = kDefaultDownsetCap) {
  const std::size_t n = p.size();
  std::unordered_map<Mask, Value> current;
  current.emplace(Mask{0}, std::move(seed));
  std::size_t visited = 1;
  for (std::size_t level = 0; level < n; ++level) {
    std::unordered_map<Mask, Value> next;
    next.reserve(current.size() * 2);
    for (const auto& [d, value] : current) {
      Mask avail = 0;
      for (Element x = 0; x < n; ++x)
        if (!(d & bit(x)) && (p.below(x) & ~d) == 0) avail |= bit(x);
      for_each_bit(avail, [&](Element x) {
        auto [it, inserted] = next.try_emplace(d | bit(x));
        step(it->second, value, d, x);
      });
    }
    visited += next.size();
    if (visited > cap) throw ResourceLimit("down-set count exceeds cap of " + std::to_string(cap));
    current = std::move(next);
  }
  return std::move(current.begin()->second);
}

inline BigInt count_extensions(const Poset& p, std::size_t cap = kDefaultDownsetCap) {
  return fold_downsets<BigInt>(
      p, BigInt(1), [](BigInt& acc, const BigInt& from, Mask, Element) { acc += from; }, cap);
}

// Placing x on top of down-set d adds one inversion per element of d with a
// larger index than x, so the sign weight is (-1)^|{y in d : y > x}|.
inline SignedCount signed_count(const Poset& p, std::size_t cap = kDefaultDownsetCap) {
  struct Pair {
    BigInt total;
    BigInt signed_sum;
  };
  auto result = fold_downsets<Pair>(
      p, Pair{1, 1},
      [](Pair& acc, const Pair& from, Mask d, Element x) {
        acc.total += from.total;
        const Mask larger = d & ~low_bits(x + 1);
        if (std::popcount(larger) % 2 == 0)
          acc.signed_sum += from.signed_sum;
        else
          acc.signed_sum -= from.signed_sum;
      },
      cap);
  SignedCount sc;
  sc.total = std::move(result.total);
  sc.signed_sum = std::move(result.signed_sum);
  sc.imbalance = abs(sc.signed_sum);
  return sc;
}

inline BigInt sign_imbalance(const Poset& p, std::size_t cap = kDefaultDownsetCap) {
  return signed_count(p, cap).imbalance;
}

// e(P) mod q, computed in Z/q throughout.
inline std::uint64_t count_mod(const Poset& p, std::uint64_t q, std::size_t cap = kDefaultDownsetCap) {
  if (q < 2) throw std::invalid_argument("count_mod requires q >= 2");
  if (q > (std::uint64_t{1} << 62)) throw std::invalid_argument("count_mod modulus too large");
  return fold_downsets<std::uint64_t>(
      p, std::uint64_t{1} % q,
      [q](std::uint64_t& acc, const std::uint64_t& from, Mask, Element) { acc = (acc + from) % q; }, cap);
}

// ---------------------------------------------------------------------------
// Enumeration

// Calls visit(order) for every linear extension, where order[k] is the element
// labeled k + 1. Stops as soon as visit returns false. Elements are tried in
// increasing index order at every step.
template <class Visit>
void for_each_extension(const Poset& p, Visit&& visit) {
  const std::size_t n = p.size();
  std::vector<Element> order;
  order.reserve(n);
  bool go = true;
  auto rec = [&](auto&& self, Mask placed) -> void {
    if (order.size() == n) {
      go = visit(static_cast<const std::vector<Element>&>(order));
      return;
    }
    for (Element x = 0; x < n && go; ++x) {
      if ((placed & bit(x)) || (p.below(x) & ~placed) != 0) continue;
      order.push_back(x);
      self(self, placed | bit(x));
      order.pop_back();
    }
  };
  rec(rec, 0);
}

// All linear extensions, sorted lexicographically by label array.
inline std::vector<LinearExtension> enumerate_extensions(const Poset& p, std::size_t cap = kDefaultEnumerationCap) {
  std::vector<LinearExtension> out;
  bool over = false;
  for_each_extension(p, [&](const std::vector<Element>& order) {
    if (out.size() >= cap) {
      over = true;
      return false;
    }
    out.push_back(LinearExtension::from_order(order));
    return true;
  });
  if (over) throw ResourceLimit("extension count exceeds cap of " + std::to_string(cap));
  std::sort(out.begin(), out.end());
  return out;
}

// Signed count by direct enumeration; the reference the DP is checked against.
inline SignedCount brute_signed_count(const Poset& p, std::size_t cap = kDefaultEnumerationCap) {
  std::int64_t total = 0;
  std::int64_t signed_sum = 0;
  const std::size_t n = p.size();
  std::vector<std::size_t> labels(n);
  bool over = false;
  for_each_extension(p, [&](const std::vector<Element>& order) {
    if (static_cast<std::size_t>(total) >= cap) {
      over = true;
      return false;
    }
    for (std::size_t k = 0; k < n; ++k) labels[order[k]] = k + 1;
    ++total;
    signed_sum += permutation_sign(labels);
    return true;
  });
  if (over) throw ResourceLimit("extension count exceeds cap of " + std::to_string(cap));
  SignedCount sc;
  sc.total = total;
  sc.signed_sum = signed_sum;
  sc.imbalance = signed_sum < 0 ? -signed_sum : signed_sum;
  return sc;
}

// min(e(P), k), visiting at most k extensions.
inline std::size_t count_up_to(const Poset& p, std::size_t k) {
  std::size_t found = 0;
  if (k == 0) return 0;
  for_each_extension(p, [&](const std::vector<Element>&) { return ++found < k; });
  return found;
}

inline bool at_least_k(const Poset& p, std::size_t k) { return count_up_to(p, k) >= k; }

// ---------------------------------------------------------------------------
// The involution: swap labels j, j + 1 for the least odd j whose two elements
// are incomparable; extensions with no such j are fixed.
inline LinearExtension phi(const Poset& p, const LinearExtension& ext) {
  check_extension(p, ext);
  const auto order = ext.order();
  LinearExtension out = ext;
  for (std::size_t j = 1; j + 1 <= p.size(); j += 2) {
    const Element a = order[j - 1];
    const Element b = order[j];
    if (!p.comparable(a, b)) {
      std::swap(out.labels[a], out.labels[b]);
      break;
    }
  }
  return out;
}

inline bool is_phi_fixed(const Poset& p, const LinearExtension& ext) { return phi(p, ext) == ext; }

}  // namespace sbal
