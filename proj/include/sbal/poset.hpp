#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sbal/errors.hpp"

namespace sbal {

// Subsets of a poset's ground set are bitmasks; element i is bit i.
using Mask = std::uint64_t;
using Element = std::size_t;
using Relation = std::pair<Element, Element>;

inline constexpr std::size_t kMaxElements = 64;

constexpr Mask bit(Element i) noexcept { return Mask{1} << i; }

constexpr Mask low_bits(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

template <class F>
constexpr void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<Element>(std::countr_zero(m)));
    m &= m - 1;
  }
}

// A finite strict partial order on 0..n-1, stored transitively closed.
// Instances are immutable once built; cover relations are derived eagerly.
class Poset {
 public:
  Poset() = default;

  // The antichain on n elements.
  explicit Poset(std::size_t n) : n_(n), below_(n, 0) {
    if (n > kMaxElements) throw ResourceLimit("posets are limited to 64 elements");
    finalize();
  }

  // Transitive closure of an arbitrary acyclic relation. Throws CycleError
  // when the relation (or its closure) is not antisymmetric.
  static Poset from_relations(std::size_t n, std::span<const Relation> pairs) {
    Poset p(n);
    for (auto [u, v] : pairs) {
      if (u >= n || v >= n) throw ParseError("relation references an element outside 0..n-1");
      if (u == v) throw CycleError("relation contains a loop at element " + std::to_string(u));
      p.below_[v] |= bit(u);
    }
    // Warshall on bit rows: below[i] gains below[k] whenever k < i.
    for (Element k = 0; k < n; ++k)
      for (Element i = 0; i < n; ++i)
        if (p.below_[i] & bit(k)) p.below_[i] |= p.below_[k];
    for (Element i = 0; i < n; ++i)
      if (p.below_[i] & bit(i)) throw CycleError("relation has a directed cycle through element " + std::to_string(i));
    p.finalize();
    return p;
  }

  // Builds directly from closed down-set rows; the caller guarantees closure.
  static Poset from_closed_rows(std::vector<Mask> below) {
    if (below.size() > kMaxElements) throw ResourceLimit("posets are limited to 64 elements");
    Poset p;
    p.n_ = below.size();
    p.below_ = std::move(below);
    p.finalize();
    return p;
  }

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }
  Mask all() const noexcept { return low_bits(n_); }

  bool less(Element i, Element j) const noexcept { return (below_[j] >> i) & 1U; }
  bool leq(Element i, Element j) const noexcept { return i == j || less(i, j); }
  bool comparable(Element i, Element j) const noexcept { return less(i, j) || less(j, i); }

  Mask below(Element i) const noexcept { return below_[i]; }
  Mask above(Element i) const noexcept { return above_[i]; }
  Mask lower_covers(Element i) const noexcept { return lower_covers_[i]; }
  Mask upper_covers(Element i) const noexcept { return upper_covers_[i]; }

  // True iff j covers i.
  bool is_cover(Element i, Element j) const noexcept { return (lower_covers_[j] >> i) & 1U; }
  bool is_minimal(Element i) const noexcept { return below_[i] == 0; }
  bool is_maximal(Element i) const noexcept { return above_[i] == 0; }
  bool is_isolated(Element i) const noexcept { return below_[i] == 0 && above_[i] == 0; }

  Mask minimal_elements() const noexcept {
    Mask m = 0;
    for (Element i = 0; i < n_; ++i)
      if (is_minimal(i)) m |= bit(i);
    return m;
  }
  Mask maximal_elements() const noexcept {
    Mask m = 0;
    for (Element i = 0; i < n_; ++i)
      if (is_maximal(i)) m |= bit(i);
    return m;
  }

  // All strict comparable pairs (u, v) with u < v in the order, lexicographic.
  std::vector<Relation> relations() const {
    std::vector<Relation> out;
    for (Element u = 0; u < n_; ++u)
      for_each_bit(above_[u], [&](Element v) { out.emplace_back(u, v); });
    return out;
  }

  // Cover pairs (u, v), v covers u, lexicographic.
  std::vector<Relation> covers() const {
    std::vector<Relation> out;
    for (Element u = 0; u < n_; ++u)
      for_each_bit(upper_covers_[u], [&](Element v) { out.emplace_back(u, v); });
    return out;
  }

  // Induced subposet on `subset`, elements renumbered in increasing index order.
  Poset induced(Mask subset) const {
    std::vector<Element> keep;
    for_each_bit(subset & all(), [&](Element i) { keep.push_back(i); });
    std::vector<Mask> rows(keep.size(), 0);
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = 0; b < keep.size(); ++b)
        if (less(keep[b], keep[a])) rows[a] |= bit(b);
    return from_closed_rows(std::move(rows));
  }

  // Element i of *this becomes element perm[i] of the result.
  Poset relabeled(std::span<const Element> perm) const {
    std::vector<Mask> rows(n_, 0);
    for (Element i = 0; i < n_; ++i)
      for_each_bit(below_[i], [&](Element j) { rows[perm[i]] |= bit(perm[j]); });
    return from_closed_rows(std::move(rows));
  }

  Poset dual() const { return from_closed_rows(above_); }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.below_ == b.below_;
  }

 private:
  void finalize() {
    above_.assign(n_, 0);
    lower_covers_.assign(n_, 0);
    upper_covers_.assign(n_, 0);
    for (Element j = 0; j < n_; ++j)
      for_each_bit(below_[j], [&](Element i) { above_[i] |= bit(j); });
    for (Element j = 0; j < n_; ++j) {
      Mask indirect = 0;
      for_each_bit(below_[j], [&](Element i) { indirect |= below_[i]; });
      lower_covers_[j] = below_[j] & ~indirect;
      for_each_bit(lower_covers_[j], [&](Element i) { upper_covers_[i] |= bit(j); });
    }
  }

  std::size_t n_ = 0;
  std::vector<Mask> below_;
  std::vector<Mask> above_;
  std::vector<Mask> lower_covers_;
  std::vector<Mask> upper_covers_;
};

inline Poset from_covers(std::size_t n, std::span<const Relation> pairs) {
  return Poset::from_relations(n, pairs);
}

inline Poset from_covers(std::size_t n, std::initializer_list<Relation> pairs) {
  return Poset::from_relations(n, std::span<const Relation>(pairs.begin(), pairs.size()));
}

// ---------------------------------------------------------------------------
// Named families

inline Poset antichain(std::size_t n) { return Poset(n); }

inline Poset chain(std::size_t n) {
  std::vector<Mask> rows(n);
  for (Element i = 0; i < n; ++i) rows[i] = low_bits(i);
  return Poset::from_closed_rows(std::move(rows));
}

// Fence x0 < x1 > x2 < x3 > ... indexed along the fence.
inline Poset zigzag(std::size_t n) {
  std::vector<Relation> pairs;
  for (Element i = 1; i < n; i += 2) {
    pairs.emplace_back(i - 1, i);
    if (i + 1 < n) pairs.emplace_back(i + 1, i);
  }
  return Poset::from_relations(n, pairs);
}

// C_m x C_n with (i, j) at index i * n + j.
inline Poset grid(std::size_t m, std::size_t n) {
  if (m * n > kMaxElements) throw ResourceLimit("grid exceeds 64 elements");
  std::vector<Mask> rows(m * n, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a <= i; ++a)
        for (std::size_t b = 0; b <= j; ++b)
          if (a != i || b != j) rows[i * n + j] |= bit(a * n + b);
  return Poset::from_closed_rows(std::move(rows));
}

// P below Q: every element of P is less than every element of Q.
inline Poset ordinal_sum(const Poset& p, const Poset& q) {
  const std::size_t np = p.size();
  if (np + q.size() > kMaxElements) throw ResourceLimit("ordinal sum exceeds 64 elements");
  std::vector<Mask> rows;
  rows.reserve(np + q.size());
  for (Element i = 0; i < np; ++i) rows.push_back(p.below(i));
  for (Element i = 0; i < q.size(); ++i) rows.push_back((q.below(i) << np) | p.all());
  return Poset::from_closed_rows(std::move(rows));
}

inline Poset disjoint_union(const Poset& p, const Poset& q) {
  const std::size_t np = p.size();
  if (np + q.size() > kMaxElements) throw ResourceLimit("disjoint union exceeds 64 elements");
  std::vector<Mask> rows;
  rows.reserve(np + q.size());
  for (Element i = 0; i < np; ++i) rows.push_back(p.below(i));
  for (Element i = 0; i < q.size(); ++i) rows.push_back(q.below(i) << np);
  return Poset::from_closed_rows(std::move(rows));
}

// ---------------------------------------------------------------------------
// Structure

struct PosetStats {
  std::size_t height = 0;      // cardinality of a longest chain
  std::size_t relations = 0;   // re: comparable pairs
  std::size_t covers = 0;      // cr: Hasse edges
  std::size_t components = 0;  // connected components of the Hasse diagram
};

// Elements ordered so that every element follows everything below it.
inline std::vector<Element> topological_order(const Poset& p) {
  std::vector<Element> order(p.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return std::popcount(p.below(a)) < std::popcount(p.below(b));
  });
  return order;
}

// level[i] = cardinality of the longest chain with top element i.
inline std::vector<std::size_t> levels(const Poset& p) {
  std::vector<std::size_t> level(p.size(), 1);
  for (Element i : topological_order(p))
    for_each_bit(p.lower_covers(i), [&](Element j) { level[i] = std::max(level[i], level[j] + 1); });
  return level;
}

inline std::size_t height(const Poset& p) {
  std::size_t h = 0;
  for (std::size_t l : levels(p)) h = std::max(h, l);
  return h;
}

// Connected components of the Hasse diagram, each as a mask, ordered by lowest element.
inline std::vector<Mask> components(const Poset& p) {
  std::vector<Mask> out;
  Mask seen = 0;
  for (Element s = 0; s < p.size(); ++s) {
    if (seen & bit(s)) continue;
    Mask comp = bit(s);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](Element i) { next |= p.below(i) | p.above(i); });
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Poset& p) { return components(p).size() <= 1; }

inline PosetStats stats(const Poset& p) {
  PosetStats s;
  s.height = height(p);
  for (Element i = 0; i < p.size(); ++i) {
    s.relations += static_cast<std::size_t>(std::popcount(p.below(i)));
    s.covers += static_cast<std::size_t>(std::popcount(p.lower_covers(i)));
  }
  s.components = components(p).size();
  return s;
}

inline bool is_downset(const Poset& p, Mask d) {
  bool ok = true;
  for_each_bit(d, [&](Element i) { ok = ok && (p.below(i) & ~d) == 0; });
  return ok;
}

}  // namespace sbal
