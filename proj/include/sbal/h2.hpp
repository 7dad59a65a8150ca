#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sbal/domino.hpp"
#include "sbal/enumerate.hpp"
#include "sbal/errors.hpp"
#include "sbal/linext.hpp"
#include "sbal/poset.hpp"

namespace sbal {

// A reflexive relation R on the elements of a poset with
// covers(P) + diagonal <= R <= order(P). Parameterizes the lift A(P, R).
class GoodSet {
 public:
  // rows[x] holds every y with (x, y) in R, diagonal included.
  GoodSet(Poset base, std::vector<Mask> rows) : base_(std::move(base)), rows_(std::move(rows)) { validate(); }

  // R = diagonal + covers + extra; every extra pair must be a strict relation.
  static GoodSet with_pairs(const Poset& base, std::span<const Relation> extra) {
    std::vector<Mask> rows(base.size(), 0);
    for (Element x = 0; x < base.size(); ++x) rows[x] = bit(x) | base.upper_covers(x);
    for (auto [x, y] : extra) {
      if (x >= base.size() || y >= base.size()) throw BadGoodSet("pair references an element outside the poset");
      rows[x] |= bit(y);
    }
    return GoodSet(base, std::move(rows));
  }

  static GoodSet minimal(const Poset& base) { return with_pairs(base, {}); }

  static GoodSet maximal(const Poset& base) {
    auto rel = base.relations();
    return with_pairs(base, rel);
  }

  const Poset& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  Mask row(Element x) const noexcept { return rows_[x]; }
  bool contains(Element x, Element y) const noexcept { return (rows_[x] >> y) & 1U; }

  // Strict pairs of R that are not covers, lexicographic.
  std::vector<Relation> extra_pairs() const {
    std::vector<Relation> out;
    for (Element x = 0; x < size(); ++x)
      for_each_bit(rows_[x] & ~bit(x) & ~base_.upper_covers(x), [&](Element y) { out.emplace_back(x, y); });
    return out;
  }

  friend bool operator==(const GoodSet& a, const GoodSet& b) { return a.base_ == b.base_ && a.rows_ == b.rows_; }

 private:
  void validate() const {
    if (rows_.size() != base_.size()) throw BadGoodSet("relation has the wrong number of rows");
    for (Element x = 0; x < base_.size(); ++x) {
      if (!(rows_[x] & bit(x))) throw BadGoodSet("missing diagonal pair (" + std::to_string(x) + ", " + std::to_string(x) + ")");
      if ((base_.upper_covers(x) & ~rows_[x]) != 0) throw BadGoodSet("missing a cover pair from element " + std::to_string(x));
      if ((rows_[x] & ~(base_.above(x) | bit(x))) != 0) throw BadGoodSet("pair outside the order from element " + std::to_string(x));
    }
  }

  Poset base_;
  std::vector<Mask> rows_;
};

// A(P, R): (x, 0) is element x, (x, 1) is element |P| + x, and
// (x, 0) < (y, 1) exactly when (x, y) is in R.
inline Poset build_A(const GoodSet& r) {
  const std::size_t m = r.size();
  if (2 * m > kMaxElements) throw ResourceLimit("lift exceeds 64 elements");
  std::vector<Mask> rows(2 * m, 0);
  for (Element x = 0; x < m; ++x)
    for_each_bit(r.row(x), [&](Element y) { rows[m + y] |= bit(x); });
  return Poset::from_closed_rows(std::move(rows));
}

inline constexpr std::size_t kMaxGoodSetBits = 24;

// Every good set of p: diagonal + covers + each subset of the non-cover relations.
inline std::vector<GoodSet> enumerate_good_sets(const Poset& p) {
  std::vector<Relation> optional_pairs;
  for (auto [x, y] : p.relations())
    if (!p.is_cover(x, y)) optional_pairs.emplace_back(x, y);
  if (optional_pairs.size() > kMaxGoodSetBits) throw ResourceLimit("too many good sets to enumerate");
  std::vector<GoodSet> out;
  const std::uint64_t count = std::uint64_t{1} << optional_pairs.size();
  out.reserve(count);
  std::vector<Relation> chosen;
  for (std::uint64_t s = 0; s < count; ++s) {
    chosen.clear();
    for (std::size_t i = 0; i < optional_pairs.size(); ++i)
      if ((s >> i) & 1U) chosen.push_back(optional_pairs[i]);
    out.push_back(GoodSet::with_pairs(p, chosen));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition of height <= 2 posets

enum class H2Kind { SignBalanced, Lift, LiftPlusIsolated };

inline const char* to_string(H2Kind k) {
  switch (k) {
    case H2Kind::SignBalanced: return "sign-balanced";
    case H2Kind::Lift: return "lift";
    case H2Kind::LiftPlusIsolated: return "lift+isolated";
  }
  return "?";
}

struct H2Decomposition {
  H2Kind kind = H2Kind::SignBalanced;
  std::optional<GoodSet> lift;
  std::optional<Element> isolated;  // element of the input poset
  // embedding[a] is the input element playing element a of build_A(*lift).
  std::vector<Element> embedding;

  // The input poset reassembled from the lift (and isolated vertex).
  Poset rebuild() const {
    if (!lift) throw VerificationError("a sign-balanced decomposition has nothing to rebuild");
    Poset a = build_A(*lift);
    std::vector<Element> target = embedding;
    if (isolated) {
      a = disjoint_union(a, antichain(1));
      target.push_back(*isolated);
    }
    return a.relabeled(target);
  }
};

namespace detail {

// Perfect matching of the Hasse diagram of a height <= 2 poset by augmenting
// paths; match[x] is x's partner. Empty optional if none exists.
inline std::optional<std::vector<Element>> h2_perfect_matching(const Poset& q) {
  const std::size_t n = q.size();
  constexpr Element none = static_cast<Element>(-1);
  std::vector<Element> match(n, none);
  for (Element b = 0; b < n; ++b) {
    if (q.is_isolated(b)) return std::nullopt;
    if (!q.is_minimal(b)) continue;
    Mask visited = 0;
    auto augment = [&](auto&& self, Element bottom) -> bool {
      bool done = false;
      for_each_bit(q.upper_covers(bottom), [&](Element t) {
        if (done || (visited & bit(t))) return;
        visited |= bit(t);
        if (match[t] == none || self(self, match[t])) {
          match[t] = bottom;
          match[bottom] = t;
          done = true;
        }
      });
      return done;
    };
    if (!augment(augment, b)) return std::nullopt;
  }
  if (std::find(match.begin(), match.end(), none) != match.end()) return std::nullopt;
  return match;
}

// A perfect matching is unique iff no alternating cycle exists: orient
// unmatched edges bottom -> top and matched edges top -> bottom and test
// for a directed cycle.
inline bool matching_is_unique(const Poset& q, const std::vector<Element>& match) {
  const std::size_t n = q.size();
  std::vector<Relation> arcs;
  for (auto [b, t] : q.covers()) {
    if (match[b] == t)
      arcs.emplace_back(t, b);
    else
      arcs.emplace_back(b, t);
  }
  try {
    Poset::from_relations(n, arcs);
  } catch (const CycleError&) {
    return false;
  }
  return true;
}

inline H2Decomposition decompose_even(const Poset& q) {
  H2Decomposition out;
  auto match = h2_perfect_matching(q);
  if (!match || !matching_is_unique(q, *match)) return out;
  DominoTableau m;
  for (Element x = 0; x < q.size(); ++x)
    if (q.is_minimal(x)) m.pairs.emplace_back(x, (*match)[x]);
  if (!is_tableau(q, m)) return out;
  const Poset base = quotient(q, m);
  const std::size_t k = m.pairs.size();
  std::vector<Mask> rows(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i == j || q.less(m.pairs[i].first, m.pairs[j].second)) rows[i] |= bit(j);
  out.kind = H2Kind::Lift;
  out.lift = GoodSet(base, std::move(rows));
  out.embedding.resize(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    out.embedding[i] = m.pairs[i].first;
    out.embedding[k + i] = m.pairs[i].second;
  }
  return out;
}

}  // namespace detail

// Splits a height <= 2 poset Q into SignBalanced, A(P, R), or A(P, R) + C1.
// Runs in polynomial time: one bipartite matching, one cycle test for
// uniqueness, one cycle test for the tableau condition.
inline H2Decomposition decompose(const Poset& q) {
  if (height(q) > 2) throw HeightExceeded("decompose requires height at most 2");
  if (q.size() % 2 == 0) return detail::decompose_even(q);
  std::optional<Element> iso;
  std::size_t isolated_count = 0;
  for (Element x = 0; x < q.size(); ++x)
    if (q.is_isolated(x)) {
      iso = x;
      ++isolated_count;
    }
  if (isolated_count != 1) return {};
  const Mask rest_mask = q.all() & ~bit(*iso);
  std::vector<Element> rest_elems;
  for_each_bit(rest_mask, [&](Element x) { rest_elems.push_back(x); });
  H2Decomposition sub = detail::decompose_even(q.induced(rest_mask));
  if (sub.kind == H2Kind::SignBalanced) return {};
  sub.kind = H2Kind::LiftPlusIsolated;
  sub.isolated = iso;
  for (auto& e : sub.embedding) e = rest_elems[e];
  return sub;
}

// Outcome of the H2SB decision together with how many extensions of the
// quotient were visited.
struct H2sbResult {
  bool at_least = false;
  std::size_t enumerated = 0;
  H2Kind kind = H2Kind::SignBalanced;
};

inline H2sbResult h2sb_evaluate(const Poset& q, std::size_t k) {
  H2sbResult r;
  if (height(q) > 2) throw HeightExceeded("H2SB requires height at most 2");
  if (k == 0) {
    r.at_least = true;
    r.kind = decompose(q).kind;
    return r;
  }
  const auto d = decompose(q);
  r.kind = d.kind;
  if (d.kind == H2Kind::SignBalanced) return r;
  r.enumerated = count_up_to(d.lift->base(), k);
  r.at_least = r.enumerated >= k;
  return r;
}

// si(Q) >= k without computing si(Q).
inline bool h2sb_decide(const Poset& q, std::size_t k) { return h2sb_evaluate(q, k).at_least; }

// ---------------------------------------------------------------------------
// Counting height-2 posets by residue of e

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

inline BigInt pow2(std::size_t e) { return BigInt(1) << e; }

struct FCount {
  std::size_t n = 0;
  BigInt formula;
  BigInt direct;
  std::vector<Poset> witnesses;  // the odd-e height-2 classes on n elements
};

// f(n): height <= 2 isomorphism classes on n elements with odd e, computed
// (a) from posets on floor(n/2) elements weighted by 2^(re - cr), and
// (b) by direct enumeration. Disagreement raises VerificationError.
inline FCount count_f(std::size_t n_total) {
  if (n_total > kMaxHeightTwoEnumerationSize)
    throw ResourceLimit("f(n) is supported for n <= " + std::to_string(kMaxHeightTwoEnumerationSize));
  FCount r;
  r.n = n_total;
  for (const Poset& p : poset_classes(n_total / 2)) {
    if (count_mod(p, 2) != 1) continue;
    const auto s = stats(p);
    r.formula += pow2(s.relations - s.covers);
  }
  for (const Poset& q : height_two_classes(n_total))
    if (count_mod(q, 2) == 1) {
      r.direct += 1;
      r.witnesses.push_back(q);
    }
  if (r.formula != r.direct)
    throw VerificationError("f(" + std::to_string(n_total) + "): formula " + r.formula.str() + " != direct " +
                            r.direct.str());
  return r;
}

// f_q(m): height <= 2 classes on m elements with q not dividing e.
inline std::size_t count_f_q(std::size_t m, std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("count_f_q requires a prime modulus");
  std::size_t count = 0;
  for (const Poset& p : height_two_classes(m))
    if (count_mod(p, q) != 0) ++count;
  return count;
}

inline BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt double_factorial_odd(std::size_t n) {
  // (2n - 1)!!
  BigInt r = 1;
  for (std::size_t i = 1; i + 1 <= 2 * n; i += 2) r *= i;
  return r;
}

struct OddBoundsReport {
  std::size_t n = 0;  // posets on 2n elements
  BigInt lower;       // (n!)^2
  BigInt upper;       // n! (2n - 1)!!
  std::vector<BigInt> values;  // distinct odd e, ascending
  std::size_t classes = 0;     // odd-e classes inspected
  bool within_bounds = true;
  bool sandwiched = true;      // every class is A(P, R) with |P| = n
};

// Checks (n!)^2 <= e <= n!(2n-1)!! over every odd-e height-2 class on 2n
// elements, and that each such class sits between n disjoint 2-chains and
// A_n + A_n (ordinal sum) via its decomposition.
inline OddBoundsReport odd_e_bounds(std::size_t n) {
  OddBoundsReport r;
  r.n = n;
  r.lower = factorial(n) * factorial(n);
  r.upper = factorial(n) * double_factorial_odd(n);
  std::set<BigInt> values;
  for (const Poset& q : height_two_classes(2 * n)) {
    if (count_mod(q, 2) != 1) continue;
    ++r.classes;
    const BigInt e = count_extensions(q);
    values.insert(e);
    if (e < r.lower || e > r.upper) r.within_bounds = false;
    const auto d = decompose(q);
    bool ok = d.kind == H2Kind::Lift && d.lift->size() == n && d.rebuild() == q;
    if (ok) {
      // Only bottom-to-top relations, and every bottom sits below its own top.
      for (Element x = 0; x < n; ++x) ok = ok && q.less(d.embedding[x], d.embedding[n + x]);
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
          ok = ok && !q.comparable(d.embedding[a], d.embedding[b]);
          ok = ok && !q.comparable(d.embedding[n + a], d.embedding[n + b]);
        }
    }
    r.sandwiched = r.sandwiched && ok;
  }
  r.values.assign(values.begin(), values.end());
  if (!r.within_bounds || !r.sandwiched)
    throw VerificationError("odd-e bound check failed for n = " + std::to_string(n));
  return r;
}

struct DivisibilityReport {
  std::size_t m = 0;
  std::size_t odd_classes = 0;
  std::vector<BigInt> violations;  // odd e values not divisible by m
};

// For odd m: every odd-e height-2 class on m elements has an isolated vertex,
// so m divides e.
inline DivisibilityReport odd_e_divisibility(std::size_t m) {
  DivisibilityReport r;
  r.m = m;
  for (const Poset& q : height_two_classes(m)) {
    if (count_mod(q, 2) != 1) continue;
    ++r.odd_classes;
    const BigInt e = count_extensions(q);
    if (e % m != 0) r.violations.push_back(e);
  }
  return r;
}

struct Spectrum {
  std::size_t max_vertices = 0;
  std::map<BigInt, Poset> witnesses;  // each achievable e with its first witness
  std::vector<BigInt> gaps;           // 1..max e not achieved
};

// {e(Q) : Q height <= 2, |Q| <= max_vertices}, witnesses taken from the
// smallest size first, then enumeration order.
inline Spectrum spectrum(std::size_t max_vertices) {
  Spectrum s;
  s.max_vertices = max_vertices;
  for (std::size_t m = 0; m <= max_vertices; ++m)
    for (const Poset& q : height_two_classes(m)) s.witnesses.try_emplace(count_extensions(q), q);
  if (!s.witnesses.empty()) {
    const BigInt top = s.witnesses.rbegin()->first;
    for (BigInt v = 1; v < top; ++v)
      if (!s.witnesses.contains(v)) s.gaps.push_back(v);
  }
  return s;
}

}  // namespace sbal
