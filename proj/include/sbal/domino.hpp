#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sbal/errors.hpp"
#include "sbal/linext.hpp"
#include "sbal/poset.hpp"

namespace sbal {

// A partition of the ground set into cover pairs (bottom, top) plus at most one
// maximal singleton. Pairs are kept sorted by bottom element.
struct DominoTableau {
  std::vector<Relation> pairs;
  std::optional<Element> singleton;

  std::size_t part_count() const noexcept { return pairs.size() + (singleton ? 1 : 0); }

  friend auto operator<=>(const DominoTableau&, const DominoTableau&) = default;
};

namespace detail {

inline bool mask_connected(const Poset& p, Mask m) {
  if (m == 0) return true;
  Mask comp = m & (~m + 1);
  Mask frontier = comp;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](Element i) { next |= (p.below(i) | p.above(i)) & m; });
    frontier = next & ~comp;
    comp |= next;
  }
  return comp == m;
}

// part[x] = index of the part containing x; pairs first, singleton last.
inline std::vector<std::size_t> part_index(const Poset& p, const DominoTableau& t) {
  const std::size_t n = p.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> part(n, unset);
  auto claim = [&](Element x, std::size_t idx) {
    if (x >= n) throw MalformedPartition("element " + std::to_string(x) + " out of range");
    if (part[x] != unset) throw MalformedPartition("element " + std::to_string(x) + " appears twice");
    part[x] = idx;
  };
  for (std::size_t i = 0; i < t.pairs.size(); ++i) {
    auto [b, top] = t.pairs[i];
    claim(b, i);
    claim(top, i);
    if (!p.is_cover(b, top))
      throw MalformedPartition("pair (" + std::to_string(b) + ", " + std::to_string(top) + ") is not a cover");
  }
  if (t.singleton) {
    if (n % 2 == 0) throw MalformedPartition("a singleton is only allowed when n is odd");
    claim(*t.singleton, t.pairs.size());
    if (!p.is_maximal(*t.singleton)) throw MalformedPartition("singleton is not a maximal element");
  }
  for (Element x = 0; x < n; ++x)
    if (part[x] == unset) throw MalformedPartition("element " + std::to_string(x) + " is not covered by the partition");
  return part;
}

// Generating relation of the quotient: part(x) below part(y) whenever x < y.
inline std::vector<Relation> quotient_relation(const Poset& p, const std::vector<std::size_t>& part) {
  std::vector<Relation> rel;
  for (auto [x, y] : p.relations())
    if (part[x] != part[y]) rel.emplace_back(part[x], part[y]);
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  return rel;
}

inline DominoTableau normalized(DominoTableau t) {
  std::sort(t.pairs.begin(), t.pairs.end());
  return t;
}

}  // namespace detail

// True iff t is a domino tableau of p: the induced part relation is acyclic.
// Throws MalformedPartition if t is not a cover-pair partition with at most a
// maximal singleton.
inline bool is_tableau(const Poset& p, const DominoTableau& t) {
  const auto part = detail::part_index(p, t);
  try {
    Poset::from_relations(t.part_count(), detail::quotient_relation(p, part));
  } catch (const CycleError&) {
    return false;
  }
  return true;
}

// P/M on the parts of t, in the order pairs..., singleton.
inline Poset quotient(const Poset& p, const DominoTableau& t) {
  const DominoTableau m = detail::normalized(t);
  const auto part = detail::part_index(p, m);
  try {
    return Poset::from_relations(m.part_count(), detail::quotient_relation(p, part));
  } catch (const CycleError&) {
    throw NotATableau("partition induces a cyclic quotient relation");
  }
}

// One adapted extension: parts are taken in topological order of the quotient,
// smallest part index first, pair i receiving labels 2i-1, 2i and the
// singleton receiving n.
inline LinearExtension adapted_extension(const Poset& p, const DominoTableau& t) {
  const DominoTableau m = detail::normalized(t);
  const Poset q = quotient(p, m);
  const std::size_t pairs = m.pairs.size();
  LinearExtension ext;
  ext.labels.assign(p.size(), 0);
  Mask placed = 0;
  for (std::size_t step = 0; step < pairs; ++step) {
    std::size_t pick = pairs;
    for (std::size_t i = 0; i < pairs; ++i)
      if (!(placed & bit(i)) && (q.below(i) & ~placed) == 0) {
        pick = i;
        break;
      }
    placed |= bit(pick);
    ext.labels[m.pairs[pick].first] = 2 * step + 1;
    ext.labels[m.pairs[pick].second] = 2 * step + 2;
  }
  if (m.singleton) ext.labels[*m.singleton] = p.size();
  return ext;
}

inline int tableau_sign(const Poset& p, const DominoTableau& t) { return sign(p, adapted_extension(p, t)); }

// Number of extensions adapted to t. The singleton must carry label n, so this
// counts extensions of the quotient with the singleton part removed.
inline BigInt adapted_count(const Poset& p, const DominoTableau& t, std::size_t cap = kDefaultDownsetCap) {
  const DominoTableau m = detail::normalized(t);
  const Poset q = quotient(p, m);
  return count_extensions(q.induced(low_bits(m.pairs.size())), cap);
}

// Every extension adapted to t, via the bijection with extensions of the
// quotient (singleton part last).
inline std::vector<LinearExtension> adapted_extensions(const Poset& p, const DominoTableau& t,
                                                       std::size_t cap = kDefaultEnumerationCap) {
  const DominoTableau m = detail::normalized(t);
  const Poset q = quotient(p, m).induced(low_bits(m.pairs.size()));
  std::vector<LinearExtension> out;
  bool over = false;
  for_each_extension(q, [&](const std::vector<Element>& order) {
    if (out.size() >= cap) {
      over = true;
      return false;
    }
    LinearExtension ext;
    ext.labels.assign(p.size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) {
      ext.labels[m.pairs[order[k]].first] = 2 * k + 1;
      ext.labels[m.pairs[order[k]].second] = 2 * k + 2;
    }
    if (m.singleton) ext.labels[*m.singleton] = p.size();
    out.push_back(std::move(ext));
    return true;
  });
  if (over) throw ResourceLimit("adapted extension count exceeds cap");
  std::sort(out.begin(), out.end());
  return out;
}

// Partitions of the Hasse diagram into cover pairs plus (for odd n) one maximal
// singleton; the acyclicity condition is not applied.
inline std::vector<DominoTableau> hasse_matchings(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<DominoTableau> out;
  DominoTableau cur;
  auto rec = [&](auto&& self, Mask matched) -> void {
    if (matched == p.all()) {
      out.push_back(detail::normalized(cur));
      return;
    }
    const Element v = static_cast<Element>(std::countr_zero(~matched));
    if (n % 2 == 1 && !cur.singleton && p.is_maximal(v)) {
      cur.singleton = v;
      self(self, matched | bit(v));
      cur.singleton.reset();
    }
    for_each_bit((p.lower_covers(v) | p.upper_covers(v)) & ~matched, [&](Element u) {
      cur.pairs.push_back(p.less(v, u) ? Relation{v, u} : Relation{u, v});
      self(self, matched | bit(u) | bit(v));
      cur.pairs.pop_back();
    });
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// DT(P), deterministic order.
inline std::vector<DominoTableau> enumerate_tableaux(const Poset& p) {
  std::vector<DominoTableau> out;
  for (auto& m : hasse_matchings(p))
    if (is_tableau(p, m)) out.push_back(std::move(m));
  return out;
}

// Sum over tableaux of sign(M) times the number of extensions adapted to M.
inline BigInt signed_quotient_sum(const Poset& p, std::size_t cap = kDefaultDownsetCap) {
  BigInt sum = 0;
  for (const auto& m : enumerate_tableaux(p)) {
    if (tableau_sign(p, m) > 0)
      sum += adapted_count(p, m, cap);
    else
      sum -= adapted_count(p, m, cap);
  }
  return sum;
}

inline BigInt si_via_quotients(const Poset& p, std::size_t cap = kDefaultDownsetCap) {
  return abs(signed_quotient_sum(p, cap));
}

// ---------------------------------------------------------------------------
// q-adapted extensions: consecutive label blocks of size q must each induce a
// connected subposet; up to q - 1 trailing labels are unconstrained.

inline bool is_q_adapted(const Poset& p, const LinearExtension& ext, std::size_t q) {
  if (q < 2) throw std::invalid_argument("q-adaptedness requires q >= 2");
  check_extension(p, ext);
  const auto order = ext.order();
  for (std::size_t start = 0; start + q <= p.size(); start += q) {
    Mask block = 0;
    for (std::size_t k = start; k < start + q; ++k) block |= bit(order[k]);
    if (!detail::mask_connected(p, block)) return false;
  }
  return true;
}

inline std::optional<LinearExtension> find_q_adapted(const Poset& p, std::size_t q) {
  if (q < 2) throw std::invalid_argument("q-adaptedness requires q >= 2");
  const std::size_t n = p.size();
  std::vector<Element> order;
  std::optional<LinearExtension> found;
  auto rec = [&](auto&& self, Mask placed, Mask block) -> void {
    if (found) return;
    if (order.size() == n) {
      found = LinearExtension::from_order(order);
      return;
    }
    for (Element x = 0; x < n && !found; ++x) {
      if ((placed & bit(x)) || (p.below(x) & ~placed) != 0) continue;
      Mask nb = block | bit(x);
      const bool closes = std::popcount(nb) == static_cast<int>(q) && order.size() + 1 <= (n / q) * q;
      if (closes && !detail::mask_connected(p, nb)) continue;
      order.push_back(x);
      self(self, placed | bit(x), closes ? Mask{0} : nb);
      order.pop_back();
    }
  };
  rec(rec, 0, 0);
  return found;
}

inline bool exists_q_adapted(const Poset& p, std::size_t q) { return find_q_adapted(p, q).has_value(); }

}  // namespace sbal
