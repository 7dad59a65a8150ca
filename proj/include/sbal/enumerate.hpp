#pragma once

#include <deque>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "sbal/canonical.hpp"
#include "sbal/errors.hpp"
#include "sbal/poset.hpp"

namespace sbal {

// Calls f(mask) for every down-set of p, the empty set first.
template <class F>
void for_each_downset(const Poset& p, F&& f) {
  const auto order = topological_order(p);
  auto rec = [&](auto&& self, std::size_t k, Mask current) -> void {
    if (k == order.size()) {
      f(current);
      return;
    }
    const Element x = order[k];
    self(self, k + 1, current);
    if ((p.below(x) & ~current) == 0) self(self, k + 1, current | bit(x));
  };
  rec(rec, 0, 0);
}

namespace detail {

// One isomorphism-class representative per class, per size, built by
// extension: every poset on n elements arises from one on n - 1 elements by
// adding a new element on top of some down-set (resp. in height <= 2 mode, a
// new minimal or maximal element attached to minimal or maximal elements).
class ClassCatalog {
 public:
  explicit ClassCatalog(bool height_two) : height_two_(height_two) { levels_.push_back({Poset()}); }

  const std::vector<Poset>& level(std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (levels_.size() <= n) grow();
    return levels_[n];
  }

 private:
  void grow() {
    const auto& prev = levels_.back();
    const std::size_t m = prev.size() == 0 ? 0 : prev.front().size();
    std::vector<Poset> next;
    std::unordered_set<std::string> seen;
    auto offer = [&](const Poset& base, Mask down, Mask up) {
      std::vector<Mask> rows(m + 1);
      for (Element i = 0; i < m; ++i) rows[i] = base.below(i) | ((up >> i) & 1U ? bit(m) : 0);
      rows[m] = down;
      Poset candidate = Poset::from_closed_rows(std::move(rows));
      auto [pos, key] = canonical_labeling_and_form(candidate);
      if (seen.insert(std::move(key)).second) next.push_back(candidate.relabeled(pos));
    };
    for (const Poset& base : prev) {
      if (!height_two_) {
        for_each_downset(base, [&](Mask d) { offer(base, d, 0); });
        continue;
      }
      const Mask mins = base.minimal_elements();
      const Mask maxs = base.maximal_elements();
      // New maximal element above a subset of minimal elements (includes isolated).
      for (Mask d = mins;; d = (d - 1) & mins) {
        offer(base, d, 0);
        if (d == 0) break;
      }
      // New minimal element below a nonempty subset of maximal elements.
      for (Mask u = maxs; u != 0; u = (u - 1) & maxs) offer(base, 0, u);
    }
    levels_.push_back(std::move(next));
  }

  bool height_two_;
  std::mutex mutex_;
  std::deque<std::vector<Poset>> levels_;
};

inline ClassCatalog& all_classes_catalog() {
  static ClassCatalog catalog(false);
  return catalog;
}

inline ClassCatalog& height_two_catalog() {
  static ClassCatalog catalog(true);
  return catalog;
}

}  // namespace detail

inline constexpr std::size_t kMaxEnumerationSize = 9;
inline constexpr std::size_t kMaxHeightTwoEnumerationSize = 11;

// One representative per isomorphism class of posets on n elements, cached.
// Class counts for n = 0..8: 1, 1, 2, 5, 16, 63, 318, 2045, 16999.
inline const std::vector<Poset>& poset_classes(std::size_t n) {
  if (n > kMaxEnumerationSize) throw ResourceLimit("poset enumeration is limited to n <= 9");
  return detail::all_classes_catalog().level(n);
}

// Isomorphism classes of posets of height at most 2 on n elements, cached.
inline const std::vector<Poset>& height_two_classes(std::size_t n) {
  if (n > kMaxHeightTwoEnumerationSize) throw ResourceLimit("height-2 enumeration is limited to n <= 11");
  return detail::height_two_catalog().level(n);
}

inline std::vector<Poset> enumerate_posets(std::size_t n, const std::function<bool(const Poset&)>& filter = {}) {
  const auto& all = poset_classes(n);
  if (!filter) return all;
  std::vector<Poset> out;
  for (const auto& p : all)
    if (filter(p)) out.push_back(p);
  return out;
}

}  // namespace sbal
