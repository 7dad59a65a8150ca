#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sbal/poset.hpp"

namespace sbal {

namespace detail {

// Individualization-refinement canonical labeling. Cells are refined by
// counting, per cell, how many strict predecessors and successors each vertex
// has there; the search branches on the first non-singleton cell and keeps the
// lexicographically smallest relabeled down-set matrix. Twins (same down-set
// and up-set) are swapped by an automorphism fixing everything else, so only
// one twin per cell is branched on.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Poset& p) : p_(p), n_(p.size()) {}

  void run() {
    std::vector<unsigned> color(n_, 0);
    search(color);
  }

  const std::vector<Mask>& best_code() const { return best_; }
  const std::vector<Element>& best_position() const { return best_pos_; }

 private:
  static unsigned cell_count(const std::vector<unsigned>& color) {
    unsigned k = 0;
    for (unsigned c : color) k = std::max(k, c + 1);
    return k;
  }

  void refine(std::vector<unsigned>& color) const {
    unsigned k = cell_count(color);
    std::vector<std::vector<unsigned>> sig(n_);
    std::vector<Element> idx(n_);
    while (true) {
      for (Element v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.assign(2 * k + 1, 0);
        s[0] = color[v];
        for_each_bit(p_.below(v), [&](Element u) { ++s[1 + color[u]]; });
        for_each_bit(p_.above(v), [&](Element u) { ++s[1 + k + color[u]]; });
      }
      for (Element v = 0; v < n_; ++v) idx[v] = v;
      std::sort(idx.begin(), idx.end(), [&](Element a, Element b) { return sig[a] < sig[b]; });
      unsigned next = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++next;
        color[idx[i]] = next;
      }
      const unsigned k2 = n_ == 0 ? 0 : next + 1;
      if (k2 == k) return;
      k = k2;
    }
  }

  void leaf(const std::vector<unsigned>& color) {
    std::vector<Mask> code(n_, 0);
    for (Element v = 0; v < n_; ++v) {
      Mask row = 0;
      for_each_bit(p_.below(v), [&](Element u) { row |= bit(color[u]); });
      code[color[v]] = row;
    }
    if (!have_best_ || code < best_) {
      best_ = std::move(code);
      best_pos_.assign(color.begin(), color.end());
      have_best_ = true;
    }
  }

  void search(std::vector<unsigned> color) {
    refine(color);
    const unsigned k = cell_count(color);
    if (k == n_) {
      leaf(color);
      return;
    }
    std::vector<unsigned> size(k, 0);
    for (unsigned c : color) ++size[c];
    unsigned target = 0;
    while (size[target] < 2) ++target;

    std::vector<Element> tried;
    for (Element v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      const bool twin = std::any_of(tried.begin(), tried.end(), [&](Element u) {
        return p_.below(u) == p_.below(v) && p_.above(u) == p_.above(v);
      });
      if (twin) continue;
      tried.push_back(v);
      std::vector<unsigned> child(color);
      for (Element u = 0; u < n_; ++u)
        if (color[u] > target || (color[u] == target && u != v)) ++child[u];
      search(std::move(child));
    }
  }

  const Poset& p_;
  std::size_t n_;
  bool have_best_ = false;
  std::vector<Mask> best_;
  std::vector<Element> best_pos_;
};

}  // namespace detail

struct CanonicalResult {
  std::vector<Element> position;  // position[i] is the canonical index of element i
  std::string form;
};

inline CanonicalResult canonical_labeling_and_form(const Poset& p) {
  detail::CanonicalSearch s(p);
  s.run();
  const std::size_t n = p.size();
  const std::size_t row_bytes = (n + 7) / 8;
  CanonicalResult r;
  r.position = s.best_position();
  r.form.reserve(1 + n * row_bytes);
  r.form.push_back(static_cast<char>(n));
  for (Mask row : s.best_code())
    for (std::size_t b = 0; b < row_bytes; ++b) r.form.push_back(static_cast<char>((row >> (8 * b)) & 0xFF));
  return r;
}

inline std::vector<Element> canonical_labeling(const Poset& p) { return canonical_labeling_and_form(p).position; }

// Byte string equal for two posets iff they are isomorphic.
inline std::string canonical_form(const Poset& p) { return canonical_labeling_and_form(p).form; }

// The isomorphic copy of p with canonical element numbering.
inline Poset canonical_poset(const Poset& p) {
  auto pos = canonical_labeling(p);
  return p.relabeled(pos);
}

inline bool is_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  const auto sa = stats(a);
  const auto sb = stats(b);
  if (sa.relations != sb.relations || sa.covers != sb.covers || sa.height != sb.height) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace sbal
