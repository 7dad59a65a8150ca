#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbal/errors.hpp"
#include "sbal/linext.hpp"
#include "sbal/poset.hpp"

namespace sbal {

// Arbitrary: extensions differing by a swap of any two labels.
// Adjacent: only labels i and i + 1 may be swapped.
enum class Adjacency { Arbitrary, Adjacent };

inline const char* to_string(Adjacency a) { return a == Adjacency::Arbitrary ? "arbitrary" : "adjacent"; }

inline constexpr std::size_t kDefaultGraphCap = 10'000;
inline constexpr std::size_t kDefaultPathCap = 1'000;
inline constexpr std::uint64_t kDefaultSearchSteps = 50'000'000;

struct TranspositionGraph {
  Adjacency mode = Adjacency::Arbitrary;
  std::vector<LinearExtension> vertices;
  std::vector<int> signs;
  std::vector<std::vector<std::size_t>> neighbors;

  std::size_t vertex_count() const noexcept { return vertices.size(); }

  // Each edge once, (smaller, larger), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t v = 0; v < neighbors.size(); ++v)
      for (std::size_t u : neighbors[v])
        if (v < u) out.emplace_back(v, u);
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Vertices are the extensions in lexicographic label order.
inline TranspositionGraph build_graph(const Poset& p, Adjacency mode = Adjacency::Arbitrary,
                                      std::size_t cap = kDefaultGraphCap) {
  TranspositionGraph g;
  g.mode = mode;
  try {
    g.vertices = enumerate_extensions(p, cap);
  } catch (const ResourceLimit&) {
    throw ResourceLimit("transposition graph exceeds cap of " + std::to_string(cap) + " vertices");
  }
  const std::size_t n = p.size();
  const std::size_t v_count = g.vertices.size();
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t v = 0; v < v_count; ++v) index.emplace(g.vertices[v].labels, v);
  g.signs.resize(v_count);
  g.neighbors.assign(v_count, {});
  for (std::size_t v = 0; v < v_count; ++v) {
    g.signs[v] = permutation_sign(g.vertices[v].labels);
    const auto order = g.vertices[v].order();
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t b_end = mode == Adjacency::Adjacent ? std::min(n, a + 2) : n;
      for (std::size_t b = a + 1; b < b_end; ++b) {
        // Swap the elements carrying labels a + 1 and b + 1.
        auto labels = g.vertices[v].labels;
        std::swap(labels[order[a]], labels[order[b]]);
        auto it = index.find(labels);
        if (it != index.end()) g.neighbors[v].push_back(it->second);
      }
    }
    std::sort(g.neighbors[v].begin(), g.neighbors[v].end());
  }
  return g;
}

inline bool is_connected(const TranspositionGraph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : g.neighbors[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == g.vertex_count();
}

struct Bipartition {
  std::size_t positive = 0;
  std::size_t negative = 0;
  bool proper = true;  // every edge joins opposite signs

  std::size_t difference() const noexcept { return positive > negative ? positive - negative : negative - positive; }
};

inline Bipartition bipartition(const TranspositionGraph& g) {
  Bipartition b;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    (g.signs[v] > 0 ? b.positive : b.negative) += 1;
    for (std::size_t u : g.neighbors[v])
      if (g.signs[u] == g.signs[v]) b.proper = false;
  }
  return b;
}

namespace detail {

class HamiltonSearch {
 public:
  HamiltonSearch(const TranspositionGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  std::optional<std::vector<std::size_t>> run() {
    const std::size_t n = g_.vertex_count();
    if (n == 0) return std::vector<std::size_t>{};
    const auto parts = bipartition(g_);
    if (parts.difference() > 1 || !is_connected(g_)) return std::nullopt;
    visited_.assign(n, false);
    remaining_[0] = parts.negative;
    remaining_[1] = parts.positive;
    for (std::size_t start = 0; start < n; ++start) {
      // With unequal parts the path starts (and ends) in the larger one.
      if (parts.positive != parts.negative && (g_.signs[start] > 0) != (parts.positive > parts.negative)) continue;
      visit(start);
      if (extend(start)) return path_;
      unvisit(start);
    }
    return std::nullopt;
  }

 private:
  static std::size_t side(int sign) { return sign > 0 ? 1 : 0; }

  void visit(std::size_t v) {
    visited_[v] = true;
    --remaining_[side(g_.signs[v])];
    path_.push_back(v);
  }
  void unvisit(std::size_t v) {
    visited_[v] = false;
    ++remaining_[side(g_.signs[v])];
    path_.pop_back();
  }

  std::size_t free_degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t u : g_.neighbors[v]) d += visited_[u] ? 0 : 1;
    return d;
  }

  // The unvisited vertices must stay reachable from the path's end.
  bool remainder_connected(std::size_t from) const {
    const std::size_t left = remaining_[0] + remaining_[1];
    if (left == 0) return true;
    std::vector<bool> seen(g_.vertex_count(), false);
    std::vector<std::size_t> stack{from};
    std::size_t reached = 0;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u : g_.neighbors[v])
        if (!visited_[u] && !seen[u]) {
          seen[u] = true;
          ++reached;
          stack.push_back(u);
        }
    }
    return reached == left;
  }

  bool extend(std::size_t v) {
    if (++steps_ > budget_) throw ResourceLimit("Hamiltonian path search exceeded its step budget");
    const std::size_t left = remaining_[0] + remaining_[1];
    if (left == 0) return true;
    // The rest of the path alternates starting with the opposite sign of v.
    const std::size_t next_side = 1 - side(g_.signs[v]);
    const std::size_t need_next = (left + 1) / 2;
    if (remaining_[next_side] != need_next) return false;
    if (!remainder_connected(v)) return false;

    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t u : g_.neighbors[v])
      if (!visited_[u]) options.emplace_back(free_degree(u), u);
    std::sort(options.begin(), options.end());
    for (auto [deg, u] : options) {
      visit(u);
      if (extend(u)) return true;
      unvisit(u);
    }
    return false;
  }

  const TranspositionGraph& g_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<bool> visited_;
  std::size_t remaining_[2] = {0, 0};
  std::vector<std::size_t> path_;
};

}  // namespace detail

// Exhaustive backtracking with sign-count and connectivity pruning. Returns
// std::nullopt when no path exists; throws ResourceLimit past the vertex cap
// or the step budget.
inline std::optional<std::vector<std::size_t>> hamiltonian_path(const TranspositionGraph& g,
                                                                std::size_t cap = kDefaultPathCap,
                                                                std::uint64_t budget = kDefaultSearchSteps) {
  if (g.vertex_count() > cap) throw ResourceLimit("Hamiltonian search exceeds cap of " + std::to_string(cap) + " vertices");
  return detail::HamiltonSearch(g, budget).run();
}

inline bool is_hamiltonian_path(const TranspositionGraph& g, const std::vector<std::size_t>& path) {
  if (path.size() != g.vertex_count()) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.vertex_count() || seen[path[i]]) return false;
    seen[path[i]] = true;
    if (i > 0 && !std::binary_search(g.neighbors[path[i - 1]].begin(), g.neighbors[path[i - 1]].end(), path[i]))
      return false;
  }
  return true;
}

struct RuskeyReport {
  Adjacency mode = Adjacency::Arbitrary;
  BigInt si;
  std::size_t vertices = 0;
  bool connected = false;
  Bipartition parts;
  bool path_found = false;
  // Ruskey's conjecture: si <= 1 iff a Hamiltonian path exists. A path with
  // si >= 2 is impossible, and si <= 1 without a path would be a counterexample.
  bool consistent_with_conjecture = false;
};

inline RuskeyReport ruskey_report(const Poset& p, Adjacency mode = Adjacency::Arbitrary,
                                  std::size_t graph_cap = kDefaultGraphCap, std::size_t path_cap = kDefaultPathCap) {
  RuskeyReport r;
  r.mode = mode;
  r.si = sign_imbalance(p);
  const auto g = build_graph(p, mode, graph_cap);
  r.vertices = g.vertex_count();
  r.connected = is_connected(g);
  r.parts = bipartition(g);
  const auto path = hamiltonian_path(g, path_cap);
  r.path_found = path.has_value() && is_hamiltonian_path(g, *path);
  r.consistent_with_conjecture = r.path_found == (r.si <= 1);
  return r;
}

}  // namespace sbal
