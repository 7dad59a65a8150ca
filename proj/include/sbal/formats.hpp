#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sbal/domino.hpp"
#include "sbal/errors.hpp"
#include "sbal/h2.hpp"
#include "sbal/linext.hpp"
#include "sbal/poset_io.hpp"
#include "sbal/ruskey.hpp"

// Plain-text forms of extensions, tableaux, good sets and transposition graphs.
namespace sbal {

// One extension per line, labels of elements 0..n-1 separated by spaces.
inline std::string format_extensions(const std::vector<LinearExtension>& exts) {
  std::ostringstream out;
  for (const auto& e : exts) {
    for (std::size_t i = 0; i < e.labels.size(); ++i) out << (i ? " " : "") << e.labels[i];
    out << '\n';
  }
  return out.str();
}

// Lines "pair <bottom> <top>" and at most one "single <v>".
inline std::string format_tableau(const DominoTableau& t) {
  std::ostringstream out;
  for (auto [b, top] : t.pairs) out << "pair " << b << ' ' << top << '\n';
  if (t.singleton) out << "single " << *t.singleton << '\n';
  return out.str();
}

inline DominoTableau read_tableau(std::istream& in) {
  DominoTableau t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (toks[0] == "pair") {
      if (toks.size() != 3) throw ParseError(where + "expected 'pair <bottom> <top>'");
      t.pairs.emplace_back(detail::parse_index(toks[1], line_no), detail::parse_index(toks[2], line_no));
    } else if (toks[0] == "single") {
      if (toks.size() != 2) throw ParseError(where + "expected 'single <v>'");
      if (t.singleton) throw ParseError(where + "more than one singleton");
      t.singleton = detail::parse_index(toks[1], line_no);
    } else {
      throw ParseError(where + "unknown directive '" + std::string(toks[0]) + "'");
    }
  }
  return t;
}

inline DominoTableau parse_tableau(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_tableau(in);
}

// Extra pairs of a good set, one "r <x> <y>" line each; the diagonal and the
// covers of the base poset are added implicitly.
inline GoodSet read_good_set(const Poset& base, std::istream& in) {
  std::vector<Relation> extra;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks[0] != "r" || toks.size() != 3)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'r <x> <y>'");
    extra.emplace_back(detail::parse_index(toks[1], line_no), detail::parse_index(toks[2], line_no));
  }
  return GoodSet::with_pairs(base, extra);
}

inline GoodSet parse_good_set(const Poset& base, std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_good_set(base, in);
}

inline std::string format_good_set(const GoodSet& r) {
  std::ostringstream out;
  for (auto [x, y] : r.extra_pairs()) out << "r " << x << ' ' << y << '\n';
  return out.str();
}

// "v <index> <sign> <labels...>" per vertex, then "<u> <v>" per edge.
inline std::string format_graph(const TranspositionGraph& g) {
  std::ostringstream out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "v " << v << ' ' << (g.signs[v] > 0 ? '+' : '-');
    for (auto l : g.vertices[v].labels) out << ' ' << l;
    out << '\n';
  }
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace sbal
