#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sbal/errors.hpp"
#include "sbal/poset.hpp"

namespace sbal {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_index(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     std::string(tok) + "'");
  return value;
}

}  // namespace detail

// Line-oriented poset text:
//   # comment
//   n <count>
//   e <u> <v>      (u below v; closure is applied)
inline Poset read_poset(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<Relation> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks[0] == "n") {
      if (n) throw ParseError("line " + std::to_string(line_no) + ": duplicate 'n' line");
      if (toks.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected 'n <count>'");
      n = detail::parse_index(toks[1], line_no);
      if (*n > kMaxElements) throw ParseError("posets are limited to 64 elements");
    } else if (toks[0] == "e") {
      if (!n) throw ParseError("line " + std::to_string(line_no) + ": 'e' before 'n'");
      if (toks.size() != 3) throw ParseError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
      auto u = detail::parse_index(toks[1], line_no);
      auto v = detail::parse_index(toks[2], line_no);
      if (u >= *n || v >= *n)
        throw ParseError("line " + std::to_string(line_no) + ": element index out of range");
      pairs.emplace_back(u, v);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" + std::string(toks[0]) + "'");
    }
  }
  if (!n) throw ParseError("missing 'n <count>' line");
  return Poset::from_relations(*n, pairs);
}

inline Poset parse_poset(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_poset(in);
}

// Writers emit cover relations only, sorted lexicographically.
inline std::string format_poset(const Poset& p) {
  std::ostringstream out;
  out << "n " << p.size() << '\n';
  for (auto [u, v] : p.covers()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

// Named families: chain:n, antichain:n, zigzag:n, grid:m:n.
inline std::optional<Poset> parse_family(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == ':') {
      parts.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() < 2) return std::nullopt;
  const std::string_view name = parts[0];
  if (name != "chain" && name != "antichain" && name != "zigzag" && name != "grid") return std::nullopt;
  std::vector<std::size_t> args;
  for (std::size_t i = 1; i < parts.size(); ++i) args.push_back(detail::parse_index(parts[i], 0));
  const std::size_t want = name == "grid" ? 2 : 1;
  if (args.size() != want) throw ParseError("family '" + std::string(name) + "' takes " + std::to_string(want) + " argument(s)");
  for (auto a : args)
    if (a > kMaxElements) throw ParseError("family size exceeds 64 elements");
  if (name == "chain") return chain(args[0]);
  if (name == "antichain") return antichain(args[0]);
  if (name == "zigzag") return zigzag(args[0]);
  return grid(args[0], args[1]);
}

}  // namespace sbal
