#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbal/domino.hpp"
#include "sbal/euler.hpp"
#include "sbal/h2.hpp"
#include "sbal/linext.hpp"
#include "sbal/poset.hpp"
#include "sbal/poset_io.hpp"
#include "sbal/ruskey.hpp"

// JSON views of the result types. Big integers are written as decimal strings.
namespace sbal::report {

using json = nlohmann::ordered_json;

inline std::string str(const BigInt& v) { return v.str(); }

inline json relations_json(const std::vector<Relation>& rel) {
  json out = json::array();
  for (auto [a, b] : rel) out.push_back({a, b});
  return out;
}

inline json poset_json(const Poset& p) {
  return {{"n", p.size()}, {"covers", relations_json(p.covers())}};
}

inline json counts_json(const Poset& p, std::size_t cap) {
  const auto sc = signed_count(p, cap);
  return {{"n", p.size()}, {"e", str(sc.total)}, {"signed", str(sc.signed_sum)}, {"si", str(sc.imbalance)}};
}

inline json tableau_json(const Poset& p, const DominoTableau& t, std::size_t cap) {
  json j;
  j["pairs"] = relations_json(t.pairs);
  j["singleton"] = t.singleton ? json(*t.singleton) : json(nullptr);
  j["sign"] = tableau_sign(p, t);
  j["quotient"] = poset_json(quotient(p, t));
  j["adapted"] = str(adapted_count(p, t, cap));
  return j;
}

inline json good_set_json(const GoodSet& r) {
  return {{"base", poset_json(r.base())}, {"extra", relations_json(r.extra_pairs())}};
}

inline json decomposition_json(const H2Decomposition& d) {
  json j;
  j["kind"] = to_string(d.kind);
  j["lift"] = d.lift ? good_set_json(*d.lift) : json(nullptr);
  j["isolated"] = d.isolated ? json(*d.isolated) : json(nullptr);
  j["embedding"] = d.embedding;
  return j;
}

inline json h2sb_json(const H2sbResult& r, std::size_t k) {
  return {{"k", k}, {"at_least", r.at_least}, {"enumerated", r.enumerated}, {"kind", to_string(r.kind)}};
}

inline json f_json(const FCount& f) {
  json w = json::array();
  for (const auto& p : f.witnesses) w.push_back(format_poset(p));
  return {{"n", f.n}, {"formula", str(f.formula)}, {"direct", str(f.direct)}, {"witnesses", w}};
}

inline json bounds_json(const OddBoundsReport& r) {
  json values = json::array();
  for (const auto& v : r.values) values.push_back(str(v));
  return {{"n", r.n},           {"lower", str(r.lower)},       {"upper", str(r.upper)},
          {"classes", r.classes}, {"values", values},          {"within_bounds", r.within_bounds},
          {"sandwiched", r.sandwiched}};
}

inline json spectrum_json(const Spectrum& s) {
  json values = json::array();
  for (const auto& [e, w] : s.witnesses) values.push_back({{"e", str(e)}, {"witness", format_poset(w)}});
  json gaps = json::array();
  for (const auto& g : s.gaps) gaps.push_back(str(g));
  return {{"max_vertices", s.max_vertices}, {"values", values}, {"gaps", gaps}};
}

inline json ruskey_json(const RuskeyReport& r) {
  return {{"mode", to_string(r.mode)},
          {"si", str(r.si)},
          {"vertices", r.vertices},
          {"connected", r.connected},
          {"positive", r.parts.positive},
          {"negative", r.parts.negative},
          {"proper", r.parts.proper},
          {"path_found", r.path_found},
          {"consistent", r.consistent_with_conjecture}};
}

}  // namespace sbal::report
