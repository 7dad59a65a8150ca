#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sbal/canonical.hpp"
#include "sbal/domino.hpp"
#include "sbal/enumerate.hpp"
#include "sbal/euler.hpp"
#include "sbal/h2.hpp"
#include "sbal/linext.hpp"
#include "sbal/parallel.hpp"
#include "sbal/poset.hpp"
#include "sbal/ruskey.hpp"

// The reproduction suite: one entry per criterion, each with an
// expected-versus-actual summary.
namespace sbal::acceptance {

enum class Status { Pass, Fail, NotApplicable };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NotApplicable: return "N/A";
  }
  return "?";
}

struct Outcome {
  std::string id;
  std::string name;
  Status status = Status::Fail;
  std::string detail;
};

namespace detail {

inline Outcome make(std::string id, std::string name, bool ok, std::string detail) {
  return {std::move(id), std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)};
}

inline std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::vector<Poset> classes_up_to(std::size_t n_max) {
  std::vector<Poset> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto& level = poset_classes(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline std::size_t count_true(const std::vector<char>& v) { return std::count(v.begin(), v.end(), char{1}); }

}  // namespace detail

// The eight-element crown A-B-C-D-E-F-G-H with covers B<A, D<C, E<F, G<H,
// C<B, D<E, G<F, H<A; elements A..H are 0..7.
inline Poset eight_cycle() {
  return from_covers(8, {{1, 0}, {3, 2}, {4, 5}, {6, 7}, {2, 1}, {3, 4}, {6, 5}, {7, 0}});
}

// Every nonminimal element lies above at least two elements.
inline bool ruskey_condition(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    if (!p.is_minimal(x) && std::popcount(p.below(x)) < 2) return false;
  return true;
}

// Lengths (number of covers) of all maximal chains.
inline std::set<std::size_t> maximal_chain_lengths(const Poset& p) {
  std::set<std::size_t> out;
  auto walk = [&](auto&& self, Element x, std::size_t len) -> void {
    const Mask up = p.upper_covers(x);
    if (up == 0) {
      out.insert(len);
      return;
    }
    for_each_bit(up, [&](Element y) { self(self, y, len + 1); });
  };
  for (Element x = 0; x < p.size(); ++x)
    if (p.is_minimal(x)) walk(walk, x, 0);
  return out;
}

inline bool stanley_condition(const Poset& p) {
  for (std::size_t len : maximal_chain_lengths(p))
    if (len % 2 != p.size() % 2) return false;
  return true;
}

inline Outcome criterion_1() {
  const auto sc = signed_count(zigzag(6));
  std::ostringstream d;
  d << "expected e=61 si=1, got e=" << sc.total << " si=" << sc.imbalance;
  return detail::make("1", "zigzag(6) regression", sc.total == 61 && sc.imbalance == 1, d.str());
}

inline Outcome criterion_2() {
  const Poset p = eight_cycle();
  const auto tabs = enumerate_tableaux(p);
  std::vector<std::string> counts;
  std::multiset<BigInt> values;
  int sign_sum = 0;
  for (const auto& t : tabs) {
    const BigInt c = adapted_count(p, t);
    values.insert(c);
    counts.push_back(c.str());
    sign_sum += tableau_sign(p, t);
  }
  const BigInt si = si_via_quotients(p);
  const bool ok = tabs.size() == 2 && values == std::multiset<BigInt>{2, 4} && sign_sum == 0 && si == 2 &&
                  sign_imbalance(p) == 2;
  std::ostringstream d;
  d << "expected 2 tableaux, counts {4, 2}, opposite signs, si=2; got " << tabs.size() << " tableaux, counts {"
    << detail::join(counts) << "}, sign sum " << sign_sum << ", si=" << si;
  return detail::make("2", "quotient formula on the eight-element crown", ok, d.str());
}

inline Outcome criterion_3(std::size_t threads) {
  const auto all = detail::classes_up_to(7);
  const auto bad = parallel_map(all.size(), threads, [&](std::size_t i) -> char {
    const Poset& p = all[i];
    const auto brute = brute_signed_count(p);
    const auto dp = signed_count(p);
    const BigInt quot = si_via_quotients(p);
    return brute.total != dp.total || brute.signed_sum != dp.signed_sum || dp.imbalance != quot;
  });
  const std::size_t mismatches = detail::count_true(bad);
  std::ostringstream d;
  d << all.size() << " classes with n <= 7; expected 0 mismatches, got " << mismatches;
  return detail::make("3", "brute force = signed DP = quotient formula", mismatches == 0, d.str());
}

inline Outcome criterion_4(std::size_t threads) {
  const auto all = detail::classes_up_to(6);
  const auto bad = parallel_map(all.size(), threads, [&](std::size_t i) -> char {
    const Poset& p = all[i];
    std::vector<LinearExtension> fixed;
    for (const auto& ext : enumerate_extensions(p)) {
      const auto img = phi(p, ext);
      if (phi(p, img) != ext) return 1;
      if (img == ext)
        fixed.push_back(ext);
      else if (sign(p, img) != -sign(p, ext))
        return 1;
    }
    std::vector<LinearExtension> adapted;
    for (const auto& t : enumerate_tableaux(p)) {
      const int s = tableau_sign(p, t);
      for (auto& ext : adapted_extensions(p, t)) {
        if (sign(p, ext) != s) return 1;
        adapted.push_back(std::move(ext));
      }
    }
    std::sort(adapted.begin(), adapted.end());
    return fixed != adapted;
  });
  const std::size_t violations = detail::count_true(bad);
  std::ostringstream d;
  d << all.size() << " classes with n <= 6; expected 0 violations, got " << violations;
  return detail::make("4", "involution properties", violations == 0, d.str());
}

inline Outcome criterion_5() {
  std::size_t pairs = 0;
  std::size_t lemma_bad = 0;
  std::size_t trip_bad = 0;
  for (const Poset& p : detail::classes_up_to(4)) {
    const BigInt e = count_extensions(p);
    for (const GoodSet& r : enumerate_good_sets(p)) {
      ++pairs;
      const Poset a = build_A(r);
      if (sign_imbalance(a) != e) ++lemma_bad;
      const auto d = decompose(a);
      const bool ok = d.kind == H2Kind::Lift && d.lift && is_isomorphic(d.lift->base(), p) &&
                      is_isomorphic(build_A(*d.lift), a) && d.rebuild() == a;
      if (!ok) ++trip_bad;
    }
  }
  std::ostringstream d;
  d << pairs << " (P, R) pairs with |P| <= 4; expected 0 failures, got " << lemma_bad << " si(A) != e(P) and "
    << trip_bad << " round-trip failures";
  return detail::make("5", "si(A(P,R)) = e(P) and decompose round trip", lemma_bad == 0 && trip_bad == 0, d.str());
}

inline Outcome criterion_6() {
  std::ostringstream d;
  bool ok = true;
  try {
    const auto f6 = count_f(6);
    const auto f7 = count_f(7);
    const auto f8 = count_f(8);
    ok = f6.formula == 3 && f6.direct == 3 && f7.formula == 3 && f7.direct == 3 && f8.formula == f8.direct &&
         f8.direct > 8 && f8.direct < 64;
    d << "expected f(6)=f(7)=3 and 8 < f(8) < 64; got f(6)=" << f6.formula << "/" << f6.direct << " f(7)="
      << f7.formula << "/" << f7.direct << " f(8)=" << f8.formula << "/" << f8.direct << " (formula/direct)";
  } catch (const VerificationError& err) {
    ok = false;
    d << err.what();
  }
  return detail::make("6", "f(n) by formula and by enumeration", ok, d.str());
}

inline Outcome criterion_7() {
  std::ostringstream d;
  bool ok = true;
  try {
    const auto b2 = odd_e_bounds(2);
    const auto b3 = odd_e_bounds(3);
    std::vector<std::string> vals;
    for (const auto& v : b3.values) vals.push_back(v.str());
    ok = b3.values == std::vector<BigInt>{57, 61, 75};
    d << "bounds hold on 4 and 6 vertices (" << b2.classes << " + " << b3.classes
      << " odd classes); expected {57, 61, 75}, got {" << detail::join(vals) << "}";
  } catch (const VerificationError& err) {
    ok = false;
    d << err.what();
  }
  return detail::make("7", "odd-e bounds and the 6-vertex spectrum", ok, d.str());
}

inline Outcome criterion_8() {
  const auto r = odd_e_divisibility(5);
  std::ostringstream d;
  d << r.odd_classes << " odd-e classes on 5 vertices; expected 0 with 5 not dividing e, got " << r.violations.size();
  return detail::make("8", "divisibility on 5 vertices", r.odd_classes > 0 && r.violations.empty(), d.str());
}

inline Outcome criterion_9(std::size_t threads) {
  std::vector<Poset> all;
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto& level = height_two_classes(n);
    all.insert(all.end(), level.begin(), level.end());
  }
  const auto bad = parallel_map(all.size(), threads, [&](std::size_t i) -> char {
    const BigInt si = brute_signed_count(all[i]).imbalance;
    for (std::size_t k = 0; k <= 8; ++k) {
      const auto r = h2sb_evaluate(all[i], k);
      if (r.at_least != (si >= k) || r.enumerated > k) return 1;
    }
    return 0;
  });
  const std::size_t mismatches = detail::count_true(bad);
  std::ostringstream d;
  d << all.size() << " height <= 2 classes with n <= 8, k = 0..8; expected 0 disagreements, got " << mismatches;
  return detail::make("9", "H2SB decider", mismatches == 0, d.str());
}

inline Outcome criterion_10(std::size_t threads) {
  const auto all = detail::classes_up_to(7);
  // bits 0/1: Ruskey/Stanley hypothesis holds; bits 2/3: it holds and si != 0.
  const auto flags = parallel_map(all.size(), threads, [&](std::size_t i) -> int {
    const Poset& p = all[i];
    const bool ruskey = p.size() >= 2 && ruskey_condition(p);
    const bool stanley = p.size() >= 1 && stanley_condition(p);
    if (!ruskey && !stanley) return 0;
    const bool balanced = sign_imbalance(p) == 0;
    return (ruskey ? 1 : 0) | (stanley ? 2 : 0) | (ruskey && !balanced ? 4 : 0) | (stanley && !balanced ? 8 : 0);
  });
  std::size_t ruskey_hits = 0, stanley_hits = 0, ruskey_bad = 0, stanley_bad = 0;
  for (int f : flags) {
    ruskey_hits += f & 1;
    stanley_hits += (f >> 1) & 1;
    ruskey_bad += (f >> 2) & 1;
    stanley_bad += (f >> 3) & 1;
  }
  std::size_t white_bad = 0;
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n)
      if ((sign_imbalance(grid(m, n)) == 0) != (m % 2 == n % 2)) ++white_bad;
  std::ostringstream d;
  d << "expected 0 exceptions; got Ruskey " << ruskey_bad << "/" << ruskey_hits << ", Stanley " << stanley_bad << "/"
    << stanley_hits << " (exceptions/applicable, n <= 7), grid law " << white_bad << " (2 <= m, n <= 4)";
  return detail::make("10", "classical sign-balance criteria", ruskey_bad + stanley_bad + white_bad == 0, d.str());
}

inline Outcome criterion_11(std::size_t threads) {
  const auto six = detail::classes_up_to(6);
  const auto graph_bad = parallel_map(six.size(), threads, [&](std::size_t i) -> char {
    const Poset& p = six[i];
    const auto adj = build_graph(p, Adjacency::Adjacent);
    const auto arb = build_graph(p, Adjacency::Arbitrary);
    const BigInt si = sign_imbalance(p);
    const auto parts = bipartition(arb);
    return !is_connected(adj) || !parts.proper || BigInt(parts.difference()) != si;
  });
  const auto five = detail::classes_up_to(5);
  const auto sweep_bad = parallel_map(five.size(), threads, [&](std::size_t i) -> char {
    const auto r = ruskey_report(five[i]);
    return !r.consistent_with_conjecture || (r.path_found && r.si > 1);
  });
  const std::size_t gb = detail::count_true(graph_bad);
  const std::size_t sb = detail::count_true(sweep_bad);
  std::ostringstream d;
  d << "expected 0 failures; got " << gb << " connectivity/bipartition failures over " << six.size()
    << " classes (n <= 6), " << sb << " Hamiltonian sweep inconsistencies over " << five.size() << " classes (n <= 5)";
  return detail::make("11", "transposition graph properties", gb == 0 && sb == 0, d.str());
}

inline Outcome criterion_12(std::size_t threads) {
  const auto all = detail::classes_up_to(6);
  const std::vector<std::uint64_t> qs{2, 3, 5};
  const auto bad = parallel_map(all.size(), threads, [&](std::size_t i) -> std::size_t {
    std::size_t fails = 0;
    for (auto q : qs)
      if (count_mod(all[i], q) != 0 && !exists_q_adapted(all[i], q)) ++fails;
    return fails;
  });
  std::size_t total = 0;
  for (auto b : bad) total += b;
  std::ostringstream d;
  d << all.size() << " classes with n <= 6, q in {2, 3, 5}; expected 0 missing adapted extensions, got " << total;
  return detail::make("12", "q not dividing e implies a q-adapted extension", total == 0, d.str());
}

inline std::vector<Outcome> criterion_13(std::size_t threads) {
  std::vector<Outcome> out;
  {
    const auto table = euler_numbers(12);
    std::vector<std::string> bad;
    for (std::size_t n = 1; n <= 12; ++n)
      if (table(n) != count_extensions(zigzag(n))) bad.push_back(std::to_string(n));
    out.push_back(detail::make("13a", "E_n = e(zigzag(n)) for n <= 12", bad.empty(),
                               "expected agreement for n = 1..12; mismatches at {" + detail::join(bad) + "}"));
  }
  for (std::uint64_t q : {2, 3, 5, 7, 11}) {
    std::vector<std::string> bad;
    for (std::size_t n = q + 1; n <= 30; ++n)
      if (!check_congruence(n, q)) bad.push_back(std::to_string(n));
    std::string shown = detail::join(bad);
    out.push_back(detail::make("13b/q=" + std::to_string(q),
                               "E_n = E_q E_{n-q+1} (mod " + std::to_string(q) + ") for q < n <= 30", bad.empty(),
                               "expected no failing n; failing n = {" + shown + "}"));
  }
  {
    const std::vector<std::uint64_t> expected{3,   7,   11,  23,  83,  107, 163, 167, 179, 191, 199,
                                              211, 227, 239, 367, 383, 443, 479, 487, 503, 599};
    const auto scan = scan_primes_never_dividing(600, threads);
    std::vector<std::string> got;
    for (auto q : scan.primes) got.push_back(std::to_string(q));
    out.push_back(detail::make("13c", "primes p <= 600 never dividing E_n", scan.primes == expected,
                               "expected 21 primes 3 ... 599; got {" + detail::join(got) + "}"));
  }
  return out;
}

inline Outcome criterion_14() {
  return {"14", "asymptotic and large-scale statements", Status::NotApplicable,
          "declared not reproducible at desk scale; criteria 6-8 cover property analogues"};
}

inline std::vector<Outcome> run_all(std::size_t threads, const std::function<void(const Outcome&)>& on_result = {}) {
  std::vector<Outcome> out;
  auto add = [&](Outcome o) {
    if (on_result) on_result(o);
    out.push_back(std::move(o));
  };
  add(criterion_1());
  add(criterion_2());
  add(criterion_3(threads));
  add(criterion_4(threads));
  add(criterion_5());
  add(criterion_6());
  add(criterion_7());
  add(criterion_8());
  add(criterion_9(threads));
  add(criterion_10(threads));
  add(criterion_11(threads));
  add(criterion_12(threads));
  for (auto& o : criterion_13(threads)) add(std::move(o));
  add(criterion_14());
  return out;
}

inline bool all_passed(const std::vector<Outcome>& results) {
  return std::none_of(results.begin(), results.end(), [](const Outcome& o) { return o.status == Status::Fail; });
}

inline std::string format_line(const Outcome& o) {
  return std::string(to_string(o.status)) + " [" + o.id + "] " + o.name + ": " + o.detail;
}

}  // namespace sbal::acceptance
