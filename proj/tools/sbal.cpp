// sbal: command-line front end for the sign-imbalance library.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbal/acceptance.hpp"
#include "sbal/domino.hpp"
#include "sbal/euler.hpp"
#include "sbal/formats.hpp"
#include "sbal/h2.hpp"
#include "sbal/linext.hpp"
#include "sbal/parallel.hpp"
#include "sbal/poset_io.hpp"
#include "sbal/report.hpp"
#include "sbal/ruskey.hpp"

namespace {

using namespace sbal;
using report::json;

constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Options {
  bool as_json = false;
  std::size_t threads = default_threads();
  std::size_t downset_cap = kDefaultDownsetCap;
  std::size_t enum_cap = kDefaultEnumerationCap;
  std::size_t graph_cap = kDefaultGraphCap;
  std::size_t path_cap = kDefaultPathCap;
};

Poset load_poset(const std::string& source) {
  if (auto family = parse_family(source)) return *family;
  if (source == "-") return read_poset(std::cin);
  std::ifstream in(source);
  if (!in) throw ParseError("cannot open '" + source + "'");
  return read_poset(in);
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_count(const Options& o, const std::string& input, bool list) {
  const Poset p = load_poset(input);
  const BigInt e = count_extensions(p, o.downset_cap);
  std::vector<LinearExtension> exts;
  if (list) exts = enumerate_extensions(p, o.enum_cap);
  if (o.as_json) {
    json j{{"n", p.size()}, {"e", e.str()}};
    if (list) {
      json arr = json::array();
      for (const auto& x : exts) arr.push_back(x.labels);
      j["extensions"] = arr;
    }
    emit(j);
  } else {
    std::cout << "e = " << e << '\n';
    if (list) std::cout << format_extensions(exts);
  }
  return 0;
}

int cmd_si(const Options& o, const std::string& input) {
  const Poset p = load_poset(input);
  const auto dp = signed_count(p, o.downset_cap);
  const BigInt quot = si_via_quotients(p, o.downset_cap);
  std::optional<SignedCount> brute;
  if (dp.total <= o.enum_cap) brute = brute_signed_count(p, o.enum_cap);
  const bool agree = quot == dp.imbalance && (!brute || (brute->total == dp.total && brute->signed_sum == dp.signed_sum));
  if (o.as_json) {
    json j = report::counts_json(p, o.downset_cap);
    j["quotient_si"] = quot.str();
    j["brute"] = brute ? json{{"e", brute->total.str()}, {"signed", brute->signed_sum.str()}, {"si", brute->imbalance.str()}}
                       : json(nullptr);
    j["agree"] = agree;
    emit(j);
  } else {
    std::cout << "method     e                    signed               si\n";
    auto row = [](const char* name, const SignedCount& sc) {
      std::cout << std::left << std::setw(11) << name << std::setw(21) << sc.total.str() << std::setw(21)
                << sc.signed_sum.str() << sc.imbalance << '\n';
    };
    if (brute)
      row("brute", *brute);
    else
      std::cout << "brute      skipped (e exceeds the enumeration cap)\n";
    row("dp", dp);
    std::cout << std::left << std::setw(11) << "quotient" << std::setw(42) << "" << quot << '\n';
    std::cout << (agree ? "agree\n" : "DISAGREE\n");
  }
  return agree ? 0 : kExitVerification;
}

int cmd_domino(const Options& o, const std::string& input, const std::string& check) {
  const Poset p = load_poset(input);
  if (!check.empty()) {
    auto in = open_file(check);
    const DominoTableau t = read_tableau(in);
    const bool ok = is_tableau(p, t);
    if (o.as_json)
      emit(ok ? report::tableau_json(p, t, o.downset_cap) : json{{"tableau", false}});
    else
      std::cout << (ok ? "tableau\n" : "not a tableau (cyclic quotient)\n");
    return ok ? 0 : kExitVerification;
  }
  const auto tabs = enumerate_tableaux(p);
  if (o.as_json) {
    json arr = json::array();
    for (const auto& t : tabs) arr.push_back(report::tableau_json(p, t, o.downset_cap));
    emit({{"n", p.size()}, {"tableaux", arr}, {"si", si_via_quotients(p, o.downset_cap).str()}});
    return 0;
  }
  std::cout << tabs.size() << " domino tableau(x)\n";
  for (std::size_t i = 0; i < tabs.size(); ++i) {
    const auto& t = tabs[i];
    std::cout << "# tableau " << i << ": sign " << (tableau_sign(p, t) > 0 ? '+' : '-') << ", adapted extensions "
              << adapted_count(p, t, o.downset_cap) << '\n'
              << format_tableau(t) << "# quotient\n"
              << format_poset(quotient(p, t));
  }
  std::cout << "si = " << si_via_quotients(p, o.downset_cap) << '\n';
  return 0;
}

int cmd_lift(const Options& o, const std::string& input, const std::string& rel_path) {
  const Poset p = load_poset(input);
  GoodSet r = GoodSet::minimal(p);
  if (!rel_path.empty()) {
    auto in = open_file(rel_path);
    r = read_good_set(p, in);
  }
  const Poset a = build_A(r);
  if (o.as_json)
    emit({{"good_set", report::good_set_json(r)}, {"lift", report::poset_json(a)}});
  else
    std::cout << format_poset(a);
  return 0;
}

int cmd_decompose(const Options& o, const std::string& input) {
  const Poset q = load_poset(input);
  const auto d = decompose(q);
  if (o.as_json) {
    emit(report::decomposition_json(d));
    return 0;
  }
  std::cout << "kind: " << to_string(d.kind) << '\n';
  if (d.lift) {
    std::cout << "# base poset\n" << format_poset(d.lift->base()) << "# good set (extra pairs)\n"
              << format_good_set(*d.lift);
    std::cout << "# embedding";
    for (auto e : d.embedding) std::cout << ' ' << e;
    std::cout << '\n';
  }
  if (d.isolated) std::cout << "isolated: " << *d.isolated << '\n';
  return 0;
}

int cmd_h2sb(const Options& o, const std::string& input, std::size_t k) {
  const Poset q = load_poset(input);
  const auto r = h2sb_evaluate(q, k);
  if (o.as_json)
    emit(report::h2sb_json(r, k));
  else
    std::cout << "si >= " << k << ": " << (r.at_least ? "yes" : "no") << " (" << to_string(r.kind) << ", "
              << r.enumerated << " extensions visited)\n";
  return 0;
}

int cmd_f(const Options& o, std::size_t n, std::optional<std::uint64_t> q) {
  if (q && *q != 2) {
    const std::size_t c = count_f_q(n, *q);
    if (o.as_json)
      emit({{"n", n}, {"q", *q}, {"count", c}});
    else
      std::cout << "f_" << *q << "(" << n << ") = " << c << '\n';
    return 0;
  }
  const auto f = count_f(n);
  if (o.as_json)
    emit(report::f_json(f));
  else
    std::cout << "f(" << n << ") = " << f.formula << " (formula), " << f.direct << " (direct)\n";
  return 0;
}

int cmd_bounds(const Options& o, std::size_t n) {
  const auto r = odd_e_bounds(n);
  if (o.as_json) {
    emit(report::bounds_json(r));
    return 0;
  }
  std::cout << r.classes << " odd-e classes on " << 2 * n << " vertices, all within [" << r.lower << ", " << r.upper
            << "]\nvalues:";
  for (const auto& v : r.values) std::cout << ' ' << v;
  std::cout << '\n';
  return 0;
}

int cmd_spectrum(const Options& o, std::size_t max_n) {
  const auto s = spectrum(max_n);
  if (o.as_json) {
    emit(report::spectrum_json(s));
    return 0;
  }
  std::cout << "values:";
  for (const auto& [e, w] : s.witnesses) std::cout << ' ' << e;
  std::cout << "\ngaps:";
  for (const auto& g : s.gaps) std::cout << ' ' << g;
  std::cout << '\n';
  return 0;
}

int cmd_ruskey(const Options& o, const std::string& input, bool adjacent, bool hampath, bool export_graph) {
  const Poset p = load_poset(input);
  const Adjacency mode = adjacent ? Adjacency::Adjacent : Adjacency::Arbitrary;
  const auto g = build_graph(p, mode, o.graph_cap);
  if (export_graph) {
    std::cout << format_graph(g);
    return 0;
  }
  RuskeyReport r;
  r.mode = mode;
  r.si = sign_imbalance(p, o.downset_cap);
  r.vertices = g.vertex_count();
  r.connected = is_connected(g);
  r.parts = bipartition(g);
  std::optional<std::vector<std::size_t>> path;
  if (hampath) {
    path = hamiltonian_path(g, o.path_cap);
    r.path_found = path.has_value();
    r.consistent_with_conjecture = r.path_found == (r.si <= 1);
  }
  if (o.as_json) {
    json j = report::ruskey_json(r);
    if (!hampath) {
      j["path_found"] = nullptr;
      j["consistent"] = nullptr;
    } else {
      j["path"] = path ? json(*path) : json(nullptr);
    }
    emit(j);
  } else {
    std::cout << "mode: " << to_string(mode) << "\nvertices: " << r.vertices << "\nedges: " << g.edges().size()
              << "\nconnected: " << (r.connected ? "yes" : "no") << "\nparts: " << r.parts.positive << " even, "
              << r.parts.negative << " odd\nsi: " << r.si << '\n';
    if (hampath) {
      std::cout << "hamiltonian path: " << (r.path_found ? "found" : "none") << '\n';
      if (path) {
        std::cout << "path:";
        for (auto v : *path) std::cout << ' ' << v;
        std::cout << '\n';
      }
      std::cout << "consistent with conjecture: " << (r.consistent_with_conjecture ? "yes" : "no") << '\n';
    }
  }
  if (hampath && !r.consistent_with_conjecture) return kExitVerification;
  return 0;
}

int cmd_euler(const Options& o, std::size_t max_n, bool congruence, std::vector<std::uint64_t> qs, bool primes,
              std::uint64_t bound, std::vector<std::uint64_t> avoid) {
  if (primes) {
    const auto scan = scan_primes_never_dividing(bound, o.threads);
    json arr = scan.primes;
    if (o.as_json)
      std::cout << arr.dump() << '\n';
    else
      for (std::size_t i = 0; i < scan.primes.size(); ++i)
        std::cout << scan.primes[i] << (i + 1 < scan.primes.size() ? ", " : "\n");
    return 0;
  }
  if (!avoid.empty()) {
    const std::set<std::uint64_t> qset(avoid.begin(), avoid.end());
    const auto r = prime_avoiding_poset(qset, 2, max_n, o.downset_cap);
    if (o.as_json)
      emit({{"n", r.n}, {"e", count_extensions(r.poset, o.downset_cap).str()}, {"poset", report::poset_json(r.poset)}});
    else
      std::cout << "zigzag(" << r.n << "), e = " << count_extensions(r.poset, o.downset_cap) << '\n';
    return 0;
  }
  if (congruence) {
    if (qs.empty()) qs = {2, 3, 5, 7, 11};
    json rows = json::array();
    bool all_ok = true;
    for (auto q : qs) {
      std::vector<std::size_t> failing;
      for (std::size_t n = q + 1; n <= max_n; ++n)
        if (!check_congruence(n, q)) failing.push_back(n);
      all_ok = all_ok && failing.empty();
      if (o.as_json)
        rows.push_back({{"q", q}, {"max_n", max_n}, {"holds", failing.empty()}, {"failing", failing}});
      else {
        std::cout << "q = " << q << ": " << (failing.empty() ? "holds" : "fails at n =");
        for (auto n : failing) std::cout << ' ' << n;
        std::cout << '\n';
      }
    }
    if (o.as_json) emit(rows);
    return all_ok ? 0 : kExitVerification;
  }
  const auto table = euler_numbers(max_n);
  if (o.as_json) {
    json arr = json::array();
    for (const auto& v : table.values()) arr.push_back(v.str());
    emit(arr);
  } else {
    for (const auto& v : table.values()) std::cout << v << '\n';
  }
  return 0;
}

int cmd_verify_all(const Options& o) {
  json arr = json::array();
  const auto results = acceptance::run_all(o.threads, [&](const acceptance::Outcome& r) {
    if (o.as_json)
      arr.push_back({{"id", r.id}, {"name", r.name}, {"status", acceptance::to_string(r.status)}, {"detail", r.detail}});
    else
      std::cout << acceptance::format_line(r) << std::endl;
  });
  if (o.as_json) emit(arr);
  return acceptance::all_passed(results) ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear extensions, sign imbalance and domino tableaux of finite posets"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.as_json, "Print JSON instead of text");
  app.add_option("--threads", o.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--downset-cap", o.downset_cap, "Maximum number of down-sets visited")->check(CLI::PositiveNumber);
  app.add_option("--enum-cap", o.enum_cap, "Maximum number of extensions enumerated")->check(CLI::PositiveNumber);
  app.add_option("--graph-cap", o.graph_cap, "Maximum transposition graph size")->check(CLI::PositiveNumber);
  app.add_option("--path-cap", o.path_cap, "Maximum graph size for the Hamiltonian search")->check(CLI::PositiveNumber);
  app.fallthrough();

  const std::string input_help = "Poset file, '-' for stdin, or chain:n | antichain:n | zigzag:n | grid:m:n";
  std::string input;
  std::string extra_path;
  std::size_t k = 0;
  std::size_t n = 0;
  std::optional<std::uint64_t> q;
  std::size_t max_n = 30;
  std::uint64_t bound = 600;
  bool flag_a = false;
  bool flag_b = false;
  bool flag_c = false;
  std::vector<std::uint64_t> qs;
  std::vector<std::uint64_t> avoid;

  auto* count = app.add_subcommand("count", "Number of linear extensions");
  count->add_option("poset", input, input_help)->required();
  count->add_flag("--list", flag_a, "Also list every extension");

  auto* si = app.add_subcommand("si", "Sign imbalance by brute force, down-set DP and domino quotients");
  si->add_option("poset", input, input_help)->required();

  auto* domino = app.add_subcommand("domino", "Domino tableaux and their quotients");
  domino->add_option("poset", input, input_help)->required();
  domino->add_option("--check", extra_path, "Tableau file to validate instead of listing");

  auto* lift = app.add_subcommand("lift", "Height-2 lift A(P, R)");
  lift->add_option("poset", input, input_help)->required();
  lift->add_option("relations", extra_path, "File of 'r x y' lines (default: covers only)");

  auto* dec = app.add_subcommand("decompose", "Split a height <= 2 poset into a lift");
  dec->add_option("poset", input, input_help)->required();

  auto* h2sb = app.add_subcommand("h2sb", "Decide si >= k for a height <= 2 poset");
  h2sb->add_option("poset", input, input_help)->required();
  h2sb->add_option("--k", k, "Threshold")->required();

  auto* f = app.add_subcommand("f", "Height <= 2 classes on n vertices with e not divisible by q");
  f->add_option("--n", n, "Number of vertices")->required();
  f->add_option("--q", q, "Prime modulus (default 2)");

  auto* bounds = app.add_subcommand("bounds", "Odd-e bounds over height-2 classes on 2n vertices");
  bounds->add_option("--n", n, "Half the number of vertices")->required();

  auto* spec = app.add_subcommand("spectrum", "Achievable e over height <= 2 posets");
  spec->add_option("--max-n", max_n, "Largest number of vertices")->required();

  auto* rus = app.add_subcommand("ruskey", "Transposition graph report");
  rus->add_option("poset", input, input_help)->required();
  rus->add_flag("--adjacent", flag_a, "Only swap labels i and i + 1");
  rus->add_flag("--hampath", flag_b, "Search for a Hamiltonian path");
  rus->add_flag("--export", flag_c, "Print the vertex table and edge list");

  auto* eul = app.add_subcommand("euler", "Euler zigzag numbers");
  eul->add_option("--max-n", max_n, "Table length (default 30)");
  eul->add_flag("--congruence", flag_a, "Check E_n = E_q E_{n-q+1} (mod q) for q < n <= max-n");
  eul->add_option("--q", qs, "Moduli for --congruence (default 2 3 5 7 11)");
  eul->add_flag("--primes", flag_b, "Primes never dividing any E_n");
  eul->add_option("--bound", bound, "Prime bound for --primes (default 600)");
  eul->add_option("--avoid", avoid, "Least zigzag poset with e = 1 mod each listed prime");

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*count) return cmd_count(o, input, flag_a);
    if (*si) return cmd_si(o, input);
    if (*domino) return cmd_domino(o, input, extra_path);
    if (*lift) return cmd_lift(o, input, extra_path);
    if (*dec) return cmd_decompose(o, input);
    if (*h2sb) return cmd_h2sb(o, input, k);
    if (*f) return cmd_f(o, n, q);
    if (*bounds) return cmd_bounds(o, n);
    if (*spec) return cmd_spectrum(o, max_n);
    if (*rus) return cmd_ruskey(o, input, flag_a, flag_b, flag_c);
    if (*eul) return cmd_euler(o, max_n, flag_a, qs, flag_b, bound, avoid);
    if (*verify) return cmd_verify_all(o);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
