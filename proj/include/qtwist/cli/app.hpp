#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtwist/cli/report.hpp"
#include "qtwist/cli/runner.hpp"
#include "qtwist/cli/suites.hpp"
#include "qtwist/pattern/pattern.hpp"
#include "qtwist/repvar/group.hpp"
#include "qtwist/repvar/twisted.hpp"

namespace qtwist::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Raised for bad input; carries the message printed before exiting with 2.
struct UsageError : Error {
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline DecoratedPattern load_pattern(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_pattern(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

/// sl_n from the pattern's D tag and --algebra; they must agree when both
/// are present.
inline LieAlgebraPtr resolve_algebra(const DecoratedPattern& d, const std::string& flag) {
  std::size_t from_flag = 0;
  if (!flag.empty()) {
    if (flag.size() < 3 || flag.rfind("sl", 0) != 0 ||
        !std::all_of(flag.begin() + 2, flag.end(), [](unsigned char c) { return std::isdigit(c); }) || flag.size() > 4) {
      throw UsageError("--algebra: expected sl<n>, got '" + flag + "'");
    }
    from_flag = std::stoul(flag.substr(2));
    if (from_flag < 2) throw UsageError("--algebra: n must be at least 2");
  }
  std::size_t from_tag = d.dynkin_rank ? d.dynkin_rank + 1 : 0;
  if (from_flag && from_tag && from_flag != from_tag) {
    throw UsageError("--algebra " + flag + " contradicts D=A" + std::to_string(d.dynkin_rank));
  }
  std::size_t n = from_flag ? from_flag : from_tag ? from_tag : 3;
  bool flips = std::any_of(d.labels.begin(), d.labels.end(), [](AutKind k) { return k == AutKind::flip; });
  if (n == 2 && flips) throw UsageError("sl2 has no flip automorphism");
  return build_sl(n);
}

inline FiniteGroup resolve_group(const std::string& desc) {
  auto numeric_suffix = [&](std::size_t from) {
    if (desc.size() <= from || desc.size() > from + 4) return false;
    return std::all_of(desc.begin() + static_cast<std::ptrdiff_t>(from), desc.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  try {
    if (desc.size() > 1 && desc[0] == 'Z' && numeric_suffix(1)) return cyclic_group(std::stoul(desc.substr(1)));
    if (desc.size() > 1 && desc[0] == 'S' && numeric_suffix(1)) return symmetric_group(std::stoul(desc.substr(1)));
    std::string text = read_file(desc);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError(desc + ": " + e.what());
    }
    return group_from_json(j, desc);
  } catch (const DomainError& e) {
    throw UsageError(desc + ": " + e.what());
  }
}

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, ',')) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty item in list '" + s + "'");
    out.push_back(cur.substr(b, e - b + 1));
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

struct Options {
  std::string pattern;
  std::string group;
  std::string twists;
  std::string checks = "jacobi,agree,equivariance";
  std::string json;
  std::string algebra;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool timing = false;
};

inline int finish(const std::vector<CheckReport>& reps, const Options& o, std::ostream& out) {
  print_summary(reps, out);
  if (!o.json.empty()) emit_report(reps, o.json, o.timing);
  return all_pass(reps) ? kExitPass : kExitFail;
}

inline int cmd_classify(const Options& o, std::ostream& out) {
  auto d = load_pattern(o.pattern);
  out << "P=" << to_string(d.pattern) << " labels=" << labels_string(d.labels) << "\n";
  if (d.n() < 2) out << "no edge pairs\n";
  for (std::size_t i = 0; i < d.n(); ++i)
    for (std::size_t j = i + 1; j < d.n(); ++j)
      out << "(" << i + 1 << "," << j + 1 << ") " << to_string(classify_pair(d.pattern, i, j)) << "\n";
  return kExitPass;
}

inline int cmd_surface(const Options& o, std::ostream& out) {
  auto d = load_pattern(o.pattern);
  auto s = surface_invariants(d.pattern);
  out << "g=" << s.genus << " r=" << s.boundary_count << "\n";
  auto words = boundary_words(d);
  for (std::size_t k = 0; k < words.size(); ++k) {
    out << "boundary " << k + 1 << ": " << to_string(words[k].letters) << " [" << to_string(words[k].holonomy) << "]\n";
  }
  return kExitPass;
}

inline int cmd_orbits(const Options& o, std::ostream& out) {
  FiniteGroup g = resolve_group(o.group);
  TwistData rho;
  try {
    for (const auto& t : split_csv(o.twists)) rho.twists.push_back(parse_twist(g, t));
  } catch (const DomainError& e) {
    throw UsageError(std::string("--twists: ") + e.what());
  }
  std::string target = o.group + " twists=" + o.twists;
  std::vector<Task> tasks{{"repvar.orbits", target, [&g, &rho, &out](CheckReport& rep) {
                             auto uf = orbit_count(g, rho);
                             auto bs = burnside_count(g, rho);
                             auto gc = groupoid_cardinality(g, rho);
                             Rational expect = 1;
                             for (std::size_t i = 1; i < rho.n(); ++i) expect *= static_cast<unsigned long>(g.order());
                             out << "orbits=" << uf << "\n"
                                 << "burnside=" << qtwist::to_string(bs) << "\n"
                                 << "groupoid_cardinality=" << qtwist::to_string(gc) << "\n";
                             rep.checked = 2;
                             if (Rational(static_cast<unsigned long>(uf)) != bs || gc != expect) {
                               fail_with(rep, {{"union_find", uf},
                                               {"burnside", qtwist::to_string(bs)},
                                               {"groupoid_cardinality", qtwist::to_string(gc)},
                                               {"expected_cardinality", qtwist::to_string(expect)}});
                             }
                           }}};
  return finish(run_tasks(tasks, 1), o, out);
}

inline int cmd_poisson(const Options& o, std::ostream& out) {
  auto d = load_pattern(o.pattern);
  auto g = resolve_algebra(d, o.algebra);
  std::vector<Task> tasks;
  for (const auto& c : split_csv(o.checks)) {
    const auto& known = known_poisson_checks();
    if (std::find(known.begin(), known.end(), c) == known.end()) throw UsageError("--checks: unknown check '" + c + "'");
    tasks.push_back(poisson_task(c, d, g, o.seed));
  }
  return finish(run_tasks(tasks, o.jobs), o, out);
}

inline int cmd_verify_quantisation(const Options& o, std::ostream& out) {
  auto d = load_pattern(o.pattern);
  auto g = resolve_algebra(d, o.algebra);
  return finish(run_tasks(quantisation_tasks(d, g), o.jobs), o, out);
}

inline int cmd_verify_all(const Options& o, std::ostream& out) { return finish(run_tasks(builtin_suite(), o.jobs), o, out); }

/// Entry point shared by the executable and the end-to-end tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for twisted character varieties and their first-order quantisation", "qtwist"};
  app.require_subcommand(1);
  Options o;

  auto add_pattern = [&](CLI::App* c) { c->add_option("--pattern", o.pattern, "pattern file")->required(); };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--json", o.json, "write the JSON report to this path");
    c->add_option("--seed", o.seed, "seed for sampled fallback paths");
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    c->add_flag("--timing", o.timing, "include elapsed_ms in the JSON report");
  };
  auto add_algebra = [&](CLI::App* c) { c->add_option("--algebra", o.algebra, "sl<n>; defaults to the D tag, else sl3"); };

  auto* classify = app.add_subcommand("classify", "print the pair-class table");
  add_pattern(classify);
  auto* surface = app.add_subcommand("surface", "print genus and boundary count");
  add_pattern(surface);
  auto* orbits = app.add_subcommand("orbits", "count twisted-conjugation orbits");
  orbits->add_option("--group", o.group, "Z<m>, S<m> or a group JSON file")->required();
  orbits->add_option("--twists", o.twists, "comma-separated twists, one per edge")->required();
  add_common(orbits);
  auto* poisson = app.add_subcommand("poisson", "check the twisted Fock-Rosly bivector");
  add_pattern(poisson);
  poisson->add_option("--checks", o.checks, "comma-separated subset of jacobi,agree,equivariance,antisymmetry,leibniz");
  add_algebra(poisson);
  add_common(poisson);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->require_subcommand(1);
  auto* quant = verify->add_subcommand("quantisation", "commutator against bracket for one pattern");
  add_pattern(quant);
  add_algebra(quant);
  add_common(quant);
  auto* all = verify->add_subcommand("all", "the built-in suite");
  add_common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(o, out);
    if (*surface) return cmd_surface(o, out);
    if (*orbits) return cmd_orbits(o, out);
    if (*poisson) return cmd_poisson(o, out);
    if (*quant) return cmd_verify_quantisation(o, out);
    if (*all) return cmd_verify_all(o, out);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace qtwist::cli
