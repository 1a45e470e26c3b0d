#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qtwist/cli/report.hpp"
#include "qtwist/lie/dynkin.hpp"
#include "qtwist/lie/r_matrix.hpp"
#include "qtwist/pattern/pattern.hpp"
#include "qtwist/poisson/builders.hpp"
#include "qtwist/poisson/checks.hpp"
#include "qtwist/rea/deformation.hpp"
#include "qtwist/repvar/twisted.hpp"

namespace qtwist::cli {

/// Jacobi enumerates every coordinate triple up to this many; beyond it
/// a seeded sample of this size is used.
inline constexpr std::size_t kExhaustiveTriples = 5000;

/// Sampling seed of the built-in suite, fixed so `verify all` does not
/// depend on --seed.
inline constexpr std::uint64_t kSuiteSeed = 1;

inline std::vector<std::string> label_names(const std::vector<AutKind>& labels) {
  std::vector<std::string> out;
  for (auto k : labels) out.push_back(to_string(k));
  return out;
}

inline std::string config_target(const DecoratedPattern& d, std::size_t n) {
  std::string s = "P=" + to_string(d.pattern) + " labels=";
  for (std::size_t k = 0; k < d.labels.size(); ++k) s += (k ? "," : "") + to_string(d.labels[k]);
  return s + " sl" + std::to_string(n);
}

using ConfigBody = std::function<void(CheckReport&, const DecoratedPattern&, const ClassicalRMatrix&)>;

/// Task bound to one decorated pattern with the standard r-matrix of g.
inline Task config_task(std::string check, const DecoratedPattern& d, const LieAlgebraPtr& g, ConfigBody body) {
  std::string target = config_target(d, g->n());
  return Task{std::move(check), target, [d, g, body](CheckReport& rep) {
                rep.pattern = to_string(d.pattern);
                rep.labels = label_names(d.labels);
                ClassicalRMatrix r = standard_r_matrix(g);
                body(rep, d, r);
              }};
}

inline std::vector<VarTriple> jacobi_triples(const CoordinateSpace& cs, std::uint64_t seed) {
  auto count = cs.size();
  if (count * (count - 1) * (count - 2) / 6 <= kExhaustiveTriples) return all_coordinate_triples(count);
  return sample_coordinate_triples(cs, kExhaustiveTriples, seed);
}

inline const std::vector<std::string>& known_poisson_checks() {
  static const std::vector<std::string> names{"agree", "antisymmetry", "equivariance", "jacobi", "leibniz"};
  return names;
}

inline Task poisson_task(const std::string& name, const DecoratedPattern& d, const LieAlgebraPtr& g,
                         std::uint64_t seed) {
  ConfigBody body;
  if (name == "jacobi") {
    body = [seed](CheckReport& rep, const DecoratedPattern& d, const ClassicalRMatrix& r) {
      auto pi = fock_rosly_bivector(d, r);
      apply_outcome(rep, summarize_jacobi(pi, jacobi_triples(pi.coords(), seed)));
    };
  } else if (name == "agree") {
    body = [](CheckReport& rep, const DecoratedPattern& d, const ClassicalRMatrix& r) {
      apply_outcome(rep, check_forms_agree(d, r));
    };
  } else if (name == "equivariance") {
    body = [](CheckReport& rep, const DecoratedPattern& d, const ClassicalRMatrix& r) {
      auto pi = fock_rosly_bivector(d, r);
      apply_outcome(rep, check_equivariance(pi));
      apply_outcome(rep, check_equivariance_cartan(pi));
    };
  } else if (name == "antisymmetry") {
    body = [](CheckReport& rep, const DecoratedPattern& d, const ClassicalRMatrix& r) {
      auto pi = fock_rosly_bivector(d, r);
      const auto& cs = pi.coords();
      CheckOutcome o;
      for (VarId u = 0; u < cs.size(); ++u)
        for (VarId v = 0; v < cs.size(); ++v) {
          ++o.checked;
          Poly s = pi.on_coordinates(u, v) + pi.on_coordinates(v, u);
          if (!s.is_zero()) o.record_failure({cs.vars()->name(u), cs.vars()->name(v)}, to_string(s));
        }
      apply_outcome(rep, o);
    };
  } else if (name == "leibniz") {
    body = [seed](CheckReport& rep, const DecoratedPattern& d, const ClassicalRMatrix& r) {
      auto pi = fock_rosly_bivector(d, r);
      const auto& cs = pi.coords();
      CheckOutcome o;
      for (const auto& t : jacobi_triples(cs, seed)) {
        ++o.checked;
        Poly f = cs.coordinate(t[0]), g = cs.coordinate(t[1]), h = cs.coordinate(t[2]);
        Poly lhs = pi.apply(f * g, h);
        Poly rhs = f * pi.apply_direct(g, h) + pi.apply_direct(f, h) * g;
        if (lhs != rhs) {
          o.record_failure({cs.vars()->name(t[0]), cs.vars()->name(t[1]), cs.vars()->name(t[2])},
                           to_string(lhs - rhs));
        }
      }
      apply_outcome(rep, o);
    };
  } else {
    throw DomainError("unknown check '" + name + "'");
  }
  return config_task("poisson." + name, d, g, std::move(body));
}

/// The flagship identity for one configuration, split by pair type, plus
/// agreement of the two crossing constructions.
inline std::vector<Task> quantisation_tasks(const DecoratedPattern& d, const LieAlgebraPtr& g) {
  std::vector<Task> out;
  out.push_back(config_task("rea.quantisation.same_edge", d, g,
                            [](CheckReport& rep, const DecoratedPattern& d, const ClassicalRMatrix& r) {
                              apply_outcome(rep, check_quantisation(d, r).same_edge);
                            }));
  if (d.n() > 1) {
    out.push_back(config_task("rea.quantisation.cross_edge", d, g,
                              [](CheckReport& rep, const DecoratedPattern& d, const ClassicalRMatrix& r) {
                                apply_outcome(rep, check_quantisation(d, r).cross_edge);
                              }));
    out.push_back(config_task("rea.crossing_constructions", d, g,
                              [](CheckReport& rep, const DecoratedPattern& d, const ClassicalRMatrix&) {
                                apply_outcome(rep, check_crossing_constructions(d.pattern));
                              }));
  }
  return out;
}

/// Reports pass exactly when the wrapped check detects the planted defect.
inline void expect_failure(CheckReport& rep, const CheckOutcome& o, const std::string& what) {
  rep.checked += o.checked;
  if (o.ok()) fail_with(rep, {{"expected_failure", what}});
}

inline DecoratedPattern fixture(std::vector<std::size_t> flat, std::vector<AutKind> labels) {
  return DecoratedPattern(GluingPattern(flat), std::move(labels));
}

/// Patterns realizing the six pair classes with two edges.
inline std::vector<GluingPattern> class_fixtures() {
  return {GluingPattern({1, 2, 3, 4}), GluingPattern({1, 3, 2, 4}), GluingPattern({1, 4, 2, 3}),
          GluingPattern({3, 4, 1, 2}), GluingPattern({2, 4, 1, 3}), GluingPattern({2, 3, 1, 4})};
}

inline std::vector<Task> lie_suite() {
  std::vector<Task> out;
  for (std::size_t n : {2, 3, 4}) {
    std::string t = "sl" + std::to_string(n);
    out.push_back({"lie.cybe", t, [n](CheckReport& rep) {
                     auto r = standard_r_matrix(build_sl(n));
                     auto res = check_cybe(r);
                     rep.checked = res.size();
                     if (!res.is_zero()) fail_with(rep, {{"nonzero_entries", res.nonzero_count()}});
                   }});
    out.push_back({"lie.t_invariance", t, [n](CheckReport& rep) {
                     auto g = build_sl(n);
                     auto r = standard_r_matrix(g);
                     auto res = ad_invariance_residual(*g, r.t());
                     rep.checked = res.size();
                     if (!res.is_zero()) fail_with(rep, {{"nonzero_entries", res.nonzero_count()}});
                     if (split_casimir(*g) * Rational(1, 2) != r.t()) fail_with(rep, {{"t", "not half the split Casimir"}});
                   }});
    out.push_back({"lie.cybe_negative_control", t, [n](CheckReport& rep) {
                     auto g = build_sl(n);
                     auto r = standard_r_matrix(g);
                     ++rep.checked;
                     if (check_cybe(r.perturbed(g->e_index(0), g->f_index(0), 1)).is_zero())
                       fail_with(rep, {{"expected_failure", "perturbed r"}});
                     ++rep.checked;
                     if (cybe_residual(*g, r.t()).is_zero()) fail_with(rep, {{"expected_failure", "t alone"}});
                   }});
    if (n < 3) continue;
    out.push_back({"lie.flip", t, [n](CheckReport& rep) {
                     auto g = build_sl(n);
                     auto r = standard_r_matrix(g);
                     DynkinAut k(g, AutKind::flip);
                     auto add = [&](bool ok, const char* what) {
                       ++rep.checked;
                       if (!ok) fail_with(rep, {{"property", what}});
                     };
                     add(check_r_invariance(r, k).is_zero(), "r invariance");
                     add(preserves_cartan(k), "cartan matrix");
                     add(permutes_chevalley_generators(k), "chevalley generators");
                     add(is_lie_automorphism(k), "lie automorphism");
                     add(algebra_map_is_differential(k), "differential of group map");
                     add(group_map_is_multiplicative(k, 7, 5), "group map multiplicative");
                     add(matmul(k.algebra_map(), k.algebra_map()) == RTensor::identity(g->dim()), "involution");
                     add(!check_r_invariance(r.perturbed(g->e_index(0), g->f_index(0), 1), k).is_zero(),
                         "perturbed r detected");
                   }});
  }
  out.push_back({"lie.out_table", "A/D/E", [](CheckReport& rep) {
                   struct Row {
                     char type;
                     std::size_t rank;
                     std::size_t order;
                   };
                   std::vector<Row> rows{{'A', 1, 1}, {'A', 2, 2}, {'A', 3, 2}, {'A', 7, 2}, {'D', 4, 6},
                                         {'D', 5, 2}, {'D', 6, 2}, {'D', 8, 2}, {'E', 6, 2}, {'E', 7, 1},
                                         {'E', 8, 1}};
                   for (const auto& row : rows) {
                     ++rep.checked;
                     std::size_t got = dynkin_graph_aut_order(row.type, row.rank);
                     if (got != row.order) {
                       fail_with(rep, {{"diagram", std::string(1, row.type) + std::to_string(row.rank)},
                                       {"expected", row.order},
                                       {"got", got}});
                     }
                   }
                 }});
  return out;
}

inline std::vector<Task> pattern_suite() {
  std::vector<Task> out;
  for (std::size_t n = 1; n <= 5; ++n) {
    out.push_back({"pattern.euler", "n=" + std::to_string(n), [n](CheckReport& rep) {
                     for (const auto& p : enumerate_patterns(n)) {
                       ++rep.checked;
                       auto s = surface_invariants(p);
                       if (static_cast<int>(n) != 2 * s.genus + s.boundary_count - 1) {
                         fail_with(rep, {{"pattern", to_string(p)}, {"g", s.genus}, {"r", s.boundary_count}});
                       }
                     }
                   }});
  }
  out.push_back({"pattern.fixtures", "surfaces", [](CheckReport& rep) {
                   struct Row {
                     std::vector<std::size_t> flat;
                     int g, r;
                   };
                   for (const auto& row : std::vector<Row>{{{1, 2, 3, 4}, 0, 3}, {{1, 3, 2, 4}, 1, 1},
                                                           {{1, 4, 2, 3}, 0, 3}, {{1, 2}, 0, 2}}) {
                     ++rep.checked;
                     auto s = surface_invariants(GluingPattern(row.flat));
                     if (s.genus != row.g || s.boundary_count != row.r) {
                       fail_with(rep, {{"pattern", to_string(GluingPattern(row.flat))}, {"g", s.genus}, {"r", s.boundary_count}});
                     }
                   }
                 }});
  out.push_back({"pattern.fixtures", "classes", [](CheckReport& rep) {
                   auto fx = class_fixtures();
                   for (std::size_t k = 0; k < fx.size(); ++k) {
                     ++rep.checked;
                     if (classify_pair(fx[k], 0, 1) != kAllPairClasses[k]) {
                       fail_with(rep, {{"pattern", to_string(fx[k])}, {"got", to_string(classify_pair(fx[k], 0, 1))}});
                     }
                   }
                 }});
  out.push_back({"pattern.classes_total", "n<=4", [](CheckReport& rep) {
                   for (std::size_t n = 2; n <= 4; ++n)
                     for (const auto& p : enumerate_patterns(n))
                       for (std::size_t i = 0; i < n; ++i)
                         for (std::size_t j = i + 1; j < n; ++j) {
                           ++rep.checked;
                           try {
                             (void)classify_pair(p, i, j);
                           } catch (const DomainError&) {
                             fail_with(rep, {{"pattern", to_string(p)}, {"pair", {i + 1, j + 1}}});
                           }
                         }
                 }});
  return out;
}

inline std::vector<Task> poisson_suite() {
  const std::uint64_t seed = kSuiteSeed;
  std::vector<Task> out;
  auto sl2 = build_sl(2);
  auto sl3 = build_sl(3);
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& p : enumerate_patterns(n))
      for (const auto& labels : enumerate_labels(n)) out.push_back(poisson_task("agree", DecoratedPattern(p, labels), sl3, seed));
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& p : enumerate_patterns(n)) {
      DecoratedPattern d(p, std::vector<AutKind>(n, AutKind::id));
      out.push_back(poisson_task("jacobi", d, sl2, seed));
      out.push_back(poisson_task("antisymmetry", d, sl2, seed));
    }
  auto linked = fixture({1, 3, 2, 4}, {AutKind::flip, AutKind::id});
  out.push_back(poisson_task("jacobi", linked, sl3, seed));
  out.push_back(poisson_task("leibniz", linked, sl3, seed));
  out.push_back(poisson_task("equivariance", fixture({1, 2}, {AutKind::id}), sl2, seed));
  out.push_back(poisson_task("equivariance", linked, sl3, seed));
  out.push_back(config_task("poisson.negative_control", linked, sl3,
                            [seed](CheckReport& rep, const DecoratedPattern& d, const ClassicalRMatrix& r) {
                              const auto& g = r.algebra();
                              auto bad = r.perturbed(g.e_index(0), g.f_index(0), 1);
                              auto pi = fock_rosly_bivector(d, bad, {.check_invariance = false});
                              expect_failure(rep, summarize_jacobi(pi, sample_coordinate_triples(pi.coords(), 50, seed)),
                                             "jacobi with CYBE-violating r");
                              expect_failure(rep, check_equivariance(pi), "equivariance with non-invariant r");
                            }));
  out.push_back({"poisson.pattern_independence", "P=(1,3,2,4)/(2,4,1,3) sl3", [sl3](CheckReport& rep) {
                   auto r = standard_r_matrix(sl3);
                   apply_outcome(rep, check_pattern_independence(r, false));
                   apply_outcome(rep, check_pattern_independence(r, true));
                 }});
  return out;
}

inline std::vector<Task> rea_suite() {
  const std::uint64_t seed = kSuiteSeed;
  std::vector<Task> out;
  auto sl2 = build_sl(2);
  auto sl3 = build_sl(3);
  for (const auto& p : class_fixtures())
    for (const auto& labels : enumerate_labels(2)) {
      auto q = quantisation_tasks(DecoratedPattern(p, labels), sl3);
      out.insert(out.end(), q.begin(), q.end());
    }
  for (auto k : {AutKind::id, AutKind::flip}) {
    auto q = quantisation_tasks(fixture({1, 2}, {k}), sl3);
    out.insert(out.end(), q.begin(), q.end());
  }
  auto assoc_all = [](CheckReport& rep, const DecoratedPattern& d, const ClassicalRMatrix& r) {
    auto t = build_deformation_table(d, r);
    apply_outcome(rep, check_associativity_order1(t, all_ordered_triples(t.coords().size())));
  };
  auto equiv = [](CheckReport& rep, const DecoratedPattern& d, const ClassicalRMatrix& r) {
    apply_outcome(rep, check_equivariance_order1(build_deformation_table(d, r)));
  };
  out.push_back(config_task("rea.associativity", fixture({1, 2}, {AutKind::id}), sl2, assoc_all));
  out.push_back(config_task("rea.equivariance", fixture({1, 2}, {AutKind::id}), sl2, equiv));
  for (auto k : {AutKind::id, AutKind::flip}) {
    out.push_back(config_task("rea.associativity", fixture({1, 2}, {k}), sl3, assoc_all));
    out.push_back(config_task("rea.equivariance", fixture({1, 2}, {k}), sl3, equiv));
  }
  for (const auto& p : class_fixtures())
    for (const auto& labels : enumerate_labels(2)) {
      DecoratedPattern d(p, labels);
      out.push_back(config_task("rea.associativity", d, sl3,
                                [seed](CheckReport& rep, const DecoratedPattern& d, const ClassicalRMatrix& r) {
                                  auto t = build_deformation_table(d, r);
                                  apply_outcome(rep, check_associativity_order1(t, sample_ordered_triples(t.coords(), 200, seed)));
                                }));
      out.push_back(config_task("rea.equivariance", d, sl3, equiv));
    }
  auto nested = fixture({1, 4, 2, 3}, {AutKind::flip, AutKind::flip});
  out.push_back(config_task("rea.negative_control", nested, sl3,
                            [](CheckReport& rep, const DecoratedPattern& d, const ClassicalRMatrix& r) {
                              auto t = build_deformation_table(d, r);
                              const auto& cs = t.coords();
                              VarId u = cs.var(0, 0, 0), v = cs.var(1, 1, 2);
                              t.set_entry(u, v, t.beta(u, v) + cs.coordinate(u) * cs.coordinate(u));
                              std::vector<OrderedTriple> triples{{u, v, cs.var(0, 1, 1)}};
                              expect_failure(rep, check_associativity_order1(t, triples), "associativity with corrupted entry");
                              const auto& g = r.algebra();
                              auto bad = r.perturbed(g.e_index(0), g.f_index(0), 1);
                              auto tb = build_deformation_table(d, bad, {.check_invariance = false});
                              expect_failure(rep, check_equivariance_order1(tb), "equivariance with non-invariant r");
                            }));
  return out;
}

inline std::vector<Task> repvar_suite() {
  std::vector<Task> out;
  out.push_back({"repvar.fixtures", "Z5", [](CheckReport& rep) {
                   auto z5 = cyclic_group(5);
                   auto check = [&](bool ok, const char* what) {
                     ++rep.checked;
                     if (!ok) fail_with(rep, {{"fixture", what}});
                   };
                   TwistData twisted{{unit_aut(z5, 2)}};
                   TwistData plain{{identity_aut(z5)}};
                   check(evaluate_word(z5, TwistedHom{{1}}, twisted, GroupWord{{0, 1}, {0, 1}}) == z5.find("3"), "word g1 g1");
                   check(twisted_conjugate(z5, z5.find("1"), TwistedHom{{0}}, twisted).values[0] == z5.find("4"),
                         "conjugate");
                   check(orbit_count(z5, twisted) == 1, "twisted orbits");
                   check(orbit_count(z5, plain) == 5, "untwisted orbits");
                   check(groupoid_cardinality(z5, TwistData{{unit_aut(z5, 2), identity_aut(z5)}}) == 5, "n=2 cardinality");
                 }});
  out.push_back({"repvar.fixtures", "S3", [](CheckReport& rep) {
                   auto s3 = symmetric_group(3);
                   TwistData rho{{identity_aut(s3)}};
                   ++rep.checked;
                   if (orbit_count(s3, rho) != 3) fail_with(rep, {{"fixture", "conjugacy classes"}});
                   ++rep.checked;
                   if (groupoid_cardinality(s3, rho) != 1) fail_with(rep, {{"fixture", "class equation"}});
                 }});
  std::vector<std::string> groups;
  for (std::size_t m = 1; m <= 12; ++m) groups.push_back("Z" + std::to_string(m));
  groups.push_back("S3");
  for (const auto& name : groups) {
    out.push_back({"repvar.burnside", name, [name](CheckReport& rep) {
                     FiniteGroup g = name[0] == 'Z' ? cyclic_group(std::stoul(name.substr(1))) : symmetric_group(3);
                     auto twists = builtin_twists(g);
                     for (std::size_t n = 1; n <= 3; ++n) {
                       std::vector<std::size_t> idx(n, 0);
                       for (;;) {
                         TwistData rho;
                         for (auto k : idx) rho.twists.push_back(twists[k]);
                         ++rep.checked;
                         auto uf = orbit_count(g, rho);
                         auto bs = burnside_count(g, rho);
                         auto gc = groupoid_cardinality(g, rho);
                         Rational expect = 1;
                         for (std::size_t i = 1; i < n; ++i) expect *= static_cast<unsigned long>(g.order());
                         if (Rational(static_cast<unsigned long>(uf)) != bs || gc != expect) {
                           std::vector<std::string> labels;
                           for (const auto& t : rho.twists) labels.push_back(t.label());
                           fail_with(rep, {{"twists", labels},
                                           {"union_find", uf},
                                           {"burnside", qtwist::to_string(bs)},
                                           {"groupoid_cardinality", qtwist::to_string(gc)}});
                         }
                         std::size_t k = 0;
                         while (k < n && ++idx[k] == twists.size()) idx[k++] = 0;
                         if (k == n) break;
                       }
                     }
                   }});
  }
  return out;
}

/// Everything `verify all` runs.
inline std::vector<Task> builtin_suite() {
  std::vector<Task> out;
  for (auto&& part : {lie_suite(), pattern_suite(), poisson_suite(), rea_suite(), repvar_suite()})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace qtwist::cli
