// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. argv[1] is the qtwist executable, argv[2] a scratch
// directory for criterion 10.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qtwist/cli/suites.hpp"

using namespace qtwist;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const CheckOutcome& o, const std::string& what) {
    require(o.ok(), what + ": " + o.residual);
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Verdict()> body;
};

ClassicalRMatrix std_r(std::size_t n) { return standard_r_matrix(build_sl(n)); }

Verdict c1() {
  Verdict v;
  for (std::size_t n : {2, 3, 4}) v.require(check_cybe(std_r(n)).is_zero(), "CYBE residual nonzero on sl" + std::to_string(n));
  for (std::size_t n : {3, 4}) {
    auto g = build_sl(n);
    v.require(check_r_invariance(standard_r_matrix(g), DynkinAut(g, AutKind::flip)).is_zero(),
              "flip changes r on sl" + std::to_string(n));
  }
  return v;
}

Verdict c2() {
  Verdict v;
  for (std::size_t n = 2; n <= 10; ++n) v.require(dynkin_graph_aut_order('A', n) == 2, "A" + std::to_string(n));
  for (std::size_t n = 5; n <= 10; ++n) v.require(dynkin_graph_aut_order('D', n) == 2, "D" + std::to_string(n));
  v.require(dynkin_graph_aut_order('D', 4) == 6, "D4");
  v.require(dynkin_graph_aut_order('E', 6) == 2, "E6");
  return v;
}

Verdict c3() {
  Verdict v;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_patterns(n)) {
      auto s = surface_invariants(p);
      v.require(static_cast<int>(n) == 2 * s.genus + s.boundary_count - 1, "Euler relation at " + to_string(p));
    }
  auto s = surface_invariants(GluingPattern({1, 2, 3, 4}));
  v.require(s.genus == 0 && s.boundary_count == 3, "(1,2,3,4) surface");
  v.require(classify_pair(GluingPattern({1, 2, 3, 4}), 0, 1) == PairClass::PosUnlinked, "(1,2,3,4) class");
  s = surface_invariants(GluingPattern({1, 3, 2, 4}));
  v.require(s.genus == 1 && s.boundary_count == 1, "(1,3,2,4) surface");
  v.require(classify_pair(GluingPattern({1, 3, 2, 4}), 0, 1) == PairClass::PosLinked, "(1,3,2,4) class");
  return v;
}

Verdict c4() {
  Verdict v;
  auto r = std_r(3);
  std::size_t configs = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_patterns(n))
      for (const auto& labels : enumerate_labels(n)) {
        ++configs;
        v.require(check_forms_agree(DecoratedPattern(p, labels), r),
                  "forms differ at " + to_string(p) + " " + labels_string(labels));
      }
  v.require(configs == 1 * 2 + 6 * 4 + 90 * 8, "configuration count");
  v.detail = v.ok ? std::to_string(configs) + " configurations" : v.detail;
  return v;
}

Verdict c5() {
  Verdict v;
  auto r2 = std_r(2);
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& p : enumerate_patterns(n)) {
      auto pi = fock_rosly_bivector(DecoratedPattern(p, std::vector<AutKind>(n, AutKind::id)), r2);
      const auto& cs = pi.coords();
      v.require(summarize_jacobi(pi, all_coordinate_triples(cs.size())), "Jacobi on sl2 " + to_string(p));
      for (VarId a = 0; a < cs.size(); ++a)
        for (VarId b = 0; b < cs.size(); ++b)
          v.require((pi.on_coordinates(a, b) + pi.on_coordinates(b, a)).is_zero(), "antisymmetry on " + to_string(p));
      v.require(check_equivariance(pi), "equivariance on sl2 " + to_string(p));
    }
  auto r3 = std_r(3);
  for (const auto& p : enumerate_patterns(2))
    for (const auto& labels : enumerate_labels(2)) {
      DecoratedPattern d(p, labels);
      auto pi = fock_rosly_bivector(d, r3);
      const auto& cs = pi.coords();
      auto triples = sample_coordinate_triples(cs, 50, cli::kSuiteSeed);
      v.require(triples.size() >= 50, "fewer than 50 triples");
      v.require(summarize_jacobi(pi, triples), "Jacobi on sl3 " + to_string(p) + " " + labels_string(labels));
      // Leibniz: the chain-rule value on products equals the vector-field value
      for (std::size_t k = 0; k < 10; ++k) {
        const auto& t = triples[k];
        Poly f = cs.coordinate(t[0]), g = cs.coordinate(t[1]), h = cs.coordinate(t[2]);
        v.require(pi.apply(f * g, h) == f * pi.apply_direct(g, h) + pi.apply_direct(f, h) * g, "Leibniz");
      }
      v.require(check_equivariance(pi), "equivariance " + to_string(p) + " " + labels_string(labels));
      v.require(check_equivariance_cartan(pi), "Cartan equivariance " + to_string(p));
    }
  return v;
}

Verdict c6() {
  Verdict v;
  auto r = std_r(3);
  std::size_t pairs = 0;
  for (const auto& p : cli::class_fixtures())
    for (const auto& labels : enumerate_labels(2)) {
      auto q = check_quantisation(DecoratedPattern(p, labels), r);
      pairs += q.same_edge.checked + q.cross_edge.checked;
      std::string where = to_string(classify_pair(p, 0, 1)) + " " + labels_string(labels);
      v.require(q.same_edge, "same-edge pairs at " + where);
      v.require(q.cross_edge, "cross-edge pairs at " + where);
      v.require(q.same_edge.checked >= 81 && q.cross_edge.checked >= 81, "pair coverage at " + where);
    }
  if (v.ok) v.detail = std::to_string(pairs) + " generator pairs";
  return v;
}

Verdict c7() {
  Verdict v;
  for (std::size_t n : {2, 3}) {
    auto r = std_r(n);
    for (auto k : n == 2 ? std::vector<AutKind>{AutKind::id} : std::vector<AutKind>{AutKind::id, AutKind::flip}) {
      auto t = build_deformation_table(DecoratedPattern(GluingPattern({1, 2}), {k}), r);
      v.require(check_associativity_order1(t, all_ordered_triples(t.coords().size())), "associativity n=1");
      v.require(check_equivariance_order1(t), "equivariance n=1");
    }
  }
  auto r3 = std_r(3);
  for (const auto& p : cli::class_fixtures())
    for (const auto& labels : enumerate_labels(2)) {
      auto t = build_deformation_table(DecoratedPattern(p, labels), r3);
      auto triples = sample_ordered_triples(t.coords(), 200, cli::kSuiteSeed);
      v.require(triples.size() == 200, "sample size");
      v.require(check_associativity_order1(t, triples), "associativity at " + to_string(p) + " " + labels_string(labels));
      v.require(check_equivariance_order1(t), "equivariance at " + to_string(p) + " " + labels_string(labels));
    }
  DecoratedPattern nested(GluingPattern({1, 4, 2, 3}), {AutKind::flip, AutKind::flip});
  auto t = build_deformation_table(nested, r3);
  const auto& cs = t.coords();
  VarId u = cs.var(0, 0, 0), w = cs.var(1, 1, 2);
  t.set_entry(u, w, t.beta(u, w) + cs.coordinate(u) * cs.coordinate(u));
  auto direct = check_associativity_order1(t, {{u, w, cs.var(0, 1, 1)}});
  v.require(!direct.ok() && direct.witness.size() == 3, "corrupted entry not detected");
  const auto& g = r3.algebra();
  auto bad = r3.perturbed(g.e_index(0), g.f_index(0), 1);
  auto tb = build_deformation_table(DecoratedPattern(GluingPattern({1, 2}), {AutKind::id}), bad, {.check_invariance = false});
  auto eq = check_equivariance_order1(tb);
  v.require(!eq.ok() && !eq.witness.empty(), "non-invariant r not detected");
  return v;
}

Verdict c8() {
  Verdict v;
  auto z5 = cyclic_group(5);
  v.require(orbit_count(z5, TwistData{{unit_aut(z5, 2)}}) == 1, "Z5 twisted orbit count");
  v.require(orbit_count(z5, TwistData{{identity_aut(z5)}}) == 5, "Z5 untwisted orbit count");
  std::vector<FiniteGroup> groups;
  for (std::size_t m = 1; m <= 12; ++m) groups.push_back(cyclic_group(m));
  groups.push_back(symmetric_group(3));
  for (const auto& g : groups) {
    auto twists = builtin_twists(g);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::size_t> idx(n, 0);
      for (;;) {
        TwistData rho;
        for (auto k : idx) rho.twists.push_back(twists[k]);
        Rational expect = 1;
        for (std::size_t i = 1; i < n; ++i) expect *= static_cast<unsigned long>(g.order());
        v.require(Rational(static_cast<unsigned long>(orbit_count(g, rho))) == burnside_count(g, rho),
                  "union-find vs Burnside on " + g.label());
        v.require(groupoid_cardinality(g, rho) == expect, "groupoid cardinality on " + g.label());
        std::size_t k = 0;
        while (k < n && ++idx[k] == twists.size()) idx[k++] = 0;
        if (k == n) break;
      }
    }
  }
  return v;
}

Verdict c9() {
  Verdict v;
  auto r = std_r(3);
  v.require(check_pattern_independence(r, false), "half-edge form");
  v.require(check_pattern_independence(r, true), "six-case form");
  return v;
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict c10(const std::string& exe, const std::string& scratch) {
  Verdict v;
  std::string a = scratch + "/determinism_a.json", b = scratch + "/determinism_b.json";
  for (const auto& path : {a, b}) {
    std::string cmd = "\"" + exe + "\" verify all --seed 17 --json \"" + path + "\" > /dev/null";
    int rc = std::system(cmd.c_str());
    v.require(rc == 0, "verify all exited with status " + std::to_string(rc));
  }
  std::string ja = read_all(a), jb = read_all(b);
  v.require(!ja.empty(), "empty report");
  v.require(ja == jb, "reports differ");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <qtwist executable> <scratch dir>\n";
    return 2;
  }
  std::string exe = argv[1], scratch = argv[2];
  std::vector<Criterion> criteria{
      {1, "CYBE and flip invariance of r", 5, c1},
      {2, "diagram automorphism orders", 1, c2},
      {3, "pattern combinatorics", 5, c3},
      {4, "half-edge and six-case bivectors agree (n<=3, sl3)", 120, c4},
      {5, "Poisson axioms and twisted equivariance", 300, c5},
      {6, "commutator equals bracket for all six pair classes", 600, c6},
      {7, "first-order associativity, equivariance, negative controls", 300, c7},
      {8, "finite-group orbit counts and groupoid cardinality", 60, c8},
      {9, "pattern-independence fixture", 60, c9},
      {10, "byte-identical verify all reports", 600, [&] { return c10(exe, scratch); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.ok && secs > c.budget_s) {
      v.ok = false;
      v.detail = "over the runtime budget";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.budget_s);
    std::cout << "criterion " << c.id << ": " << (v.ok ? "PASS" : "FAIL") << "  " << c.title << "  [" << timing << "]";
    if (!v.detail.empty()) std::cout << "  " << v.detail;
    std::cout << std::endl;
    if (!v.ok) ++failed;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed ? 1 : 0;
}
