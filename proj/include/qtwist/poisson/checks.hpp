#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qtwist/lie/r_matrix.hpp"
#include "qtwist/pattern/pattern.hpp"
#include "qtwist/poisson/bivector.hpp"
#include "qtwist/poisson/builders.hpp"
#include "qtwist/ring/outcome.hpp"

namespace qtwist {

/// Compares two operators on every ordered coordinate pair.
inline CheckOutcome compare_on_coordinates(const Bidifferential& a, const Bidifferential& b) {
  CheckOutcome out;
  const auto& cs = a.coords();
  if (cs.size() != b.coords().size()) throw DimensionMismatch("operators live on different coordinate spaces");
  for (VarId u = 0; u < cs.size(); ++u)
    for (VarId v = 0; v < cs.size(); ++v) {
      ++out.checked;
      const Poly& x = a.on_coordinates(u, v);
      const Poly& y = b.on_coordinates(u, v);
      if (x != y) out.record_failure({cs.vars()->name(u), cs.vars()->name(v)}, to_string(x - y));
    }
  return out;
}

inline CheckOutcome check_forms_agree(const DecoratedPattern& d, const ClassicalRMatrix& r) {
  return compare_on_coordinates(fock_rosly_bivector(d, r), sts_case_bivector(d, r));
}

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
inline Poly jacobi_residual(const PoissonBivector& pi, const Poly& f, const Poly& g, const Poly& h) {
  return pi.apply(f, pi.apply(g, h)) + pi.apply(g, pi.apply(h, f)) + pi.apply(h, pi.apply(f, g));
}

using VarTriple = std::array<VarId, 3>;

inline std::vector<Poly> check_jacobi(const PoissonBivector& pi, const std::vector<VarTriple>& triples) {
  std::vector<Poly> out;
  const auto& cs = pi.coords();
  for (const auto& t : triples)
    out.push_back(jacobi_residual(pi, cs.coordinate(t[0]), cs.coordinate(t[1]), cs.coordinate(t[2])));
  return out;
}

inline CheckOutcome summarize_jacobi(const PoissonBivector& pi, const std::vector<VarTriple>& triples) {
  CheckOutcome out;
  auto res = check_jacobi(pi, triples);
  const auto& names = *pi.coords().vars();
  for (std::size_t k = 0; k < triples.size(); ++k) {
    ++out.checked;
    if (!res[k].is_zero()) {
      out.record_failure({names.name(triples[k][0]), names.name(triples[k][1]), names.name(triples[k][2])},
                         to_string(res[k]));
    }
  }
  return out;
}

/// All triples u < v < w of coordinates.
inline std::vector<VarTriple> all_coordinate_triples(std::size_t count) {
  std::vector<VarTriple> out;
  for (VarId a = 0; a < count; ++a)
    for (VarId b = a + 1; b < count; ++b)
      for (VarId c = b + 1; c < count; ++c) out.push_back({a, b, c});
  return out;
}

/// k distinct triples u < v < w drawn with a seeded generator. The first
/// picks cover every combination of edges before free sampling continues.
inline std::vector<VarTriple> sample_coordinate_triples(const CoordinateSpace& cs, std::size_t k, std::uint64_t seed) {
  auto all = all_coordinate_triples(cs.size());
  if (k >= all.size()) return all;
  std::mt19937_64 rng(seed);
  for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[static_cast<std::size_t>(rng() % i)]);
  std::vector<VarTriple> head, tail;
  std::vector<std::array<std::size_t, 3>> seen;
  for (const auto& t : all) {
    std::array<std::size_t, 3> key{cs.edge_of(t[0]), cs.edge_of(t[1]), cs.edge_of(t[2])};
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      head.push_back(t);
    } else {
      tail.push_back(t);
    }
  }
  head.insert(head.end(), tail.begin(), tail.end());
  head.resize(k);
  return head;
}

/// Equivariance of an order-(1,1) bidifferential operator B under the
/// infinitesimal twisted conjugation δ. For every basis x and coordinate
/// pair (f, g) it checks the Poisson-Lie identity
///   δ_x B(f,g) − B(δ_x f, g) − B(f, δ_x g) + Σ δ(x)^{pq} (δ_p f)(δ_q g) = 0
/// with δ(x) = [x⊗1 + 1⊗x, ω]. On the Cartan subalgebra δ(x) = 0 and this is
/// the strict derivation property. `strict` drops the cobracket term and
/// `cartan_only` restricts x to the Cartan elements.
template <class EntryFn, class ApplyFn>
CheckOutcome equivariance_outcome(const LieAlgebraA& g, const CoordinateSpace& cs,
                                  const std::vector<DynkinAut>& twists, const RTensor& omega, EntryFn entry,
                                  ApplyFn apply, bool strict, bool cartan_only) {
  RTensor cob = ad_invariance_residual(g, omega);
  std::size_t d = g.dim();
  std::vector<std::vector<Poly>> delta(d, std::vector<Poly>(cs.size()));
  for (std::size_t p = 0; p < d; ++p)
    for (VarId v = 0; v < cs.size(); ++v) delta[p][v] = twisted_conjugation(cs, g.basis(p), twists, cs.coordinate(v));
  CheckOutcome out;
  for (std::size_t x = cartan_only ? g.cartan_index(0) : 0; x < d; ++x) {
    for (VarId u = 0; u < cs.size(); ++u) {
      for (VarId v = 0; v < cs.size(); ++v) {
        ++out.checked;
        Poly lhs = twisted_conjugation(cs, g.basis(x), twists, entry(u, v)) - apply(delta[x][u], cs.coordinate(v)) -
                   apply(cs.coordinate(u), delta[x][v]);
        if (!strict) {
          for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q) {
              const Rational& c = cob(x, p, q);
              if (!is_zero(c)) lhs += delta[p][u] * delta[q][v] * c;
            }
        }
        if (!lhs.is_zero()) out.record_failure({g.label(x), cs.vars()->name(u), cs.vars()->name(v)}, to_string(lhs));
      }
    }
  }
  return out;
}

/// Twisted equivariance of a bivector built from r (see equivariance_outcome).
inline CheckOutcome check_equivariance(const PoissonBivector& pi, bool strict = false, bool cartan_only = false) {
  if (!pi.r_matrix()) throw DomainError("bivector carries no r-matrix");
  ClassicalRMatrix r(pi.algebra_ptr(), *pi.r_matrix());
  return equivariance_outcome(
      pi.algebra(), pi.coords(), pi.twists(), r.omega(),
      [&](VarId u, VarId v) -> const Poly& { return pi.on_coordinates(u, v); },
      [&](const Poly& f, const Poly& g) { return pi.apply(f, g); }, strict, cartan_only);
}

/// Strict derivation property restricted to the Cartan subalgebra.
inline CheckOutcome check_equivariance_cartan(const PoissonBivector& pi) { return check_equivariance(pi, true, true); }

/// Pattern-independence fixture: P = (1,3,2,4) against P' = (2,4,1,3) with
/// the edge correspondence g1 ↔ g2, compared on brackets of tr(g1), tr(g2),
/// tr(g1 g2).
inline CheckOutcome check_pattern_independence(const ClassicalRMatrix& r, bool use_sts = false) {
  DecoratedPattern p(GluingPattern({1, 3, 2, 4}), {AutKind::id, AutKind::id});
  DecoratedPattern q(GluingPattern({2, 4, 1, 3}), {AutKind::id, AutKind::id});
  PoissonBivector a = use_sts ? sts_case_bivector(p, r) : fock_rosly_bivector(p, r);
  PoissonBivector b = use_sts ? sts_case_bivector(q, r) : fock_rosly_bivector(q, r);
  const auto& cs = a.coords();
  const std::vector<std::size_t> swap{1, 0};
  std::vector<std::pair<std::string, Poly>> fs = {
      {"tr(g1)", cs.trace(0)}, {"tr(g2)", cs.trace(1)}, {"tr(g1g2)", cs.trace_product(0, 1)}};
  CheckOutcome out;
  for (const auto& [nf, f] : fs)
    for (const auto& [ng, g] : fs) {
      ++out.checked;
      Poly lhs = cs.relabel_edges(a.apply(f, g), swap);
      Poly rhs = b.apply(cs.relabel_edges(f, swap), cs.relabel_edges(g, swap));
      if (lhs != rhs) out.record_failure({nf, ng}, to_string(lhs - rhs));
    }
  return out;
}

}  // namespace qtwist
