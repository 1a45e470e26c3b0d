#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qtwist/lie/dynkin.hpp"
#include "qtwist/poisson/coordinates.hpp"
#include "qtwist/ring/dense_tensor.hpp"
#include "qtwist/ring/sparse_poly.hpp"

namespace qtwist {

/// Invariant vector fields on one copy of G. L and Ad carry the edge's twist.
enum class Flavor { R, L, Ad };

inline std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::R: return "R";
    case Flavor::L: return "L";
    case Flavor::Ad: return "ad";
  }
  return "?";
}

/// Image of one coordinate under the field: R sends g ↦ x·g, L sends
/// g ↦ g·κ(x), Ad = R − L.
inline Poly vf_on_coordinate(const CoordinateSpace& cs, const RTensor& x, Flavor flavor, const DynkinAut& kappa,
                             std::size_t edge, VarId v) {
  Poly out = cs.zero();
  if (cs.edge_of(v) != edge) return out;
  std::size_t n = cs.n(), i = cs.row_of(v), j = cs.col_of(v);
  if (flavor == Flavor::R || flavor == Flavor::Ad) {
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(x(i, k))) out += cs.coordinate(edge, k, j) * x(i, k);
  }
  if (flavor == Flavor::L || flavor == Flavor::Ad) {
    RTensor y = kappa.apply_matrix(x);
    Rational sign = flavor == Flavor::L ? 1 : -1;
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(y(k, j))) out += cs.coordinate(edge, i, k) * Rational(sign * y(k, j));
  }
  return out;
}

/// Derivation action of the field on a polynomial (Leibniz over monomials).
/// Variables on other edges are constants for the field.
inline Poly vf_apply(const CoordinateSpace& cs, const RTensor& x, Flavor flavor, const DynkinAut& kappa,
                     const Poly& p, std::size_t edge) {
  Poly out = cs.zero();
  for (VarId v : p.support()) {
    if (cs.edge_of(v) != edge) continue;
    Poly image = vf_on_coordinate(cs, x, flavor, kappa, edge, v);
    if (image.is_zero()) continue;
    out += p.derivative(v) * image;
  }
  return out;
}

/// δ_x = Σ_e (x^R − κ_e(x)^L): infinitesimal twisted conjugation.
inline Poly twisted_conjugation(const CoordinateSpace& cs, const RTensor& x, const std::vector<DynkinAut>& kappas,
                                const Poly& p) {
  Poly out = cs.zero();
  for (std::size_t e = 0; e < cs.edges(); ++e) out += vf_apply(cs, x, Flavor::Ad, kappas.at(e), p, e);
  return out;
}

}  // namespace qtwist
