#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qtwist/ring/sparse_poly.hpp"

namespace qtwist {

/// Matrix-entry variables g^{(e)}_{ij} of the defining-representation
/// holonomies on every edge. Ids run edge-major, then row, then column.
class CoordinateSpace {
 public:
  CoordinateSpace(std::size_t n, std::size_t edges) : n_(n), edges_(edges) {
    std::vector<std::string> names;
    for (std::size_t e = 0; e < edges; ++e)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          names.push_back("g" + std::to_string(e + 1) + "_" + std::to_string(i + 1) + std::to_string(j + 1));
    vars_ = make_variable_set(std::move(names));
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return vars_->size(); }
  const VarSetPtr& vars() const noexcept { return vars_; }

  VarId var(std::size_t e, std::size_t i, std::size_t j) const {
    return static_cast<VarId>((e * n_ + i) * n_ + j);
  }
  std::size_t edge_of(VarId v) const { return v / (n_ * n_); }
  std::size_t row_of(VarId v) const { return (v / n_) % n_; }
  std::size_t col_of(VarId v) const { return v % n_; }

  Poly coordinate(VarId v) const { return Poly::variable(vars_, v); }
  Poly coordinate(std::size_t e, std::size_t i, std::size_t j) const { return coordinate(var(e, i, j)); }
  Poly zero() const { return Poly(vars_); }
  Poly one() const { return Poly::constant(vars_, Rational(1)); }

  /// tr(g^{(e)})
  Poly trace(std::size_t e) const {
    Poly p = zero();
    for (std::size_t i = 0; i < n_; ++i) p += coordinate(e, i, i);
    return p;
  }

  /// tr(g^{(e1)} g^{(e2)})
  Poly trace_product(std::size_t e1, std::size_t e2) const {
    Poly p = zero();
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) p += coordinate(e1, i, j) * coordinate(e2, j, i);
    return p;
  }

  /// Renames variables by an edge permutation: g^{(e)} ↦ g^{(perm[e])}.
  Poly relabel_edges(const Poly& p, const std::vector<std::size_t>& perm) const {
    std::vector<Poly::Term> raw;
    for (const auto& [m, c] : p.terms()) {
      Monomial out;
      for (VarId v : m) out.push_back(var(perm.at(edge_of(v)), row_of(v), col_of(v)));
      raw.emplace_back(std::move(out), c);
    }
    return Poly::from_terms(vars_, std::move(raw));
  }

 private:
  std::size_t n_;
  std::size_t edges_;
  VarSetPtr vars_;
};

}  // namespace qtwist
