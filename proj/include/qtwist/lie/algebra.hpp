#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "qtwist/ring/dense_tensor.hpp"
#include "qtwist/ring/errors.hpp"
#include "qtwist/ring/rational.hpp"

namespace qtwist {

/// sl_n in its defining representation. Basis: off-diagonal matrix units
/// E_ij in lexicographic order, then h_i = E_ii - E_{i+1,i+1}.
class LieAlgebraA {
 public:
  explicit LieAlgebraA(std::size_t n) : n_(n) {
    if (n < 2) throw DomainError("sl_n needs n >= 2, got " + std::to_string(n));
    unit_index_.assign(n * n, npos);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        unit_index_[i * n + j] = basis_.size();
        basis_.push_back(RTensor::unit(n, i, j));
        labels_.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      RTensor h({n, n});
      h(i, i) = 1;
      h(i + 1, i + 1) = -1;
      basis_.push_back(std::move(h));
      labels_.push_back("h" + std::to_string(i + 1));
    }
    cartan_.assign((n - 1) * (n - 1), 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = 0; j + 1 < n; ++j) {
        int v = 0;
        if (i == j) v = 2;
        else if (i + 1 == j || j + 1 == i) v = -1;
        cartan_[i * (n - 1) + j] = v;
      }
    }
    build_structure_constants();
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t rank() const noexcept { return n_ - 1; }
  const std::vector<RTensor>& basis() const noexcept { return basis_; }
  const RTensor& basis(std::size_t p) const { return basis_.at(p); }
  const std::string& label(std::size_t p) const { return labels_.at(p); }

  /// Cartan matrix entry a_ij, 0-based nodes.
  int cartan(std::size_t i, std::size_t j) const { return cartan_.at(i * rank() + j); }

  /// Basis index of E_ij (i != j), 0-based.
  std::size_t unit_index(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_ || i == j) throw DomainError("no basis element E_ij for a diagonal or out-of-range pair");
    return unit_index_[i * n_ + j];
  }
  std::size_t cartan_index(std::size_t i) const { return n_ * (n_ - 1) + i; }
  /// Chevalley generators e_i = E_{i,i+1}, f_i = E_{i+1,i}, 0-based node i.
  std::size_t e_index(std::size_t i) const { return unit_index(i, i + 1); }
  std::size_t f_index(std::size_t i) const { return unit_index(i + 1, i); }

  /// Coordinates of a traceless matrix in the basis.
  std::vector<Rational> coordinates(const RTensor& m) const {
    Rational tr = trace(m);
    if (!is_zero(tr)) throw DomainError("matrix is not traceless");
    return projected_coordinates(m);
  }

  /// Coordinates of the traceless part m - tr(m)/n·I.
  std::vector<Rational> projected_coordinates(const RTensor& m) const {
    check_square(m);
    std::vector<Rational> c(dim(), Rational(0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j) c[unit_index_[i * n_ + j]] = m(i, j);
      }
    }
    Rational shift = trace(m) / Rational(static_cast<long>(n_));
    Rational running = 0;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      running += m(i, i) - shift;
      c[cartan_index(i)] = running;
    }
    return c;
  }

  RTensor matrix(const std::vector<Rational>& coords) const {
    if (coords.size() != dim()) throw DimensionMismatch("coordinate vector has wrong length");
    RTensor m({n_, n_});
    for (std::size_t p = 0; p < dim(); ++p) {
      if (is_zero(coords[p])) continue;
      m += basis_[p] * coords[p];
    }
    return m;
  }

  static RTensor commutator(const RTensor& x, const RTensor& y) { return matmul(x, y) - matmul(y, x); }

  /// F(a,b,c): coefficient of basis c in [basis a, basis b].
  const RTensor& structure_constants() const noexcept { return structure_; }

  static Rational trace(const RTensor& m) {
    Rational t = 0;
    for (std::size_t i = 0; i < m.shape()[0]; ++i) t += m(i, i);
    return t;
  }

 private:
  void check_square(const RTensor& m) const {
    if (m.rank() != 2 || m.shape()[0] != n_ || m.shape()[1] != n_) {
      throw DimensionMismatch("expected an " + std::to_string(n_) + "x" + std::to_string(n_) + " matrix");
    }
  }

  void build_structure_constants() {
    std::size_t d = dim();
    structure_ = RTensor({d, d, d});
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        auto c = coordinates(commutator(basis_[a], basis_[b]));
        for (std::size_t k = 0; k < d; ++k) structure_(a, b, k) = c[k];
      }
    }
  }

  std::size_t n_;
  std::vector<RTensor> basis_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> unit_index_;
  std::vector<int> cartan_;
  RTensor structure_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebraA>;

inline LieAlgebraPtr build_sl(std::size_t n) { return std::make_shared<const LieAlgebraA>(n); }

/// One entry coeff·E_ab ⊗ E_cd of a tensor written in matrix units.
struct UnitTerm {
  std::size_t a, b, c, d;
  Rational coeff;
};
using UnitTensor = std::vector<UnitTerm>;

/// Expands a coefficient tensor over basis ⊗ basis into matrix units.
inline UnitTensor to_matrix_units(const LieAlgebraA& g, const RTensor& coeffs) {
  std::size_t n = g.n();
  RTensor acc({n, n, n, n});
  for (std::size_t p = 0; p < g.dim(); ++p) {
    for (std::size_t q = 0; q < g.dim(); ++q) {
      const Rational& v = coeffs(p, q);
      if (is_zero(v)) continue;
      const auto& x = g.basis(p);
      const auto& y = g.basis(q);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (is_zero(x(a, b))) continue;
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d) {
              if (!is_zero(y(c, d))) acc(a, b, c, d) += v * x(a, b) * y(c, d);
            }
        }
    }
  }
  UnitTensor out;
  for (std::size_t f = 0; f < acc.size(); ++f) {
    if (is_zero(acc.data()[f])) continue;
    auto idx = acc.unravel(f);
    out.push_back({idx[0], idx[1], idx[2], idx[3], acc.data()[f]});
  }
  return out;
}

/// Inverse of to_matrix_units for tensors lying in sl ⊗ sl: each leg is
/// projected to its traceless part, which is exact on sl ⊗ sl.
inline RTensor from_matrix_units(const LieAlgebraA& g, const UnitTensor& u) {
  std::size_t d = g.dim();
  std::size_t n = g.n();
  RTensor out({d, d});
  for (const auto& t : u) {
    auto x = g.projected_coordinates(RTensor::unit(n, t.a, t.b));
    auto y = g.projected_coordinates(RTensor::unit(n, t.c, t.d));
    for (std::size_t p = 0; p < d; ++p) {
      if (is_zero(x[p])) continue;
      for (std::size_t q = 0; q < d; ++q) {
        if (!is_zero(y[q])) out(p, q) += t.coeff * x[p] * y[q];
      }
    }
  }
  return out;
}

/// Swap of tensor legs, τ(x ⊗ y) = y ⊗ x.
inline RTensor flip_legs(const RTensor& t) { return transpose(t); }

}  // namespace qtwist
