#pragma once

#include <cstddef>
#include <utility>

#include "qtwist/lie/algebra.hpp"
#include "qtwist/ring/dense_tensor.hpp"

namespace qtwist {

/// r in g ⊗ g (basis coefficients) with its split r = omega + t.
class ClassicalRMatrix {
 public:
  ClassicalRMatrix(LieAlgebraPtr g, RTensor r) : g_(std::move(g)), r_(std::move(r)) {
    std::size_t d = g_->dim();
    if (r_.shape() != RTensor::Shape{d, d}) throw DimensionMismatch("r-matrix must be dim x dim");
    RTensor rt = flip_legs(r_);
    omega_ = (r_ - rt) * Rational(1, 2);
    t_ = (r_ + rt) * Rational(1, 2);
  }

  const LieAlgebraPtr& algebra_ptr() const noexcept { return g_; }
  const LieAlgebraA& algebra() const noexcept { return *g_; }
  const RTensor& r() const noexcept { return r_; }
  const RTensor& omega() const noexcept { return omega_; }
  const RTensor& t() const noexcept { return t_; }

  /// Copy with one coefficient shifted; used for negative controls.
  ClassicalRMatrix perturbed(std::size_t p, std::size_t q, const Rational& delta) const {
    RTensor r = r_;
    r(p, q) += delta;
    return ClassicalRMatrix(g_, std::move(r));
  }

 private:
  LieAlgebraPtr g_;
  RTensor r_;
  RTensor omega_;
  RTensor t_;
};

/// Standard r-matrix: on the defining representation it reads
/// Σ_{i<j} E_ij ⊗ E_ji + ½ Σ E_ii ⊗ E_ii − (1/2n) I ⊗ I.
inline ClassicalRMatrix standard_r_matrix(const LieAlgebraPtr& g) {
  std::size_t n = g->n();
  UnitTensor u;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) u.push_back({i, j, j, i, Rational(1)});
  for (std::size_t i = 0; i < n; ++i) u.push_back({i, i, i, i, Rational(1, 2)});
  Rational c(1, static_cast<long>(2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u.push_back({i, i, j, j, Rational(-c)});
  return ClassicalRMatrix(g, from_matrix_units(*g, u));
}

/// Split Casimir Σ x_p ⊗ x^p with respect to the trace form.
inline RTensor split_casimir(const LieAlgebraA& g) {
  std::size_t d = g.dim();
  RTensor gram({d, d});
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) gram(p, q) = LieAlgebraA::trace(matmul(g.basis(p), g.basis(q)));
  return inverse(gram);
}

/// [r12,r13] + [r12,r23] + [r13,r23] as a rank-3 coefficient tensor.
/// Each term is contracted in two stages against the structure constants.
inline RTensor cybe_residual(const LieAlgebraA& g, const RTensor& r) {
  const RTensor& F = g.structure_constants();
  // [r12,r13](e,b,d) = Σ r(a,b) r(c,d) F(a,c,e)
  RTensor t1 = permute(tensordot(tensordot(r, 0, F, 0), 1, r, 0), {1, 0, 2});
  // [r12,r23](a,e,d) = Σ r(a,b) r(c,d) F(b,c,e)
  RTensor t2 = tensordot(tensordot(r, 1, F, 0), 1, r, 0);
  // [r13,r23](a,c,e) = Σ r(a,b) r(c,d) F(b,d,e)
  RTensor t3 = permute(tensordot(tensordot(r, 1, F, 0), 1, r, 1), {0, 2, 1});
  return t1 + t2 + t3;
}

inline RTensor check_cybe(const ClassicalRMatrix& r) { return cybe_residual(r.algebra(), r.r()); }

/// Slice x holds [x⊗1 + 1⊗x, t] for basis element x.
inline RTensor ad_invariance_residual(const LieAlgebraA& g, const RTensor& t) {
  const RTensor& F = g.structure_constants();
  RTensor left = tensordot(F, 1, t, 0);                      // (x, c, b)
  RTensor right = permute(tensordot(t, 1, F, 1), {1, 0, 2});  // (x, a, c)
  return left + right;
}

}  // namespace qtwist
