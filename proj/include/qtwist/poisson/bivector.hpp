#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtwist/lie/algebra.hpp"
#include "qtwist/lie/dynkin.hpp"
#include "qtwist/poisson/coordinates.hpp"
#include "qtwist/poisson/fields.hpp"
#include "qtwist/ring/dense_tensor.hpp"
#include "qtwist/ring/sparse_poly.hpp"

namespace qtwist {

struct Slot {
  std::size_t edge;
  Flavor flavor;
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// coeff · Σ T^{pq} (x_p at slot a applied to the first argument)
///                 (x_q at slot b applied to the second argument)
struct BivectorTerm {
  RTensor tensor;
  Slot a;
  Slot b;
  Rational coeff;
};

/// The term together with its mirror, so that the pair is antisymmetric:
/// T^{a,b} ∧-completed by −τ(T)^{b,a}.
inline void push_wedge(std::vector<BivectorTerm>& out, const RTensor& t, Slot a, Slot b, const Rational& c) {
  out.push_back({t, a, b, c});
  out.push_back({flip_legs(t), b, a, Rational(-c)});
}

/// Bidifferential operator of order (1,1) on functions of the edge
/// holonomies, given as a sum of tensor terms over invariant vector fields.
/// It is evaluated on coordinate pairs once at construction; on general
/// polynomials it acts by the chain rule. Poisson bivectors and first-order
/// product corrections are both values of this type.
class Bidifferential {
 public:
  Bidifferential(LieAlgebraPtr g, std::vector<AutKind> labels, std::vector<BivectorTerm> terms)
      : g_(std::move(g)), labels_(std::move(labels)), terms_(std::move(terms)), coords_(g_->n(), labels_.size()) {
    for (AutKind k : labels_) twists_.emplace_back(g_, k);
    build_table();
  }

  const LieAlgebraA& algebra() const noexcept { return *g_; }
  const LieAlgebraPtr& algebra_ptr() const noexcept { return g_; }
  const std::vector<AutKind>& labels() const noexcept { return labels_; }
  const std::vector<DynkinAut>& twists() const noexcept { return twists_; }
  const std::vector<BivectorTerm>& terms() const noexcept { return terms_; }
  const CoordinateSpace& coords() const noexcept { return coords_; }

  /// Value on the coordinate pair (u, v).
  const Poly& on_coordinates(VarId u, VarId v) const { return table_.at(u * coords_.size() + v); }

  /// Chain-rule extension: Σ ∂_u f ∂_v g · B(u, v).
  Poly apply(const Poly& f, const Poly& g) const {
    Poly out = coords_.zero();
    auto fs = f.support();
    auto gs = g.support();
    if (fs.empty() || gs.empty()) return out;
    std::vector<Poly> dg;
    dg.reserve(gs.size());
    for (VarId v : gs) dg.push_back(g.derivative(v));
    for (VarId u : fs) {
      Poly df = f.derivative(u);
      for (std::size_t k = 0; k < gs.size(); ++k) {
        const Poly& b = on_coordinates(u, gs[k]);
        if (b.is_zero()) continue;
        out += df * dg[k] * b;
      }
    }
    return out;
  }

  /// Same value computed term by term from the vector fields, without the
  /// coordinate table. Slower; kept as an independent route.
  Poly apply_direct(const Poly& f, const Poly& g) const {
    Poly out = coords_.zero();
    std::size_t d = g_->dim();
    for (const auto& t : terms_) {
      std::vector<std::optional<Poly>> left(d);
      for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = 0; q < d; ++q) {
          const Rational& c = t.tensor(p, q);
          if (is_zero(c)) continue;
          if (!left[p]) left[p] = vf_apply(coords_, g_->basis(p), t.a.flavor, twists_[t.a.edge], f, t.a.edge);
          if (left[p]->is_zero()) continue;
          Poly right = vf_apply(coords_, g_->basis(q), t.b.flavor, twists_[t.b.edge], g, t.b.edge);
          out += *left[p] * right * Rational(c * t.coeff);
        }
      }
    }
    return out;
  }

  /// Source r-matrix data recorded by the builders (the cobracket needs ω).
  void set_r_matrix(RTensor r) {
    r_ = std::move(r);
  }
  const std::optional<RTensor>& r_matrix() const noexcept { return r_; }

 private:
  struct LegAction {
    VarId from;
    VarId to;
    Rational coeff;
  };

  /// x = E_ab at the slot acting on single coordinates: each entry says
  /// X(g_from) contains coeff · g_to.
  std::vector<LegAction> leg(Slot s, std::size_t a, std::size_t b) const {
    std::vector<LegAction> out;
    std::size_t n = g_->n();
    if (s.flavor != Flavor::L) {
      for (std::size_t j = 0; j < n; ++j) out.push_back({coords_.var(s.edge, a, j), coords_.var(s.edge, b, j), 1});
    }
    if (s.flavor != Flavor::R) {
      Rational sign = s.flavor == Flavor::L ? 1 : -1;
      const RTensor& y = twisted_units_[s.edge][a * n + b];
      for (std::size_t a2 = 0; a2 < n; ++a2)
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          if (is_zero(y(a2, b2))) continue;
          for (std::size_t i = 0; i < n; ++i)
            out.push_back({coords_.var(s.edge, i, b2), coords_.var(s.edge, i, a2), Rational(sign * y(a2, b2))});
        }
    }
    return out;
  }

  void build_table() {
    std::size_t n = g_->n();
    for (const auto& k : twists_) {
      std::vector<RTensor> units;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) units.push_back(k.apply_matrix(RTensor::unit(n, a, b)));
      twisted_units_.push_back(std::move(units));
    }
    std::size_t V = coords_.size();
    std::vector<std::vector<Poly::Term>> raw(V * V);
    for (const auto& t : terms_) {
      if (t.a.edge >= labels_.size() || t.b.edge >= labels_.size()) throw DomainError("term slot edge out of range");
      for (const auto& u : to_matrix_units(*g_, t.tensor)) {
        auto la = leg(t.a, u.a, u.b);
        auto lb = leg(t.b, u.c, u.d);
        Rational c = u.coeff * t.coeff;
        for (const auto& x : la)
          for (const auto& y : lb) {
            raw[x.from * V + y.from].emplace_back(Monomial{x.to, y.to}, Rational(c * x.coeff * y.coeff));
          }
      }
    }
    table_.reserve(V * V);
    for (auto& r : raw) table_.push_back(Poly::from_terms(coords_.vars(), std::move(r)));
  }

  LieAlgebraPtr g_;
  std::vector<AutKind> labels_;
  std::vector<BivectorTerm> terms_;
  CoordinateSpace coords_;
  std::vector<DynkinAut> twists_;
  std::vector<std::vector<RTensor>> twisted_units_;
  std::vector<Poly> table_;
  std::optional<RTensor> r_;
};

using PoissonBivector = Bidifferential;

inline Poly bracket(const PoissonBivector& pi, const Poly& f, const Poly& g) { return pi.apply(f, g); }

}  // namespace qtwist
