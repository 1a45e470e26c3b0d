#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qtwist/lie/algebra.hpp"
#include "qtwist/lie/r_matrix.hpp"
#include "qtwist/ring/dense_tensor.hpp"
#include "qtwist/ring/jet.hpp"

namespace qtwist {

enum class AutKind { id, flip };

inline std::string to_string(AutKind k) { return k == AutKind::id ? "id" : "flip"; }

inline AutKind compose(AutKind a, AutKind b) { return a == b ? AutKind::id : AutKind::flip; }

/// A diagram automorphism of A_{n-1} realized on sl_n and on SL_n.
/// For flip the group map is Θ(g) = S (gᵀ)⁻¹ S⁻¹ with S antidiagonal,
/// S(k, n-1-k) = (-1)^k, so the algebra map is x ↦ −S xᵀ S⁻¹.
class DynkinAut {
 public:
  DynkinAut(LieAlgebraPtr g, AutKind kind) : g_(std::move(g)), kind_(kind) {
    std::size_t n = g_->n();
    std::size_t rk = g_->rank();
    if (kind == AutKind::flip && n < 3) throw DomainError("A1 has no nontrivial diagram automorphism");
    node_perm_.resize(rk);
    for (std::size_t i = 0; i < rk; ++i) node_perm_[i] = kind == AutKind::flip ? rk - 1 - i : i;
    s_ = RTensor::identity(n);
    if (kind == AutKind::flip) {
      s_ = RTensor({n, n});
      for (std::size_t k = 0; k < n; ++k) s_(k, n - 1 - k) = (k % 2 == 0) ? 1 : -1;
    }
    s_inv_ = inverse(s_);
    std::size_t d = g_->dim();
    map_ = RTensor({d, d});
    for (std::size_t p = 0; p < d; ++p) {
      auto c = g_->coordinates(apply_matrix(g_->basis(p)));
      for (std::size_t q = 0; q < d; ++q) map_(q, p) = c[q];
    }
  }

  AutKind kind() const noexcept { return kind_; }
  const LieAlgebraA& algebra() const noexcept { return *g_; }
  const std::vector<std::size_t>& node_perm() const noexcept { return node_perm_; }
  /// coords(κ(x)) = algebra_map · coords(x).
  const RTensor& algebra_map() const noexcept { return map_; }
  const RTensor& conjugator() const noexcept { return s_; }
  bool transpose_inverse() const noexcept { return kind_ == AutKind::flip; }

  /// κ on a matrix of gl_n (linear extension of the algebra map).
  RTensor apply_matrix(const RTensor& x) const {
    if (kind_ == AutKind::id) return x;
    return -matmul(matmul(s_, transpose(x)), s_inv_);
  }

  /// Θ on invertible matrices over any field-like T (Rational or Jet1).
  template <class T>
  DenseTensor<T> group_map(const DenseTensor<T>& m) const {
    if (kind_ == AutKind::id) return m;
    auto lift = [](const RTensor& a) {
      DenseTensor<T> out(a.shape());
      for (std::size_t k = 0; k < a.size(); ++k) out.data()[k] = T(a.data()[k]);
      return out;
    };
    return matmul(matmul(lift(s_), inverse(transpose(m))), lift(s_inv_));
  }

 private:
  LieAlgebraPtr g_;
  AutKind kind_;
  std::vector<std::size_t> node_perm_;
  RTensor s_;
  RTensor s_inv_;
  RTensor map_;
};

inline DynkinAut diagram_automorphism(const LieAlgebraPtr& g, AutKind kind) { return DynkinAut(g, kind); }

/// (κ⊗κ)(r) − r.
inline RTensor check_r_invariance(const ClassicalRMatrix& r, const DynkinAut& k) {
  const RTensor& m = k.algebra_map();
  return matmul(matmul(m, r.r()), transpose(m)) - r.r();
}

/// a_{κ(i)κ(j)} = a_ij for all nodes.
inline bool preserves_cartan(const DynkinAut& k) {
  const auto& g = k.algebra();
  const auto& p = k.node_perm();
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j)
      if (g.cartan(p[i], p[j]) != g.cartan(i, j)) return false;
  return true;
}

/// e_i ↦ e_κ(i), f_i ↦ f_κ(i), h_i ↦ h_κ(i).
inline bool permutes_chevalley_generators(const DynkinAut& k) {
  const auto& g = k.algebra();
  const auto& m = k.algebra_map();
  auto sends = [&](std::size_t from, std::size_t to) {
    for (std::size_t q = 0; q < g.dim(); ++q)
      if (m(q, from) != Rational(q == to ? 1 : 0)) return false;
    return true;
  };
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::size_t j = k.node_perm()[i];
    if (!sends(g.e_index(i), g.e_index(j)) || !sends(g.f_index(i), g.f_index(j)) ||
        !sends(g.cartan_index(i), g.cartan_index(j)))
      return false;
  }
  return true;
}

/// κ[x,y] = [κx,κy] on all basis pairs.
inline bool is_lie_automorphism(const DynkinAut& k) {
  const auto& g = k.algebra();
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = 0; b < g.dim(); ++b) {
      RTensor lhs = k.apply_matrix(LieAlgebraA::commutator(g.basis(a), g.basis(b)));
      RTensor rhs = LieAlgebraA::commutator(k.apply_matrix(g.basis(a)), k.apply_matrix(g.basis(b)));
      if (lhs != rhs) return false;
    }
  return true;
}

/// Θ(1 + ħx) = 1 + ħ κ(x) over Jet1, for every basis x.
inline bool algebra_map_is_differential(const DynkinAut& k) {
  const auto& g = k.algebra();
  std::size_t n = g.n();
  using J = Jet1<Rational>;
  for (std::size_t p = 0; p < g.dim(); ++p) {
    DenseTensor<J> m({n, n});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = J(Rational(i == j ? 1 : 0), g.basis(p)(i, j));
    DenseTensor<J> img = k.group_map(m);
    RTensor expect = k.apply_matrix(g.basis(p));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (img(i, j) != J(Rational(i == j ? 1 : 0), expect(i, j))) return false;
  }
  return true;
}

/// Θ(ab) = Θ(a)Θ(b) on random invertible integer matrices.
inline bool group_map_is_multiplicative(const DynkinAut& k, std::uint64_t seed, int samples) {
  std::size_t n = k.algebra().n();
  std::mt19937_64 rng(seed);
  auto random_invertible = [&] {
    for (;;) {
      RTensor m({n, n});
      for (auto& v : m.data()) v = static_cast<long>(rng() % 7) - 3;
      bool ok = true;
      try {
        (void)inverse(m);
      } catch (const DomainError&) {
        ok = false;
      }
      if (ok) return m;
    }
  };
  for (int s = 0; s < samples; ++s) {
    RTensor a = random_invertible();
    RTensor b = random_invertible();
    if (k.group_map(matmul(a, b)) != matmul(k.group_map(a), k.group_map(b))) return false;
  }
  return true;
}

/// Order of the automorphism group of a simply-laced Dynkin diagram,
/// found by backtracking over adjacency-preserving vertex permutations.
inline std::size_t dynkin_graph_aut_order(char type, std::size_t rank) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  switch (type) {
    case 'A':
      if (rank < 1) throw DomainError("A_n needs n >= 1");
      for (std::size_t i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'D':
      if (rank < 4) throw DomainError("D_n needs n >= 4");
      for (std::size_t i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 1);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw DomainError("E_n needs 6 <= n <= 8");
      for (std::size_t i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, rank - 1);
      break;
    default:
      throw DomainError(std::string("unsupported Dynkin type '") + type + "'");
  }
  if (rank > 64) throw DomainError("rank too large for exhaustive search");
  std::vector<std::vector<bool>> adj(rank, std::vector<bool>(rank, false));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;

  std::vector<std::size_t> image(rank);
  std::vector<bool> used(rank, false);
  std::size_t count = 0;
  std::function<void(std::size_t)> extend = [&](std::size_t v) {
    if (v == rank) {
      ++count;
      return;
    }
    for (std::size_t w = 0; w < rank; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = adj[u][v] == adj[image[u]][w];
      if (!ok) continue;
      used[w] = true;
      image[v] = w;
      extend(v + 1);
      used[w] = false;
    }
  };
  extend(0);
  return count;
}

}  // namespace qtwist
