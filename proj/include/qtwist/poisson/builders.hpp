#pragma once

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <vector>

#include "qtwist/lie/dynkin.hpp"
#include "qtwist/lie/r_matrix.hpp"
#include "qtwist/pattern/pattern.hpp"
#include "qtwist/poisson/bivector.hpp"

namespace qtwist {

struct BuildOptions {
  /// Off only for negative controls that deliberately feed a bad r.
  bool check_invariance = true;
};

inline void require_label_invariance(const DecoratedPattern& d, const ClassicalRMatrix& r) {
  for (std::size_t e = 0; e < d.labels.size(); ++e) {
    if (d.labels[e] == AutKind::id) continue;
    DynkinAut k(r.algebra_ptr(), d.labels[e]);
    if (!check_r_invariance(r, k).is_zero()) {
      throw InvarianceError("r is not invariant under the label '" + to_string(d.labels[e]) + "' of edge " +
                            std::to_string(e + 1));
    }
  }
}

namespace detail {

inline PoissonBivector finish(const DecoratedPattern& d, const ClassicalRMatrix& r, std::vector<BivectorTerm> terms) {
  PoissonBivector pi(r.algebra_ptr(), d.labels, std::move(terms));
  pi.set_r_matrix(r.r());
  return pi;
}

}  // namespace detail

/// Half-edge bivector. Edge i has an incoming half-edge at P(i) carrying
/// −x^R and an outgoing one at P(i') carrying κ_i x^L. Half-edges are taken
/// in decreasing position; each earlier/later pair contributes
/// r^{pq} x_p(h) ∧ x_q(k) and each half-edge ½ r^{pq} x_p(h) ∧ x_q(h).
inline PoissonBivector fock_rosly_bivector(const DecoratedPattern& d, const ClassicalRMatrix& r,
                                           BuildOptions opt = {}) {
  if (opt.check_invariance) require_label_invariance(d, r);
  struct Half {
    std::size_t pos;
    Slot slot;
    int sign;
  };
  std::vector<Half> hs;
  for (std::size_t e = 0; e < d.n(); ++e) {
    hs.push_back({d.pattern.start(e), {e, Flavor::R}, -1});
    hs.push_back({d.pattern.end(e), {e, Flavor::L}, +1});
  }
  std::sort(hs.begin(), hs.end(), [](const Half& a, const Half& b) { return a.pos > b.pos; });
  std::vector<BivectorTerm> terms;
  for (std::size_t a = 0; a < hs.size(); ++a) {
    for (std::size_t b = a + 1; b < hs.size(); ++b) {
      push_wedge(terms, r.r(), hs[a].slot, hs[b].slot, Rational(hs[a].sign * hs[b].sign));
    }
    push_wedge(terms, r.r(), hs[a].slot, hs[a].slot, Rational(1, 2));
  }
  return detail::finish(d, r, std::move(terms));
}

/// ω^{ad,ad} + t^{R,L} − t^{L,R} on one edge.
inline std::vector<BivectorTerm> sts_edge_terms(const ClassicalRMatrix& r, std::size_t e) {
  std::vector<BivectorTerm> out;
  out.push_back({r.omega(), {e, Flavor::Ad}, {e, Flavor::Ad}, Rational(1)});
  out.push_back({r.t(), {e, Flavor::R}, {e, Flavor::L}, Rational(1)});
  out.push_back({r.t(), {e, Flavor::L}, {e, Flavor::R}, Rational(-1)});
  return out;
}

/// The two-tensor π_{α,β} for a pair α < β of the given class.
inline std::vector<BivectorTerm> sts_pair_terms(const ClassicalRMatrix& r, PairClass c, std::size_t alpha,
                                                std::size_t beta) {
  std::vector<BivectorTerm> out;
  const Slot ad_a{alpha, Flavor::Ad}, ad_b{beta, Flavor::Ad};
  const Slot r_a{alpha, Flavor::R}, r_b{beta, Flavor::R};
  const Slot l_a{alpha, Flavor::L}, l_b{beta, Flavor::L};
  if (is_positive(c)) {
    out.push_back({flip_legs(r.r()), ad_a, ad_b, Rational(-1)});
    if (c != PairClass::PosUnlinked) out.push_back({r.t(), l_a, r_b, Rational(-2)});
    if (c == PairClass::PosNested) out.push_back({r.t(), l_a, l_b, Rational(2)});
  } else {
    out.push_back({r.r(), ad_a, ad_b, Rational(1)});
    if (c != PairClass::NegUnlinked) out.push_back({r.t(), r_a, l_b, Rational(2)});
    if (c == PairClass::NegNested) out.push_back({r.t(), l_a, l_b, Rational(-2)});
  }
  return out;
}

/// Σ_α π_STS^{κ_α} + Σ_{α<β} (π_{α,β} − τ π_{α,β}).
inline PoissonBivector sts_case_bivector(const DecoratedPattern& d, const ClassicalRMatrix& r, BuildOptions opt = {}) {
  if (opt.check_invariance) require_label_invariance(d, r);
  std::vector<BivectorTerm> terms;
  for (std::size_t e = 0; e < d.n(); ++e) {
    auto s = sts_edge_terms(r, e);
    terms.insert(terms.end(), s.begin(), s.end());
  }
  for (std::size_t a = 0; a < d.n(); ++a)
    for (std::size_t b = a + 1; b < d.n(); ++b)
      for (const auto& t : sts_pair_terms(r, classify_pair(d.pattern, a, b), a, b))
        push_wedge(terms, t.tensor, t.a, t.b, t.coeff);
  return detail::finish(d, r, std::move(terms));
}

}  // namespace qtwist
