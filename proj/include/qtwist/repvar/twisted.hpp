#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qtwist/repvar/group.hpp"
#include "qtwist/ring/errors.hpp"
#include "qtwist/ring/rational.hpp"

namespace qtwist {

struct TwistData {
  std::vector<GroupAutomorphism> twists;
  std::size_t n() const noexcept { return twists.size(); }
};

/// Images (g_1, …, g_n) of the free generators.
struct TwistedHom {
  std::vector<Elem> values;
  friend bool operator==(const TwistedHom&, const TwistedHom&) = default;
};

/// (generator index, ±1)
using GroupWord = std::vector<std::pair<std::size_t, int>>;

/// Value of a word together with its accumulated twist, kept as an element
/// map so twists compose without naming them.
struct WordValue {
  Elem value;
  std::vector<Elem> twist;
};

/// Left-to-right crossed-homomorphism evaluation:
/// φ(γδ) = φ(γ) · ρ(γ).φ(δ), φ(γ⁻¹) = ρ(γ)⁻¹.φ(γ)⁻¹.
inline WordValue evaluate_word_full(const FiniteGroup& g, const TwistedHom& phi, const TwistData& rho,
                                    const GroupWord& word) {
  WordValue acc{g.id(), identity_aut(g).map()};
  for (auto [i, e] : word) {
    if (i >= phi.values.size() || i >= rho.n()) throw DomainError("generator index out of range");
    if (e != 1 && e != -1) throw DomainError("exponent must be +1 or -1");
    const auto& k = rho.twists[i].map();
    Elem letter;
    std::vector<Elem> letter_twist(g.order());
    if (e == 1) {
      letter = phi.values[i];
      letter_twist = k;
    } else {
      std::vector<Elem> kinv(g.order());
      for (Elem x = 0; x < g.order(); ++x) kinv[k[x]] = x;
      letter = kinv[g.inv(phi.values[i])];
      letter_twist = kinv;
    }
    acc.value = g.mul(acc.value, acc.twist[letter]);
    std::vector<Elem> composed(g.order());
    for (Elem x = 0; x < g.order(); ++x) composed[x] = acc.twist[letter_twist[x]];
    acc.twist = std::move(composed);
  }
  return acc;
}

inline Elem evaluate_word(const FiniteGroup& g, const TwistedHom& phi, const TwistData& rho, const GroupWord& word) {
  return evaluate_word_full(g, phi, rho, word).value;
}

/// g_i ↦ h · g_i · κ_i(h)⁻¹.
inline TwistedHom twisted_conjugate(const FiniteGroup& g, Elem h, const TwistedHom& phi, const TwistData& rho) {
  if (phi.values.size() != rho.n()) throw DomainError("twist count does not match generator count");
  TwistedHom out = phi;
  for (std::size_t i = 0; i < rho.n(); ++i) {
    out.values[i] = g.mul(g.mul(h, phi.values[i]), g.inv(rho.twists[i](h)));
  }
  return out;
}

inline constexpr std::uint64_t kStateGuard = 10'000'000;

inline std::uint64_t state_count(const FiniteGroup& g, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= g.order();
    if (total > kStateGuard) {
      throw SizeGuardError("|G|^n exceeds " + std::to_string(kStateGuard) + " states");
    }
  }
  return total;
}

namespace detail {

inline TwistedHom decode_state(std::uint64_t s, std::size_t order, std::size_t n) {
  TwistedHom phi;
  phi.values.resize(n);
  for (std::size_t i = n; i-- > 0;) {
    phi.values[i] = static_cast<Elem>(s % order);
    s /= order;
  }
  return phi;
}

inline std::uint64_t encode_state(const TwistedHom& phi, std::size_t order) {
  std::uint64_t s = 0;
  for (Elem v : phi.values) s = s * order + v;
  return s;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Orbit count via union-find over the action of every group element.
inline std::uint64_t orbit_count(const FiniteGroup& g, const TwistData& rho) {
  std::uint64_t states = state_count(g, rho.n());
  detail::UnionFind uf(states);
  std::uint64_t orbits = states;
  for (std::uint64_t s = 0; s < states; ++s) {
    TwistedHom phi = detail::decode_state(s, g.order(), rho.n());
    for (Elem h = 0; h < g.order(); ++h) {
      std::uint64_t t = detail::encode_state(twisted_conjugate(g, h, phi, rho), g.order());
      if (uf.unite(s, t)) --orbits;
    }
  }
  return orbits;
}

/// Burnside: (1/|G|) Σ_h Π_i #{x : h x κ_i(h)⁻¹ = x}.
inline Rational burnside_count(const FiniteGroup& g, const TwistData& rho) {
  (void)state_count(g, rho.n());
  mpz_class total = 0;
  for (Elem h = 0; h < g.order(); ++h) {
    mpz_class fixed = 1;
    for (std::size_t i = 0; i < rho.n(); ++i) {
      std::size_t c = 0;
      for (Elem x = 0; x < g.order(); ++x)
        if (g.mul(g.mul(h, x), g.inv(rho.twists[i](h))) == x) ++c;
      fixed *= static_cast<unsigned long>(c);
    }
    total += fixed;
  }
  Rational q(total, mpz_class(static_cast<unsigned long>(g.order())));
  q.canonicalize();
  return q;
}

/// Σ over orbits of 1/|Stab|, with each stabilizer counted directly at the
/// orbit's smallest state.
inline Rational groupoid_cardinality(const FiniteGroup& g, const TwistData& rho) {
  std::uint64_t states = state_count(g, rho.n());
  detail::UnionFind uf(states);
  for (std::uint64_t s = 0; s < states; ++s) {
    TwistedHom phi = detail::decode_state(s, g.order(), rho.n());
    for (Elem h = 0; h < g.order(); ++h) uf.unite(s, detail::encode_state(twisted_conjugate(g, h, phi, rho), g.order()));
  }
  Rational total = 0;
  for (std::uint64_t s = 0; s < states; ++s) {
    if (uf.find(s) != s) continue;
    TwistedHom phi = detail::decode_state(s, g.order(), rho.n());
    unsigned long stab = 0;
    for (Elem h = 0; h < g.order(); ++h)
      if (twisted_conjugate(g, h, phi, rho) == phi) ++stab;
    total += Rational(1, stab);
  }
  return total;
}

}  // namespace qtwist
