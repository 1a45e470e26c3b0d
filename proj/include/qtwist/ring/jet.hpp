#pragma once

#include <ostream>
#include <string>

#include "qtwist/ring/errors.hpp"
#include "qtwist/ring/rational.hpp"

namespace qtwist {

/// Element c0 + ħ·c1 of T[ħ]/(ħ²).
template <class T>
struct Jet1 {
  T c0{};
  T c1{};

  Jet1() = default;
  Jet1(T a0) : c0(std::move(a0)), c1(0) {}  // NOLINT: implicit scalar embedding
  Jet1(T a0, T a1) : c0(std::move(a0)), c1(std::move(a1)) {}

  static Jet1 hbar() { return Jet1(T(0), T(1)); }

  Jet1& operator+=(const Jet1& o) {
    c0 += o.c0;
    c1 += o.c1;
    return *this;
  }
  Jet1& operator-=(const Jet1& o) {
    c0 -= o.c0;
    c1 -= o.c1;
    return *this;
  }
  Jet1& operator*=(const Jet1& o) { return *this = *this * o; }

  friend Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
  friend Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }
  friend Jet1 operator-(const Jet1& a) { return Jet1(T(-a.c0), T(-a.c1)); }
  friend Jet1 operator*(const Jet1& a, const Jet1& b) {
    return Jet1(T(a.c0 * b.c0), T(a.c0 * b.c1 + a.c1 * b.c0));
  }
  friend bool operator==(const Jet1& a, const Jet1& b) { return a.c0 == b.c0 && a.c1 == b.c1; }
  friend bool operator!=(const Jet1& a, const Jet1& b) { return !(a == b); }

  /// Inverse exists iff c0 is invertible: (a + ħb)⁻¹ = a⁻¹ − ħ b a⁻².
  Jet1 inverse() const {
    if (c0 == T(0)) throw DomainError("jet with zero constant term is not invertible");
    T inv = T(1) / c0;
    return Jet1(inv, T(-c1 * inv * inv));
  }
  friend Jet1 operator/(const Jet1& a, const Jet1& b) { return a * b.inverse(); }
};

template <class T>
Jet1<T> jet_mul(const Jet1<T>& a, const Jet1<T>& b) {
  return a * b;
}

template <class T>
bool is_zero(const Jet1<T>& a) {
  return a.c0 == T(0) && a.c1 == T(0);
}

inline std::string to_string(const Jet1<Rational>& a) {
  return "(" + to_string(a.c0) + " + " + to_string(a.c1) + "h)";
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Jet1<T>& a) {
  return os << to_string(a);
}

}  // namespace qtwist
