#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qtwist/ring/errors.hpp"
#include "qtwist/ring/jet.hpp"
#include "qtwist/ring/rational.hpp"

namespace qtwist {

using VarId = std::uint32_t;

/// Ordered list of variable names. The position of a name is its id, and
/// ids drive the monomial order.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], static_cast<VarId>(i)).second) {
        throw DomainError("duplicate variable name '" + names_[i] + "'");
      }
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(VarId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  VarId id(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw MissingVariable("unknown variable '" + name + "'");
    return it->second;
  }

  friend bool operator==(const VariableSet& a, const VariableSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarId> index_;
};

using VarSetPtr = std::shared_ptr<const VariableSet>;

inline VarSetPtr make_variable_set(std::vector<std::string> names) {
  return std::make_shared<const VariableSet>(std::move(names));
}

/// A monomial as the sorted multiset of its variable ids.
using Monomial = boost::container::small_vector<VarId, 4>;

/// Graded lexicographic order; returns true when a comes strictly before b
/// in the stored (descending) order, i.e. a is the larger monomial.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
  }
};

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.resize(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
  return out;
}

/// Sparse polynomial over a fixed variable set with coefficients in C
/// (Rational or Jet1<Rational>). Terms are kept in descending grlex order with
/// no zero coefficients, so equality is structural.
template <class C>
class SparsePoly {
 public:
  using Coeff = C;
  using Term = std::pair<Monomial, C>;

  SparsePoly() = default;
  explicit SparsePoly(VarSetPtr vars) : vars_(std::move(vars)) {}

  static SparsePoly constant(VarSetPtr vars, const C& c) {
    SparsePoly p(std::move(vars));
    if (!qtwist::is_zero(c)) p.terms_.emplace_back(Monomial{}, c);
    return p;
  }
  static SparsePoly variable(VarSetPtr vars, VarId v, const C& c = C(1)) {
    if (v >= vars->size()) throw MissingVariable("variable id out of range");
    SparsePoly p(std::move(vars));
    if (!qtwist::is_zero(c)) p.terms_.emplace_back(Monomial{v}, c);
    return p;
  }
  /// Builds from arbitrary (monomial, coefficient) pairs; monomials need not
  /// be sorted and duplicates are combined.
  static SparsePoly from_terms(VarSetPtr vars, std::vector<Term> raw) {
    SparsePoly p(std::move(vars));
    for (auto& t : raw) {
      std::sort(t.first.begin(), t.first.end());
      for (VarId v : t.first) {
        if (v >= p.vars_->size()) throw MissingVariable("variable id out of range");
      }
    }
    p.terms_ = std::move(raw);
    p.normalize();
    return p;
  }

  const VarSetPtr& vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  int degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.size());
  }

  SparsePoly& operator+=(const SparsePoly& o) { return accumulate(o, false); }
  SparsePoly& operator-=(const SparsePoly& o) { return accumulate(o, true); }

  SparsePoly& operator*=(const C& s) {
    if (qtwist::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= s;
      drop_zeros();  // Jet1 coefficients can vanish under multiplication
    }
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend SparsePoly operator*(SparsePoly a, const C& s) { return a *= s; }
  friend SparsePoly operator*(const C& s, SparsePoly a) { return a *= s; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    const VarSetPtr& vs = common_vars(a, b);
    SparsePoly out(vs);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        out.terms_.emplace_back(monomial_product(ma, mb), C(ca * cb));
      }
    }
    out.normalize();
    return out;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    if (!same_vars(a.vars_, b.vars_)) return false;
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  /// Partial derivative with respect to one variable.
  SparsePoly derivative(VarId v) const {
    SparsePoly out(vars_);
    for (const auto& [m, c] : terms_) {
      auto lo = std::lower_bound(m.begin(), m.end(), v);
      if (lo == m.end() || *lo != v) continue;
      auto hi = std::upper_bound(lo, m.end(), v);
      Monomial rest(m.begin(), lo);
      rest.insert(rest.end(), lo + 1, m.end());
      out.terms_.emplace_back(std::move(rest), C(c * C(static_cast<long>(hi - lo))));
    }
    out.normalize();
    return out;
  }

  /// Sorted, deduplicated ids of variables that actually occur.
  std::vector<VarId> support() const {
    std::vector<VarId> out;
    for (const auto& t : terms_) out.insert(out.end(), t.first.begin(), t.first.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Evaluates with one value per variable id of the variable set.
  C evaluate(std::span<const Rational> point) const {
    C acc(0);
    for (const auto& [m, c] : terms_) {
      Rational prod(1);
      for (VarId v : m) {
        if (v >= point.size()) throw MissingVariable("no value for variable '" + vars_->name(v) + "'");
        prod *= point[v];
      }
      acc += c * C(prod);
    }
    return acc;
  }

  /// Evaluates with a name-keyed assignment; only occurring variables need a value.
  C evaluate(const std::map<std::string, Rational>& point) const {
    C acc(0);
    for (const auto& [m, c] : terms_) {
      Rational prod(1);
      for (VarId v : m) {
        auto it = point.find(vars_->name(v));
        if (it == point.end()) throw MissingVariable("no value for variable '" + vars_->name(v) + "'");
        prod *= it->second;
      }
      acc += c * C(prod);
    }
    return acc;
  }

 private:
  static bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
  }

  static const VarSetPtr& common_vars(const SparsePoly& a, const SparsePoly& b) {
    if (!a.vars_) return b.vars_;
    if (!b.vars_) return a.vars_;
    if (!same_vars(a.vars_, b.vars_)) throw DimensionMismatch("polynomials over different variable sets");
    return a.vars_;
  }

  SparsePoly& accumulate(const SparsePoly& o, bool subtract) {
    vars_ = common_vars(*this, o);
    if (o.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    GrlexDescending less;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && less(a->first, b->first))) {
        merged.push_back(std::move(*a++));
      } else if (a == terms_.end() || less(b->first, a->first)) {
        merged.emplace_back(b->first, subtract ? C(-b->second) : b->second);
        ++b;
      } else {
        C c = subtract ? C(a->second - b->second) : C(a->second + b->second);
        if (!qtwist::is_zero(c)) merged.emplace_back(std::move(a->first), std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return GrlexDescending{}(x.first, y.first); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && qtwist::is_zero(out.back().second)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && qtwist::is_zero(out.back().second)) out.pop_back();
    terms_ = std::move(out);
  }

  void drop_zeros() {
    std::erase_if(terms_, [](const Term& t) { return qtwist::is_zero(t.second); });
  }

  VarSetPtr vars_;
  std::vector<Term> terms_;
};

using Poly = SparsePoly<Rational>;

/// Exact evaluation at a point given by name.
template <class C>
C poly_bracket_eval(const SparsePoly<C>& p, const std::map<std::string, Rational>& point) {
  return p.evaluate(point);
}

inline std::string coeff_string(const Rational& c) { return to_string(c); }
inline std::string coeff_string(const Jet1<Rational>& c) { return to_string(c); }

/// Canonical rendering such as "3/2*g1_11*g2_23 - g1_12 + 1". Zero prints "0".
template <class C>
std::string to_string(const SparsePoly<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string cs = coeff_string(c);
    bool negative = false;
    if constexpr (std::is_same_v<C, Rational>) {
      negative = sgn(c) < 0;
      if (negative) cs = to_string(Rational(-c));
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k) mono += "*";
      mono += p.vars()->name(m[k]);
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

template <class C>
std::ostream& operator<<(std::ostream& os, const SparsePoly<C>& p) {
  return os << to_string(p);
}

}  // namespace qtwist
