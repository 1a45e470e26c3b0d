#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtwist/ring/errors.hpp"

namespace qtwist {

using Elem = std::size_t;

/// Finite group given by its Cayley table.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<Elem>> mul, std::vector<std::string> names, std::string label = "")
      : mul_(std::move(mul)), names_(std::move(names)), label_(std::move(label)) {
    std::size_t k = mul_.size();
    if (k == 0) throw DomainError("group must be non-empty");
    if (names_.empty()) {
      for (std::size_t i = 0; i < k; ++i) names_.push_back(std::to_string(i));
    }
    if (names_.size() != k) throw DomainError("name count does not match group order");
    for (const auto& row : mul_) {
      if (row.size() != k) throw DomainError("multiplication table is not square");
      for (Elem e : row)
        if (e >= k) throw DomainError("table entry out of range");
    }
    id_ = k;
    for (Elem e = 0; e < k && id_ == k; ++e) {
      bool unit = true;
      for (Elem x = 0; x < k && unit; ++x) unit = mul_[e][x] == x && mul_[x][e] == x;
      if (unit) id_ = e;
    }
    if (id_ == k) throw DomainError("table has no identity element");
    inv_.assign(k, k);
    for (Elem x = 0; x < k; ++x)
      for (Elem y = 0; y < k; ++y)
        if (mul_[x][y] == id_ && mul_[y][x] == id_) inv_[x] = y;
    for (Elem x = 0; x < k; ++x)
      if (inv_[x] == k) throw DomainError("element '" + names_[x] + "' has no inverse");
    for (Elem a = 0; a < k; ++a)
      for (Elem b = 0; b < k; ++b)
        for (Elem c = 0; c < k; ++c)
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) throw DomainError("table is not associative");
  }

  std::size_t order() const noexcept { return mul_.size(); }
  Elem id() const noexcept { return id_; }
  Elem mul(Elem a, Elem b) const { return mul_[a][b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  const std::string& name(Elem a) const { return names_.at(a); }
  const std::string& label() const noexcept { return label_; }
  /// True for the built-in Z/m family, whose elements are named "0".."m-1".
  bool is_cyclic_family() const noexcept { return cyclic_; }

  Elem find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw DomainError("no group element named '" + name + "'");
    return static_cast<Elem>(it - names_.begin());
  }

 private:
  std::vector<std::vector<Elem>> mul_;
  std::vector<std::string> names_;
  std::string label_;
  std::vector<Elem> inv_;
  Elem id_ = 0;
  bool cyclic_ = false;

  friend FiniteGroup cyclic_group(std::size_t m);
};

/// Z/m written additively; element k is named "k".
inline FiniteGroup cyclic_group(std::size_t m) {
  if (m == 0) throw DomainError("Z/m needs m >= 1");
  std::vector<std::vector<Elem>> mul(m, std::vector<Elem>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) mul[a][b] = (a + b) % m;
  FiniteGroup g(std::move(mul), {}, "Z" + std::to_string(m));
  g.cyclic_ = true;
  return g;
}

/// S_m with composition (στ)(x) = σ(τ(x)). Elements are named by one-line
/// notation of the images of 1..m, e.g. "213".
inline FiniteGroup symmetric_group(std::size_t m) {
  if (m == 0 || m > 6) throw DomainError("S_m supported for 1 <= m <= 6");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s;
    for (auto v : q) s += std::to_string(v + 1);
    names.push_back(s);
  }
  std::size_t k = perms.size();
  std::vector<std::vector<Elem>> mul(k, std::vector<Elem>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      std::vector<std::size_t> c(m);
      for (std::size_t x = 0; x < m; ++x) c[x] = perms[a][perms[b][x]];
      mul[a][b] = static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(std::move(mul), std::move(names), "S" + std::to_string(m));
}

/// Group file: {"order": k, "mul": [[...]], "names": [...]}.
inline FiniteGroup group_from_json(const nlohmann::json& j, const std::string& label = "") {
  try {
    std::size_t k = j.at("order").get<std::size_t>();
    auto mul = j.at("mul").get<std::vector<std::vector<Elem>>>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    if (mul.size() != k) throw DomainError("'order' does not match the table size");
    return FiniteGroup(std::move(mul), std::move(names), label);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed group description: ") + e.what());
  }
}

/// Permutation of elements that is a group homomorphism.
class GroupAutomorphism {
 public:
  GroupAutomorphism(const FiniteGroup& g, std::vector<Elem> map, std::string label)
      : map_(std::move(map)), label_(std::move(label)) {
    std::size_t k = g.order();
    if (map_.size() != k) throw DomainError("automorphism has wrong length");
    std::vector<bool> hit(k, false);
    for (Elem e : map_) {
      if (e >= k || hit[e]) throw DomainError("automorphism '" + label_ + "' is not bijective");
      hit[e] = true;
    }
    for (Elem a = 0; a < k; ++a)
      for (Elem b = 0; b < k; ++b)
        if (map_[g.mul(a, b)] != g.mul(map_[a], map_[b])) {
          throw DomainError("'" + label_ + "' is not a homomorphism");
        }
  }

  Elem operator()(Elem x) const { return map_[x]; }
  const std::vector<Elem>& map() const noexcept { return map_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::vector<Elem> map_;
  std::string label_;
};

inline GroupAutomorphism identity_aut(const FiniteGroup& g) {
  std::vector<Elem> m(g.order());
  std::iota(m.begin(), m.end(), 0);
  return GroupAutomorphism(g, std::move(m), "id");
}

/// x ↦ u·x on Z/m (as written additively); u must be a unit.
inline GroupAutomorphism unit_aut(const FiniteGroup& zm, std::size_t u) {
  std::size_t m = zm.order();
  if (std::gcd(u % m, m) != 1 && m > 1) throw DomainError("u" + std::to_string(u) + " is not a unit mod " + std::to_string(m));
  std::vector<Elem> map(m);
  for (std::size_t x = 0; x < m; ++x) map[zm.find(std::to_string(x))] = zm.find(std::to_string((u * x) % m));
  return GroupAutomorphism(zm, std::move(map), "u" + std::to_string(u));
}

/// x ↦ h x h⁻¹.
inline GroupAutomorphism inner_aut(const FiniteGroup& g, Elem h) {
  std::vector<Elem> map(g.order());
  for (Elem x = 0; x < g.order(); ++x) map[x] = g.mul(g.mul(h, x), g.inv(h));
  return GroupAutomorphism(g, std::move(map), "inner:" + g.name(h));
}

/// Parses "id", "u<unit>" (cyclic groups) or "inner:<element>".
inline GroupAutomorphism parse_twist(const FiniteGroup& g, const std::string& tok) {
  if (tok == "id") return identity_aut(g);
  if (tok.rfind("inner:", 0) == 0) return inner_aut(g, g.find(tok.substr(6)));
  if (tok.size() > 1 && tok[0] == 'u') {
    if (!g.is_cyclic_family()) throw DomainError("twist '" + tok + "' needs a cyclic group");
    std::string digits = tok.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) || digits.size() > 9) {
      throw DomainError("bad unit in twist '" + tok + "'");
    }
    return unit_aut(g, std::stoul(digits));
  }
  throw DomainError("unknown twist '" + tok + "'");
}

/// Every twist token the group family provides: units for Z/m, inner
/// automorphisms otherwise.
inline std::vector<GroupAutomorphism> builtin_twists(const FiniteGroup& g) {
  std::vector<GroupAutomorphism> out;
  if (g.is_cyclic_family()) {
    std::size_t m = g.order();
    if (m == 1) out.push_back(unit_aut(g, 1));
    for (std::size_t u = 1; u < m; ++u)
      if (std::gcd(u, m) == 1) out.push_back(unit_aut(g, u));
  } else {
    for (Elem h = 0; h < g.order(); ++h) out.push_back(inner_aut(g, h));
  }
  return out;
}

}  // namespace qtwist
