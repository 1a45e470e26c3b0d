#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtwist/ring/rational.hpp"
#include "qtwist/ring/sparse_poly.hpp"

namespace qtwist::test {

/// Builds a polynomial from ("coefficient", {variable names}) pairs, so
/// oracle values can be written in the same shape they were computed in.
using OracleTerm = std::pair<std::string, std::vector<std::string>>;

inline Poly poly_of(const VarSetPtr& vars, const std::vector<OracleTerm>& terms) {
  Poly out(vars);
  for (const auto& [c, names] : terms) {
    Poly mono = Poly::constant(vars, parse_rational(c));
    for (const auto& nm : names) mono = mono * Poly::variable(vars, vars->id(nm));
    out += mono;
  }
  return out;
}

}  // namespace qtwist::test
