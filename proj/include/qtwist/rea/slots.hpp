#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "qtwist/lie/r_matrix.hpp"
#include "qtwist/pattern/pattern.hpp"
#include "qtwist/poisson/bivector.hpp"

namespace qtwist {

/// coeff · r^{x,y}: the first leg of r acts on slot x, the second on slot y.
struct SlotPair {
  int x;
  int y;
  Rational coeff;
  friend bool operator==(const SlotPair&, const SlotPair&) = default;
};

/// Linear combination of r^{x,y} over four slots, kept in canonical order
/// so two constructions can be compared symbolically.
struct FourSlotOperator {
  std::vector<SlotPair> pairs;

  void add(int x, int y, const Rational& c) {
    for (auto& p : pairs)
      if (p.x == x && p.y == y) {
        p.coeff += c;
        return;
      }
    pairs.push_back({x, y, c});
  }

  FourSlotOperator canonical() const {
    FourSlotOperator out;
    for (const auto& p : pairs) out.add(p.x, p.y, p.coeff);
    std::erase_if(out.pairs, [](const SlotPair& p) { return is_zero(p.coeff); });
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const SlotPair& a, const SlotPair& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
    return out;
  }

  friend bool operator==(const FourSlotOperator& a, const FourSlotOperator& b) {
    return a.canonical().pairs == b.canonical().pairs;
  }
};

inline std::string to_string(const FourSlotOperator& op) {
  auto c = op.canonical();
  if (c.pairs.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < c.pairs.size(); ++k) {
    const auto& p = c.pairs[k];
    bool neg = sgn(p.coeff) < 0;
    Rational mag = neg ? Rational(-p.coeff) : p.coeff;
    s += k == 0 ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (mag != 1) s += to_string(mag) + "*";
    s += "r^{" + std::to_string(p.x) + "," + std::to_string(p.y) + "}";
  }
  return s;
}

/// What a slot stands for: which argument it differentiates, on which edge,
/// with which field and sign.
struct SlotMeaning {
  int argument;  // 0 = first factor, 1 = second factor
  Slot slot;
  int sign;
};
using SlotDictionary = std::array<SlotMeaning, 5>;  // index 1..4

/// Turns an operator on slots into bidifferential terms acting on
/// (first, second). Pairs whose first leg sits on the second argument are
/// rewritten with the legs of r swapped.
inline std::vector<BivectorTerm> slot_terms(const FourSlotOperator& op, const SlotDictionary& dict,
                                            const ClassicalRMatrix& r) {
  std::vector<BivectorTerm> out;
  RTensor rt = flip_legs(r.r());
  for (const auto& p : op.pairs) {
    const auto& mx = dict.at(p.x);
    const auto& my = dict.at(p.y);
    if (mx.argument == my.argument) throw DomainError("slot pair acts twice on one factor");
    Rational c = p.coeff * mx.sign * my.sign;
    if (mx.argument == 0) out.push_back({r.r(), mx.slot, my.slot, c});
    else out.push_back({rt, my.slot, mx.slot, c});
  }
  return out;
}

/// Same edge, product a·b: slots 1, 2 are x^R on a, b and slots 3, 4 are
/// −κ x^L on a, b.
inline SlotDictionary same_edge_slots(std::size_t e) {
  return {SlotMeaning{0, {e, Flavor::R}, 1}, SlotMeaning{0, {e, Flavor::R}, 1}, SlotMeaning{1, {e, Flavor::R}, 1},
          SlotMeaning{0, {e, Flavor::L}, -1}, SlotMeaning{1, {e, Flavor::L}, -1}};
}

/// Order-ħ part of the twisted REA product on one edge:
/// ½ r^{1,2} + r^{3,2} + ½ r^{3,4}.
inline FourSlotOperator same_edge_product_operator() {
  FourSlotOperator op;
  op.add(1, 2, Rational(1, 2));
  op.add(3, 2, Rational(1));
  op.add(3, 4, Rational(1, 2));
  return op;
}

/// The commutator operator on one edge as a six-term expression:
/// r^{3,2} + r^{1,2} − r^{4,1} − r^{2,1} + r^{2,1} − r^{4,3}.
inline FourSlotOperator same_edge_commutator_operator() {
  FourSlotOperator op;
  op.add(3, 2, 1);
  op.add(1, 2, 1);
  op.add(4, 1, -1);
  op.add(2, 1, -1);
  op.add(2, 1, 1);
  op.add(4, 3, -1);
  return op;
}

/// Edges i < j, factors a on i and b on j: slot 1 = x^R on a (position
/// P(i)), 2 = −κ_i x^L on a (P(i')), 3 = x^R on b (P(j)), 4 = −κ_j x^L on b
/// (P(j')).
inline SlotDictionary cross_edge_slots(std::size_t i, std::size_t j) {
  return {SlotMeaning{0, {i, Flavor::R}, 1}, SlotMeaning{0, {i, Flavor::R}, 1}, SlotMeaning{0, {i, Flavor::L}, -1},
          SlotMeaning{1, {j, Flavor::R}, 1}, SlotMeaning{1, {j, Flavor::L}, -1}};
}

/// Order-ħ part c of the reordering b·a = a·b + ħ c(a,b) built from
/// shuffle braidings: each strand of b that has to pass a strand of a
/// contributes one braiding, r^{x,y} when it passes to the left and −r^{y,x}
/// when the a strand passes it.
inline FourSlotOperator shuffle_crossing_operator(const GluingPattern& p, std::size_t i, std::size_t j) {
  if (i >= j || j >= p.n()) throw DomainError("crossing needs edges i < j");
  std::array<std::size_t, 5> pos{0, p.start(i), p.end(i), p.start(j), p.end(j)};
  FourSlotOperator op;
  for (int x : {3, 4})
    for (int y : {1, 2})
      if (pos[x] > pos[y]) op.add(x, y, 1);
  for (int x : {1, 2})
    for (int y : {3, 4})
      if (pos[x] > pos[y]) op.add(x, y, -1);
  return op;
}

/// The same reordering term written out per pair class.
inline FourSlotOperator case_crossing_operator(PairClass c) {
  FourSlotOperator op;
  switch (c) {
    case PairClass::PosUnlinked:
      op.add(3, 1, 1); op.add(3, 2, 1); op.add(4, 1, 1); op.add(4, 2, 1);
      break;
    case PairClass::PosLinked:
      op.add(3, 1, 1); op.add(4, 1, 1); op.add(4, 2, 1); op.add(2, 3, -1);
      break;
    case PairClass::PosNested:
      op.add(3, 1, 1); op.add(4, 1, 1); op.add(2, 3, -1); op.add(2, 4, -1);
      break;
    case PairClass::NegUnlinked:
      op.add(1, 3, -1); op.add(1, 4, -1); op.add(2, 3, -1); op.add(2, 4, -1);
      break;
    case PairClass::NegLinked:
      op.add(4, 1, 1); op.add(1, 3, -1); op.add(2, 3, -1); op.add(2, 4, -1);
      break;
    case PairClass::NegNested:
      op.add(4, 1, 1); op.add(4, 2, 1); op.add(1, 3, -1); op.add(2, 3, -1);
      break;
  }
  return op;
}

}  // namespace qtwist
