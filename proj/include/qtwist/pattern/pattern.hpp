#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qtwist/lie/dynkin.hpp"
#include "qtwist/ring/errors.hpp"

namespace qtwist {

/// Bijection from {1,1',…,n,n'} onto positions {1,…,2n}; stored 1-based.
class GluingPattern {
 public:
  GluingPattern() = default;
  /// Flat list P(1) P(1') P(2) P(2') … with P(i) < P(i').
  explicit GluingPattern(const std::vector<std::size_t>& flat) {
    if (flat.empty() || flat.size() % 2 != 0) throw DomainError("pattern needs 2n positions");
    std::size_t n = flat.size() / 2;
    std::vector<bool> seen(2 * n + 1, false);
    for (std::size_t p : flat) {
      if (p < 1 || p > 2 * n) throw DomainError("position " + std::to_string(p) + " outside 1.." + std::to_string(2 * n));
      if (seen[p]) throw DomainError("position " + std::to_string(p) + " used twice");
      seen[p] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (flat[2 * i] >= flat[2 * i + 1]) {
        throw DomainError("P(" + std::to_string(i + 1) + ") >= P(" + std::to_string(i + 1) + "')");
      }
      start_.push_back(flat[2 * i]);
      end_.push_back(flat[2 * i + 1]);
    }
  }

  std::size_t n() const noexcept { return start_.size(); }
  /// P(i) and P(i') for 0-based edge i.
  std::size_t start(std::size_t i) const { return start_.at(i); }
  std::size_t end(std::size_t i) const { return end_.at(i); }

  std::vector<std::size_t> flat() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n(); ++i) {
      out.push_back(start_[i]);
      out.push_back(end_[i]);
    }
    return out;
  }

  friend bool operator==(const GluingPattern&, const GluingPattern&) = default;

 private:
  std::vector<std::size_t> start_;
  std::vector<std::size_t> end_;
};

inline std::string to_string(const GluingPattern& p) {
  std::string s = "(";
  auto f = p.flat();
  for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + std::to_string(f[k]);
  return s + ")";
}

struct DecoratedPattern {
  GluingPattern pattern;
  std::vector<AutKind> labels;
  char dynkin_type = 'A';
  std::size_t dynkin_rank = 0;  // 0 when the file leaves the rank open

  DecoratedPattern() = default;
  DecoratedPattern(GluingPattern p, std::vector<AutKind> l) : pattern(std::move(p)), labels(std::move(l)) {
    if (labels.size() != pattern.n()) throw DomainError("label count does not match edge count");
  }
  std::size_t n() const noexcept { return pattern.n(); }
};

inline std::string labels_string(const std::vector<AutKind>& labels) {
  std::string s;
  for (std::size_t k = 0; k < labels.size(); ++k) s += (k ? " " : "") + to_string(labels[k]);
  return s;
}

enum class PairClass { PosLinked, NegLinked, PosNested, NegNested, PosUnlinked, NegUnlinked };

inline constexpr std::array<PairClass, 6> kAllPairClasses = {
    PairClass::PosUnlinked, PairClass::PosLinked, PairClass::PosNested,
    PairClass::NegUnlinked, PairClass::NegLinked, PairClass::NegNested};

inline std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::PosLinked: return "PosLinked";
    case PairClass::NegLinked: return "NegLinked";
    case PairClass::PosNested: return "PosNested";
    case PairClass::NegNested: return "NegNested";
    case PairClass::PosUnlinked: return "PosUnlinked";
    case PairClass::NegUnlinked: return "NegUnlinked";
  }
  return "?";
}

inline bool is_positive(PairClass c) {
  return c == PairClass::PosLinked || c == PairClass::PosNested || c == PairClass::PosUnlinked;
}

/// Edges are 0-based here; requires i < j.
inline PairClass classify_pair(const GluingPattern& p, std::size_t i, std::size_t j) {
  if (i >= j || j >= p.n()) throw DomainError("pair indices must satisfy 1 <= i < j <= n");
  std::size_t a = p.start(i), ap = p.end(i), b = p.start(j), bp = p.end(j);
  if (a < b && b < ap && ap < bp) return PairClass::PosLinked;
  if (b < a && a < bp && bp < ap) return PairClass::NegLinked;
  if (a < b && b < bp && bp < ap) return PairClass::PosNested;
  if (b < a && a < ap && ap < bp) return PairClass::NegNested;
  if (a < ap && ap < b && b < bp) return PairClass::PosUnlinked;
  if (b < bp && bp < a && a < ap) return PairClass::NegUnlinked;
  throw DomainError("pair fits no class");  // unreachable for valid patterns
}

/// A letter g_edge^{±1}.
struct Letter {
  std::size_t edge;
  int exponent;
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct BoundaryWord {
  std::vector<Letter> letters;
  AutKind holonomy = AutKind::id;
};

inline std::string to_string(const std::vector<Letter>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) s += "g" + std::to_string(l.edge + 1) + (l.exponent < 0 ? "^-1" : "");
  return s;
}

/// Traces the boundary of the ribbon surface: a disk whose boundary carries
/// the intervals 1..2n (cilium between 2n and 1), with an untwisted band
/// joining P(i) and P(i') for each edge. Walking along the disk from the gap
/// after position k reaches interval k+1, follows its band and resumes in
/// the gap after the partner interval. Components are listed by their
/// smallest gap, the cilium gap first.
inline std::vector<BoundaryWord> boundary_words(const DecoratedPattern& d) {
  const auto& p = d.pattern;
  std::size_t m = 2 * p.n();
  std::vector<std::size_t> partner(m + 1);
  std::vector<Letter> letter(m + 1);
  for (std::size_t i = 0; i < p.n(); ++i) {
    partner[p.start(i)] = p.end(i);
    partner[p.end(i)] = p.start(i);
    letter[p.start(i)] = {i, +1};
    letter[p.end(i)] = {i, -1};
  }
  std::vector<bool> visited(m, false);
  std::vector<BoundaryWord> out;
  for (std::size_t g0 = 0; g0 < m; ++g0) {
    if (visited[g0]) continue;
    BoundaryWord w;
    std::size_t gap = g0;
    while (!visited[gap]) {
      visited[gap] = true;
      std::size_t q = gap + 1;
      w.letters.push_back(letter[q]);
      if (!d.labels.empty()) w.holonomy = compose(w.holonomy, d.labels[letter[q].edge]);
      gap = partner[q] % m;
    }
    out.push_back(std::move(w));
  }
  return out;
}

struct SurfaceInvariants {
  int genus;
  int boundary_count;
};

inline SurfaceInvariants surface_invariants(const GluingPattern& p) {
  DecoratedPattern d;
  d.pattern = p;
  int r = static_cast<int>(boundary_words(d).size());
  int n = static_cast<int>(p.n());
  // χ = 1 − n = 2 − 2g − r
  int twice_g = 1 + n - r;
  if (twice_g < 0 || twice_g % 2 != 0) throw DomainError("inconsistent boundary count");
  return {twice_g / 2, r};
}

/// All valid gluing patterns with n edges, in lexicographic order of the
/// flat position list.
inline std::vector<GluingPattern> enumerate_patterns(std::size_t n) {
  std::vector<GluingPattern> out;
  std::vector<std::size_t> flat(2 * n);
  std::vector<bool> used(2 * n + 1, false);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == 2 * n) {
      out.emplace_back(flat);
      return;
    }
    for (std::size_t v = 1; v <= 2 * n; ++v) {
      if (used[v]) continue;
      if (k % 2 == 1 && v <= flat[k - 1]) continue;
      used[v] = true;
      flat[k] = v;
      self(self, k + 1);
      used[v] = false;
    }
  };
  if (n > 0) rec(rec, 0);
  return out;
}

/// All label assignments over {id, flip} for n edges, id-first binary order.
inline std::vector<std::vector<AutKind>> enumerate_labels(std::size_t n) {
  std::vector<std::vector<AutKind>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<AutKind> l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = (mask >> (n - 1 - i)) & 1 ? AutKind::flip : AutKind::id;
    out.push_back(std::move(l));
  }
  return out;
}

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

inline std::size_t parse_count(const std::string& tok, std::size_t line, const std::string& key) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }) ||
      tok.size() > 6) {
    throw ParseError(line, key + ": expected a non-negative integer, got '" + tok + "'");
  }
  return std::stoul(tok);
}

}  // namespace detail

/// Parses the pattern file format. Assignments are separated by newlines
/// or ';'; '#' starts a comment. Keys: n, P, D (optional), labels.
inline DecoratedPattern parse_pattern(std::string_view text) {
  struct Entry {
    std::string value;
    std::size_t line = 0;
  };
  std::optional<Entry> n_e, p_e, d_e, l_e;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t seg = 0;
    while (seg <= line.size()) {
      std::size_t semi = line.find(';', seg);
      std::string stmt =
          detail::trim(line.substr(seg, semi == std::string_view::npos ? std::string_view::npos : semi - seg));
      seg = semi == std::string_view::npos ? line.size() + 1 : semi + 1;
      if (stmt.empty()) continue;
      auto eq = stmt.find('=');
      if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value', got '" + stmt + "'");
      std::string key = detail::trim(std::string_view(stmt).substr(0, eq));
      Entry e{detail::trim(std::string_view(stmt).substr(eq + 1)), line_no};
      std::optional<Entry>* slot = nullptr;
      if (key == "n") slot = &n_e;
      else if (key == "P") slot = &p_e;
      else if (key == "D") slot = &d_e;
      else if (key == "labels") slot = &l_e;
      else throw ParseError(line_no, "unknown key '" + key + "'");
      if (*slot) throw ParseError(line_no, "duplicate key '" + key + "'");
      *slot = e;
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (!n_e) throw ParseError(line_no, "missing 'n'");
  auto n_tok = detail::tokens(n_e->value);
  if (n_tok.size() != 1) throw ParseError(n_e->line, "n: expected one integer");
  std::size_t n = detail::parse_count(n_tok[0], n_e->line, "n");
  if (n == 0) throw ParseError(n_e->line, "n must be at least 1");
  if (!p_e) throw ParseError(line_no, "missing 'P'");

  DecoratedPattern out;
  if (d_e) {
    std::string tag = detail::trim(d_e->value);
    if (tag.empty() || !std::isupper(static_cast<unsigned char>(tag[0]))) {
      throw ParseError(d_e->line, "D: expected a Dynkin tag such as A2");
    }
    out.dynkin_type = tag[0];
    if (out.dynkin_type != 'A') throw ParseError(d_e->line, "D: only type A label vocabularies are supported");
    out.dynkin_rank = detail::parse_count(tag.substr(1), d_e->line, "D");
    if (out.dynkin_rank < 1) throw ParseError(d_e->line, "D: rank must be at least 1");
  }

  auto p_tok = detail::tokens(p_e->value);
  if (p_tok.size() != 2 * n) {
    throw ParseError(p_e->line, "P: expected " + std::to_string(2 * n) + " positions, got " + std::to_string(p_tok.size()));
  }
  std::vector<std::size_t> flat;
  for (const auto& t : p_tok) flat.push_back(detail::parse_count(t, p_e->line, "P"));
  try {
    out.pattern = GluingPattern(flat);
  } catch (const DomainError& e) {
    throw ParseError(p_e->line, std::string("P: ") + e.what());
  }

  if (l_e) {
    auto l_tok = detail::tokens(l_e->value);
    if (l_tok.size() != n) {
      throw ParseError(l_e->line, "labels: expected " + std::to_string(n) + " labels, got " + std::to_string(l_tok.size()));
    }
    for (const auto& t : l_tok) {
      if (t == "id") {
        out.labels.push_back(AutKind::id);
      } else if (t == "flip") {
        if (out.dynkin_rank == 1) throw ParseError(l_e->line, "labels: A1 has no 'flip'");
        out.labels.push_back(AutKind::flip);
      } else {
        throw ParseError(l_e->line, "labels: unknown label '" + t + "'");
      }
    }
  } else {
    out.labels.assign(n, AutKind::id);
  }
  return out;
}

}  // namespace qtwist
