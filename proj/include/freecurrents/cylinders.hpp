// Copyright 2026 The freecurrents Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Subset cylinders. A counting current is evaluated on the cylinder of a
// round-graph T by counting hull-core vertices whose radius-r pattern is T.

#ifndef FREECURRENTS_CYLINDERS_HPP_
#define FREECURRENTS_CYLINDERS_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "freecurrents/error.hpp"
#include "freecurrents/rational.hpp"
#include "freecurrents/round_graph.hpp"
#include "freecurrents/stallings.hpp"
#include "freecurrents/word.hpp"

namespace freecurrents {

// Finitely supported nonnegative rational values on R_r(id). Zero entries
// are not stored.
class WeightTable {
 public:
  WeightTable(Basis basis, int radius) : basis_(basis), radius_(radius) {
    if (radius < 0) throw DomainError("radius must be nonnegative");
  }

  Basis basis() const noexcept { return basis_; }
  int radius() const noexcept { return radius_; }
  const std::map<RoundGraph, Rational>& entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }

  Rational at(const RoundGraph& t) const {
    auto it = entries_.find(t);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  void set(const RoundGraph& t, const Rational& value) {
    check_key(t);
    if (sgn(value) < 0) throw DomainError("weight table values must be nonnegative");
    if (sgn(value) == 0) {
      entries_.erase(t);
    } else {
      entries_[t] = value;
    }
  }

  void add(const RoundGraph& t, const Rational& value) { set(t, at(t) + value); }

  Rational total_mass() const {
    Rational s = 0;
    for (const auto& [t, v] : entries_) s += v;
    return s;
  }

  WeightTable scaled(const Rational& factor) const {
    if (sgn(factor) < 0) throw DomainError("scale factor must be nonnegative");
    WeightTable out(basis_, radius_);
    if (sgn(factor) == 0) return out;
    for (const auto& [t, v] : entries_) out.entries_.emplace(t, v * factor);
    return out;
  }

  friend WeightTable operator+(const WeightTable& a, const WeightTable& b) {
    a.check_compatible(b);
    WeightTable out = a;
    for (const auto& [t, v] : b.entries_) out.add(t, v);
    return out;
  }

  friend bool operator==(const WeightTable& a, const WeightTable& b) {
    return a.basis_ == b.basis_ && a.radius_ == b.radius_ && a.entries_ == b.entries_;
  }

  void check_compatible(const WeightTable& other) const {
    require_same_basis(basis_, other.basis_);
    if (radius_ != other.radius_) {
      throw DomainError("radius mismatch: " + std::to_string(radius_) + " vs " +
                        std::to_string(other.radius_));
    }
  }

 private:
  void check_key(const RoundGraph& t) const {
    require_same_basis(basis_, t.basis());
    if (t.radius() != radius_) throw DomainError("round-graph radius does not match the table");
  }

  Basis basis_;
  int radius_;
  std::map<RoundGraph, Rational> entries_;
};

struct CurrentTerm {
  Rational coefficient;
  Subgroup subgroup;
};

// Nonnegative rational combination of counting currents. Terms of trivial
// subgroups are the zero measure and are dropped.
class RationalCurrent {
 public:
  explicit RationalCurrent(Basis basis) : basis_(basis) {}

  static RationalCurrent counting(const Subgroup& h, const Rational& coefficient = 1) {
    RationalCurrent c(h.basis());
    c.add(coefficient, h);
    return c;
  }

  void add(const Rational& coefficient, const Subgroup& h) {
    require_same_basis(basis_, h.basis());
    if (sgn(coefficient) < 0) throw DomainError("current coefficients must be nonnegative");
    if (sgn(coefficient) == 0 || h.is_trivial()) return;
    terms_.push_back({coefficient, h});
  }

  Basis basis() const noexcept { return basis_; }
  const std::vector<CurrentTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  RationalCurrent scaled(const Rational& factor) const {
    RationalCurrent out(basis_);
    for (const auto& term : terms_) out.add(term.coefficient * factor, term.subgroup);
    return out;
  }

  friend RationalCurrent operator+(const RationalCurrent& a, const RationalCurrent& b) {
    RationalCurrent out = a;
    for (const auto& term : b.terms_) out.add(term.coefficient, term.subgroup);
    return out;
  }

 private:
  Basis basis_;
  std::vector<CurrentTerm> terms_;
};

// Number of hull vertices of h whose radius-r pattern is each round-graph.
inline std::map<RoundGraph, std::size_t> pattern_counts(const Subgroup& h, int r) {
  std::map<RoundGraph, std::size_t> counts;
  const CoreGraph& hull = h.hull();
  for (std::size_t v = 0; v < hull.num_vertices(); ++v) counts[local_ball(hull, v, r)]++;
  return counts;
}

inline WeightTable cylinder_table(const RationalCurrent& c, int r, const Limits& limits = {}) {
  check_radius(r, limits);
  WeightTable table(c.basis(), r);
  for (const auto& term : c.terms()) {
    for (const auto& [t, count] : pattern_counts(term.subgroup, r)) {
      table.add(t, term.coefficient * Rational(static_cast<unsigned long>(count)));
    }
  }
  return table;
}

// Refinement sum: the value at T of radius r is the total over the finer
// round-graphs restricting to T.
inline WeightTable coarsen(const WeightTable& t, int r) {
  WeightTable out(t.basis(), r);
  for (const auto& [key, value] : t.entries()) out.add(restrict(key, r), value);
  return out;
}

// ---------------------------------------------------------------------------
// Matching equations.

// Vertex set of B(id, r) intersected with B(u, r) for the generator u.
inline bool in_lens(const Word& w, int generator, int r) {
  if (w.size() > static_cast<std::size_t>(r)) return false;
  // |u^-1 w| is |w| - 1 when w starts with u and |w| + 1 otherwise.
  bool starts_with_u = !w.empty() && w[0] == generator;
  std::size_t d = starts_with_u ? w.size() - 1 : w.size() + 1;
  return d <= static_cast<std::size_t>(r);
}

// A lens class: a (id, u)-round-graph, written in id-centered coordinates.
struct LensClass {
  int generator;
  std::vector<Word> vertices;  // shortlex

  friend auto operator<=>(const LensClass&, const LensClass&) = default;
};

inline std::string to_string(const LensClass& j) {
  std::string s;
  for (const auto& w : j.vertices) s += (s.empty() ? "" : ",") + to_string(w);
  return "u=" + std::string(1, j.vertices.front().basis().symbol(j.generator)) + " J={" + s + "}";
}

// T intersected with the lens, for T containing u.
inline LensClass lens_of(const RoundGraph& t, int generator) {
  LensClass j{generator, {}};
  for (const auto& w : t.vertices()) {
    if (in_lens(w, generator, t.radius())) j.vertices.push_back(w);
  }
  return j;
}

// uT intersected with the lens, for T containing u^-1.
inline LensClass translated_lens_of(const RoundGraph& t, int generator) {
  LensClass j{generator, {}};
  Word u = letter_word(t.basis(), generator);
  for (const auto& w : t.vertices()) {
    Word moved = concat(u, w);
    if (in_lens(moved, generator, t.radius())) j.vertices.push_back(std::move(moved));
  }
  std::sort(j.vertices.begin(), j.vertices.end());
  return j;
}

struct MatchingViolation {
  LensClass lens;
  Rational lhs;  // weight of T containing u with T on the lens equal to J
  Rational rhs;  // weight of T containing u^-1 with uT on the lens equal to J
};

// Per-generator, per-lens balance of the table. Empty iff every row holds.
inline std::vector<MatchingViolation> check_matching(const WeightTable& t) {
  std::map<LensClass, std::pair<Rational, Rational>> rows;
  if (t.radius() == 0) return {};
  for (int u = 1; u <= t.basis().rank(); ++u) {
    Word forward = letter_word(t.basis(), u);
    Word backward = letter_word(t.basis(), -u);
    for (const auto& [key, value] : t.entries()) {
      if (key.contains(forward)) rows[lens_of(key, u)].first += value;
      if (key.contains(backward)) rows[translated_lens_of(key, u)].second += value;
    }
  }
  std::vector<MatchingViolation> out;
  for (const auto& [lens, sums] : rows) {
    if (sums.first != sums.second) out.push_back({lens, sums.first, sums.second});
  }
  return out;
}

// Sup over round-graphs of the absolute difference.
inline Rational distance(const WeightTable& a, const WeightTable& b) {
  a.check_compatible(b);
  Rational best = 0;
  auto consider = [&](const RoundGraph& t) {
    Rational d = abs(a.at(t) - b.at(t));
    if (d > best) best = d;
  };
  for (const auto& [t, v] : a.entries()) consider(t);
  for (const auto& [t, v] : b.entries()) consider(t);
  return best;
}

}  // namespace freecurrents

#endif  // FREECURRENTS_CYLINDERS_HPP_
