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

// Integral weight realization: an admissible integer weight system on R_r(id)
// is turned into the quotient of an SC-graph, whose components are hull-cores
// of subgroups H_k with sum of counting currents equal to the weights on every
// cylinder.

#ifndef FREECURRENTS_REALIZE_HPP_
#define FREECURRENTS_REALIZE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freecurrents/core_graph.hpp"
#include "freecurrents/cylinders.hpp"
#include "freecurrents/error.hpp"
#include "freecurrents/rational.hpp"
#include "freecurrents/round_graph.hpp"
#include "freecurrents/stallings.hpp"

namespace freecurrents {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  long long& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  long long operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rational> multiply(const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw DomainError("dimension mismatch in matrix product");
    std::vector<Rational> y(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (long long a = (*this)(i, j); a != 0) y[i] += Rational(static_cast<long>(a)) * x[j];
      }
    }
    return y;
  }

  bool annihilates(const std::vector<Rational>& x) const {
    for (const auto& v : multiply(x)) {
      if (sgn(v) != 0) return false;
    }
    return true;
  }

  IntMatrix columns(const std::vector<std::size_t>& keep) const {
    IntMatrix out(rows_, keep.size());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = (*this)(i, keep[j]);
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long long> data_;
};

// The matching equations as a homogeneous integer system: one row per
// (generator u, lens class J), one column per round-graph.
struct MatchingSystem {
  MatchingSystem(Basis b, int r) : basis(b), radius(r) {}

  std::optional<std::size_t> column_of(const RoundGraph& t) const {
    auto it = std::lower_bound(columns.begin(), columns.end(), t);
    if (it == columns.end() || *it != t) return std::nullopt;
    return static_cast<std::size_t>(it - columns.begin());
  }

  std::vector<Rational> vector_of(const WeightTable& t) const {
    std::vector<Rational> x(columns.size(), Rational(0));
    for (const auto& [key, value] : t.entries()) {
      auto j = column_of(key);
      if (!j) throw DomainError("table entry " + to_string(key) + " is not a column of the system");
      x[*j] = value;
    }
    return x;
  }

  Basis basis;
  int radius;
  std::vector<RoundGraph> columns;  // canonical order
  std::vector<LensClass> rows;      // canonical order
  IntMatrix matrix;
};

// System restricted to the given columns (the rows touching them).
inline MatchingSystem matching_system(Basis basis, int r, std::vector<RoundGraph> columns) {
  MatchingSystem sys(basis, r);
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
  for (const auto& t : columns) {
    require_same_basis(basis, t.basis());
    if (t.radius() != r) throw DomainError("column radius does not match the system");
  }
  sys.columns = std::move(columns);
  std::map<LensClass, std::map<std::size_t, long long>> rows;
  if (r > 0) {
    for (int u = 1; u <= basis.rank(); ++u) {
      Word forward = letter_word(basis, u);
      Word backward = letter_word(basis, -u);
      for (std::size_t j = 0; j < sys.columns.size(); ++j) {
        const auto& t = sys.columns[j];
        if (t.contains(forward)) rows[lens_of(t, u)][j] += 1;
        if (t.contains(backward)) rows[translated_lens_of(t, u)][j] -= 1;
      }
    }
  }
  sys.matrix = IntMatrix(rows.size(), sys.columns.size());
  std::size_t i = 0;
  for (auto& [lens, entries] : rows) {
    sys.rows.push_back(lens);
    for (const auto& [j, a] : entries) sys.matrix(i, j) = a;
    ++i;
  }
  return sys;
}

// Full system over R_r(id).
inline MatchingSystem matching_system(Basis basis, int r, const Limits& limits = {}) {
  return matching_system(basis, r, enumerate_round_graphs(basis, r, limits));
}

class AdmissibilityError : public DomainError {
 public:
  AdmissibilityError(const LensClass& row, const Rational& lhs, const Rational& rhs)
      : DomainError("matching equation violated at " + to_string(row) + ": " + to_string(lhs) +
                    " != " + to_string(rhs)),
        row_(row) {}
  const LensClass& row() const noexcept { return row_; }

 private:
  LensClass row_;
};

// Integer weights on R_r(id) satisfying every matching equation, not all
// zero.
class WeightSystem {
 public:
  static WeightSystem from_table(const WeightTable& table) {
    WeightSystem ws(table.basis(), table.radius());
    for (const auto& [t, v] : table.entries()) {
      if (v.get_den() != 1) {
        throw DomainError("weight of " + to_string(t) + " is not an integer: " + to_string(v));
      }
      if (!v.get_num().fits_slong_p()) throw DomainError("weight of " + to_string(t) + " is too large");
      ws.weights_.emplace(t, static_cast<std::uint64_t>(v.get_num().get_si()));
    }
    if (ws.weights_.empty()) throw DomainError("weight system has no positive weight");
    ws.check_admissible();
    return ws;
  }

  Basis basis() const noexcept { return basis_; }
  int radius() const noexcept { return radius_; }
  const std::map<RoundGraph, std::uint64_t>& weights() const noexcept { return weights_; }

  std::uint64_t total() const noexcept {
    std::uint64_t s = 0;
    for (const auto& [t, w] : weights_) s += w;
    return s;
  }

  WeightTable to_table() const {
    WeightTable t(basis_, radius_);
    for (const auto& [key, w] : weights_) t.set(key, Rational(static_cast<unsigned long>(w)));
    return t;
  }

  void check_admissible() const {
    auto violations = check_matching(to_table());
    if (!violations.empty()) {
      const auto& v = violations.front();
      throw AdmissibilityError(v.lens, v.lhs, v.rhs);
    }
  }

 private:
  WeightSystem(Basis basis, int radius) : basis_(basis), radius_(radius) {}

  Basis basis_;
  int radius_;
  std::map<RoundGraph, std::uint64_t> weights_;
};

struct QuotientVertex {
  RoundGraph pattern;
  std::size_t copy;  // 1..weight(pattern)
};

// Quotient of the SC-graph by F: a graph immersed in the rose, not
// necessarily connected.
class SCGraphQuotient {
 public:
  SCGraphQuotient(Basis basis, int radius) : basis_(basis), radius_(radius) {}

  Basis basis() const noexcept { return basis_; }
  int radius() const noexcept { return radius_; }
  const std::vector<QuotientVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<LabeledEdge>& edges() const noexcept { return edges_; }
  std::size_t num_components() const noexcept { return num_components_; }
  // Component id of each vertex, numbered by least vertex.
  const std::vector<std::size_t>& component_of() const noexcept { return component_; }

  // Checks the immersion, the pattern/edge correspondence and the degree
  // bound; returns a description of the first failure.
  std::optional<std::string> invariant_failure() const {
    const auto r = static_cast<std::size_t>(basis_.rank());
    std::vector<std::size_t> out(vertices_.size() * r, 0), in(vertices_.size() * r, 0);
    for (const auto& e : edges_) {
      out[e.source * r + static_cast<std::size_t>(e.label - 1)]++;
      in[e.target * r + static_cast<std::size_t>(e.label - 1)]++;
    }
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      std::size_t degree = 0;
      for (int a = 1; a <= basis_.rank(); ++a) {
        std::size_t o = out[v * r + static_cast<std::size_t>(a - 1)];
        std::size_t i = in[v * r + static_cast<std::size_t>(a - 1)];
        if (o > 1 || i > 1) return "vertex " + std::to_string(v) + " is not immersed";
        const auto& t = vertices_[v].pattern;
        if ((o == 1) != t.contains(letter_word(basis_, a)) ||
            (i == 1) != t.contains(letter_word(basis_, -a))) {
          return "edges at vertex " + std::to_string(v) + " disagree with its pattern";
        }
        degree += o + i;
      }
      if (degree < 2) return "vertex " + std::to_string(v) + " has degree < 2";
    }
    return std::nullopt;
  }

 private:
  friend SCGraphQuotient realize(const WeightSystem&);

  Basis basis_;
  int radius_;
  std::vector<QuotientVertex> vertices_;
  std::vector<LabeledEdge> edges_;
  std::vector<std::size_t> component_;
  std::size_t num_components_ = 0;
};

// For each generator u and lens class J, the vertices (T, i) with u in T and
// T on the lens equal to J are matched with the vertices (T', i') with u^-1
// in T' and uT' on the lens equal to J; both sides are taken in (T, i) order
// and paired positionally. An edge labeled u runs from (T, i) to (T', i').
inline SCGraphQuotient realize(const WeightSystem& theta) {
  if (theta.radius() < 1) throw DomainError("realization needs radius >= 1");
  theta.check_admissible();
  const Basis basis = theta.basis();
  SCGraphQuotient q(basis, theta.radius());
  for (const auto& [t, w] : theta.weights()) {
    for (std::size_t i = 1; i <= w; ++i) q.vertices_.push_back({t, i});
  }
  for (int u = 1; u <= basis.rank(); ++u) {
    Word forward = letter_word(basis, u);
    Word backward = letter_word(basis, -u);
    std::map<LensClass, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> sides;
    for (std::size_t v = 0; v < q.vertices_.size(); ++v) {
      const auto& t = q.vertices_[v].pattern;
      if (t.contains(forward)) sides[lens_of(t, u)].first.push_back(v);
      if (t.contains(backward)) sides[translated_lens_of(t, u)].second.push_back(v);
    }
    for (const auto& [lens, pair] : sides) {
      const auto& [left, right] = pair;
      if (left.size() != right.size()) {
        throw AdmissibilityError(lens, Rational(static_cast<unsigned long>(left.size())),
                                 Rational(static_cast<unsigned long>(right.size())));
      }
      for (std::size_t k = 0; k < left.size(); ++k) q.edges_.push_back({left[k], right[k], u});
    }
  }
  std::sort(q.edges_.begin(), q.edges_.end());
  detail::UnionFind uf(q.vertices_.size());
  for (const auto& e : q.edges_) uf.unite(e.source, e.target);
  std::map<std::size_t, std::size_t> ids;
  q.component_.resize(q.vertices_.size());
  for (std::size_t v = 0; v < q.vertices_.size(); ++v) {
    auto [it, fresh] = ids.emplace(uf.find(v), ids.size());
    q.component_[v] = it->second;
  }
  q.num_components_ = ids.size();
  return q;
}

// Each component, read as a hull-core with its least-signature vertex as
// basepoint, gives a subgroup; the current is the sum of their counting
// currents.
inline RationalCurrent decompose(const SCGraphQuotient& q) {
  if (auto failure = q.invariant_failure()) throw DomainError("invalid quotient: " + *failure);
  std::vector<std::vector<std::size_t>> members(q.num_components());
  std::vector<std::size_t> local(q.vertices().size());
  for (std::size_t v = 0; v < q.vertices().size(); ++v) {
    auto& m = members[q.component_of()[v]];
    local[v] = m.size();
    m.push_back(v);
  }
  std::vector<std::vector<LabeledEdge>> edges(q.num_components());
  for (const auto& e : q.edges()) {
    edges[q.component_of()[e.source]].push_back({local[e.source], local[e.target], e.label});
  }
  RationalCurrent current(q.basis());
  for (std::size_t c = 0; c < q.num_components(); ++c) {
    CoreGraph hull = CoreGraph::from_edges(q.basis(), members[c].size(), edges[c], std::nullopt);
    std::size_t root = canonical_root(hull);
    CoreGraph based = CoreGraph::from_edges(q.basis(), hull.num_vertices(), hull.edges(), root);
    current.add(1, Subgroup::from_core(based));
  }
  return current;
}

// Recomputes the cylinder table of c at the radius of theta and compares
// exactly.
inline bool verify_realization(const WeightSystem& theta, const RationalCurrent& c) {
  require_same_basis(theta.basis(), c.basis());
  Limits limits;
  limits.max_radius = std::max(limits.max_radius, theta.radius());
  return cylinder_table(c, theta.radius(), limits) == theta.to_table();
}

}  // namespace freecurrents

#endif  // FREECURRENTS_REALIZE_HPP_
