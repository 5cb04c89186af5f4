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

// Round-graphs: the finite subtrees of the Cayley tree that a convex hull of
// a boundary subset cuts out of the ball of radius r around the identity.
//
// A vertex set T of reduced words of length <= r is a round-graph iff it
// contains the identity, is prefix-closed (a subtree through the root), every
// vertex at distance < r has degree >= 2 inside T, and (for r >= 1) at least
// two vertices lie on the sphere of radius r. Extending each sphere vertex to
// a ray away from the root realizes T as CH(S) intersected with the ball.

#ifndef FREECURRENTS_ROUND_GRAPH_HPP_
#define FREECURRENTS_ROUND_GRAPH_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "freecurrents/core_graph.hpp"
#include "freecurrents/error.hpp"
#include "freecurrents/rational.hpp"
#include "freecurrents/word.hpp"

namespace freecurrents {

struct Limits {
  // Largest radius accepted by table and matching operations.
  int max_radius = 3;
  // Largest number of round-graphs enumerate_round_graphs will materialize.
  std::size_t max_enumeration = 250000;
};

inline void check_radius(int r, const Limits& limits) {
  if (r < 0) throw DomainError("radius must be nonnegative");
  if (r > limits.max_radius) {
    throw DomainError("radius " + std::to_string(r) + " exceeds the configured maximum " +
                      std::to_string(limits.max_radius));
  }
}

inline bool validate_round_graph(std::span<const Word> vertices, int r, Basis basis) {
  if (r < 0) return false;
  std::set<Word> set;
  for (const auto& w : vertices) {
    if (w.basis() != basis || w.size() > static_cast<std::size_t>(r)) return false;
    if (!set.insert(w).second) return false;
  }
  if (!set.contains(Word(basis))) return false;
  if (r == 0) return set.size() == 1;
  std::size_t sphere = 0;
  for (const auto& w : set) {
    if (w.size() == static_cast<std::size_t>(r)) ++sphere;
    if (!w.empty()) {
      Word parent = reduce(basis, std::span(w.letters()).first(w.size() - 1));
      if (!set.contains(parent)) return false;
    }
    if (w.size() < static_cast<std::size_t>(r)) {
      std::size_t degree = w.empty() ? 0 : 1;
      for (int k = 0; k < 2 * basis.rank(); ++k) {
        int l = letter_from_key(k);
        if (!w.empty() && l == -w.back()) continue;
        Word child = w;
        child.push(l);
        degree += set.contains(child);
      }
      if (degree < 2) return false;
    }
  }
  return sphere >= 2;
}

class RoundGraph {
 public:
  static RoundGraph from_vertices(Basis basis, int radius, std::vector<Word> vertices) {
    if (!validate_round_graph(vertices, radius, basis)) {
      std::string text;
      for (const auto& w : vertices) text += (text.empty() ? "" : ",") + to_string(w);
      throw DomainError("not a round-graph of radius " + std::to_string(radius) + ": {" + text + "}");
    }
    std::sort(vertices.begin(), vertices.end());
    return RoundGraph(basis, radius, std::move(vertices));
  }

  // The unique round-graph of radius 0.
  static RoundGraph point(Basis basis) { return RoundGraph(basis, 0, {Word(basis)}); }

  Basis basis() const noexcept { return basis_; }
  int radius() const noexcept { return radius_; }
  // Shortlex order.
  const std::vector<Word>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool contains(const Word& w) const { return std::binary_search(vertices_.begin(), vertices_.end(), w); }

  friend std::strong_ordering operator<=>(const RoundGraph& a, const RoundGraph& b) {
    if (auto c = a.basis_.rank() <=> b.basis_.rank(); c != 0) return c;
    if (auto c = a.radius_ <=> b.radius_; c != 0) return c;
    return a.vertices_ <=> b.vertices_;
  }
  friend bool operator==(const RoundGraph& a, const RoundGraph& b) {
    return a.basis_ == b.basis_ && a.radius_ == b.radius_ && a.vertices_ == b.vertices_;
  }

 private:
  RoundGraph(Basis basis, int radius, std::vector<Word> sorted)
      : basis_(basis), radius_(radius), vertices_(std::move(sorted)) {}

  friend RoundGraph restrict(const RoundGraph&, int);
  friend RoundGraph local_ball(const CoreGraph&, std::size_t, int);
  friend std::vector<RoundGraph> enumerate_round_graphs(Basis, int, const Limits&);

  Basis basis_;
  int radius_;
  std::vector<Word> vertices_;
};

// "e,x,X" style, in canonical order.
inline std::string to_string(const RoundGraph& t) {
  std::string s;
  for (const auto& w : t.vertices()) {
    if (!s.empty()) s += ',';
    s += to_string(w);
  }
  return s;
}

// Exact size of R_r(id) for the given rank.
inline Integer count_round_graphs(Basis basis, int r) {
  if (r < 0) throw DomainError("radius must be nonnegative");
  if (r == 0) return 1;
  const unsigned long branching = 2ul * static_cast<unsigned long>(basis.rank()) - 1;
  // Subtrees hanging below a vertex at depth d, with at least one child
  // whenever d < r.
  Integer below = 1;
  for (int d = r - 1; d >= 1; --d) {
    Integer t;
    Integer base = below + 1;
    mpz_pow_ui(t.get_mpz_t(), base.get_mpz_t(), branching);
    below = t - 1;
  }
  Integer all;
  Integer base = below + 1;
  mpz_pow_ui(all.get_mpz_t(), base.get_mpz_t(), branching + 1);
  return all - 1 - Integer(static_cast<unsigned long>(branching + 1)) * below;
}

// All of R_r(id), in canonical order.
inline std::vector<RoundGraph> enumerate_round_graphs(Basis basis, int r, const Limits& limits = {}) {
  check_radius(r, limits);
  Integer count = count_round_graphs(basis, r);
  if (count > Integer(static_cast<unsigned long>(limits.max_enumeration))) {
    throw DomainError("R_" + std::to_string(r) + " has " + count.get_str() +
                      " round-graphs, above the enumeration limit " +
                      std::to_string(limits.max_enumeration));
  }
  std::vector<RoundGraph> out;
  out.reserve(count.get_ui());
  if (r == 0) {
    out.push_back(RoundGraph::point(basis));
    return out;
  }
  const int letters = 2 * basis.rank();
  std::vector<Word> current{Word(basis)};
  // Vertices are decided in insertion order; children of current[i] are
  // appended, so a single pass over `current` visits every vertex.
  std::function<void(std::size_t)> grow = [&](std::size_t i) {
    if (i == current.size()) {
      std::vector<Word> sorted = current;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(RoundGraph(basis, r, std::move(sorted)));
      return;
    }
    const Word& w = current[i];
    if (w.size() == static_cast<std::size_t>(r)) {
      grow(i + 1);
      return;
    }
    std::vector<int> options;
    for (int k = 0; k < letters; ++k) {
      int l = letter_from_key(k);
      if (w.empty() || l != -w.back()) options.push_back(l);
    }
    const int need = w.empty() ? 2 : 1;
    const unsigned limit = 1u << options.size();
    for (unsigned mask = 1; mask < limit; ++mask) {
      if (std::popcount(mask) < need) continue;
      std::size_t before = current.size();
      Word parent = current[i];
      for (std::size_t b = 0; b < options.size(); ++b) {
        if (mask & (1u << b)) {
          Word child = parent;
          child.push(options[b]);
          current.push_back(std::move(child));
        }
      }
      grow(i + 1);
      current.resize(before, Word(basis));
    }
  };
  grow(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Vertices of T within distance r' of the root.
inline RoundGraph restrict(const RoundGraph& t, int r) {
  if (r < 0 || r > t.radius()) {
    throw DomainError("cannot restrict a radius-" + std::to_string(t.radius()) +
                      " round-graph to radius " + std::to_string(r));
  }
  std::vector<Word> kept;
  for (const auto& w : t.vertices()) {
    if (w.size() <= static_cast<std::size_t>(r)) kept.push_back(w);
  }
  return RoundGraph(t.basis(), r, std::move(kept));
}

// Label words of the reduced paths of length <= r leaving v in an immersed
// graph whose vertices all have degree >= 2: the radius-r pattern of the
// lifted hull around a lift of v.
inline RoundGraph local_ball(const CoreGraph& hull, std::size_t v, int r) {
  if (hull.empty()) throw DomainError("local_ball of an empty hull");
  if (v >= hull.num_vertices()) throw DomainError("vertex out of range");
  if (r < 0) throw DomainError("radius must be nonnegative");
  struct Item {
    std::size_t vertex;
    Word word;
  };
  std::vector<Item> frontier{{v, Word(hull.basis())}};
  std::vector<Word> words{Word(hull.basis())};
  for (int depth = 0; depth < r; ++depth) {
    std::vector<Item> next;
    for (const auto& item : frontier) {
      for (int k = 0; k < 2 * hull.rank(); ++k) {
        int l = letter_from_key(k);
        if (!item.word.empty() && item.word.back() == -l) continue;
        std::size_t u = hull.follow(item.vertex, l);
        if (u == kNoVertex) continue;
        Word w = item.word;
        w.push(l);
        words.push_back(w);
        next.push_back({u, std::move(w)});
      }
    }
    frontier = std::move(next);
  }
  std::sort(words.begin(), words.end());
  if (!validate_round_graph(words, r, hull.basis())) {
    throw DomainError("local ball is not a round-graph; the graph is not a hull-core");
  }
  return RoundGraph(hull.basis(), r, std::move(words));
}

// Parses "e,x,X".
inline RoundGraph parse_round_graph(std::string_view text, Basis basis, int radius) {
  std::vector<Word> words;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(start, comma - start);
    if (token.find_first_not_of(" \t") == std::string_view::npos) {
      throw FormatError("empty vertex in round-graph '" + std::string(text) + "'");
    }
    words.push_back(parse_word(token, basis));
    start = comma + 1;
  }
  return RoundGraph::from_vertices(basis, radius, std::move(words));
}

}  // namespace freecurrents

#endif  // FREECURRENTS_ROUND_GRAPH_HPP_
