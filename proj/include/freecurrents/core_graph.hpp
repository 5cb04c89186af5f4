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

// Labeled graphs over the rose and their folded (Stallings) form.
//
// A CoreGraph is a finite connected graph whose edges carry generator labels
// 1..rank and which is folded: at every vertex there is at most one outgoing
// and at most one incoming edge with a given label. It is either basepointed
// (every vertex other than the basepoint has degree >= 2) or a hull-core
// (no basepoint, every vertex has degree >= 2, possibly empty).

#ifndef FREECURRENTS_CORE_GRAPH_HPP_
#define FREECURRENTS_CORE_GRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "freecurrents/error.hpp"
#include "freecurrents/word.hpp"

namespace freecurrents {

inline constexpr std::size_t kNoVertex = std::numeric_limits<std::size_t>::max();

struct LabeledEdge {
  std::size_t source;
  std::size_t target;
  int label;  // 1..rank

  friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

// Unrestricted labeled multigraph; input to fold.
struct LabeledGraph {
  explicit LabeledGraph(Basis b) : basis(b) {}

  std::size_t add_vertex() { return num_vertices++; }

  void add_edge(std::size_t source, std::size_t target, int label) {
    if (label < 1 || label > basis.rank()) throw DomainError("edge label out of range");
    if (source >= num_vertices || target >= num_vertices) {
      throw DomainError("edge endpoint out of range");
    }
    edges.push_back({source, target, label});
  }

  // Adds a path reading w from `from` to `to` through fresh vertices.
  void add_path(std::size_t from, std::size_t to, const Word& w) {
    require_same_basis(basis, w.basis());
    if (w.empty()) {
      if (from != to) throw DomainError("empty path between distinct vertices");
      return;
    }
    std::size_t cur = from;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t next = (i + 1 == w.size()) ? to : add_vertex();
      int l = w[i];
      if (l > 0) {
        add_edge(cur, next, l);
      } else {
        add_edge(next, cur, -l);
      }
      cur = next;
    }
  }

  Basis basis;
  std::size_t num_vertices = 0;
  std::vector<LabeledEdge> edges;
  std::optional<std::size_t> basepoint;
};

class CoreGraph {
 public:
  // The empty hull-core (trivial subgroup).
  explicit CoreGraph(Basis basis) : basis_(basis) {}

  // Checks range, foldedness and connectivity.
  static CoreGraph from_edges(Basis basis, std::size_t num_vertices, std::vector<LabeledEdge> edges,
                              std::optional<std::size_t> basepoint) {
    CoreGraph g(basis);
    g.n_ = num_vertices;
    g.edges_ = std::move(edges);
    g.basepoint_ = basepoint;
    if (basepoint && *basepoint >= num_vertices) throw DomainError("basepoint out of range");
    const auto r = static_cast<std::size_t>(basis.rank());
    g.out_.assign(num_vertices * r, kNoVertex);
    g.in_.assign(num_vertices * r, kNoVertex);
    for (const auto& e : g.edges_) {
      if (e.source >= num_vertices || e.target >= num_vertices || e.label < 1 ||
          e.label > basis.rank()) {
        throw DomainError("edge out of range");
      }
      auto slot = static_cast<std::size_t>(e.label - 1);
      if (g.out_[e.source * r + slot] != kNoVertex || g.in_[e.target * r + slot] != kNoVertex) {
        throw DomainError("graph is not folded at label " + std::to_string(e.label));
      }
      g.out_[e.source * r + slot] = e.target;
      g.in_[e.target * r + slot] = e.source;
    }
    if (!g.is_connected()) throw DomainError("core graph must be connected");
    return g;
  }

  Basis basis() const noexcept { return basis_; }
  int rank() const noexcept { return basis_.rank(); }
  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return n_ == 0; }
  const std::vector<LabeledEdge>& edges() const noexcept { return edges_; }
  std::optional<std::size_t> basepoint() const noexcept { return basepoint_; }
  bool is_basepointed() const noexcept { return basepoint_.has_value(); }

  // Endpoint of the edge leaving v that reads `letter`, or kNoVertex.
  std::size_t follow(std::size_t v, int letter) const noexcept {
    const auto r = static_cast<std::size_t>(rank());
    auto slot = static_cast<std::size_t>(std::abs(letter) - 1);
    return letter > 0 ? out_[v * r + slot] : in_[v * r + slot];
  }

  // Loops count twice.
  std::size_t degree(std::size_t v) const noexcept {
    std::size_t d = 0;
    for (int a = 1; a <= rank(); ++a) {
      d += follow(v, a) != kNoVertex;
      d += follow(v, -a) != kNoVertex;
    }
    return d;
  }

  // #E - #V, the negative Euler characteristic.
  long long euler_difference() const noexcept {
    return static_cast<long long>(edges_.size()) - static_cast<long long>(n_);
  }

  // Follows w from v; kNoVertex if the path leaves the graph.
  std::size_t trace(std::size_t v, const Word& w) const {
    require_same_basis(basis_, w.basis());
    for (int l : w.letters()) {
      v = follow(v, l);
      if (v == kNoVertex) return kNoVertex;
    }
    return v;
  }

  bool is_connected() const {
    if (n_ == 0) return true;
    std::vector<bool> seen(n_, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (int k = 0; k < 2 * rank(); ++k) {
        auto w = follow(v, letter_from_key(k));
        if (w != kNoVertex && !seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n_;
  }

  LabeledGraph to_labeled() const {
    LabeledGraph g(basis_);
    g.num_vertices = n_;
    g.edges = edges_;
    g.basepoint = basepoint_;
    return g;
  }

 private:
  Basis basis_;
  std::size_t n_ = 0;
  std::vector<LabeledEdge> edges_;
  std::optional<std::size_t> basepoint_;
  std::vector<std::size_t> out_;
  std::vector<std::size_t> in_;
};

// Breadth-first code of g seen from root: for each vertex in visiting order,
// the visiting index of its neighbour along every letter (x, X, y, Y, ...),
// kNoVertex when absent. Two connected folded graphs are label-isomorphic
// by a map sending root to root iff their codes agree.
inline std::vector<std::size_t> canonical_code(const CoreGraph& g, std::size_t root,
                                               std::vector<std::size_t>* order_out = nullptr) {
  const int letters = 2 * g.rank();
  std::vector<std::size_t> index(g.num_vertices(), kNoVertex);
  std::vector<std::size_t> order;
  order.reserve(g.num_vertices());
  index[root] = 0;
  order.push_back(root);
  std::vector<std::size_t> code;
  code.reserve(g.num_vertices() * static_cast<std::size_t>(letters));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int k = 0; k < letters; ++k) {
      auto w = g.follow(order[i], letter_from_key(k));
      if (w != kNoVertex && index[w] == kNoVertex) {
        index[w] = order.size();
        order.push_back(w);
      }
      code.push_back(w == kNoVertex ? kNoVertex : index[w]);
    }
  }
  if (order_out) *order_out = std::move(order);
  return code;
}

// The basepoint when there is one, otherwise the vertex with the least code.
inline std::size_t canonical_root(const CoreGraph& g) {
  if (g.basepoint()) return *g.basepoint();
  if (g.empty()) return kNoVertex;
  std::size_t best = 0;
  auto best_code = canonical_code(g, 0);
  for (std::size_t v = 1; v < g.num_vertices(); ++v) {
    auto code = canonical_code(g, v);
    if (code < best_code) {
      best_code = std::move(code);
      best = v;
    }
  }
  return best;
}

// Renumbers vertices in breadth-first order from the canonical root and sorts
// the edge list.
inline CoreGraph canonicalize(const CoreGraph& g) {
  if (g.empty()) return g;
  std::vector<std::size_t> order;
  canonical_code(g, canonical_root(g), &order);
  std::vector<std::size_t> index(g.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  std::vector<LabeledEdge> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges()) edges.push_back({index[e.source], index[e.target], e.label});
  std::sort(edges.begin(), edges.end());
  std::optional<std::size_t> base;
  if (g.basepoint()) base = index[*g.basepoint()];
  return CoreGraph::from_edges(g.basis(), g.num_vertices(), std::move(edges), base);
}

// Label-preserving isomorphism; basepoints must correspond when present.
inline bool label_isomorphic(const CoreGraph& a, const CoreGraph& b) {
  if (a.basis() != b.basis() || a.is_basepointed() != b.is_basepointed() ||
      a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    return false;
  }
  if (a.empty()) return true;
  return canonical_code(a, canonical_root(a)) == canonical_code(b, canonical_root(b));
}

namespace detail {

// Iteratively deletes vertices of degree <= 1 (sparing the basepoint when
// keep_basepoint is set) and compacts the numbering.
inline void trim(std::size_t& n, std::vector<LabeledEdge>& edges, std::optional<std::size_t>& base,
                 bool keep_basepoint) {
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    degree[edges[i].source]++;
    degree[edges[i].target]++;
    incident[edges[i].source].push_back(i);
    if (edges[i].target != edges[i].source) incident[edges[i].target].push_back(i);
  }
  std::vector<bool> vertex_gone(n, false);
  std::vector<bool> edge_gone(edges.size(), false);
  auto immune = [&](std::size_t v) { return keep_basepoint && base && *base == v; };
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] <= 1 && !immune(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    if (vertex_gone[v]) continue;
    vertex_gone[v] = true;
    for (auto ei : incident[v]) {
      if (edge_gone[ei]) continue;
      edge_gone[ei] = true;
      const auto& e = edges[ei];
      std::size_t other = e.source == v ? e.target : e.source;
      if (other == v) continue;
      degree[other]--;
      if (!vertex_gone[other] && degree[other] <= 1 && !immune(other)) queue.push_back(other);
    }
  }
  std::vector<std::size_t> index(n, kNoVertex);
  std::size_t m = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!vertex_gone[v]) index[v] = m++;
  }
  std::vector<LabeledEdge> kept;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!edge_gone[i]) kept.push_back({index[edges[i].source], index[edges[i].target], edges[i].label});
  }
  if (base) {
    if (vertex_gone[*base]) {
      base.reset();
    } else {
      base = index[*base];
    }
  }
  n = m;
  edges = std::move(kept);
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  // Returns the surviving root.
  std::size_t unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return a;
  }
  std::vector<std::size_t> parent;
  std::vector<std::size_t> size;
};

}  // namespace detail

// Stallings folding by worklist identification, followed by removal of
// hanging trees. The component of the basepoint is kept; an unbasepointed
// input must be connected and yields a hull-core.
inline CoreGraph fold(const LabeledGraph& input) {
  const std::size_t n = input.num_vertices;
  const auto r = static_cast<std::size_t>(input.basis.rank());
  if (n == 0) return CoreGraph(input.basis);
  detail::UnionFind uf(n);
  std::vector<std::size_t> out(n * r, kNoVertex);
  std::vector<std::size_t> in(n * r, kNoVertex);
  std::vector<std::pair<std::size_t, std::size_t>> pending;

  auto drain = [&] {
    while (!pending.empty()) {
      auto [a, b] = pending.back();
      pending.pop_back();
      a = uf.find(a);
      b = uf.find(b);
      if (a == b) continue;
      std::size_t keep = uf.unite(a, b);
      std::size_t gone = keep == a ? b : a;
      for (std::size_t s = 0; s < r; ++s) {
        for (auto* table : {&out, &in}) {
          auto moved = (*table)[gone * r + s];
          if (moved == kNoVertex) continue;
          auto& slot = (*table)[keep * r + s];
          if (slot == kNoVertex) {
            slot = moved;
          } else {
            pending.emplace_back(slot, moved);
          }
        }
      }
    }
  };

  for (const auto& e : input.edges) {
    std::size_t s = uf.find(e.source);
    std::size_t t = uf.find(e.target);
    auto slot = static_cast<std::size_t>(e.label - 1);
    if (out[s * r + slot] == kNoVertex) {
      out[s * r + slot] = t;
    } else {
      pending.emplace_back(out[s * r + slot], t);
    }
    if (in[t * r + slot] == kNoVertex) {
      in[t * r + slot] = s;
    } else {
      pending.emplace_back(in[t * r + slot], s);
    }
    drain();
  }

  // Collect the component of the basepoint (or of vertex 0).
  std::size_t start = uf.find(input.basepoint.value_or(0));
  std::vector<std::size_t> index(n, kNoVertex);
  std::vector<std::size_t> order{start};
  index[start] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t v = order[i];
    for (std::size_t s = 0; s < r; ++s) {
      for (auto* table : {&out, &in}) {
        auto w = (*table)[v * r + s];
        if (w == kNoVertex) continue;
        w = uf.find(w);
        if (index[w] == kNoVertex) {
          index[w] = order.size();
          order.push_back(w);
        }
      }
    }
  }
  if (!input.basepoint) {
    for (std::size_t v = 0; v < n; ++v) {
      if (uf.find(v) == v && index[v] == kNoVertex) {
        throw DomainError("cannot fold a disconnected graph without a basepoint");
      }
    }
  }
  std::vector<LabeledEdge> edges;
  for (std::size_t v : order) {
    for (std::size_t s = 0; s < r; ++s) {
      auto w = out[v * r + s];
      if (w != kNoVertex) edges.push_back({index[v], index[uf.find(w)], static_cast<int>(s) + 1});
    }
  }
  std::size_t m = order.size();
  std::optional<std::size_t> base;
  if (input.basepoint) base = 0;
  detail::trim(m, edges, base, input.basepoint.has_value());
  if (m == 0) return CoreGraph(input.basis);
  return canonicalize(CoreGraph::from_edges(input.basis, m, std::move(edges), base));
}

}  // namespace freecurrents

#endif  // FREECURRENTS_CORE_GRAPH_HPP_
