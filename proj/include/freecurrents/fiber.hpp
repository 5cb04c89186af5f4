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

// Fiber products of core graphs over the rose, intersections, and the
// product N(H, K) summing reduced ranks of intersections over double cosets.

#ifndef FREECURRENTS_FIBER_HPP_
#define FREECURRENTS_FIBER_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "freecurrents/core_graph.hpp"
#include "freecurrents/error.hpp"
#include "freecurrents/stallings.hpp"

namespace freecurrents {

struct ProductVertex {
  std::size_t left;
  std::size_t right;

  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

struct ProductComponent {
  std::vector<std::size_t> vertices;  // indices into ProductGraph::vertices
  std::size_t num_edges = 0;

  long long euler_difference() const noexcept {
    return static_cast<long long>(num_edges) - static_cast<long long>(vertices.size());
  }
  std::size_t reduced_rank() const noexcept {
    auto d = euler_difference();
    return d > 0 ? static_cast<std::size_t>(d) : 0;
  }
};

struct ProductGraph {
  explicit ProductGraph(Basis b) : basis(b) {}

  Basis basis;
  std::vector<ProductVertex> vertices;
  std::vector<LabeledEdge> edges;
  std::vector<ProductComponent> components;
};

namespace detail {

// Explores the component of `seed` in A x B, appending to out. `index` maps
// left * |V(B)| + right to a product vertex id.
inline void explore_product_component(const CoreGraph& a, const CoreGraph& b, ProductVertex seed,
                                      std::unordered_map<std::size_t, std::size_t>& index,
                                      ProductGraph& out) {
  const std::size_t nb = b.num_vertices();
  auto key = [nb](ProductVertex p) { return p.left * nb + p.right; };
  ProductComponent comp;
  std::size_t first = out.vertices.size();
  index.emplace(key(seed), first);
  out.vertices.push_back(seed);
  for (std::size_t i = first; i < out.vertices.size(); ++i) {
    comp.vertices.push_back(i);
    ProductVertex p = out.vertices[i];
    for (int k = 0; k < 2 * a.rank(); ++k) {
      int l = letter_from_key(k);
      std::size_t u = a.follow(p.left, l);
      std::size_t v = b.follow(p.right, l);
      if (u == kNoVertex || v == kNoVertex) continue;
      ProductVertex q{u, v};
      auto [it, fresh] = index.emplace(key(q), out.vertices.size());
      if (fresh) out.vertices.push_back(q);
      if (l > 0) {
        out.edges.push_back({i, it->second, l});
        comp.num_edges++;
      }
    }
  }
  out.components.push_back(std::move(comp));
}

}  // namespace detail

// Vertices are the pairs incident to at least one matched edge; components
// are explored one at a time from matched edge pairs.
inline ProductGraph fiber_product(const CoreGraph& a, const CoreGraph& b) {
  require_same_basis(a.basis(), b.basis());
  ProductGraph out(a.basis());
  std::unordered_map<std::size_t, std::size_t> index;
  const std::size_t nb = b.num_vertices();
  for (const auto& ea : a.edges()) {
    for (const auto& eb : b.edges()) {
      if (ea.label != eb.label) continue;
      if (index.contains(ea.source * nb + eb.source)) continue;
      detail::explore_product_component(a, b, {ea.source, eb.source}, index, out);
    }
  }
  return out;
}

struct ComponentCensus {
  std::size_t total = 0;
  std::size_t tree_components = 0;
  std::size_t positive_rank_components = 0;

  // Components with #E = #V (a single cycle with trees attached).
  std::size_t cyclic_components() const noexcept {
    return total - tree_components - positive_rank_components;
  }
  friend bool operator==(const ComponentCensus&, const ComponentCensus&) = default;
};

inline ComponentCensus component_census(const ProductGraph& p) {
  ComponentCensus c;
  for (const auto& comp : p.components) {
    c.total++;
    auto d = comp.euler_difference();
    if (d < 0) c.tree_components++;
    if (d > 0) c.positive_rank_components++;
  }
  return c;
}

// N(H, K): sum over components of hull(H) x hull(K) of max(#E - #V, 0).
inline std::size_t product_rank(const Subgroup& h, const Subgroup& k) {
  require_same_basis(h.basis(), k.basis());
  std::size_t n = 0;
  for (const auto& comp : fiber_product(h.hull(), k.hull()).components) n += comp.reduced_rank();
  return n;
}

struct ShncMargin {
  std::size_t product;  // N(H, K)
  std::size_t bound;    // rk(H) * rk(K)

  bool holds() const noexcept { return product <= bound; }
  friend bool operator==(const ShncMargin&, const ShncMargin&) = default;
};

inline ShncMargin shnc_margin(const Subgroup& h, const Subgroup& k) {
  return {product_rank(h, k), h.reduced_rank() * k.reduced_rank()};
}

// H and K intersected: the component of (base, base) in core(H) x core(K).
inline Subgroup intersection(const Subgroup& h, const Subgroup& k) {
  require_same_basis(h.basis(), k.basis());
  const CoreGraph& a = h.core();
  const CoreGraph& b = k.core();
  ProductGraph p(h.basis());
  std::unordered_map<std::size_t, std::size_t> index;
  detail::explore_product_component(a, b, {*a.basepoint(), *b.basepoint()}, index, p);
  LabeledGraph g(h.basis());
  g.num_vertices = p.vertices.size();
  g.edges = p.edges;
  g.basepoint = 0;
  return Subgroup::from_core(fold(g));
}

}  // namespace freecurrents

#endif  // FREECURRENTS_FIBER_HPP_
