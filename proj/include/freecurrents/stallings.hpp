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

// Finitely generated subgroups of a free group through their core graphs.

#ifndef FREECURRENTS_STALLINGS_HPP_
#define FREECURRENTS_STALLINGS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "freecurrents/core_graph.hpp"
#include "freecurrents/error.hpp"
#include "freecurrents/word.hpp"

namespace freecurrents {

// Wedge of one loop per generator at a basepoint, folded.
inline CoreGraph core_from_generators(const std::vector<Word>& generators, Basis basis) {
  LabeledGraph g(basis);
  g.basepoint = g.add_vertex();
  for (const auto& w : generators) {
    require_same_basis(basis, w.basis());
    if (!w.empty()) g.add_path(*g.basepoint, *g.basepoint, w);
  }
  return fold(g);
}

// Prunes degree <= 1 vertices, the basepoint included. The result is the
// quotient of the convex hull of the limit set by the subgroup.
inline CoreGraph hull_core(const CoreGraph& c) {
  std::size_t n = c.num_vertices();
  std::vector<LabeledEdge> edges = c.edges();
  std::optional<std::size_t> base;
  detail::trim(n, edges, base, false);
  if (n == 0) return CoreGraph(c.basis());
  return canonicalize(CoreGraph::from_edges(c.basis(), n, std::move(edges), std::nullopt));
}

inline bool contains(const CoreGraph& c, const Word& w) {
  if (!c.basepoint()) throw DomainError("membership needs a basepointed core");
  return c.trace(*c.basepoint(), w) == *c.basepoint();
}

// max(#E - #V, 0): rank minus one for a nontrivial subgroup, 0 otherwise.
inline std::size_t reduced_rank(const CoreGraph& c) {
  if (!c.is_connected()) throw DomainError("reduced rank needs a connected graph");
  auto d = c.euler_difference();
  return d > 0 ? static_cast<std::size_t>(d) : 0;
}

// Index in F when the core covers the rose, nullopt when the index is infinite.
inline std::optional<std::size_t> finite_index(const CoreGraph& c) {
  if (!c.basepoint()) throw DomainError("finite_index needs a basepointed core");
  for (std::size_t v = 0; v < c.num_vertices(); ++v) {
    for (int a = 1; a <= c.rank(); ++a) {
      if (c.follow(v, a) == kNoVertex || c.follow(v, -a) == kNoVertex) return std::nullopt;
    }
  }
  return c.num_vertices();
}

// Core of g H g^-1: a path reading g is attached ending at the old basepoint
// and the result is folded and trimmed.
inline CoreGraph conjugate(const CoreGraph& c, const Word& g) {
  if (!c.basepoint()) throw DomainError("conjugate needs a basepointed core");
  require_same_basis(c.basis(), g.basis());
  if (g.empty()) return c;
  LabeledGraph lg = c.to_labeled();
  std::size_t old_base = *lg.basepoint;
  std::size_t new_base = lg.add_vertex();
  lg.basepoint = new_base;
  lg.add_path(new_base, old_base, g);
  return fold(lg);
}

// Free basis read off a breadth-first spanning tree: one word per non-tree
// edge, in edge order.
inline std::vector<Word> basis_of(const CoreGraph& c) {
  if (!c.basepoint()) throw DomainError("basis_of needs a basepointed core");
  const auto n = c.num_vertices();
  std::vector<std::optional<Word>> path(n);
  std::vector<bool> tree_edge(c.num_edges(), false);
  std::vector<std::size_t> order{*c.basepoint()};
  path[*c.basepoint()] = Word(c.basis());
  // Edge index lookup by (source, label).
  std::vector<std::size_t> edge_at(n * static_cast<std::size_t>(c.rank()), kNoVertex);
  for (std::size_t i = 0; i < c.num_edges(); ++i) {
    const auto& e = c.edges()[i];
    edge_at[e.source * static_cast<std::size_t>(c.rank()) + static_cast<std::size_t>(e.label - 1)] = i;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t v = order[i];
    for (int k = 0; k < 2 * c.rank(); ++k) {
      int l = letter_from_key(k);
      std::size_t w = c.follow(v, l);
      if (w == kNoVertex || path[w]) continue;
      path[w] = *path[v];
      path[w]->push(l);
      std::size_t src = l > 0 ? v : w;
      tree_edge[edge_at[src * static_cast<std::size_t>(c.rank()) + static_cast<std::size_t>(std::abs(l) - 1)]] = true;
      order.push_back(w);
    }
  }
  std::vector<Word> basis;
  for (std::size_t i = 0; i < c.num_edges(); ++i) {
    if (tree_edge[i]) continue;
    const auto& e = c.edges()[i];
    Word w = *path[e.source];
    w.push(e.label);
    basis.push_back(concat(w, invert(*path[e.target])));
  }
  return basis;
}

class Subgroup {
 public:
  static Subgroup from_generators(Basis basis, std::vector<Word> generators) {
    for (const auto& w : generators) require_same_basis(basis, w.basis());
    CoreGraph core = core_from_generators(generators, basis);
    return Subgroup(basis, std::move(generators), std::move(core));
  }

  // Generators are a spanning-tree basis of the given basepointed core.
  static Subgroup from_core(const CoreGraph& core) {
    if (!core.basepoint()) throw DomainError("subgroup needs a basepointed core");
    auto gens = basis_of(core);
    // Re-folding trims any hanging trees the caller left in place.
    return Subgroup(core.basis(), gens, core_from_generators(gens, core.basis()));
  }

  Basis basis() const noexcept { return basis_; }
  const std::vector<Word>& generators() const noexcept { return generators_; }
  const CoreGraph& core() const noexcept { return core_; }
  const CoreGraph& hull() const noexcept { return hull_; }
  bool is_trivial() const noexcept { return core_.num_edges() == 0; }
  // Rank of the subgroup as a free group.
  std::size_t free_rank() const noexcept {
    return static_cast<std::size_t>(core_.euler_difference() + 1);
  }
  std::size_t reduced_rank() const { return freecurrents::reduced_rank(core_); }
  bool contains(const Word& w) const { return freecurrents::contains(core_, w); }

 private:
  Subgroup(Basis basis, std::vector<Word> generators, CoreGraph core)
      : basis_(basis),
        generators_(std::move(generators)),
        core_(std::move(core)),
        hull_(hull_core(core_)) {}

  Basis basis_;
  std::vector<Word> generators_;
  CoreGraph core_;
  CoreGraph hull_;
};

inline Subgroup conjugate(const Subgroup& h, const Word& g) {
  return Subgroup::from_core(conjugate(h.core(), g));
}

// ---------------------------------------------------------------------------
// Random instances.

using Rng = std::mt19937_64;

// Uniform reduced word of exactly `length` letters.
inline Word random_word(Basis basis, std::size_t length, Rng& rng) {
  Word w(basis);
  const int letters = 2 * basis.rank();
  while (w.size() < length) {
    std::uniform_int_distribution<int> pick(0, letters - 1);
    int l = letter_from_key(pick(rng));
    if (!w.empty() && w.back() == -l) continue;
    w.push(l);
  }
  return w;
}

// 1..max_generators nontrivial generators of length 1..max_length.
inline Subgroup random_subgroup(Basis basis, std::size_t max_generators, std::size_t max_length,
                                Rng& rng) {
  std::uniform_int_distribution<std::size_t> count(1, max_generators);
  std::uniform_int_distribution<std::size_t> length(1, max_length);
  std::vector<Word> gens;
  std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_word(basis, length(rng), rng));
  return Subgroup::from_generators(basis, std::move(gens));
}

namespace detail {

// Random permutation-labeled cover of `base` with `degree` sheets, resampled
// until connected. Sheet s of vertex v becomes vertex v * degree + s.
inline CoreGraph random_cover_graph(const CoreGraph& base, std::size_t degree, Rng& rng) {
  if (degree == 0) throw DomainError("cover degree must be at least 1");
  if (degree > 1 && base.num_edges() == 0) throw DomainError("an edgeless graph has no connected cover");
  const std::size_t n = base.num_vertices() * degree;
  while (true) {
    std::vector<LabeledEdge> edges;
    edges.reserve(base.num_edges() * degree);
    std::vector<std::size_t> perm(degree);
    for (const auto& e : base.edges()) {
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t s = 0; s < degree; ++s) {
        edges.push_back({e.source * degree + s, e.target * degree + perm[s], e.label});
      }
    }
    std::optional<std::size_t> bp;
    if (base.basepoint()) bp = *base.basepoint() * degree;
    UnionFind uf(n);
    std::size_t components = n;
    for (const auto& e : edges) {
      if (uf.find(e.source) != uf.find(e.target)) {
        uf.unite(e.source, e.target);
        --components;
      }
    }
    if (components == 1) {
      return canonicalize(CoreGraph::from_edges(base.basis(), n, std::move(edges), bp));
    }
  }
}

}  // namespace detail

// Connected full cover of the rose with `degree` vertices, deterministic per
// seed. Its subgroup has index `degree`.
inline CoreGraph random_finite_cover(int rank, std::size_t degree, std::uint64_t seed) {
  Basis basis(rank);
  std::vector<LabeledEdge> rose;
  for (int a = 1; a <= rank; ++a) rose.push_back({0, 0, a});
  Rng rng(seed);
  return detail::random_cover_graph(CoreGraph::from_edges(basis, 1, rose, 0), degree, rng);
}

// A subgroup of index k in h (pulled back from a random connected k-sheeted
// cover of its core).
inline Subgroup random_finite_index_subgroup(const Subgroup& h, std::size_t k, Rng& rng) {
  return Subgroup::from_core(detail::random_cover_graph(h.core(), k, rng));
}

}  // namespace freecurrents

#endif  // FREECURRENTS_STALLINGS_HPP_
