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

#include <random>
#include <vector>

#include "freecurrents/fiber.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"
#include "printers.hpp"

namespace freecurrents {
namespace {

const Basis kRank2(2);

Word W(const char* text) { return parse_word(text, kRank2); }

Subgroup S(std::initializer_list<const char*> gens) {
  std::vector<Word> words;
  for (const char* g : gens) words.push_back(W(g));
  return Subgroup::from_generators(kRank2, words);
}

CoreGraph DoubleCover() {
  return CoreGraph::from_edges(kRank2, 2, {{0, 1, 1}, {1, 0, 1}, {0, 0, 2}, {1, 1, 2}}, 0);
}

std::size_t total_edges(const ProductGraph& p) {
  std::size_t e = 0;
  for (const auto& c : p.components) e += c.num_edges;
  return e;
}

TEST(FiberProduct, RoseIsTerminal) {
  Rng rng(1);
  const auto rose = whole_group(kRank2).hull();
  for (int trial = 0; trial < 30; ++trial) {
    auto h = random_subgroup(kRank2, 3, 5, rng);
    if (h.hull().empty()) continue;
    auto p = fiber_product(rose, h.hull());
    ASSERT_EQ(p.components.size(), 1u);
    EXPECT_EQ(p.vertices.size(), h.hull().num_vertices());
    EXPECT_EQ(p.edges.size(), h.hull().num_edges());
    EXPECT_EQ(p.components[0].reduced_rank(), reduced_rank(h.hull()));
  }
}

TEST(FiberProduct, DisjointLabelsGiveTheEmptyProduct) {
  auto p = fiber_product(S({"x"}).hull(), S({"y"}).hull());
  EXPECT_TRUE(p.vertices.empty());
  EXPECT_TRUE(p.components.empty());
  EXPECT_EQ(component_census(p), (ComponentCensus{0, 0, 0}));
}

TEST(FiberProduct, DoubleCoverSquared) {
  // Frozen from the all-pairs enumeration oracle.
  auto oracle = oracle::enumerate_product(DoubleCover(), DoubleCover());
  ASSERT_EQ(oracle.components, 2u);
  ASSERT_EQ(oracle.total_euler, 4);
  auto p = fiber_product(DoubleCover(), DoubleCover());
  ASSERT_EQ(p.components.size(), 2u);
  long long total = 0;
  for (const auto& c : p.components) {
    EXPECT_EQ(c.vertices.size(), 2u);
    EXPECT_EQ(c.num_edges, 4u);
    total += c.euler_difference();
  }
  EXPECT_EQ(total, 4);
  EXPECT_EQ(total_edges(p), 8u);
}

TEST(ProductRank, Examples) {
  EXPECT_EQ(product_rank(S({"x"}), S({"y"})), 0u);
  auto f = whole_group(kRank2);
  EXPECT_EQ(product_rank(f, S({"xy", "yyX", "x"})), S({"xy", "yyX", "x"}).reduced_rank());
  // Two components: the diagonal with 3 edges on 2 vertices, and the
  // off-diagonal x-cycle.
  auto h = S({"xx", "y"});
  auto oracle = oracle::enumerate_product(h.hull(), h.hull());
  ASSERT_EQ(oracle.product_rank, 1u);
  ASSERT_EQ(oracle.components, 2u);
  EXPECT_EQ(product_rank(h, h), 1u);
  EXPECT_EQ(component_census(fiber_product(h.hull(), h.hull())), (ComponentCensus{2, 0, 1}));
}

TEST(ShncMargin, Examples) {
  EXPECT_EQ(shnc_margin(S({"x"}), S({"xy", "yX"})), (ShncMargin{0, 0}));
  EXPECT_EQ(shnc_margin(S({"x"}), whole_group(kRank2)), (ShncMargin{0, 0}));
  auto f = whole_group(kRank2);
  EXPECT_EQ(shnc_margin(f, f), (ShncMargin{1, 1}));
  EXPECT_TRUE(shnc_margin(f, f).holds());
}

TEST(ProductRank, AgreesWithEnumerationAndIsSymmetric) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Basis b(2 + trial % 2);
    auto h = random_subgroup(b, 3, 5, rng);
    auto k = random_subgroup(b, 3, 5, rng);
    auto oracle = oracle::enumerate_product(h.hull(), k.hull());
    auto p = fiber_product(h.hull(), k.hull());
    auto census = component_census(p);
    EXPECT_EQ(census.total, oracle.components);
    EXPECT_EQ(census.tree_components, oracle.trees);
    EXPECT_EQ(census.positive_rank_components, oracle.positive);
    EXPECT_EQ(product_rank(h, k), oracle.product_rank);
    EXPECT_EQ(product_rank(h, k), product_rank(k, h));
    auto margin = shnc_margin(h, k);
    EXPECT_EQ(margin, (ShncMargin{shnc_margin(k, h).product, shnc_margin(k, h).bound}));
    EXPECT_TRUE(margin.holds()) << margin.product << " > " << margin.bound;
    // Every vertex sits in exactly one component.
    std::vector<int> seen(p.vertices.size(), 0);
    for (const auto& c : p.components) {
      for (auto v : c.vertices) seen[v]++;
    }
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(ProductRank, WholeGroupGivesReducedRank) {
  Rng rng(23);
  auto f = whole_group(kRank2);
  for (int trial = 0; trial < 30; ++trial) {
    auto k = random_subgroup(kRank2, 3, 5, rng);
    EXPECT_EQ(product_rank(f, k), k.reduced_rank());
  }
}

TEST(ProductRank, ConjugationInvariance) {
  Rng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    auto h = random_subgroup(kRank2, 3, 4, rng);
    auto k = random_subgroup(kRank2, 3, 4, rng);
    Word g = random_word(kRank2, 1 + trial % 5, rng);
    EXPECT_EQ(product_rank(conjugate(h, g), k), product_rank(h, k));
    EXPECT_EQ(product_rank(h, conjugate(k, g)), product_rank(h, k));
  }
}

TEST(Intersection, Examples) {
  auto xx = intersection(S({"x"}), S({"xx"}));
  EXPECT_TRUE(label_isomorphic(xx.core(), S({"xx"}).core()));
  auto k = S({"xy", "yyX"});
  EXPECT_TRUE(label_isomorphic(intersection(whole_group(kRank2), k).core(), k.core()));
}

TEST(Intersection, CrossedConjugatesMeetInTheCommutator) {
  auto h = S({"x", "yxY"});
  auto k = S({"y", "xyX"});
  auto meet = intersection(h, k);
  // Frozen after the membership cross-check below.
  EXPECT_EQ(meet.core().num_vertices(), 4u);
  EXPECT_EQ(meet.core().num_edges(), 4u);
  EXPECT_EQ(meet.free_rank(), 1u);
  EXPECT_TRUE(label_isomorphic(meet.core(), S({"xyXY"}).core()));
  for (const auto& w : oracle::words_up_to(kRank2, 6)) {
    ASSERT_EQ(meet.contains(w), h.contains(w) && k.contains(w)) << to_string(w);
  }
}

TEST(Intersection, MembershipConsistency) {
  Rng rng(31);
  const auto words = oracle::words_up_to(kRank2, 5);
  for (int trial = 0; trial < 40; ++trial) {
    auto h = random_subgroup(kRank2, 3, 4, rng);
    auto k = random_subgroup(kRank2, 3, 4, rng);
    auto meet = intersection(h, k);
    for (const auto& w : words) {
      ASSERT_EQ(meet.contains(w), h.contains(w) && k.contains(w)) << to_string(w);
    }
  }
}

TEST(Fiber, RankMismatchIsAnError) {
  auto h = S({"x"});
  auto k = Subgroup::from_generators(Basis(3), {parse_word("z", Basis(3))});
  EXPECT_THROW(fiber_product(h.core(), k.core()), DomainError);
  EXPECT_THROW(product_rank(h, k), DomainError);
  EXPECT_THROW(intersection(h, k), DomainError);
}

}  // namespace
}  // namespace freecurrents
