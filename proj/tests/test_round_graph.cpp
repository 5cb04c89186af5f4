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
#include <set>
#include <vector>

#include "freecurrents/round_graph.hpp"
#include "freecurrents/stallings.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"
#include "printers.hpp"

namespace freecurrents {
namespace {

const Basis kRank2(2);

Word W(const char* text) { return parse_word(text, kRank2); }

std::vector<Word> Ws(std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(W(t));
  return out;
}

RoundGraph FullBall(Basis b, int r) {
  return RoundGraph::from_vertices(b, r, oracle::words_up_to(b, static_cast<std::size_t>(r)));
}

std::set<std::set<Word>> as_sets(const std::vector<RoundGraph>& graphs) {
  std::set<std::set<Word>> out;
  for (const auto& t : graphs) out.emplace(t.vertices().begin(), t.vertices().end());
  return out;
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate_round_graph(Ws({"e"}), 0, kRank2));
  EXPECT_FALSE(validate_round_graph(Ws({"e", "x"}), 1, kRank2));
  EXPECT_TRUE(validate_round_graph(Ws({"e", "x", "X"}), 1, kRank2));
  EXPECT_FALSE(validate_round_graph(Ws({"x", "X"}), 1, kRank2));          // no root
  EXPECT_FALSE(validate_round_graph(Ws({"e", "x", "X", "xx"}), 2, kRank2)); // X is a dead end
  EXPECT_FALSE(validate_round_graph(Ws({"e", "x", "yy", "X"}), 2, kRank2)); // yy has no parent
  EXPECT_TRUE(validate_round_graph(Ws({"e", "x", "X", "xx", "XX"}), 2, kRank2));
  EXPECT_FALSE(validate_round_graph(Ws({"e", "x", "x"}), 1, kRank2));     // repeated vertex
  EXPECT_FALSE(validate_round_graph(Ws({"e", "x", "X"}), -1, kRank2));
}

TEST(Count, ClosedForm) {
  EXPECT_EQ(count_round_graphs(kRank2, 0), 1);
  EXPECT_EQ(count_round_graphs(kRank2, 1), 11);
  EXPECT_EQ(count_round_graphs(kRank2, 2), 4067);
  EXPECT_EQ(count_round_graphs(Basis(3), 1), 57);
  EXPECT_GT(count_round_graphs(kRank2, 3), Integer(1000000000));
}

TEST(Enumerate, RadiusZeroAndOne) {
  auto r0 = enumerate_round_graphs(kRank2, 0);
  ASSERT_EQ(r0.size(), 1u);
  EXPECT_EQ(r0[0], RoundGraph::point(kRank2));
  auto r1 = enumerate_round_graphs(kRank2, 1);
  EXPECT_EQ(r1.size(), 11u);
  auto brute = oracle::brute_force_round_graphs(kRank2, 1);
  ASSERT_EQ(brute.size(), 11u);
  EXPECT_EQ(as_sets(r1), std::set<std::set<Word>>(brute.begin(), brute.end()));
}

TEST(Enumerate, RadiusTwoMatchesBruteForce) {
  auto r2 = enumerate_round_graphs(kRank2, 2);
  auto brute = oracle::brute_force_round_graphs(kRank2, 2);
  ASSERT_EQ(brute.size(), 4067u);
  EXPECT_EQ(r2.size(), 4067u);
  EXPECT_EQ(as_sets(r2), std::set<std::set<Word>>(brute.begin(), brute.end()));
  EXPECT_TRUE(std::is_sorted(r2.begin(), r2.end()));
}

TEST(Enumerate, RankThreeRadiusOne) {
  Basis b(3);
  auto r1 = enumerate_round_graphs(b, 1);
  auto brute = oracle::brute_force_round_graphs(b, 1);
  EXPECT_EQ(r1.size(), 57u);
  EXPECT_EQ(as_sets(r1), std::set<std::set<Word>>(brute.begin(), brute.end()));
}

TEST(Enumerate, Limits) {
  EXPECT_THROW(enumerate_round_graphs(kRank2, 4), DomainError);
  EXPECT_THROW(enumerate_round_graphs(kRank2, 3), DomainError);  // above the count cap
  EXPECT_THROW(enumerate_round_graphs(kRank2, -1), DomainError);
  Limits tight;
  tight.max_radius = 1;
  EXPECT_THROW(enumerate_round_graphs(kRank2, 2, tight), DomainError);
  EXPECT_EQ(enumerate_round_graphs(kRank2, 1, tight).size(), 11u);
}

TEST(Restrict, Examples) {
  auto r2 = enumerate_round_graphs(kRank2, 2);
  auto r1 = enumerate_round_graphs(kRank2, 1);
  for (const auto& t : r2) {
    EXPECT_EQ(restrict(t, 2), t);
    EXPECT_EQ(restrict(t, 0), RoundGraph::point(kRank2));
    auto c = restrict(t, 1);
    EXPECT_TRUE(std::binary_search(r1.begin(), r1.end(), c));
  }
  EXPECT_EQ(restrict(FullBall(kRank2, 2), 1), FullBall(kRank2, 1));
  EXPECT_THROW(restrict(r1.front(), 2), DomainError);
}

TEST(LocalBall, Examples) {
  auto rose = whole_group(kRank2).hull();
  auto full = FullBall(kRank2, 2);
  EXPECT_EQ(local_ball(rose, 0, 2), full);
  auto loop = Subgroup::from_generators(kRank2, Ws({"x"})).hull();
  EXPECT_EQ(local_ball(loop, 0, 1), RoundGraph::from_vertices(kRank2, 1, Ws({"e", "x", "X"})));
  auto cover = random_finite_cover(2, 2, 5);
  EXPECT_EQ(local_ball(cover, 0, 1), restrict(full, 1));
  EXPECT_EQ(local_ball(cover, 1, 1), restrict(full, 1));
  EXPECT_THROW(local_ball(CoreGraph(kRank2), 0, 1), DomainError);
}

TEST(LocalBall, AgreesWithPathTracing) {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    Basis b(2 + trial % 2);
    auto h = random_subgroup(b, 3, 5, rng);
    const auto& hull = h.hull();
    for (std::size_t v = 0; v < hull.num_vertices(); ++v) {
      for (int r = 0; r <= 3; ++r) {
        auto ball = local_ball(hull, v, r);
        auto traced = oracle::traced_ball(hull, v, r);
        EXPECT_EQ(std::set<Word>(ball.vertices().begin(), ball.vertices().end()), traced);
        EXPECT_TRUE(oracle::is_hull_section(traced, b, r));
      }
    }
  }
}

TEST(TextForm, RoundTrip) {
  for (const auto& t : enumerate_round_graphs(kRank2, 2)) {
    EXPECT_EQ(parse_round_graph(to_string(t), kRank2, 2), t);
  }
  EXPECT_EQ(to_string(RoundGraph::point(kRank2)), "e");
  EXPECT_EQ(to_string(RoundGraph::from_vertices(kRank2, 1, Ws({"X", "e", "x"}))), "e,x,X");
  EXPECT_THROW(parse_round_graph("e,x", kRank2, 1), DomainError);
  EXPECT_THROW(parse_round_graph("e,,x", kRank2, 1), FormatError);
  EXPECT_THROW(parse_round_graph("e,q,x", kRank2, 1), FormatError);
}

}  // namespace
}  // namespace freecurrents
