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
#include <sstream>
#include <string>
#include <vector>

#include "freecurrents/io.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"
#include "printers.hpp"

namespace freecurrents {
namespace {

const Basis kRank2(2);

Word W(const char* text) { return parse_word(text, kRank2); }

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

TEST(RationalText, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational(" -4 "), -4);
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5e-3"), Rational(-3, 2000));
  EXPECT_EQ(parse_rational("2E2"), 200);
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  for (const char* bad : {"", "1/0", "a", "1.2.3", "1/x", "--1", "1e"}) {
    EXPECT_THROW(parse_rational(bad), FormatError) << bad;
  }
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_EQ(to_decimal(Rational(1, 3), 4), "0.3333");
  EXPECT_EQ(to_decimal(Rational(-2, 3), 2), "-0.67");
  EXPECT_EQ(to_decimal(Rational(5), 0), "5");
}

TEST(SubgroupFile, RoundTrip) {
  std::istringstream in("# a comment\nrank 2\n\nxy   # trailing\nx y^-1\n");
  auto h = read_subgroup(in);
  EXPECT_EQ(h.generators(), (std::vector<Word>{W("xy"), W("xY")}));
  std::ostringstream out;
  write_subgroup(out, h);
  EXPECT_EQ(out.str(), "rank 2\nxy\nxY\n");
  std::istringstream back(out.str());
  EXPECT_TRUE(label_isomorphic(read_subgroup(back).core(), h.core()));
}

TEST(SubgroupFile, Errors) {
  for (const char* bad : {"", "rank\nx", "rank 0\n", "rank 2 3\n", "rnak 2\nx", "rank 2\nxz\n", "rank 99\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_subgroup(in), FormatError) << bad;
  }
  std::istringstream empty_list("rank 3\n");
  EXPECT_TRUE(read_subgroup(empty_list).is_trivial());
}

TEST(TableFile, RoundTrip) {
  Rng rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = cylinder_table(oracle::random_current(Basis(2 + trial % 2), 3, rng), 1 + trial % 2);
    std::ostringstream out;
    write_table(out, t);
    std::istringstream in(out.str());
    EXPECT_EQ(read_table(in), t);
  }
}

TEST(TableFile, DecimalsAreRationalized) {
  std::istringstream in("rank 2\nradius 1\ne,x,X 0.333333333\ne,x,X,y,Y 2/4\n");
  auto t = read_table(in);
  EXPECT_EQ(t.at(parse_round_graph("e,x,X", kRank2, 1)), Rational(1, 3));
  EXPECT_EQ(t.at(parse_round_graph("e,x,X,y,Y", kRank2, 1)), Rational(1, 2));
  std::ostringstream out;
  write_table(out, t);
  EXPECT_EQ(out.str(), "rank 2\nradius 1\ne,x,X 1/3\ne,x,X,y,Y 1/2\n");
}

TEST(TableFile, Errors) {
  for (const char* bad : {"rank 2\n", "radius 1\nrank 2\n", "rank 2\nradius 1\ne,x 1\n",
                          "rank 2\nradius 1\ne,x,X -1\n", "rank 2\nradius 1\ne,x,X\n",
                          "rank 2\nradius 1\ne,x,X 1 2\n", "rank 2\nradius 1\ne,x,X one\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_table(in), FormatError) << bad;
  }
}

TEST(GraphExport, Examples) {
  std::ostringstream rose;
  export_graph(rose, whole_group(kRank2).core());
  EXPECT_EQ(count(rose.str(), "v0 -> v0"), 2u);
  EXPECT_EQ(count(rose.str(), "doublecircle"), 1u);
  std::ostringstream loop;
  export_graph(loop, Subgroup::from_generators(kRank2, {W("x")}).hull());
  EXPECT_EQ(count(loop.str(), "->"), 1u);
  EXPECT_EQ(count(loop.str(), "doublecircle"), 0u);
  EXPECT_NE(loop.str().find("label=\"g1\""), std::string::npos);
}

TEST(GraphExport, ReimportIsIsomorphic) {
  Rng rng(113);
  for (int trial = 0; trial < 40; ++trial) {
    Basis b(2 + trial % 3);
    auto h = random_subgroup(b, 3, 5, rng);
    for (const CoreGraph* g : {&h.core(), &h.hull()}) {
      if (g->empty()) continue;
      std::ostringstream out;
      export_graph(out, *g);
      std::istringstream in(out.str());
      auto back = import_graph(in);
      EXPECT_TRUE(label_isomorphic(back, *g));
      EXPECT_EQ(back.basepoint(), g->basepoint());
    }
    auto cover = random_finite_cover(b.rank(), 1 + trial % 5, 1000 + trial);
    std::ostringstream out;
    export_graph(out, cover);
    std::istringstream in(out.str());
    EXPECT_TRUE(label_isomorphic(import_graph(in), cover));
  }
}

TEST(GraphExport, QuotientCarriesComponents) {
  auto c = RationalCurrent::counting(Subgroup::from_generators(kRank2, {W("x")})) +
           RationalCurrent::counting(Subgroup::from_generators(kRank2, {W("y")}));
  auto q = realize(WeightSystem::from_table(cylinder_table(c, 1)));
  std::ostringstream out;
  export_graph(out, q);
  EXPECT_EQ(count(out.str(), "component=0"), 1u);
  EXPECT_EQ(count(out.str(), "component=1"), 1u);
  EXPECT_EQ(count(out.str(), "->"), 2u);
}

TEST(GraphImport, Errors) {
  for (const char* bad : {"", "digraph g {\n}\n", "digraph g {\n  graph [rank=2];\n  v0 -> v0 [label=\"g3\"];\n}\n",
                          "digraph g {\n  graph [rank=2];\n  v0 -> v1 [label=\"g1\"];\n  v0 -> v0 [label=\"g1\"];\n}\n",
                          "digraph g {\n  graph [rank=2];\n  nonsense\n}\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(import_graph(in), FormatError) << bad;
  }
}

TEST(Files, MissingPathsAreIoErrors) {
  EXPECT_THROW(open_input("/nonexistent/dir/file.txt"), IoError);
  EXPECT_THROW(open_output("/nonexistent/dir/file.txt"), IoError);
}

}  // namespace
}  // namespace freecurrents
