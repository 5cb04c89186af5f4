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

// Text formats.
//
// Subgroup file:
//   # comment
//   rank 2
//   xy
//   x Y        (one generator per line; any word syntax parse_word accepts)
//
// Table file:
//   rank 2
//   radius 1
//   e,x,X,y,Y  1
//   e,x,X      2/3
//
// Graph export (Graphviz DOT) with edges labeled g1..gN; the basepoint, if
// any, is drawn as a double circle.

#ifndef FREECURRENTS_IO_HPP_
#define FREECURRENTS_IO_HPP_

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "freecurrents/approx.hpp"
#include "freecurrents/core_graph.hpp"
#include "freecurrents/cylinders.hpp"
#include "freecurrents/error.hpp"
#include "freecurrents/fiber.hpp"
#include "freecurrents/realize.hpp"
#include "freecurrents/stallings.hpp"

namespace freecurrents {

namespace detail {

inline std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

inline int parse_header(const std::string& line, const std::string& key) {
  std::istringstream in(line);
  std::string word;
  long value = -1;
  std::string rest;
  if (!(in >> word >> value) || word != key || (in >> rest)) {
    throw FormatError("expected '" + key + " <n>', got '" + line + "'");
  }
  if (value < 0 || value > 1000) throw FormatError("bad " + key + " value in '" + line + "'");
  return static_cast<int>(value);
}

inline std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto s = strip(line); !s.empty()) lines.push_back(std::move(s));
  }
  return lines;
}

}  // namespace detail

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

inline Subgroup read_subgroup(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw FormatError("subgroup file is empty");
  int rank = detail::parse_header(lines[0], "rank");
  if (rank < 1 || rank > Basis::kMaxRank) throw FormatError("unsupported rank " + std::to_string(rank));
  Basis basis(rank);
  std::vector<Word> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) gens.push_back(parse_word(lines[i], basis));
  return Subgroup::from_generators(basis, std::move(gens));
}

inline void write_subgroup(std::ostream& out, const Subgroup& h) {
  out << "rank " << h.basis().rank() << '\n';
  for (const auto& w : h.generators()) out << to_string(w) << '\n';
}

// Values may be "p/q", integers or decimals; decimals are rationalized to the
// closest fraction with denominator at most 10^6.
inline WeightTable read_table(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.size() < 2) throw FormatError("table file needs 'rank' and 'radius' headers");
  int rank = detail::parse_header(lines[0], "rank");
  if (rank < 1 || rank > Basis::kMaxRank) throw FormatError("unsupported rank " + std::to_string(rank));
  int radius = detail::parse_header(lines[1], "radius");
  Basis basis(rank);
  WeightTable table(basis, radius);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::string key, value, rest;
    if (!(row >> key >> value) || (row >> rest)) {
      throw FormatError("table record must be '<round-graph> <value>': '" + lines[i] + "'");
    }
    RoundGraph t = [&] {
      try {
        return parse_round_graph(key, basis, radius);
      } catch (const DomainError& e) {
        throw FormatError(e.what());
      }
    }();
    Rational v = parse_rational(value);
    if (value.find_first_of(".eE") != std::string::npos) v = best_approximation(v, kDecimalDenominatorBound);
    if (sgn(v) < 0) throw FormatError("negative table value in '" + lines[i] + "'");
    table.add(t, v);
  }
  return table;
}

inline void write_table(std::ostream& out, const WeightTable& t) {
  out << "rank " << t.basis().rank() << '\n' << "radius " << t.radius() << '\n';
  for (const auto& [key, value] : t.entries()) out << to_string(key) << ' ' << to_string(value) << '\n';
}

inline void export_graph(std::ostream& out, const CoreGraph& g, const std::string& name = "core") {
  out << "digraph " << name << " {\n";
  out << "  graph [rank=" << g.rank() << "];\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    out << "  v" << v;
    if (g.basepoint() == v) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  v" << e.source << " -> v" << e.target << " [label=\"g" << e.label << "\"];\n";
  }
  out << "}\n";
}

inline void export_graph(std::ostream& out, const SCGraphQuotient& q, const std::string& name = "quotient") {
  out << "digraph " << name << " {\n";
  out << "  graph [rank=" << q.basis().rank() << "];\n";
  for (std::size_t v = 0; v < q.vertices().size(); ++v) {
    const auto& qv = q.vertices()[v];
    out << "  v" << v << " [tooltip=\"" << to_string(qv.pattern) << " #" << qv.copy
        << "\", component=" << q.component_of()[v] << "];\n";
  }
  for (const auto& e : q.edges()) {
    out << "  v" << e.source << " -> v" << e.target << " [label=\"g" << e.label << "\"];\n";
  }
  out << "}\n";
}

// Product vertices are named by their factor pair.
inline void export_graph(std::ostream& out, const ProductGraph& p, const std::string& name = "product") {
  out << "digraph " << name << " {\n";
  out << "  graph [rank=" << p.basis.rank() << "];\n";
  for (std::size_t c = 0; c < p.components.size(); ++c) {
    for (std::size_t v : p.components[c].vertices) {
      out << "  v" << v << " [tooltip=\"(" << p.vertices[v].left << "," << p.vertices[v].right
          << ")\", component=" << c << "];\n";
    }
  }
  for (const auto& e : p.edges) {
    out << "  v" << e.source << " -> v" << e.target << " [label=\"g" << e.label << "\"];\n";
  }
  out << "}\n";
}

// Reads back the CoreGraph form written by export_graph.
inline CoreGraph import_graph(std::istream& in) {
  static const std::regex rank_re(R"re(^\s*graph\s*\[\s*rank\s*=\s*(\d+)\s*\]\s*;?\s*$)re");
  static const std::regex node_re(R"re(^\s*v(\d+)\s*(\[[^\]]*\])?\s*;?\s*$)re");
  static const std::regex edge_re(R"re(^\s*v(\d+)\s*->\s*v(\d+)\s*\[\s*label\s*=\s*"g(\d+)"\s*\]\s*;?\s*$)re");
  std::optional<int> rank;
  std::size_t n = 0;
  std::optional<std::size_t> base;
  std::vector<LabeledEdge> edges;
  std::string line;
  bool opened = false;
  while (std::getline(in, line)) {
    std::smatch m;
    if (line.find("digraph") != std::string::npos) {
      opened = true;
    } else if (std::regex_match(line, m, rank_re)) {
      rank = std::stoi(m[1]);
    } else if (std::regex_match(line, m, edge_re)) {
      std::size_t s = std::stoul(m[1]), t = std::stoul(m[2]);
      edges.push_back({s, t, std::stoi(m[3])});
      n = std::max({n, s + 1, t + 1});
    } else if (std::regex_match(line, m, node_re)) {
      std::size_t v = std::stoul(m[1]);
      n = std::max(n, v + 1);
      if (m[2].matched && m[2].str().find("doublecircle") != std::string::npos) base = v;
    } else if (detail::strip(line) == "}" || detail::strip(line).empty()) {
      continue;
    } else {
      throw FormatError("unrecognized graph line '" + line + "'");
    }
  }
  if (!opened || !rank) throw FormatError("graph export lacks a digraph header or rank");
  if (*rank < 1 || *rank > Basis::kMaxRank) throw FormatError("unsupported rank");
  try {
    return CoreGraph::from_edges(Basis(*rank), n, std::move(edges), base);
  } catch (const DomainError& e) {
    throw FormatError(std::string("graph is not a core graph: ") + e.what());
  }
}

}  // namespace freecurrents

#endif  // FREECURRENTS_IO_HPP_
