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

// freecurrents: command-line front end.
//
//   freecurrents rank H.txt
//   freecurrents index H.txt
//   freecurrents member H.txt --word xyX
//   freecurrents intersect H.txt K.txt [--export product.dot]
//   freecurrents cylinders H.txt [K.txt ...] --radius 2 [--coef 1/3 ...] [--out t.txt]
//   freecurrents realize t.txt [--export quotient.dot]
//   freecurrents approx t.txt --epsilon 1/1000 [--out theta.txt]
//   freecurrents converge --radius 2 --ns 2,4,8,16 [--json report.json]
//   freecurrents export H.txt [--hull] | export --random-cover --rank 2 --degree 3
//
// Exit status: 0 on success, 1 when a mathematical precondition fails, 2 on
// I/O, file-format and usage errors. Global flags may also be given through
// FREECURRENTS_MAX_RADIUS, FREECURRENTS_SEED and FREECURRENTS_OUTPUT_DIR;
// flags take precedence.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "freecurrents.hpp"
#include "json.hpp"

namespace fc = freecurrents;
namespace fs = std::filesystem;

namespace {

struct Config {
  int max_radius = 3;
  std::uint64_t seed = 1;
  std::string output_dir = ".";
  bool decimal = false;

  fc::Limits limits() const {
    fc::Limits l;
    l.max_radius = max_radius;
    return l;
  }
  // Relative artifact paths land in the output directory.
  fs::path resolve(const std::string& path) const { return fs::path(output_dir) / path; }
};

fc::Subgroup load_subgroup(const std::string& path) {
  auto in = fc::open_input(path);
  return fc::read_subgroup(in);
}

fc::WeightTable load_table(const std::string& path) {
  auto in = fc::open_input(path);
  return fc::read_table(in);
}

// Writes through `emit` to the resolved path, or to stdout when path is empty.
template <typename Emit>
void write_artifact(const Config& cfg, const std::string& path, Emit emit) {
  if (path.empty()) {
    emit(std::cout);
    return;
  }
  fs::path target = cfg.resolve(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  auto out = fc::open_output(target.string());
  emit(out);
  if (!out) throw fc::IoError("write to '" + target.string() + "' failed");
}

std::string show(const fc::Rational& q, const Config& cfg) {
  return cfg.decimal ? fc::to_decimal(q) : fc::to_string(q);
}

std::string join(const std::vector<fc::Word>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : ",") + fc::to_string(w);
  return s.empty() ? "e" : s;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Subset currents on free groups: core graphs, cylinder tables, realization"};
  app.require_subcommand(1);
  app.add_option("--max-radius", cfg.max_radius, "Largest radius accepted by table operations")
      ->envname("FREECURRENTS_MAX_RADIUS")
      ->check(CLI::Range(0, 16));
  app.add_option("--seed", cfg.seed, "Seed for randomized subcommands")->envname("FREECURRENTS_SEED");
  app.add_option("--output-dir", cfg.output_dir, "Directory for written artifacts")
      ->envname("FREECURRENTS_OUTPUT_DIR");
  app.add_flag("--decimal", cfg.decimal, "Print human-facing rationals as decimals");

  std::string file, file2, word, out_path, export_path, epsilon = "1/1000", json_path;
  std::vector<std::string> files, coefs;
  std::vector<int> ns{2, 4, 8, 16};
  int radius = 1, rank = 2;
  std::size_t degree = 2;
  bool hull = false, random_cover = false;

  auto* rank_cmd = app.add_subcommand("rank", "Reduced rank of a subgroup");
  rank_cmd->add_option("file", file, "Subgroup file")->required();

  auto* index_cmd = app.add_subcommand("index", "Index of a subgroup, or infinite");
  index_cmd->add_option("file", file, "Subgroup file")->required();

  auto* member_cmd = app.add_subcommand("member", "Membership of a word");
  member_cmd->add_option("file", file, "Subgroup file")->required();
  member_cmd->add_option("--word", word, "Word to test")->required();

  auto* intersect_cmd = app.add_subcommand("intersect", "N(H, K), its bound and the intersection");
  intersect_cmd->add_option("first", file, "Subgroup file H")->required();
  intersect_cmd->add_option("second", file2, "Subgroup file K")->required();
  intersect_cmd->add_option("--export", export_path, "Write the product of the hulls as DOT");

  auto* cylinders_cmd = app.add_subcommand("cylinders", "Cylinder table of a combination of counting currents");
  cylinders_cmd->add_option("files", files, "Subgroup files")->required();
  cylinders_cmd->add_option("--radius", radius, "Radius")->required();
  cylinders_cmd->add_option("--coef", coefs, "Coefficient per file (default 1)");
  cylinders_cmd->add_option("--out", out_path, "Output table file");

  auto* realize_cmd = app.add_subcommand("realize", "Realize an integer weight system by subgroups");
  realize_cmd->add_option("file", file, "Table file with integer weights")->required();
  realize_cmd->add_option("--export", export_path, "Write the quotient graph as DOT");

  auto* approx_cmd = app.add_subcommand("approx", "Snap a table to an admissible integer weight system");
  approx_cmd->add_option("file", file, "Table file, decimals allowed")->required();
  approx_cmd->add_option("--epsilon", epsilon, "Max-norm tolerance");
  approx_cmd->add_option("--out", out_path, "Output table file");

  auto* converge_cmd = app.add_subcommand("converge", "Distance from (1/n) eta_{H_n} to eta_F");
  converge_cmd->add_option("--radius", radius, "Radius")->required();
  converge_cmd->add_option("--ns", ns, "Values of n")->delimiter(',');
  converge_cmd->add_option("--json", json_path, "Also write a JSON report");

  auto* export_cmd = app.add_subcommand("export", "Export a core graph as DOT");
  export_cmd->add_option("file", file, "Subgroup file");
  export_cmd->add_flag("--hull", hull, "Export the hull instead of the core");
  export_cmd->add_flag("--random-cover", random_cover, "Export a random finite cover of the rose");
  export_cmd->add_option("--rank", rank, "Rank for --random-cover")->check(CLI::Range(1, fc::Basis::kMaxRank));
  export_cmd->add_option("--degree", degree, "Degree for --random-cover")->check(CLI::Range(1, 10000));
  export_cmd->add_option("--out", out_path, "Output DOT file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto limits = cfg.limits();

    if (*rank_cmd) {
      auto h = load_subgroup(file);
      std::cout << "reduced_rank = " << h.reduced_rank() << "\n";
    } else if (*index_cmd) {
      auto h = load_subgroup(file);
      auto k = fc::finite_index(h.core());
      std::cout << "index = " << (k ? std::to_string(*k) : std::string("infinite")) << "\n";
    } else if (*member_cmd) {
      auto h = load_subgroup(file);
      auto w = fc::parse_word(word, h.basis());
      std::cout << (h.contains(w) ? "true" : "false") << "\n";
    } else if (*intersect_cmd) {
      auto h = load_subgroup(file);
      auto k = load_subgroup(file2);
      auto margin = fc::shnc_margin(h, k);
      auto product = fc::fiber_product(h.hull(), k.hull());
      auto census = fc::component_census(product);
      auto meet = fc::intersection(h, k);
      std::cout << "N = " << margin.product << "\n"
                << "bound = " << margin.bound << "\n"
                << "shnc = " << (margin.holds() ? "holds" : "violated") << "\n"
                << "components = " << census.total << " (trees " << census.tree_components << ", cyclic "
                << census.cyclic_components() << ", positive " << census.positive_rank_components << ")\n"
                << "intersection = <" << (meet.is_trivial() ? std::string("e") : join(meet.generators())) << ">\n";
      if (!export_path.empty()) {
        write_artifact(cfg, export_path, [&](std::ostream& out) { fc::export_graph(out, product); });
      }
    } else if (*cylinders_cmd) {
      if (!coefs.empty() && coefs.size() != files.size()) {
        throw fc::FormatError("give one --coef per subgroup file or none");
      }
      std::optional<fc::RationalCurrent> current;
      for (std::size_t i = 0; i < files.size(); ++i) {
        auto h = load_subgroup(files[i]);
        fc::Rational c = coefs.empty() ? fc::Rational(1) : fc::parse_rational(coefs[i]);
        if (!current) current.emplace(h.basis());
        current->add(c, h);
      }
      auto table = fc::cylinder_table(*current, radius, limits);
      write_artifact(cfg, out_path, [&](std::ostream& out) { fc::write_table(out, table); });
    } else if (*realize_cmd) {
      auto table = load_table(file);
      auto theta = fc::WeightSystem::from_table(table);
      auto q = fc::realize(theta);
      auto current = fc::decompose(q);
      bool ok = fc::verify_realization(theta, current);
      std::cout << "vertices = " << q.vertices().size() << "\n"
                << "components = " << q.num_components() << "\n";
      for (std::size_t i = 0; i < current.terms().size(); ++i) {
        const auto& h = current.terms()[i].subgroup;
        std::string name = "component_" + std::to_string(i + 1) + ".txt";
        write_artifact(cfg, name, [&](std::ostream& out) { fc::write_subgroup(out, h); });
        std::cout << "component " << i + 1 << ": reduced_rank = " << h.reduced_rank()
                  << ", hull vertices = " << h.hull().num_vertices() << ", file = " << cfg.resolve(name).string()
                  << "\n";
      }
      if (!export_path.empty()) {
        write_artifact(cfg, export_path, [&](std::ostream& out) { fc::export_graph(out, q); });
      }
      std::cout << "verified = " << (ok ? "true" : "false") << "\n";
      if (!ok) return 1;
    } else if (*approx_cmd) {
      auto u = load_table(file);
      fc::Rational eps = fc::parse_rational(epsilon);
      fc::check_radius(u.radius(), limits);
      auto v = fc::approximate_table(u, eps);
      if (v.support_size() == 0) throw fc::DomainError("the admissible approximation is zero");
      auto z = fc::integerize(v);
      if (out_path.empty()) {
        // The table goes to stdout, so the report rides along as comments.
        std::cout << "# scale = " << fc::to_string(z.scale) << "\n# distance = " << show(fc::distance(v, u), cfg)
                  << "\n";
        fc::write_table(std::cout, z.weights.to_table());
      } else {
        write_artifact(cfg, out_path, [&](std::ostream& out) { fc::write_table(out, z.weights.to_table()); });
        std::cout << "scale = " << fc::to_string(z.scale) << "\ndistance = " << show(fc::distance(v, u), cfg)
                  << "\n";
      }
    } else if (*converge_cmd) {
      auto points = fc::convergence_run(radius, ns, limits);
      std::cout << "n distance n*distance\n";
      nlohmann::json report{{"radius", radius}, {"points", nlohmann::json::array()}};
      for (const auto& p : points) {
        fc::Rational scaled = p.n * p.distance;
        std::cout << p.n << " " << show(p.distance, cfg) << " " << show(scaled, cfg) << "\n";
        report["points"].push_back(
            {{"n", p.n}, {"distance", fc::to_string(p.distance)}, {"scaled", fc::to_string(scaled)}});
      }
      if (!json_path.empty()) {
        write_artifact(cfg, json_path, [&](std::ostream& out) { out << report.dump(2) << "\n"; });
      }
    } else if (*export_cmd) {
      fc::CoreGraph g(fc::Basis(1));
      if (random_cover) {
        g = fc::random_finite_cover(rank, degree, cfg.seed);
      } else if (!file.empty()) {
        auto h = load_subgroup(file);
        g = hull ? h.hull() : h.core();
      } else {
        throw fc::FormatError("export needs a subgroup file or --random-cover");
      }
      write_artifact(cfg, out_path, [&](std::ostream& out) { fc::export_graph(out, g); });
    }
  } catch (const fc::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fc::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fc::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
