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

// Exact rational points in the kernel cone of the matching equations, their
// integer scaling into weight systems, and the H_n convergence experiment.

#ifndef FREECURRENTS_APPROX_HPP_
#define FREECURRENTS_APPROX_HPP_

#include <algorithm>
#include <cstddef>
#include <future>
#include <string>
#include <utility>
#include <vector>

#include "freecurrents/cylinders.hpp"
#include "freecurrents/error.hpp"
#include "freecurrents/rational.hpp"
#include "freecurrents/realize.hpp"
#include "freecurrents/stallings.hpp"

namespace freecurrents {

// Denominator bound applied when rationalizing decimal input.
inline const Integer kDecimalDenominatorBound = 1000000;

// Rational basis of {x : A x = 0}, one vector per free column, obtained by
// fraction-free (Bareiss) elimination followed by exact back substitution.
inline std::vector<std::vector<Rational>> kernel_basis(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = static_cast<long>(a(i, j));
  }
  std::vector<std::size_t> pivots;
  Integer previous = 1;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < cols && pr < rows; ++col) {
    std::size_t p = pr;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[pr]);
    for (std::size_t i = pr + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer t = m[pr][col] * m[i][j] - m[i][col] * m[pr][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][col] = 0;
    }
    previous = m[pr][col];
    pivots.push_back(col);
    ++pr;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      std::size_t pc = pivots[k];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (m[k][j] != 0 && sgn(x[j]) != 0) s += Rational(m[k][j]) * x[j];
      }
      x[pc] = -s / Rational(m[k][pc]);
      x[pc].canonicalize();
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace detail {

// Solves the square system g c = b exactly; g must be nonsingular.
inline std::vector<Rational> solve_square(std::vector<std::vector<Rational>> g, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(g[p][col]) == 0) ++p;
    if (p == n) throw DomainError("singular Gram matrix");
    std::swap(g[p], g[col]);
    std::swap(b[p], b[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(g[i][col]) == 0) continue;
      Rational f = g[i][col] / g[col][col];
      for (std::size_t j = col; j < n; ++j) g[i][j] -= f * g[col][j];
      b[i] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= g[i][i];
  return b;
}

inline std::vector<Rational> combine(const std::vector<std::vector<Rational>>& w,
                                     const std::vector<Rational>& coefficients, std::size_t n) {
  std::vector<Rational> v(n, Rational(0));
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (sgn(coefficients[k]) == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(w[k][i]) != 0) v[i] += coefficients[k] * w[k][i];
    }
  }
  return v;
}

inline Rational max_norm_distance(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, Rational(abs(a[i] - b[i])));
  return best;
}

}  // namespace detail

struct KernelProblem {
  IntMatrix matrix;
  std::vector<Rational> target;  // nonnegative
  Rational tolerance;            // positive, max-norm
};

// A nonnegative rational v with A v = 0 exactly, |u - v| < tolerance in the
// max-norm, and v zero wherever u is zero.
//
// On the current support S of u, the kernel of A restricted to S gets an
// exact basis W, u is projected orthogonally onto span W, and the projection
// coefficients are replaced by best rational approximations with growing
// denominators until the combination is nonnegative and within tolerance.
// If even the exact projection has negative coordinates, those coordinates
// are forced to zero and the procedure repeats on the smaller support.
inline std::vector<Rational> rational_kernel_point(const KernelProblem& problem) {
  const auto& a = problem.matrix;
  const auto& u = problem.target;
  if (u.size() != a.cols()) throw DomainError("target length does not match the matrix");
  if (sgn(problem.tolerance) <= 0) throw DomainError("tolerance must be positive");
  for (const auto& x : u) {
    if (sgn(x) < 0) throw DomainError("target must be nonnegative");
  }
  if (a.annihilates(u)) return u;

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (sgn(u[i]) > 0) support.push_back(i);
  }
  auto embed = [&](const std::vector<Rational>& local) {
    std::vector<Rational> v(u.size(), Rational(0));
    for (std::size_t k = 0; k < support.size(); ++k) v[support[k]] = local[k];
    return v;
  };
  const std::vector<Rational> zero(u.size(), Rational(0));

  while (true) {
    std::vector<Rational> target;
    for (auto i : support) target.push_back(u[i]);
    auto w = support.empty() ? std::vector<std::vector<Rational>>{} : kernel_basis(a.columns(support));
    if (w.empty()) {
      if (detail::max_norm_distance(u, zero) < problem.tolerance) return zero;
      throw DomainError("infeasible: the kernel restricted to the target's support is trivial");
    }
    const std::size_t n = support.size();
    std::vector<std::vector<Rational>> gram(w.size(), std::vector<Rational>(w.size()));
    std::vector<Rational> rhs(w.size());
    for (std::size_t p = 0; p < w.size(); ++p) {
      for (std::size_t q = p; q < w.size(); ++q) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) s += w[p][i] * w[q][i];
        gram[p][q] = gram[q][p] = s;
      }
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += w[p][i] * target[i];
      rhs[p] = s;
    }
    auto coefficients = detail::solve_square(gram, rhs);

    auto acceptable = [&](const std::vector<Rational>& local) {
      for (const auto& x : local) {
        if (sgn(x) < 0) return false;
      }
      return detail::max_norm_distance(local, target) < problem.tolerance;
    };
    Integer bound = 1;
    for (int step = 0; step < 48; ++step, bound *= 2) {
      std::vector<Rational> rounded;
      for (const auto& c : coefficients) rounded.push_back(best_approximation(c, bound));
      auto local = detail::combine(w, rounded, n);
      if (acceptable(local)) return embed(local);
    }
    auto exact = detail::combine(w, coefficients, n);
    if (acceptable(exact)) return embed(exact);

    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(exact[k]) >= 0) kept.push_back(support[k]);
    }
    if (kept.size() == support.size()) {
      throw DomainError("target is not within tolerance " + to_string(problem.tolerance) +
                        " of the nonnegative kernel");
    }
    support = std::move(kept);
  }
}

// Snaps a table onto the admissible cone, working only on its support.
inline WeightTable approximate_table(const WeightTable& u, const Rational& tolerance) {
  std::vector<RoundGraph> columns;
  for (const auto& [t, v] : u.entries()) columns.push_back(t);
  MatchingSystem sys = matching_system(u.basis(), u.radius(), columns);
  KernelProblem problem{sys.matrix, sys.vector_of(u), tolerance};
  auto v = rational_kernel_point(problem);
  WeightTable out(u.basis(), u.radius());
  for (std::size_t j = 0; j < v.size(); ++j) out.set(sys.columns[j], v[j]);
  return out;
}

struct Integerized {
  WeightSystem weights;
  Integer scale;  // M
};

// M is the least common denominator; the weights are M * v.
inline Integerized integerize(const WeightTable& v) {
  Integer m = 1;
  for (const auto& [t, x] : v.entries()) m = lcm(m, x.get_den());
  return {WeightSystem::from_table(v.scaled(Rational(m))), m};
}

// ---------------------------------------------------------------------------
// The family G_n > H_n in rank 2 (basis x, y).

namespace detail {

inline std::vector<Word> conjugated_x_loops(int n) {
  Basis b(2);
  std::vector<Word> gens;
  Word yn(b);
  for (int i = 0; i < n; ++i) yn.push(2);
  gens.push_back(yn);
  Word prefix(b);
  for (int k = 1; k < n; ++k) {
    prefix.push(2);
    gens.push_back(concat(concat(prefix, letter_word(b, 1)), invert(prefix)));
  }
  return gens;
}

}  // namespace detail

// <y^n, y x y^-1, ..., y^(n-1) x y^-(n-1)>: hull is an n-cycle of y-edges
// with x-loops at all vertices but one.
inline Subgroup subgroup_Hn(int n) {
  if (n < 2) throw DomainError("H_n needs n >= 2");
  return Subgroup::from_generators(Basis(2), detail::conjugated_x_loops(n));
}

// H_n together with x: the index-n normal subgroup.
inline Subgroup subgroup_Gn(int n) {
  if (n < 2) throw DomainError("G_n needs n >= 2");
  auto gens = detail::conjugated_x_loops(n);
  gens.insert(gens.begin(), letter_word(Basis(2), 1));
  return Subgroup::from_generators(Basis(2), std::move(gens));
}

inline Subgroup whole_group(Basis basis) {
  std::vector<Word> gens;
  for (int a = 1; a <= basis.rank(); ++a) gens.push_back(letter_word(basis, a));
  return Subgroup::from_generators(basis, std::move(gens));
}

struct ConvergencePoint {
  int n;
  Rational distance;
};

// Cylinder distance between (1/n) eta_{H_n} and eta_F at radius r, per n.
inline std::vector<ConvergencePoint> convergence_run(int r, const std::vector<int>& ns,
                                                     const Limits& limits = {}) {
  check_radius(r, limits);
  for (int n : ns) {
    if (n < 2) throw DomainError("convergence_run needs every n >= 2");
  }
  const WeightTable target = cylinder_table(RationalCurrent::counting(whole_group(Basis(2))), r, limits);
  std::vector<std::future<Rational>> jobs;
  for (int n : ns) {
    jobs.push_back(std::async(std::launch::async, [n, r, &target, &limits] {
      auto current = RationalCurrent::counting(subgroup_Hn(n), Rational(1, n));
      return distance(cylinder_table(current, r, limits), target);
    }));
  }
  std::vector<ConvergencePoint> out;
  for (std::size_t i = 0; i < ns.size(); ++i) out.push_back({ns[i], jobs[i].get()});
  return out;
}

}  // namespace freecurrents

#endif  // FREECURRENTS_APPROX_HPP_
