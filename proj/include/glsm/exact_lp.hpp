#pragma once

// Exact rational feasibility for { x : A x = b, x >= 0 } by phase-one simplex
// with Bland's rule. Problem sizes here are tiny (a handful of rows), so a dense
// tableau is fine.

#include <optional>
#include <vector>

#include "glsm/integer_matrix.hpp"
#include "glsm/rational.hpp"

namespace glsm {

inline std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  if (m == 0) return RationalVector(n, Rational(0));

  const std::size_t width = n + m + 1;  // originals, artificials, rhs
  const std::size_t rhs = n + m;
  std::vector<RationalVector> t(m, RationalVector(width, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    Rational sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * a[i][j];
    t[i][n + i] = 1;
    t[i][rhs] = sign * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // reduced costs of "minimize sum of artificials"
  RationalVector cost(width, Rational(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) cost[rhs] -= t[i][rhs];

  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < rhs; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (!enter) break;
    std::optional<std::size_t> leave;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][*enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][*enter];
      if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (!leave) throw InternalError("phase-one simplex unbounded");
    const std::size_t p = *leave, q = *enter;
    Rational inv = 1 / t[p][q];
    for (auto& v : t[p]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == p || t[i][q] == 0) continue;
      Rational f = t[i][q];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[p][j];
    }
    if (cost[q] != 0) {
      Rational f = cost[q];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[p][j];
    }
    basis[p] = q;
  }
  if (cost[rhs] != 0) return std::nullopt;  // -(optimal artificial sum) != 0
  RationalVector x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][rhs];
  return x;
}

/// v = sum_i lambda_i g_i with lambda >= 0; returns lambda.
inline std::optional<RationalVector> cone_coefficients(const RationalVector& v, const std::vector<RationalVector>& gens) {
  const std::size_t k = v.size();
  RationalMatrix a(k, RationalVector(gens.size(), Rational(0)));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < k; ++i) a[i][j] = gens[j][i];
  if (gens.empty()) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return RationalVector{};
  }
  return find_nonnegative_solution(a, v);
}

/// Some y with <y, g> >= 1 for every g, if one exists (Gordan side of the alternative).
inline std::optional<RationalVector> strictly_positive_functional(const std::vector<RationalVector>& gens, std::size_t dim) {
  if (gens.empty()) return RationalVector(dim, Rational(0));
  // variables: y+ (dim), y- (dim), slack (|gens|);  <y+ - y-, g> - s = 1
  const std::size_t n = 2 * dim + gens.size();
  RationalMatrix a(gens.size(), RationalVector(n, Rational(0)));
  RationalVector b(gens.size(), Rational(1));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t c = 0; c < dim; ++c) {
      a[i][c] = gens[i][c];
      a[i][dim + c] = -gens[i][c];
    }
    a[i][2 * dim + i] = -1;
  }
  auto x = find_nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  RationalVector y(dim);
  for (std::size_t c = 0; c < dim; ++c) y[c] = (*x)[c] - (*x)[dim + c];
  return y;
}

/// A nonnegative, nonzero integer vector a with sum_i a_i g_i = 0 (the other side
/// of Gordan's alternative), scaled to be primitive.
inline std::optional<std::vector<Integer>> nonnegative_relation(const std::vector<RationalVector>& gens, std::size_t dim) {
  if (gens.empty()) return std::nullopt;
  RationalMatrix a(dim + 1, RationalVector(gens.size(), Rational(0)));
  RationalVector b(dim + 1, Rational(0));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t c = 0; c < dim; ++c) a[c][j] = gens[j][c];
    a[dim][j] = 1;
  }
  b[dim] = 1;
  auto x = find_nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  Integer den = 1;
  for (const auto& q : *x) den = lcm_of(den, q.get_den());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& q : *x) {
    Integer v = q.get_num() * (den / q.get_den());
    out.push_back(v);
    g = gcd_of(g, v);
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

}  // namespace glsm
