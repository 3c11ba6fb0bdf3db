#pragma once

// Smith normal form over Z with unimodular transforms, plus the small amount of
// rational linear algebra (rank, solve) the lattice code needs.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "glsm/rational.hpp"

namespace glsm {

using BigMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<RationalVector>;

inline BigMatrix identity_matrix(std::size_t n) {
  BigMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline BigMatrix to_big(const IntMatrix& a) {
  BigMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (long v : a[i]) m[i].emplace_back(v);
  return m;
}

inline IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (nonnegative).
struct SmithForm {
  BigMatrix U;
  BigMatrix V;
  std::vector<Integer> diagonal;  // length min(rows, cols); zeros at the end
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t rank() const {
    return static_cast<std::size_t>(std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
  }
};

namespace detail {

inline void swap_rows(BigMatrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }
inline void swap_cols(BigMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}
// row_a <- row_a + f * row_b
inline void add_row(BigMatrix& m, std::size_t a, std::size_t b, const Integer& f) {
  for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] += f * m[b][j];
}
inline void add_col(BigMatrix& m, std::size_t a, std::size_t b, const Integer& f) {
  for (auto& row : m) row[a] += f * row[b];
}

}  // namespace detail

inline SmithForm smith_normal_form(const BigMatrix& input) {
  using namespace detail;
  SmithForm out;
  BigMatrix a = input;
  out.rows = a.size();
  out.cols = a.empty() ? 0 : a[0].size();
  out.U = identity_matrix(out.rows);
  out.V = identity_matrix(out.cols);
  const std::size_t m = out.rows, n = out.cols;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // choose the smallest nonzero entry in the remaining block as pivot
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (!best || abs(a[i][j]) < abs(a[best->first][best->second]))) best = {{i, j}};
      if (!best) break;
      swap_rows(a, t, best->first);
      swap_rows(out.U, t, best->first);
      swap_cols(a, t, best->second);
      swap_cols(out.V, t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        add_row(a, i, t, -q);
        add_row(out.U, i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        add_col(a, j, t, -q);
        add_col(out.V, j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the rest of the block by the pivot
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      add_row(a, t, *bad_row, Integer(1));
      add_row(out.U, t, *bad_row, Integer(1));
    }
    if (a[t][t] == 0) break;
    if (a[t][t] < 0) {
      for (auto& v : a[t]) v = -v;
      for (auto& v : out.U[t]) v = -v;
    }
  }
  out.diagonal.assign(std::min(m, n), Integer(0));
  for (std::size_t i = 0; i < std::min(m, n); ++i) out.diagonal[i] = a[i][i];
  return out;
}

inline std::vector<Integer> mat_vec(const BigMatrix& m, const std::vector<Integer>& v) {
  std::vector<Integer> out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline RationalVector mat_vec(const BigMatrix& m, const RationalVector& v) {
  RationalVector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += Rational(m[i][j]) * v[j];
  return out;
}

/// Rank over Q of a set of integer vectors (rows).
inline std::size_t rational_rank(const std::vector<RationalVector>& rows_in) {
  auto rows = rows_in;
  if (rows.empty()) return 0;
  const std::size_t n = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rational_rank(const IntMatrix& rows_in) {
  std::vector<RationalVector> rows;
  for (const auto& r : rows_in) {
    RationalVector v;
    for (long x : r) v.emplace_back(x);
    rows.push_back(std::move(v));
  }
  return rational_rank(rows);
}

/// Solves the square system M x = b exactly; nullopt when M is singular.
inline std::optional<RationalVector> solve_square(RationalMatrix m, RationalVector b) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[col], m[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      b[i] -= f * b[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

/// A nonzero vector in the rational kernel of the rows, if any.
inline std::optional<RationalVector> kernel_vector(const std::vector<RationalVector>& rows_in, std::size_t n) {
  auto rows = rows_in;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rational inv = 1 / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    RationalVector x(n, Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = -rows[r][free];
    return x;
  }
  return std::nullopt;
}

}  // namespace glsm
