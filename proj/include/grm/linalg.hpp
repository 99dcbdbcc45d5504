#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grm/field.hpp"

// Dense linear algebra over GF(q) for the small systems the geometry code
// needs. Vectors are std::vector<Elem>; matrices are lists of rows.
namespace grm::linalg {

using Vec = std::vector<Elem>;
using Mat = std::vector<Vec>;

/// In-place reduced row echelon form. Zero rows are dropped. Returns the
/// pivot column of each remaining row.
inline std::vector<std::size_t> rref(const Field& f, Mat& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Elem inv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline std::size_t rank(const Field& f, Mat rows) { return rref(f, rows).size(); }

inline Elem dot(const Field& f, const Vec& a, const Vec& b) {
  Elem acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

/// Basis of {x : rows * x = 0} for a matrix with `cols` columns.
inline Mat nullspace(const Field& f, Mat rows, std::size_t cols) {
  const auto pivots = rref(f, rows);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Mat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(rows[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of rows * x = rhs, if any.
inline std::optional<Vec> solve(const Field& f, const Mat& rows, const Vec& rhs, std::size_t cols) {
  Mat aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Vec r = rows[i];
    r.push_back(rhs[i]);
    aug.push_back(std::move(r));
  }
  const auto pivots = rref(f, aug);
  Vec x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;
    x[pivots[r]] = aug[r][cols];
  }
  return x;
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<Mat> inverse(const Field& f, const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return Mat{};
  Mat aug(n, Vec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = rref(f, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

inline Vec mat_vec(const Field& f, const Mat& a, const Vec& x) {
  Vec y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(f, a[i], x);
  return y;
}

}  // namespace grm::linalg
