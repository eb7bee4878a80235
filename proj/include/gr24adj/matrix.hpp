#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "gr24adj/rat.hpp"

namespace gr24 {

// Dense row-major matrix over an exact field F (Rat or QuadExt).
template <class F>
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<F> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, F(0)) {}

  F& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  void append_row(const std::vector<F>& row) {
    assert(cols == 0 || row.size() == cols);
    if (cols == 0) cols = row.size();
    a.insert(a.end(), row.begin(), row.end());
    ++rows;
  }

  std::vector<F> row(std::size_t i) const {
    return std::vector<F>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

template <class F>
bool is_zero(const F& x) {
  return x == F(0);
}

// In-place reduced row echelon form; returns pivot column indices.
template <class F>
std::vector<std::size_t> rref_inplace(Mat<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = r;
    while (sel < m.rows && is_zero(m(sel, c))) ++sel;
    if (sel == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(r, j), m(sel, j));
    F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::pair<Mat<F>, std::vector<std::size_t>> rref(Mat<F> m) {
  auto p = rref_inplace(m);
  return {std::move(m), std::move(p)};
}

template <class F>
std::size_t rank(Mat<F> m) {
  return rref_inplace(m).size();
}

// Canonical basis of the right kernel: the free-variable basis re-reduced so
// the stacked basis rows are themselves in RREF.
template <class F>
std::vector<std::vector<F>> nullspace(Mat<F> m) {
  auto pivots = rref_inplace(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<F> v(m.cols, F(0));
    v[c] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, c);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  Mat<F> b(0, m.cols);
  for (auto& v : basis) b.append_row(v);
  rref_inplace(b);
  std::vector<std::vector<F>> out;
  for (std::size_t i = 0; i < b.rows; ++i) out.push_back(b.row(i));
  return out;
}

// One solution of A x = rhs, if any.
template <class F>
std::optional<std::vector<F>> solve(const Mat<F>& A, const std::vector<F>& rhs) {
  Mat<F> aug(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
    aug(i, A.cols) = rhs[i];
  }
  auto pivots = rref_inplace(aug);
  if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
  std::vector<F> x(A.cols, F(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, A.cols);
  return x;
}

template <class F>
std::vector<F> mat_vec(const Mat<F>& A, const std::vector<F>& x) {
  std::vector<F> y(A.rows, F(0));
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) y[i] = y[i] + A(i, j) * x[j];
  return y;
}

template <class F>
F dot(const std::vector<F>& a, const std::vector<F>& b) {
  F s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

// Does v lie in the row space of m?
template <class F>
bool in_row_space(Mat<F> m, const std::vector<F>& v) {
  std::size_t r0 = rank(m);
  m.append_row(v);
  return rank(std::move(m)) == r0;
}

template <class F>
bool same_row_space(const Mat<F>& a, const Mat<F>& b) {
  auto ra = rref(a).first, rb = rref(b).first;
  std::size_t na = rank(a), nb = rank(b);
  if (na != nb) return false;
  for (std::size_t i = 0; i < na; ++i)
    if (ra.row(i) != rb.row(i)) return false;
  return true;
}

}  // namespace gr24
