#pragma once

#include <optional>
#include <vector>

#include "subcirc/numeric.hpp"

namespace subcirc {

namespace detail {

// Scale every row to coprime integers; preserves row space and rank.
inline Mat integer_row_scaled(const Mat& m) {
  Mat out = m;
  for (Index i = 0; i < out.rows(); ++i) {
    bool zero = true;
    for (Index j = 0; j < out.cols(); ++j)
      if (out(i, j) != 0) { zero = false; break; }
    if (zero) continue;
    Vec row = out.row(i).transpose();
    out.row(i) = primitive_ray(row).transpose();
  }
  return out;
}

}  // namespace detail

// Exact rank by fraction-free (Bareiss) elimination on the integer-scaled
// matrix. Intermediate entries are minors of the input, which bounds growth.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m_in) {
  Mat a = detail::integer_row_scaled(m_in.eval());
  const Index rows = a.rows(), cols = a.cols();
  Rational prev = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i)
      if (a(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

struct Rref {
  Mat m;
  std::vector<Index> pivot_cols;
};

// Reduced row echelon form (exact Gauss-Jordan).
template <typename Derived>
Rref rref(const Eigen::MatrixBase<Derived>& m_in) {
  Rref out{m_in.eval(), {}};
  Mat& a = out.m;
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i)
      if (a(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    a.row(r) /= a(r, c);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      a.row(i) -= a(i, c) * a.row(r);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

// Basis of {x : Mx = 0}, each vector in primitive integer form,
// deterministic order (one vector per free column).
template <typename Derived>
std::vector<Vec> kernel_basis(const Eigen::MatrixBase<Derived>& m_in) {
  const Mat m = m_in.eval();
  const Index cols = m.cols();
  if (m.rows() == 0) {
    std::vector<Vec> basis;
    for (Index j = 0; j < cols; ++j) basis.push_back(unit_vec(cols, j));
    return basis;
  }
  Rref e = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Index c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    Vec v = Vec::Zero(cols);
    v(f) = 1;
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
      v(e.pivot_cols[r]) = -e.m(static_cast<Index>(r), f);
    basis.push_back(primitive_ray(v));
  }
  return basis;
}

// One exact solution of Mx = b, or nullopt when b is outside the column space.
template <typename DerivedM, typename DerivedB>
std::optional<Vec> solve_linear(const Eigen::MatrixBase<DerivedM>& m_in,
                                const Eigen::MatrixBase<DerivedB>& b_in) {
  const Mat m = m_in.eval();
  const Vec b = b_in.eval();
  if (b.size() != m.rows()) throw DimensionError("solve_linear: size mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  Rref e = rref(aug);
  Vec x = Vec::Zero(m.cols());
  for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
    Index c = e.pivot_cols[r];
    if (c == m.cols()) return std::nullopt;  // pivot in the augmented column
    x(c) = e.m(static_cast<Index>(r), m.cols());
  }
  return x;
}

// Greedy completion of the columns of `partial` to a basis of R^n using
// coordinate vectors; returns only the appended columns.
inline std::vector<Vec> complete_to_basis(const std::vector<Vec>& partial, Index n) {
  Mat stacked(static_cast<Index>(partial.size()), n);
  for (size_t i = 0; i < partial.size(); ++i)
    stacked.row(static_cast<Index>(i)) = partial[i].transpose();
  Index current = rank(stacked);
  std::vector<Vec> added;
  for (Index j = 0; j < n && current + static_cast<Index>(added.size()) < n; ++j) {
    Mat trial(stacked.rows() + static_cast<Index>(added.size()) + 1, n);
    trial.topRows(stacked.rows()) = stacked;
    for (size_t i = 0; i < added.size(); ++i)
      trial.row(stacked.rows() + static_cast<Index>(i)) = added[i].transpose();
    trial.row(trial.rows() - 1) = unit_vec(n, j).transpose();
    if (rank(trial) == current + static_cast<Index>(added.size()) + 1)
      added.push_back(unit_vec(n, j));
  }
  return added;
}

}  // namespace subcirc
