#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace crysrig {

// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, F::zero()) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const F& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  void append_row(const std::vector<F>& row) {
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<F> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<int> row_reduce(Matrix<F>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const F inv = m(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const F factor = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
int rank(Matrix<F> m) {
  return static_cast<int>(row_reduce(m).size());
}

// Basis of {x : M x = 0}, one vector per free column.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
  const std::vector<int> pivots = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> x(static_cast<std::size_t>(m.cols()), F::zero());
    x[free] = F::one();
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m(static_cast<int>(i), free);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Incremental echelon basis of a row space: insert rows one at a time and
// learn whether each increased the rank. Cheap to copy, so callers can
// backtrack in subset enumerations.
template <class F>
class RowSpace {
 public:
  explicit RowSpace(int cols) : cols_(cols) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  bool insert(std::vector<F> row) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const F& coeff = row[pivots_[i]];
      if (coeff.is_zero()) continue;
      const F factor = coeff;
      for (int c = 0; c < cols_; ++c) row[c] = row[c] - factor * rows_[i][c];
    }
    int pivot = 0;
    while (pivot < cols_ && row[pivot].is_zero()) ++pivot;
    if (pivot == cols_) return false;
    const F inv = row[pivot].inverse();
    for (int c = 0; c < cols_; ++c) row[c] = row[c] * inv;
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
  }

 private:
  int cols_;
  std::vector<std::vector<F>> rows_;
  std::vector<int> pivots_;
};

}  // namespace crysrig
