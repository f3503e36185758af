#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seidel {

// Row-major dense matrix. Used for Seidel matrices, quotient matrices and
// the oracle's exact and floating-point work arrays.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    DenseMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out(rows_, std::vector<T>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  template <typename U>
  DenseMatrix<U> cast() const {
    DenseMatrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = U((*this)(i, j));
    return out;
  }

  bool symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  DenseMatrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const T& ail = a(i, l);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += ail * b(l, j);
    }
  return out;
}

template <typename T>
std::vector<T> operator*(const DenseMatrix<T>& a, const std::vector<T>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<T> out(a.rows(), T{});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

}  // namespace seidel
