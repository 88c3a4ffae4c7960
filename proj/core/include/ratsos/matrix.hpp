#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ratsos/error.hpp"

namespace ratsos {

/// Small dense row-major matrix over a commutative ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw UsageError("matrix data size mismatch");
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix out(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = one;
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix out(cols_, rows_, T{});
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if (!((*this)(i, j) == (*this)(j, i))) return false;
      }
    }
    return true;
  }

  T trace() const {
    if (!is_square()) throw UsageError("trace of a non-square matrix");
    if (rows_ == 0) return T{};
    T out = (*this)(0, 0);
    for (std::size_t i = 1; i < rows_; ++i) out += (*this)(i, i);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_, T{});
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (a.cols_ == 0) continue;
        T acc = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
        out(i, j) = std::move(acc);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace ratsos
