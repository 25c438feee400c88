#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "levitanaka/error.hpp"
#include "levitanaka/exact/scalar.hpp"

namespace levitanaka {

/// Dense row-major matrix over an exact field.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  static Matrix from_rows(std::size_t cols, const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!levitanaka::is_zero(x)) return false;
    return true;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!levitanaka::is_zero((*this)(i, j)) && !levitanaka::is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (levitanaka::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!levitanaka::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;
using GMatrix = Matrix<GaussRational>;
using GVector = std::vector<GaussRational>;

inline bool is_zero_vector(const QVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& s, const QVector& v);
QVector unit_vector(std::size_t dim, std::size_t index);
Rational dot(const QVector& a, const QVector& b);

}  // namespace levitanaka
