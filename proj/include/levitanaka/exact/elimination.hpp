#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "levitanaka/exact/matrix.hpp"

namespace levitanaka {

enum class Execution { Serial, Parallel };

/// Reduced row echelon form together with its pivot columns.
template <typename T>
struct Echelon {
  Matrix<T> rref;                  // only the first pivots.size() rows are nonzero
  std::vector<std::size_t> pivots;  // pivot column of row k

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Fraction-free Gauss-Jordan over the integers (rows are cleared of denominators and
/// kept primitive), normalised to the unique rational RREF at the end. The parallel
/// variant distributes the row updates of each pivot step and is bit-identical to the
/// serial one.
Echelon<Rational> row_reduce(const QMatrix& m, Execution exec = Execution::Parallel);

/// Plain Gauss-Jordan over an arbitrary exact field; the reference path for rationals and
/// the only path for Gaussian rationals.
template <typename T>
Echelon<T> row_reduce_field(const Matrix<T>& m);

std::size_t rank(const QMatrix& m);
std::size_t rank(const GMatrix& m);

/// Basis of the right null space, one vector per free column (ascending).
std::vector<QVector> kernel(const QMatrix& m);
std::vector<GVector> kernel(const GMatrix& m);

/// Exact solution of A x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& a);

/// Incrementally maintained echelon basis of a row space. Rows are reduced on insertion,
/// so only independent rows are stored; used for the large sparse prolongation systems
/// where most equations are redundant.
class RowSpaceBuilder {
 public:
  explicit RowSpaceBuilder(std::size_t cols) : cols_(cols) {}

  /// Adds a row; returns true when it enlarged the row space.
  bool add(const QVector& row);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  /// The stored independent rows as a matrix.
  QMatrix matrix() const;

 private:
  std::size_t cols_;
  std::vector<std::vector<Integer>> rows_;  // primitive integer rows, echelonised
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace levitanaka
