#include "levitanaka/exact/elimination.hpp"

#include <algorithm>
#include <limits>

namespace levitanaka {
namespace {

using IntRow = std::vector<Integer>;

std::size_t int_bits(const Integer& z) { return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2); }

// Divides a row by the gcd of its entries.
void make_primitive(IntRow& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (sgn(g) == 0 || g == 1) return;
  for (auto& x : row)
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(std::span<const Rational> row) {
  Integer l = 1;
  for (const auto& q : row)
    if (sgn(q) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntRow out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (sgn(row[j]) == 0) continue;
    out[j] = row[j].get_num() * (l / row[j].get_den());
  }
  make_primitive(out);
  return out;
}

// target := pivot_value * target - target[col] * pivot_row, then primitive.
void eliminate(IntRow& target, const IntRow& pivot_row, std::size_t col) {
  if (sgn(target[col]) == 0) return;
  const Integer factor = target[col];
  const Integer& p = pivot_row[col];
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (sgn(target[j]) != 0) target[j] *= p;
    if (sgn(pivot_row[j]) != 0) target[j] -= factor * pivot_row[j];
  }
  make_primitive(target);
}

Echelon<Rational> reduce_integer(const QMatrix& m, Execution exec) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::vector<IntRow> rows(nr);
  for (std::size_t i = 0; i < nr; ++i) rows[i] = to_integer_row(m.row(i));

  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < nc && next < nr; ++col) {
    std::size_t best = nr;
    std::size_t best_bits = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = next; i < nr; ++i) {
      if (sgn(rows[i][col]) == 0) continue;
      const std::size_t b = int_bits(rows[i][col]);
      if (b < best_bits) {
        best = i;
        best_bits = b;
      }
    }
    if (best == nr) continue;
    std::swap(rows[next], rows[best]);
    const IntRow& pivot_row = rows[next];
    const auto count = static_cast<std::ptrdiff_t>(nr);
    const auto skip = static_cast<std::ptrdiff_t>(next);
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (std::ptrdiff_t i = 0; i < count; ++i)
        if (i != skip) eliminate(rows[static_cast<std::size_t>(i)], pivot_row, col);
    } else {
      for (std::ptrdiff_t i = 0; i < count; ++i)
        if (i != skip) eliminate(rows[static_cast<std::size_t>(i)], pivot_row, col);
    }
    pivots.push_back(col);
    ++next;
  }

  Echelon<Rational> out{QMatrix(nr, nc), pivots};
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const Integer& p = rows[k][pivots[k]];
    for (std::size_t j = 0; j < nc; ++j) {
      if (sgn(rows[k][j]) == 0) continue;
      Rational q(rows[k][j], p);
      q.canonicalize();
      out.rref(k, j) = q;
    }
  }
  return out;
}

template <typename T>
std::vector<std::vector<T>> kernel_from(const Echelon<T>& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, T(0));
    v[f] = T(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rref(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Echelon<Rational> row_reduce(const QMatrix& m, Execution exec) { return reduce_integer(m, exec); }

template <typename T>
Echelon<T> row_reduce_field(const Matrix<T>& m) {
  Matrix<T> a = m;
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < nc && next < nr; ++col) {
    std::size_t best = nr;
    std::size_t best_bits = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = next; i < nr; ++i) {
      if (is_zero(a(i, col))) continue;
      const std::size_t b = bit_size(a(i, col));
      if (b < best_bits) {
        best = i;
        best_bits = b;
      }
    }
    if (best == nr) continue;
    if (best != next)
      for (std::size_t j = 0; j < nc; ++j) std::swap(a(next, j), a(best, j));
    const T inv = T(1) / a(next, col);
    for (std::size_t j = col; j < nc; ++j)
      if (!is_zero(a(next, j))) a(next, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == next || is_zero(a(i, col))) continue;
      const T factor = a(i, col);
      for (std::size_t j = col; j < nc; ++j)
        if (!is_zero(a(next, j))) a(i, j) -= factor * a(next, j);
    }
    pivots.push_back(col);
    ++next;
  }
  return {std::move(a), std::move(pivots)};
}

template Echelon<Rational> row_reduce_field(const Matrix<Rational>&);
template Echelon<GaussRational> row_reduce_field(const Matrix<GaussRational>&);

std::size_t rank(const QMatrix& m) { return row_reduce(m).rank(); }
std::size_t rank(const GMatrix& m) { return row_reduce_field(m).rank(); }

std::vector<QVector> kernel(const QMatrix& m) { return kernel_from(row_reduce(m), m.cols()); }
std::vector<GVector> kernel(const GMatrix& m) { return kernel_from(row_reduce_field(m), m.cols()); }

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs length");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  QVector x(a.cols(), Rational(0));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.rref(k, a.cols());
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto e = row_reduce(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

bool RowSpaceBuilder::add(const QVector& row) {
  if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row space: row length");
  IntRow r = to_integer_row(row);
  for (std::size_t k = 0; k < rows_.size(); ++k) eliminate(r, rows_[k], pivot_cols_[k]);
  std::size_t pivot = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (sgn(r[j]) != 0) {
      pivot = j;
      break;
    }
  if (pivot == cols_) return false;
  pivot_cols_.push_back(pivot);
  rows_.push_back(std::move(r));
  return true;
}

QMatrix RowSpaceBuilder::matrix() const {
  QMatrix m(rows_.size(), cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(rows_[i][j]) != 0) m(i, j) = rows_[i][j];
  return m;
}

}  // namespace levitanaka
