#include "levitanaka/exact/matrix.hpp"

namespace levitanaka {

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
  QVector c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
  QVector c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

QVector operator*(const Rational& s, const QVector& v) {
  QVector c(v);
  for (auto& x : c) x *= s;
  return c;
}

QVector unit_vector(std::size_t dim, std::size_t index) {
  QVector v(dim, Rational(0));
  v.at(index) = 1;
  return v;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

}  // namespace levitanaka
