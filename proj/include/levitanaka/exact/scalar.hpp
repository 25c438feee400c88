#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace levitanaka {

/// Arbitrary precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Bit size used to rank pivot candidates: numerator bits plus denominator bits.
std::size_t bit_size(const Rational& q);

/// Element of Q(i).
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussRational(int r) : re(r) {}  // NOLINT(google-explicit-constructor)

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    const Rational n = o.norm();
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::size_t bit_size(const GaussRational& z);

// Uniform field interface used by the generic elimination templates.
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussRational& z) { return z.is_zero(); }

}  // namespace levitanaka
