#include <set>

#include "doctest.h"
#include "levitanaka/roots/root_data.hpp"

using namespace levitanaka;
using namespace levitanaka::roots;

namespace {

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// full root system by closing the simple roots under their own reflections
std::set<std::vector<std::string>> closure(const RootSystem& rs) {
  auto key = [](const QVector& v) {
    std::vector<std::string> k;
    for (const auto& x : v) k.push_back(x.get_str());
    return k;
  };
  std::set<std::vector<std::string>> seen;
  std::vector<QVector> frontier = rs.simple_roots;
  for (const auto& v : frontier) seen.insert(key(v));
  while (!frontier.empty()) {
    std::vector<QVector> next;
    for (const auto& v : frontier)
      for (const auto& a : rs.simple_roots) {
        const Rational c = 2 * dot(v, a) / dot(a, a);
        QVector w = v;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * a[i];
        if (seen.insert(key(w)).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

struct Case {
  Family f;
  std::size_t rank;
  std::size_t positive;
};

const Case kCases[] = {{Family::A, 1, 1},  {Family::A, 2, 3},  {Family::A, 5, 15}, {Family::A, 8, 36},
                       {Family::D, 4, 12}, {Family::D, 5, 20}, {Family::D, 7, 42}, {Family::E6, 6, 36}};

}  // namespace

TEST_CASE("positive roots match the reflection closure") {
  for (const auto& c : kCases) {
    CAPTURE(family_name(c.f));
    CAPTURE(c.rank);
    const auto rs = make_root_system(c.f, c.rank);
    const auto pos = positive_roots(rs);
    CHECK(pos.size() == c.positive);
    CHECK(closure(rs).size() == 2 * c.positive);
    // every positive root has nonnegative integral simple coefficients
    for (const auto& r : pos) {
      const auto co = simple_coefficients(rs, r);
      for (const auto& x : co) {
        CHECK(x >= 0);
        CHECK(x.get_den() == 1);
      }
      CHECK(from_coefficients(rs, co) == r);
    }
  }
}

TEST_CASE("cartan matrices are simply laced") {
  for (const auto& c : kCases) {
    const auto rs = make_root_system(c.f, c.rank);
    for (std::size_t i = 0; i < c.rank; ++i) {
      CHECK(rs.cartan[i][i] == 2);
      for (std::size_t j = 0; j < c.rank; ++j) {
        CHECK(rs.cartan[i][j] == rs.cartan[j][i]);
        CHECK(rs.cartan[i][j] == coroot_pairing(rs.simple_roots[i], rs.simple_roots[j]));
      }
    }
  }
}

TEST_CASE("highest roots") {
  CHECK(highest_root_coefficients(make_root_system(Family::A, 4)) == std::vector<int>{1, 1, 1, 1});
  CHECK(highest_root_coefficients(make_root_system(Family::D, 5)) == std::vector<int>{1, 2, 2, 1, 1});
  CHECK(highest_root_coefficients(make_root_system(Family::E6, 6)) == std::vector<int>{1, 2, 2, 3, 2, 1});
}

TEST_CASE("longest element") {
  for (const auto& c : kCases) {
    CAPTURE(family_name(c.f));
    CAPTURE(c.rank);
    const auto rs = make_root_system(c.f, c.rank);
    const auto w0 = longest_element(rs);
    CHECK(w0.word.size() == c.positive);
    CHECK(w0.matrix * w0.matrix == QMatrix::identity(rs.ambient_dim()));
    // w0 maps the positive roots onto the negative roots
    for (const auto& r : positive_roots(rs)) {
      const auto co = simple_coefficients(rs, w0.matrix.apply(r));
      for (const auto& x : co) CHECK(x <= 0);
    }
  }
}

TEST_CASE("diagram involution") {
  CHECK(w0_involution(make_root_system(Family::A, 4)) == std::vector<std::size_t>{3, 2, 1, 0});
  CHECK(w0_involution(make_root_system(Family::D, 4)) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(w0_involution(make_root_system(Family::D, 5)) == std::vector<std::size_t>{0, 1, 2, 4, 3});
  CHECK(w0_involution(make_root_system(Family::E6, 6)) == std::vector<std::size_t>{5, 1, 4, 3, 2, 0});
}

TEST_CASE("fundamental weights are dual to the coroots") {
  for (const auto& c : kCases) {
    const auto rs = make_root_system(c.f, c.rank);
    const auto w = fundamental_weights(rs);
    const QMatrix inv = inverse_cartan(rs);
    for (std::size_t i = 0; i < c.rank; ++i)
      for (std::size_t j = 0; j < c.rank; ++j) {
        CHECK(coroot_pairing(rs.simple_roots[i], w[j]) == (i == j ? 1 : 0));
        QVector col(c.rank);
        for (std::size_t k = 0; k < c.rank; ++k) col[k] = inv(j, k);
        if (i == 0) CHECK(from_coefficients(rs, col) == w[j]);
      }
  }
}

TEST_CASE("reflections") {
  const auto rs = make_root_system(Family::D, 4);
  for (const auto& a : rs.simple_roots) {
    const QMatrix s = reflection(a);
    CHECK(s * s == QMatrix::identity(4));
    QVector neg = a;
    for (auto& x : neg) x = -x;
    CHECK(s.apply(a) == neg);
  }
  QVector half(2), a(2);
  a[0] = 1, a[1] = -1;
  half[0] = Rational(1, 4);
  CHECK_THROWS_AS(coroot_pairing(a, half), Error);
}

TEST_CASE("invalid ranks and names") {
  CHECK_THROWS_AS(make_root_system(Family::D, 3), Error);
  CHECK_THROWS_AS(make_root_system(Family::A, 0), Error);
  CHECK_THROWS_AS(make_root_system(Family::E6, 7), Error);
  CHECK(parse_family("E6") == Family::E6);
  CHECK_THROWS_AS(parse_family("B"), Error);
}
