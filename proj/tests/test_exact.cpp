#include "doctest.h"
#include "levitanaka/exact/elimination.hpp"
#include "levitanaka/io/json_io.hpp"
#include "support/generators.hpp"

using namespace levitanaka;

namespace {

QMatrix rows(std::initializer_list<std::initializer_list<int>> r) {
  std::vector<QVector> v;
  for (auto row : r) {
    QVector q;
    for (int x : row) q.emplace_back(x);
    v.push_back(q);
  }
  return QMatrix::from_rows(v.front().size(), v);
}

// independent rank: textbook elimination on doubles is not exact, so use a cofactor-free
// approach: greedy independent-row selection through row_reduce_field
std::size_t field_rank(const QMatrix& m) { return row_reduce_field(m).rank(); }

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(parse_rational("+3/9").get_den() == 3);
  for (const char* bad : {"", "1/0", "x", "1/-2", "--1", "1/"}) CHECK_THROWS_AS(parse_rational(bad), Error);
}

TEST_CASE("field axioms hold for rationals and gaussian rationals") {
  gen::Source s(gen::kSeed);
  for (int i = 0; i < 300; ++i) {
    const GaussRational a = s.gauss(0.1), b = s.gauss(0.1), c = s.gauss(0.1);
    CAPTURE(i);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!a.is_zero()) CHECK(a / a == GaussRational(1));
    const Rational q = s.rational(0.0);
    CHECK(q.get_den() > 0);
    Rational copy(q.get_num(), q.get_den());
    copy.canonicalize();
    CHECK(copy == q);
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(QMatrix::identity(3)) == 3);
  CHECK(rank(rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(QMatrix(4, 7)) == 0);
  GMatrix g(2, 2);
  g(0, 0) = GaussRational::i();
  g(0, 1) = 1;
  g(1, 0) = -1;
  g(1, 1) = GaussRational::i();  // second row = i * first
  CHECK(rank(g) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(QMatrix::identity(2)).empty());
  const auto k = kernel(rows({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("solve examples") {
  const QVector b{Rational(3), Rational(-1, 2)};
  CHECK(*solve(QMatrix::identity(2), b) == b);
  CHECK_FALSE(solve(rows({{1, 1}, {1, 1}}), {Rational(1), Rational(0)}).has_value());
  const auto x = solve(rows({{2, 0}, {0, 3}}), {Rational(1), Rational(1)});
  REQUIRE(x);
  CHECK((*x)[0] == Rational(1, 2));
  CHECK((*x)[1] == Rational(1, 3));
  CHECK_THROWS_AS(solve(QMatrix::identity(2), {Rational(1)}), Error);
}

TEST_CASE("property: kernel vectors are annihilated, independent and rank-nullity holds") {
  gen::Source s(gen::kSeed + 1);
  for (int i = 0; i < 60; ++i) {
    CAPTURE(i);
    const std::size_t r = s.integer(1, 7), c = s.integer(1, 9);
    const QMatrix m = s.coin() ? s.matrix(r, c) : s.low_rank(r, c, s.integer(1, 3));
    const auto k = kernel(m);
    const std::size_t rk = rank(m);
    CHECK(rk == field_rank(m));
    CHECK(k.size() == c - rk);
    for (const auto& v : k) CHECK(is_zero_vector(m.apply(v)));
    if (!k.empty()) CHECK(rank(QMatrix::from_rows(c, k)) == k.size());
    CHECK(rank(m.transpose()) == rk);
  }
}

TEST_CASE("property: fraction-free and field elimination give the same rref") {
  gen::Source s(gen::kSeed + 2);
  for (int i = 0; i < 60; ++i) {
    CAPTURE(i);
    const QMatrix m = s.low_rank(s.integer(1, 8), s.integer(1, 8), s.integer(1, 4));
    const auto a = row_reduce(m, Execution::Serial);
    const auto b = row_reduce_field(m);
    CHECK(a.pivots == b.pivots);
    CHECK(a.rref == b.rref);
  }
}

TEST_CASE("property: serial and parallel elimination are identical") {
  gen::Source s(gen::kSeed + 3);
  for (int i = 0; i < 30; ++i) {
    CAPTURE(i);
    const QMatrix m = s.matrix(s.integer(5, 25), s.integer(5, 25), 0.5);
    const auto a = row_reduce(m, Execution::Serial);
    const auto b = row_reduce(m, Execution::Parallel);
    CHECK(a.pivots == b.pivots);
    CHECK(a.rref == b.rref);
  }
}

TEST_CASE("property: solve round trip and inverse") {
  gen::Source s(gen::kSeed + 4);
  for (int i = 0; i < 60; ++i) {
    CAPTURE(i);
    const std::size_t r = s.integer(1, 6), c = s.integer(1, 6);
    const QMatrix a = s.matrix(r, c);
    const QVector x = s.vector(c);
    const auto y = solve(a, a.apply(x));
    REQUIRE(y);
    CHECK(a.apply(*y) == a.apply(x));
    const QMatrix sq = s.matrix(r, r, 0.1);
    const auto inv = inverse(sq);
    CHECK(inv.has_value() == (rank(sq) == r));
    if (inv) CHECK(sq * *inv == QMatrix::identity(r));
  }
}

TEST_CASE("row space builder agrees with rank") {
  gen::Source s(gen::kSeed + 5);
  for (int i = 0; i < 30; ++i) {
    const QMatrix m = s.low_rank(8, 6, s.integer(1, 5));
    RowSpaceBuilder b(6);
    for (std::size_t r = 0; r < 8; ++r) b.add(QVector(m.row(r).begin(), m.row(r).end()));
    CHECK(b.rank() == rank(m));
    CHECK(rank(b.matrix()) == b.rank());
  }
}

TEST_CASE("json round trip of scalars and matrices") {
  CHECK(io::to_json(Rational(-3, 4)) == "-3/4");
  CHECK(io::to_json(Rational(5)) == "5");
  CHECK(io::rational_from_json(io::Json(7)) == 7);
  const GaussRational z{Rational(1, 2), Rational(-2)};
  CHECK(io::gauss_from_json(io::to_json(z)) == z);
  gen::Source s(gen::kSeed + 6);
  const QMatrix m = s.matrix(3, 4);
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
  CHECK_THROWS_AS(io::rational_from_json(io::Json("1/0")), Error);
  CHECK_THROWS_AS(io::rational_from_json(io::Json::array()), Error);
}
