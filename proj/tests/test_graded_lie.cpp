#include "doctest.h"
#include "levitanaka/io/json_io.hpp"
#include "levitanaka/lie/graded_lie.hpp"
#include "support/generators.hpp"

using namespace levitanaka;
using namespace levitanaka::lie;

namespace {

QVector unit(std::size_t n, std::size_t i, Rational c = 1) {
  QVector v(n);
  v[i] = c;
  return v;
}

QVector sum(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> terms) {
  QVector v(n);
  for (auto [i, c] : terms) v[i] += c;
  return v;
}

// sl2 graded by ad(h/2): f(-1), h(0), e(1)
GradedLieAlgebra sl2() {
  GradedLieAlgebra g({"f", "h", "e"}, {-1, 0, 1});
  g.set_bracket(1, 2, unit(3, 2, 2));
  g.set_bracket(1, 0, unit(3, 0, -2));
  g.set_bracket(2, 0, unit(3, 1));
  return g;
}

// Heisenberg: t(-2), x,y(-1), [x,y] = t
GradedLieAlgebra heisenberg() {
  GradedLieAlgebra g({"t", "x", "y"}, {-2, -1, -1});
  g.set_bracket(1, 2, unit(3, 0));
  return g;
}

// sl2 plus one extra line: f h e z
GradedLieAlgebra sl2_plus_line(int z_degree) {
  GradedLieAlgebra g({"f", "h", "e", "z"}, {-1, 0, 1, z_degree});
  g.set_bracket(1, 2, unit(4, 2, 2));
  g.set_bracket(1, 0, unit(4, 0, -2));
  g.set_bracket(2, 0, unit(4, 1));
  return g;
}

// sl2 acting on C^2 = span(u, v), with a scaling z so that E = h/2 + z grades u in -1, v in 0:
// f(-1) h(0) e(1) u(-1) v(0) z(0)
GradedLieAlgebra sl2_semidirect_c2() {
  GradedLieAlgebra g({"f", "h", "e", "u", "v", "z"}, {-1, 0, 1, -1, 0, 0});
  const std::size_t n = 6;
  g.set_bracket(1, 2, unit(n, 2, 2));
  g.set_bracket(1, 0, unit(n, 0, -2));
  g.set_bracket(2, 0, unit(n, 1));
  g.set_bracket(1, 3, unit(n, 3, -1));
  g.set_bracket(1, 4, unit(n, 4, 1));
  g.set_bracket(2, 3, unit(n, 4, 1));
  g.set_bracket(0, 4, unit(n, 3, 1));
  g.set_bracket(5, 3, unit(n, 3, Rational(-1, 2)));
  g.set_bracket(5, 4, unit(n, 4, Rational(-1, 2)));
  return g;
}

GradedLieAlgebra sl2_sum_sl2() {
  GradedLieAlgebra g({"f", "h", "e", "f'", "h'", "e'"}, {-1, 0, 1, -1, 0, 1});
  for (std::size_t o : {0u, 3u}) {
    g.set_bracket(o + 1, o + 2, unit(6, o + 2, 2));
    g.set_bracket(o + 1, o, unit(6, o, -2));
    g.set_bracket(o + 2, o, unit(6, o + 1));
  }
  return g;
}

}  // namespace

TEST_CASE("sl2 killing form") {
  const auto g = sl2();
  CHECK(validate(g).ok);
  const QMatrix k = killing_form(g);
  CHECK(k(1, 1) == 8);
  CHECK(k(2, 0) == 4);
  CHECK(k(0, 2) == 4);
  CHECK(k(0, 0) == 0);
  CHECK(killing_nondegenerate(g));
  CHECK(radical(g).is_zero());
}

TEST_CASE("serial and parallel kernels agree") {
  for (const auto& g : {sl2(), sl2_semidirect_c2(), sl2_sum_sl2(), heisenberg()}) {
    CHECK(killing_form(g, Execution::Serial) == killing_form(g, Execution::Parallel));
    const auto a = validate(g, Execution::Serial), b = validate(g, Execution::Parallel);
    CHECK(a.ok == b.ok);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("perturbed heisenberg violates jacobi") {
  // x, y, t with [x,y] = t and an extra [t,x] = y breaks Jacobi on (x, y, x)
  GradedLieAlgebra g({"t", "x", "y"}, {0, 0, 0});
  g.set_bracket(1, 2, unit(3, 0));
  g.set_bracket(0, 1, unit(3, 2));
  g.set_bracket(0, 2, unit(3, 0));
  const auto c = check_jacobi(g, Execution::Serial);
  CHECK_FALSE(c.ok);
  CHECK(c.witness.size() == 3);
  CHECK(c.witness == check_jacobi(g, Execution::Parallel).witness);
}

TEST_CASE("degree additivity is enforced") {
  GradedLieAlgebra g({"a", "b", "c"}, {-1, -1, -1});
  g.set_bracket(0, 1, unit(3, 2));  // should land in degree -2
  CHECK_FALSE(validate(g).ok);
}

TEST_CASE("complex structure must square to minus one") {
  auto g = heisenberg();
  QMatrix j(2, 2);
  j(0, 1) = -1;
  j(1, 0) = 1;
  g.set_complex_structure(j);
  CHECK(validate(g).ok);
  g.set_complex_structure(QMatrix::identity(2));
  CHECK_FALSE(validate(g).ok);
}

TEST_CASE("heisenberg radical, nilradical and central series") {
  const auto g = heisenberg();
  CHECK(radical(g).dim() == 3);
  CHECK(nilradical(g).dim() == 3);
  const auto cs = lower_central_series(Subspace::whole(g));
  CHECK(cs.nilpotent);
  REQUIRE(cs.terms.size() >= 2);
  CHECK(cs.terms[0].dim() == 3);
  CHECK(cs.terms[1].dim() == 1);
  CHECK_THROWS_AS(characteristic_element(g), Error);
}

TEST_CASE("characteristic element of sl2 is h/2") {
  const auto e = characteristic_element(sl2());
  CHECK(e == unit(3, 1, Rational(1, 2)));
  try {
    characteristic_element(heisenberg());
    FAIL("expected throw");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NoCharacteristicElement);
  }
}

TEST_CASE("levi decomposition of sl2 plus a central line") {
  const auto g = sl2_plus_line(0);
  REQUIRE(validate(g).ok);
  CHECK(radical(g).dim() == 1);
  CHECK(radical(g).contains(unit(4, 3)));
  // characteristic element not unique: z is central in degree 0
  CHECK_THROWS_AS(characteristic_element(g), Error);
  const auto d = levi_decomposition(g);
  CHECK(d.s.dim() == 3);
  CHECK(d.r.dim() == 1);
  CHECK(verify_levi(g, d).ok);
}

TEST_CASE("levi decomposition of sl2 semidirect C2") {
  const auto g = sl2_semidirect_c2();
  REQUIRE(validate(g).ok);
  const auto r = radical(g);
  CHECK(r.dim() == 3);
  CHECK(is_ideal(r));
  const auto nil = nilradical(g);
  CHECK(nil.dim() == 2);
  CHECK(r.contains(nil));
  const auto d = levi_decomposition(g);
  CHECK(d.s.dim() == 3);
  CHECK(is_subalgebra(d.s));
  CHECK(intersection(d.s, d.r).is_zero());
  CHECK(verify_levi(g, d).ok);
  const auto e = characteristic_element(g);
  REQUIRE(d.e_s);
  REQUIRE(d.e_r);
  QVector total = *d.e_s;
  for (std::size_t i = 0; i < total.size(); ++i) total[i] += (*d.e_r)[i];
  CHECK(total == e);
  CHECK(d.s.contains(*d.e_s));
  CHECK(d.r.contains(*d.e_r));
}

TEST_CASE("simple ideals of sl2 + sl2") {
  const auto g = sl2_sum_sl2();
  const auto ideals = simple_ideals(Subspace::whole(g));
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].dim() == 3);
  CHECK(ideals[1].dim() == 3);
  CHECK(intersection(ideals[0], ideals[1]).is_zero());
  for (const auto& i : ideals) CHECK(is_ideal(i));
}

TEST_CASE("subspace operations") {
  const auto g = sl2_semidirect_c2();
  const auto whole = Subspace::whole(g);
  CHECK(bracket_span(whole, whole).dim() == 5);  // z is not a commutator
  const auto r = Subspace::graded_span(g, {unit(6, 3), unit(6, 4)});
  CHECK(bracket_span(r, r).is_zero());
  CHECK(r.basis_degrees() == std::vector<int>{-1, 0});
  CHECK(homogeneous_degree(g, sum(6, {{0, 1}, {3, 2}})) == -1);
  CHECK_FALSE(homogeneous_degree(g, sum(6, {{0, 1}, {1, 1}})).has_value());
  CHECK_FALSE(homogeneous_degree(g, QVector(6)).has_value());
  const auto coords = r.coordinates(sum(6, {{3, 2}, {4, -1}}));
  REQUIRE(coords);
  CHECK_FALSE(r.coordinates(unit(6, 0)).has_value());
  const auto sub = restrict_to(Subspace::graded_span(g, {unit(6, 0), unit(6, 1), unit(6, 2)}));
  CHECK(sub.dim() == 3);
  CHECK(validate(sub).ok);
  CHECK(killing_nondegenerate(sub));
}

TEST_CASE("derived series of a solvable algebra terminates") {
  const auto g = sl2_semidirect_c2();
  const auto series = derived_series(radical(g));
  REQUIRE_FALSE(series.empty());
  CHECK(series.back().is_zero());
}

TEST_CASE("property: random antisymmetric tables fail or pass jacobi consistently") {
  gen::Source s(gen::kSeed + 10);
  for (int it = 0; it < 25; ++it) {
    const std::size_t n = s.integer(2, 5);
    GradedLieAlgebra g(std::vector<std::string>(n, "x"), std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (s.coin()) g.set_bracket(i, j, s.vector(n, 0.6));
    const auto a = check_jacobi(g, Execution::Serial);
    const auto b = check_jacobi(g, Execution::Parallel);
    CHECK(a.ok == b.ok);
    CHECK(a.witness == b.witness);
    CHECK(killing_form(g, Execution::Serial) == killing_form(g, Execution::Parallel));
    const QMatrix k = killing_form(g);
    CHECK(k == k.transpose());
  }
}

TEST_CASE("json round trip of algebras") {
  auto g = sl2_semidirect_c2();
  CHECK(io::algebra_from_json(io::algebra_to_json(g)) == g);
  auto h = heisenberg();
  QMatrix j(2, 2);
  j(0, 1) = -1;
  j(1, 0) = 1;
  h.set_complex_structure(j);
  const auto back = io::algebra_from_json(io::algebra_to_json(h));
  CHECK(back == h);
  CHECK(back.complex_structure().has_value());
  CHECK_THROWS_AS(io::algebra_from_json(io::Json::parse(R"({"basis": 3})")), Error);
}
