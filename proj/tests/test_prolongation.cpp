#include "doctest.h"
#include "levitanaka/prolongation/prolongation.hpp"
#include "levitanaka/quadric/quadric.hpp"
#include "support/generators.hpp"
#include "support/prolongation_oracle.hpp"

using namespace levitanaka;
using namespace levitanaka::prolongation;
using quadric::HermitianFormSystem;

namespace {

GMatrix diag(std::initializer_list<int> d) {
  GMatrix m(d.size(), d.size());
  std::size_t i = 0;
  for (int x : d) m(i, i) = x, ++i;
  return m;
}

HermitianFormSystem system(std::size_t n, std::vector<GMatrix> c) { return {n, c.size(), std::move(c)}; }

std::map<int, std::size_t> library_dims(const HermitianFormSystem& h, Execution exec = Execution::Parallel) {
  return prolong(quadric::build_m_minus(h), 6, exec).degree_dims;
}

std::map<int, std::size_t> oracle_dims(const HermitianFormSystem& h) {
  return oracle::BruteProlongation(h.n, h.components).run(6);
}

}  // namespace

TEST_CASE("heisenberg goldens") {
  using D = std::map<int, std::size_t>;
  CHECK(library_dims(system(1, {diag({1})})) == D{{-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}});
  CHECK(library_dims(system(2, {diag({1, -1})})) == D{{-2, 1}, {-1, 4}, {0, 5}, {1, 4}, {2, 1}});
  CHECK(library_dims(system(2, {diag({1, 1})})) == D{{-2, 1}, {-1, 4}, {0, 5}, {1, 4}, {2, 1}});
  CHECK(library_dims(system(3, {diag({1, 1, -1})})) == D{{-2, 1}, {-1, 6}, {0, 10}, {1, 6}, {2, 1}});
}

TEST_CASE("library agrees with the brute-force oracle on fixed quadrics") {
  const std::vector<HermitianFormSystem> cases = {
      system(1, {diag({1})}),
      system(2, {diag({1, -1})}),
      system(2, {diag({1, 0}), diag({0, 1})}),  // product of two Heisenberg quadrics
      system(3, {diag({1, 1, 1})}),
  };
  for (const auto& h : cases) CHECK(library_dims(h) == oracle_dims(h));
}

TEST_CASE("property: library agrees with the oracle on random quadrics") {
  gen::Source s(gen::kSeed + 30);
  int checked = 0;
  for (int it = 0; it < 40 && checked < 12; ++it) {
    const std::size_t n = s.integer(1, 3), k = s.integer(1, 2);
    std::vector<GMatrix> c;
    for (std::size_t a = 0; a < k; ++a) c.push_back(s.hermitian(n, 0.4));
    const auto h = system(n, c);
    if (!quadric::is_nondegenerate(h) || !quadric::is_fundamental(h)) continue;
    CAPTURE(it);
    const auto lib = library_dims(h, Execution::Serial);
    CHECK(lib == oracle_dims(h));
    CHECK(lib == library_dims(h, Execution::Parallel));
    ++checked;
  }
  CHECK(checked >= 5);
}

TEST_CASE("prolongation output is a graded Lie algebra with the expected structure") {
  const auto r = prolong(quadric::build_m_minus(system(2, {diag({1, -1})})));
  CHECK(lie::validate(r.algebra).ok);
  CHECK(r.terminated_at == 3);
  CHECK(transitivity_check(r.algebra).ok);
  CHECK(lie::characteristic_element(r.algebra) == r.characteristic_element);
  CHECK(r.algebra.degree_dims() == r.degree_dims);
  // su(2,2), dimension 15
  CHECK(lie::radical(r.algebra).is_zero());
}

TEST_CASE("degree solutions reproduce the layers") {
  const auto r = prolong(quadric::build_m_minus(system(1, {diag({1})})));
  for (int p = 0; p <= 2; ++p) {
    CAPTURE(p);
    const auto sols = degree_solutions(r.algebra, p, Execution::Serial);
    CHECK(sols.size() == r.algebra.dim_of_degree(p));
    CHECK(sols == degree_solutions(r.algebra, p, Execution::Parallel));
    for (auto i : r.algebra.indices_of_degree(p)) {
      QVector x(r.algebra.dim());
      x[i] = 1;
      CHECK_FALSE(is_zero_vector(action_vector(r.algebra, x, p)));
    }
  }
}

TEST_CASE("input checks") {
  // no complex structure
  lie::GradedLieAlgebra m({"t", "x", "y"}, {-2, -1, -1});
  QVector t(3);
  t[0] = 1;
  m.set_bracket(1, 2, t);
  CHECK_THROWS_AS(check_input(m), Error);
  // degenerate: a J-invariant vector pair that brackets to zero
  lie::GradedLieAlgebra d({"t", "x", "y", "u", "v"}, {-2, -1, -1, -1, -1});
  QVector t5(5);
  t5[0] = 1;
  d.set_bracket(1, 2, t5);
  QMatrix j(4, 4);
  j(1, 0) = 1, j(0, 1) = -1, j(3, 2) = 1, j(2, 3) = -1;
  d.set_complex_structure(j);
  try {
    check_input(d);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailed);
  }
  // good input passes
  CHECK_NOTHROW(check_input(quadric::build_m_minus(system(1, {diag({1})}))));
}

TEST_CASE("cap is reported") {
  try {
    prolong(quadric::build_m_minus(system(1, {diag({1})})), 1);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapReached);
  }
}
