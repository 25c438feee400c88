#include "levitanaka/corpus/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "levitanaka/involution/involution.hpp"
#include "levitanaka/prolongation/prolongation.hpp"

namespace levitanaka::corpus {
namespace {

using classify::Family;
using classify::Form;
using lie::Check;
using lie::GradedLieAlgebra;

// Complex Lie algebra with rational structure constants; jsign[a] = +-1 means J b_a = +-i b_a
// on degree -1.
struct ComplexAlgebra {
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>> brackets;  // a < b
  std::map<std::size_t, int> jsign;

  std::size_t add(std::string name, int degree) {
    names.push_back(std::move(name));
    degrees.push_back(degree);
    return names.size() - 1;
  }
  void set(std::size_t a, std::size_t b, std::size_t c, const Rational& x) {
    if (x == 0 || a == b) return;
    if (a < b) {
      brackets[{a, b}][c] += x;
    } else {
      brackets[{b, a}][c] -= x;
    }
  }
};

// Underlying real algebra: basis b_a, i b_a per complex basis vector, sorted by degree.
GradedLieAlgebra realify(const ComplexAlgebra& c) {
  const std::size_t n = c.names.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return c.degrees[a] < c.degrees[b]; });
  std::vector<std::size_t> pos(n);
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (std::size_t k = 0; k < n; ++k) {
    pos[order[k]] = 2 * k;
    names.push_back(c.names[order[k]]);
    names.push_back("i" + c.names[order[k]]);
    degrees.push_back(c.degrees[order[k]]);
    degrees.push_back(c.degrees[order[k]]);
  }
  GradedLieAlgebra g(names, degrees);
  for (const auto& [ab, value] : c.brackets) {
    QVector rr(2 * n, Rational(0)), ri(2 * n, Rational(0));
    for (const auto& [k, x] : value) {
      if (x == 0) continue;
      rr[pos[k]] = x;
      ri[pos[k] + 1] = x;
    }
    const std::size_t a = pos[ab.first], b = pos[ab.second];
    g.set_bracket(a, b, rr);
    g.set_bracket(a, b + 1, ri);
    g.set_bracket(a + 1, b, ri);
    g.set_bracket(a + 1, b + 1, Rational(-1) * rr);
  }
  const auto minus_one = g.indices_of_degree(-1);
  if (!minus_one.empty()) {
    QMatrix j(minus_one.size(), minus_one.size());
    auto local = [&](std::size_t real) {
      return static_cast<std::size_t>(std::find(minus_one.begin(), minus_one.end(), real) - minus_one.begin());
    };
    for (std::size_t a = 0; a < n; ++a) {
      if (c.degrees[a] != -1) continue;
      const int s = c.jsign.at(a);
      j(local(pos[a] + 1), local(pos[a])) = s;
      j(local(pos[a]), local(pos[a] + 1)) = -s;
    }
    g.set_complex_structure(j);
  }
  return g;
}

// Basis of a matrix Lie algebra with coordinates by exact solve.
struct MatrixBasis {
  std::vector<QMatrix> basis;
  QMatrix columns;  // flattened basis as columns

  void finish() {
    const std::size_t sz = basis.front().rows() * basis.front().cols();
    columns = QMatrix(sz, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t i = 0; i < sz; ++i) columns(i, k) = basis[k](i / basis[k].cols(), i % basis[k].cols());
  }
  QVector coords(const QMatrix& m) const {
    QVector flat;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) flat.push_back(m(i, j));
    auto x = solve(columns, flat);
    if (!x) throw Error(ErrorCode::InternalInvariant, "matrix outside the algebra");
    return *x;
  }
};

QMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

// sl(3): E_ij (i != j) then H1 = E11 - E22, H2 = E22 - E33.
MatrixBasis sl3(std::vector<std::string>& names) {
  MatrixBasis b;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) {
        b.basis.push_back(unit_matrix(3, i, j));
        names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      }
  b.basis.push_back(unit_matrix(3, 0, 0) - unit_matrix(3, 1, 1));
  b.basis.push_back(unit_matrix(3, 1, 1) - unit_matrix(3, 2, 2));
  names.push_back("H1");
  names.push_back("H2");
  b.finish();
  return b;
}

// Degree of a root vector under ad(diag(e)), read off a nonzero entry.
Rational entry_degree(const QMatrix& m, const std::vector<Rational>& e) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return e[i] - e[j];
  return 0;
}

int as_int(const Rational& q) {
  if (q.get_den() != 1) throw Error(ErrorCode::NonIntegral, "non-integral degree");
  return static_cast<int>(q.get_num().get_si());
}

std::size_t a_rank_signature(std::size_t p, std::size_t q) { return std::min(p, q) + 1; }

Expected heisenberg_expected(std::size_t n, std::size_t plus, std::size_t minus) {
  Expected x;
  // su(plus+1, minus+1) with its contact grading
  x.degree_dims = {{-2, 1}, {-1, 2 * n}, {0, n * n + 1}, {1, 2 * n}, {2, 1}};
  const std::size_t l = n + 1;
  x.kind2 = {classify::make_descriptor(Family::A, l, Form::AIII, {0}, a_rank_signature(plus, minus))};
  x.has_tilde_s = true;
  x.has_s = true;
  x.radical_dim = 0;
  x.levi_factor_dims = {(n + 2) * (n + 2) - 1};
  x.provenance = {{"degree_dims", "computed"}, {"descriptors", "computed"}, {"has_s", "stated"}};
  return x;
}

}  // namespace

CorpusEntry heisenberg(std::size_t n, const std::vector<int>& signs) {
  if (n == 0 || signs.size() != n) throw Error(ErrorCode::PreconditionFailed, "heisenberg needs n >= 1 signs");
  quadric::HermitianFormSystem h{n, 1, {GMatrix(n, n)}};
  std::size_t plus = 0;
  std::string tag;
  for (std::size_t i = 0; i < n; ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw Error(ErrorCode::PreconditionFailed, "signs must be +1 or -1");
    h.components[0](i, i) = GaussRational(signs[i]);
    plus += signs[i] == 1;
    tag += signs[i] == 1 ? "+" : "-";
  }
  CorpusEntry e;
  e.name = "heisenberg_" + std::to_string(n) + "_" + std::to_string(plus) + std::to_string(n - plus);
  e.summary = "hypersurface quadric Im w = sum of +-|z_j|^2, signs " + tag;
  e.quadric = h;
  e.expected = heisenberg_expected(n, plus, n - plus);
  return e;
}

CorpusEntry heisenberg_signature(std::size_t p, std::size_t q) {
  std::vector<int> signs(p, 1);
  signs.insert(signs.end(), q, -1);
  return heisenberg(p + q, signs);
}

quadric::ParametrizedHermitian counterexample_form() {
  quadric::ParametrizedHermitian p{7, {"alpha", "beta", "gamma", "delta"}, {}};
  auto add = [&](std::size_t r, std::size_t c, std::size_t par, bool conj) { p.entries.push_back({r - 1, c - 1, par, conj}); };
  add(1, 2, 0, true);
  add(1, 5, 2, true);
  add(1, 7, 3, true);
  add(2, 1, 0, false);
  add(2, 3, 1, false);
  add(2, 4, 2, false);
  add(2, 6, 3, false);
  add(3, 2, 1, true);
  add(4, 2, 2, true);
  add(5, 1, 2, false);
  add(6, 2, 3, true);
  add(7, 1, 3, false);
  return p;
}

CorpusEntry dimension_counterexample() {
  CorpusEntry e;
  e.name = "counterexample_n7_k8";
  e.summary = "n = 7, k = 8 quadric whose positive part is larger than its negative part";
  e.quadric = quadric::extract_components(counterexample_form());
  auto& x = e.expected;
  x.degree_dims = {{-2, 8}, {-1, 14}, {0, 28}, {1, 16}, {2, 10}};
  x.lower_bounds = {{1, 16}, {2, 10}};
  x.has_tilde_s = false;
  x.radical_dim = 54;
  x.levi_factor_dims = {16, 6};
  x.provenance = {{"degree_dims[-2,-1]", "stated"},
                  {"degree_dims[0,1,2]", "computed"},
                  {"lower_bounds", "stated"},
                  {"has_tilde_s", "stated"},
                  {"radical_dim", "computed"},
                  {"levi_factor_dims", "computed"}};
  return e;
}

CorpusEntry example_algebra_a() {
  ComplexAlgebra c;
  std::vector<std::string> snames;
  const MatrixBasis s = sl3(snames);
  const std::vector<Rational> es{1, 0, -1};
  const std::vector<Rational> js{Rational(-1, 3), Rational(2, 3), Rational(-1, 3)};  // J^s / i
  auto root_degree = [&](std::size_t k) { return as_int(entry_degree(s.basis[k], es)); };
  auto root_jsign = [&](std::size_t k) { return as_int(entry_degree(s.basis[k], js)); };

  std::vector<std::size_t> S, V, W[2], U[2], C;
  for (std::size_t k = 0; k < 8; ++k) S.push_back(c.add("s:" + snames[k], root_degree(k)));
  for (std::size_t i = 0; i < 3; ++i) V.push_back(c.add("V:e" + std::to_string(i + 1), as_int(es[i] - 1)));
  for (int t = 0; t < 2; ++t)
    for (std::size_t i = 0; i < 3; ++i)
      W[t].push_back(c.add("W" + std::to_string(t + 1) + ":f" + std::to_string(i + 1), as_int(1 - es[i])));
  for (int t = 0; t < 2; ++t)
    for (std::size_t k = 0; k < 8; ++k) U[t].push_back(c.add("U" + std::to_string(t + 1) + ":" + snames[k], root_degree(k)));
  for (int t = 0; t < 2; ++t) C.push_back(c.add("C" + std::to_string(t + 1), 0));

  for (std::size_t a = 0; a < 8; ++a) {
    const QMatrix& x = s.basis[a];
    for (std::size_t b = 0; b < 8; ++b) {
      const QVector br = s.coords(commutator(x, s.basis[b]));
      for (std::size_t k = 0; k < 8; ++k) {
        if (a < b) c.set(S[a], S[b], S[k], br[k]);
        for (int t = 0; t < 2; ++t) c.set(S[a], U[t][b], U[t][k], br[k]);
      }
    }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t r = 0; r < 3; ++r) {
        c.set(S[a], V[i], V[r], x(r, i));
        for (int t = 0; t < 2; ++t) c.set(S[a], W[t][i], W[t][r], -x(i, r));  // -x^T
      }
  }
  // [e_i, f_j] = E_ij = traceless part in U + trace part in C (C_t <-> identity matrix)
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      QMatrix m = unit_matrix(3, i, j);
      const Rational tr = i == j ? Rational(1, 3) : Rational(0);
      for (std::size_t d = 0; d < 3; ++d) m(d, d) -= tr;
      const QVector u = s.coords(m);
      for (int t = 0; t < 2; ++t) {
        for (std::size_t k = 0; k < 8; ++k) c.set(V[i], W[t][j], U[t][k], u[k]);
        c.set(V[i], W[t][j], C[t], tr);
      }
    }
  for (std::size_t k = 0; k < 8; ++k)
    if (c.degrees[S[k]] == -1) {
      c.jsign[S[k]] = root_jsign(k);
      for (int t = 0; t < 2; ++t) c.jsign[U[t][k]] = root_jsign(k);
    }
  c.jsign[V[1]] = 1;

  CorpusEntry e;
  e.name = "algebra_a";
  e.summary = "sl(3,C) + V + W1 + W2 + U1 + U2 + C^2, the transitive subalgebra behind the n = 7 counterexample";
  e.algebra = realify(c);
  auto& x = e.expected;
  x.degree_dims = {{-2, 8}, {-1, 14}, {0, 22}, {1, 16}, {2, 10}};
  x.radical_dim = 54;
  x.levi_factor_dims = {16};
  x.has_characteristic_element = false;  // nothing in a_0 acts on V by a scalar shift
  x.transitive = false;                  // C^2 is central and sits in degree 0
  x.provenance = {{"degree_dims[-2,-1,1,2]", "stated"},
                  {"degree_dims[0]", "computed"},
                  {"radical_dim", "computed"},
                  {"has_characteristic_element", "computed"},
                  {"transitive", "computed"}};
  return e;
}

CorpusEntry o8_sl2_example(ShiftChoice shift) {
  // o(8) for the antidiagonal symmetric form: X^T S + S X = 0
  constexpr std::size_t n8 = 8;
  QMatrix constraint(n8 * n8, n8 * n8);
  for (std::size_t a = 0; a < n8; ++a)
    for (std::size_t b = 0; b < n8; ++b) {
      constraint(a * n8 + b, (n8 - 1 - b) * n8 + a) += 1;
      constraint(a * n8 + b, (n8 - 1 - a) * n8 + b) += 1;
    }
  MatrixBasis o;
  for (const auto& v : kernel(constraint)) {
    QMatrix m(n8, n8);
    for (std::size_t i = 0; i < n8 * n8; ++i) m(i / n8, i % n8) = v[i];
    o.basis.push_back(m);
  }
  o.finish();
  MatrixBasis sl2;
  sl2.basis = {unit_matrix(2, 0, 1), unit_matrix(2, 1, 0), unit_matrix(2, 0, 0) - unit_matrix(2, 1, 1)};
  sl2.finish();

  const bool twice = shift == ShiftChoice::DoubleDegrees;
  const Rational f = twice ? 2 : 1;
  const std::vector<Rational> e8{1, 1, 1, 0, 0, -1, -1, -1};
  const std::vector<Rational> j8{0, 0, 0, 1, -1, 0, 0, 0};
  const std::vector<Rational> e2{Rational(1, 2), Rational(-1, 2)};
  const std::vector<Rational> j2{Rational(1, 2), Rational(-1, 2)};
  const Rational v_shift = twice ? Rational(0) : Rational(1, 2);

  ComplexAlgebra c;
  std::vector<std::size_t> O, L, V;
  for (std::size_t k = 0; k < o.basis.size(); ++k) {
    std::size_t i = 0, j = 0;
    for (std::size_t t = 0; t < n8 * n8; ++t)
      if (o.basis[k](t / n8, t % n8) != 0) {
        i = t / n8;
        j = t % n8;
        break;
      }
    O.push_back(c.add("o8:X" + std::to_string(i + 1) + std::to_string(j + 1), as_int(f * entry_degree(o.basis[k], e8))));
  }
  const char* sl2_names[] = {"sl2:E12", "sl2:E21", "sl2:H"};
  for (std::size_t k = 0; k < 3; ++k) L.push_back(c.add(sl2_names[k], as_int(f * entry_degree(sl2.basis[k], e2))));
  for (std::size_t i = 0; i < n8; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      V.push_back(c.add("V:e" + std::to_string(i + 1) + "f" + std::to_string(j + 1), as_int(f * (e8[i] + e2[j] + v_shift))));
  const std::size_t T = c.add("T", 0);

  for (std::size_t a = 0; a < O.size(); ++a) {
    for (std::size_t b = a + 1; b < O.size(); ++b) {
      const QVector br = o.coords(commutator(o.basis[a], o.basis[b]));
      for (std::size_t k = 0; k < O.size(); ++k) c.set(O[a], O[b], O[k], br[k]);
    }
    for (std::size_t i = 0; i < n8; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t r = 0; r < n8; ++r) c.set(O[a], V[i * 2 + j], V[r * 2 + j], o.basis[a](r, i));
  }
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      const QVector br = sl2.coords(commutator(sl2.basis[a], sl2.basis[b]));
      for (std::size_t k = 0; k < 3; ++k) c.set(L[a], L[b], L[k], br[k]);
    }
    for (std::size_t i = 0; i < n8; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t r = 0; r < 2; ++r) c.set(L[a], V[i * 2 + j], V[i * 2 + r], sl2.basis[a](r, j));
  }
  for (auto v : V) c.set(T, v, v, 1);

  for (std::size_t k = 0; k < O.size(); ++k)
    if (c.degrees[O[k]] == -1) c.jsign[O[k]] = as_int(entry_degree(o.basis[k], j8));
  for (std::size_t k = 0; k < 3; ++k)
    if (c.degrees[L[k]] == -1) c.jsign[L[k]] = as_int(entry_degree(sl2.basis[k], j2));
  for (auto v : V)
    if (c.degrees[v] == -1) c.jsign[v] = 1;

  CorpusEntry e;
  e.name = twice ? "o8_sl2" : "o8_sl2_half_t";
  e.summary = twice ? "o(8,C) + sl(2,C) + C^8 (x) C^2 + C T, all degrees doubled"
                    : "o(8,C) + sl(2,C) + C^8 (x) C^2 + C T, characteristic element shifted by T/2";
  e.algebra = realify(c);
  auto& x = e.expected;
  x.kind2 = {classify::make_descriptor(Family::D, 4, Form::Complex, {2, 4 + 3})};
  x.kind1 = {classify::make_descriptor(Family::A, 1, Form::Complex, {0})};
  // the half shift leaves E_r = T/2 and unequal g_1, g_-1, so only the doubled grading keeps the property
  x.has_tilde_s = twice;
  x.has_s = twice;
  x.radical_dim = 34;
  x.levi_factor_dims = {56, 6};
  if (twice) {
    x.degree_dims = {{-4, 6}, {-3, 6}, {-2, 14}, {-1, 10}, {0, 24}, {1, 10}, {2, 14}, {3, 6}, {4, 6}};
    x.transitive = false;  // g_-2 and g_-4 are not generated by g_-1 = V_-1
  } else {
    x.degree_dims = {{-2, 6}, {-1, 20}, {0, 34}, {1, 24}, {2, 12}};
  }
  const std::string verdicts = twice ? "stated" : "computed";
  x.provenance = {{"descriptors", "stated"},     {"has_tilde_s", verdicts},
                  {"has_s", verdicts},           {"radical_dim", "computed"},
                  {"levi_factor_dims", "computed"}, {"degree_dims", "computed"},
                  {"transitive", "computed"}};
  return e;
}

std::vector<std::string> entry_names() {
  return {"heisenberg_1_10", "heisenberg_2_11", "heisenberg_2_20", "counterexample_n7_k8", "algebra_a", "o8_sl2"};
}

CorpusEntry entry(const std::string& name) {
  if (name == "heisenberg_1_10") return heisenberg(1, {1});
  if (name == "heisenberg_2_11") return heisenberg_signature(1, 1);
  if (name == "heisenberg_2_20") return heisenberg_signature(2, 0);
  if (name == "counterexample_n7_k8") return dimension_counterexample();
  if (name == "algebra_a") return example_algebra_a();
  if (name == "o8_sl2") return o8_sl2_example(ShiftChoice::DoubleDegrees);
  if (name == "o8_sl2_half_t") return o8_sl2_example(ShiftChoice::HalfT);
  throw Error(ErrorCode::PreconditionFailed, "unknown corpus entry '" + name + "'");
}

std::vector<CorpusEntry> all_entries() {
  std::vector<CorpusEntry> out;
  for (const auto& n : entry_names()) out.push_back(entry(n));
  return out;
}

GradedLieAlgebra materialize(const CorpusEntry& e, int max_degree, Execution exec) {
  if (e.algebra) return *e.algebra;
  if (!e.quadric) throw Error(ErrorCode::PreconditionFailed, "corpus entry without quadric or algebra");
  return prolongation::prolong(quadric::build_m_minus(*e.quadric), max_degree, exec).algebra;
}

std::vector<Check> run_checks(const CorpusEntry& e, const GradedLieAlgebra& g, Execution exec) {
  std::vector<Check> out;
  const Expected& x = e.expected;
  out.push_back(lie::validate(g, exec));

  for (const auto& [p, d] : x.degree_dims) {
    const auto got = g.dim_of_degree(p);
    const std::string name = "dim g_" + std::to_string(p) + " = " + std::to_string(d);
    out.push_back(got == d ? Check::pass(name)
                           : Check::fail(name, "got " + std::to_string(got), {p, static_cast<long long>(got)}));
  }
  for (const auto& [p, d] : x.lower_bounds) {
    const auto got = g.dim_of_degree(p);
    const std::string name = "dim g_" + std::to_string(p) + " >= " + std::to_string(d);
    out.push_back(got >= d ? Check::pass(name)
                           : Check::fail(name, "got " + std::to_string(got), {p, static_cast<long long>(got)}));
  }

  bool has_e = false;
  std::string e_error;
  try {
    (void)lie::characteristic_element(g);
    has_e = true;
  } catch (const Error& err) {
    e_error = err.what();
    if (err.code() != ErrorCode::NoCharacteristicElement) throw;
  }
  out.push_back(has_e == x.has_characteristic_element
                    ? Check::pass(has_e ? "characteristic element (unique)" : "no characteristic element")
                    : Check::fail("characteristic element", has_e ? "unexpectedly present" : e_error, {}));

  {
    auto t = prolongation::transitivity_check(g);
    const std::string name = x.transitive ? "transitive" : "not transitive";
    out.push_back(t.ok == x.transitive ? Check::pass(name)
                                       : Check::fail(name, t.ok ? "transitive after all" : t.violation, t.witness));
  }

  const auto levi = lie::levi_decomposition(g);
  out.push_back(lie::verify_levi(g, levi));
  if (x.radical_dim) {
    const std::string name = "radical dim " + std::to_string(*x.radical_dim);
    out.push_back(levi.r.dim() == *x.radical_dim
                      ? Check::pass(name)
                      : Check::fail(name, "got " + std::to_string(levi.r.dim()), {static_cast<long long>(levi.r.dim())}));
  }
  if (!x.levi_factor_dims.empty()) {
    std::vector<std::size_t> dims;
    for (const auto& s : lie::simple_ideals(levi.s)) dims.push_back(s.dim());
    std::sort(dims.rbegin(), dims.rend());
    std::vector<long long> w(dims.begin(), dims.end());
    out.push_back(dims == x.levi_factor_dims ? Check::pass("simple ideal dims")
                                             : Check::fail("simple ideal dims", "mismatch", w));
  }

  if (x.has_tilde_s == true) {
    std::vector<QVector> minus_two;
    for (auto i : g.indices_of_degree(-2)) minus_two.push_back(unit_vector(g.dim(), i));
    const auto cap = lie::intersection(levi.r, lie::Subspace::span(g, minus_two));
    out.push_back(cap.dim() < minus_two.size()
                      ? Check::pass("radical misses part of g_-2")
                      : Check::fail("radical misses part of g_-2", "g_-2 lies in the radical", {-2}));
    const bool zero = levi.e_r && is_zero_vector(*levi.e_r);
    out.push_back(zero ? Check::pass("E_r = 0")
                       : Check::fail("E_r = 0", levi.e_r ? "radical part of E is nonzero" : "no E", {}));
  }
  if (x.has_tilde_s == false) {
    // (S~) forces dim g_p = dim g_-p
    bool asym = false;
    for (int p = 1; p <= 2; ++p) asym = asym || g.dim_of_degree(p) != g.dim_of_degree(-p);
    out.push_back(asym ? Check::pass("dim g_+ != dim g_- rules out (S~)")
                       : Check::fail("dim g_+ != dim g_- rules out (S~)", "degrees are symmetric", {}));
  }

  if (!x.kind2.empty() && x.has_tilde_s) {
    const bool e_r_zero = levi.e_r && is_zero_vector(*levi.e_r);
    const bool verdict = classify::tilde_s_general(x.kind2, x.kind1, e_r_zero);
    out.push_back(verdict == *x.has_tilde_s ? Check::pass("descriptor verdict (S~)")
                                            : Check::fail("descriptor verdict (S~)", "classification disagrees", {}));
    if (x.has_s && *x.has_tilde_s) {
      const bool suff = involution::s_property_sufficient(x.kind2, x.kind1, x.kind1.empty() && levi.r.is_zero());
      out.push_back(!suff || *x.has_s ? Check::pass("sufficient conditions for (S) consistent")
                                      : Check::fail("sufficient conditions for (S) consistent", "(S) claimed false", {}));
    }
  }
  return out;
}

io::Json expected_to_json(const Expected& x) {
  auto dims = [](const std::map<int, std::size_t>& m) {
    io::Json j = io::Json::object();
    for (const auto& [p, d] : m) j[std::to_string(p)] = d;
    return j;
  };
  auto descs = [](const std::vector<classify::FactorDescriptor>& v) {
    io::Json j = io::Json::array();
    for (const auto& d : v) j.push_back(classify::to_json(d));
    return j;
  };
  io::Json j{{"degree_dims", dims(x.degree_dims)},
             {"lower_bounds", dims(x.lower_bounds)},
             {"kind2", descs(x.kind2)},
             {"kind1", descs(x.kind1)},
             {"levi_factor_dims", x.levi_factor_dims},
             {"has_characteristic_element", x.has_characteristic_element},
             {"transitive", x.transitive},
             {"provenance", x.provenance}};
  j["has_tilde_s"] = x.has_tilde_s ? io::Json(*x.has_tilde_s) : io::Json(nullptr);
  j["has_s"] = x.has_s ? io::Json(*x.has_s) : io::Json(nullptr);
  j["radical_dim"] = x.radical_dim ? io::Json(*x.radical_dim) : io::Json(nullptr);
  return j;
}

io::Json to_json(const CorpusEntry& e) {
  io::Json j{{"name", e.name}, {"summary", e.summary}, {"expected", expected_to_json(e.expected)}};
  if (e.quadric) j["quadric"] = quadric::to_json(*e.quadric);
  if (e.algebra) j["algebra"] = io::algebra_to_json(*e.algebra);
  return j;
}

}  // namespace levitanaka::corpus
