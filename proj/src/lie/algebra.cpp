#include <algorithm>
#include <limits>

#include "levitanaka/lie/graded_lie.hpp"

namespace levitanaka::lie {

SparseVector to_sparse(const QVector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.push_back({i, v[i]});
  return out;
}

GradedLieAlgebra::GradedLieAlgebra(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size()) throw Error(ErrorCode::DimensionMismatch, "names vs degrees");
  table_.assign(names_.size() * names_.size(), {});
}

int GradedLieAlgebra::min_degree() const {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}
int GradedLieAlgebra::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::vector<std::size_t> GradedLieAlgebra::indices_of_degree(int p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == p) out.push_back(i);
  return out;
}

std::map<int, std::size_t> GradedLieAlgebra::degree_dims() const {
  std::map<int, std::size_t> out;
  for (int d : degrees_) ++out[d];
  return out;
}

void GradedLieAlgebra::check_index(std::size_t i) const {
  if (i >= dim()) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
}

void GradedLieAlgebra::set_bracket(std::size_t i, std::size_t j, const QVector& value) {
  if (value.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "bracket value length");
  set_bracket(i, j, to_sparse(value));
}

void GradedLieAlgebra::set_bracket(std::size_t i, std::size_t j, SparseVector value) {
  check_index(i);
  check_index(j);
  if (i == j) throw Error(ErrorCode::PreconditionFailed, "[e_i, e_i] is always zero");
  for (const auto& e : value) check_index(e.index);
  SparseVector neg = value;
  for (auto& e : neg) e.coeff = -e.coeff;
  table_[i * dim() + j] = std::move(value);
  table_[j * dim() + i] = std::move(neg);
}

QVector GradedLieAlgebra::bracket_with_basis(std::size_t i, const QVector& y) const {
  QVector out(dim(), Rational(0));
  for (std::size_t l = 0; l < y.size(); ++l) {
    if (sgn(y[l]) == 0) continue;
    for (const auto& e : basis_bracket(i, l)) out[e.index] += y[l] * e.coeff;
  }
  return out;
}

QVector GradedLieAlgebra::bracket(const QVector& x, const QVector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "bracket arguments");
  QVector out(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t l = 0; l < dim(); ++l) {
      if (sgn(y[l]) == 0) continue;
      const auto& t = basis_bracket(i, l);
      if (t.empty()) continue;
      const Rational s = x[i] * y[l];
      for (const auto& e : t) out[e.index] += s * e.coeff;
    }
  }
  return out;
}

QMatrix GradedLieAlgebra::ad(const QVector& x) const {
  QMatrix m(dim(), dim());
  for (std::size_t l = 0; l < dim(); ++l) {
    const QVector col = bracket(x, unit_vector(dim(), l));
    for (std::size_t k = 0; k < dim(); ++k) m(k, l) = col[k];
  }
  return m;
}

std::vector<GradedLieAlgebra::Triple> GradedLieAlgebra::structure_constants() const {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      for (const auto& e : basis_bracket(i, j)) out.push_back({i, j, e.index, e.coeff});
  return out;
}

bool operator==(const GradedLieAlgebra& a, const GradedLieAlgebra& b) {
  return a.names_ == b.names_ && a.degrees_ == b.degrees_ && a.table_ == b.table_ && a.j_ == b.j_;
}

namespace {

// Dense accumulation of [e_i, v] for sparse v.
void add_bracket(const GradedLieAlgebra& g, std::size_t i, const SparseVector& v, const Rational& scale,
                 QVector& acc) {
  for (const auto& e : v)
    for (const auto& f : g.basis_bracket(i, e.index)) acc[f.index] += scale * e.coeff * f.coeff;
}

// First violation of Jacobi with leading index i, or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> jacobi_row(const GradedLieAlgebra& g, std::size_t i) {
  const std::size_t n = g.dim();
  QVector acc(n);
  for (std::size_t j = i + 1; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      for (auto& x : acc) x = 0;
      add_bracket(g, i, g.basis_bracket(j, k), 1, acc);
      add_bracket(g, j, g.basis_bracket(k, i), 1, acc);
      add_bracket(g, k, g.basis_bracket(i, j), 1, acc);
      if (!is_zero_vector(acc)) return std::make_pair(j, k);
    }
  return std::nullopt;
}

}  // namespace

Check check_jacobi(const GradedLieAlgebra& g, Execution exec) {
  const std::size_t n = g.dim();
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> first(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) first[static_cast<std::size_t>(i)] = jacobi_row(g, static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      first[i] = jacobi_row(g, i);
      if (first[i]) break;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (first[i]) {
      const auto [j, k] = *first[i];
      return Check::fail("jacobi", "Jacobi identity fails on (" + g.names()[i] + ", " + g.names()[j] + ", " +
                                       g.names()[k] + ")",
                         {static_cast<long long>(i), static_cast<long long>(j), static_cast<long long>(k)});
    }
  return Check::pass("jacobi");
}

Check validate(const GradedLieAlgebra& g, Execution exec) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.basis_bracket(i, i).empty())
      return Check::fail("antisymmetry", "[x,x] != 0 for " + g.names()[i], {static_cast<long long>(i)});
    for (std::size_t j = i + 1; j < n; ++j) {
      SparseVector neg = g.basis_bracket(j, i);
      for (auto& e : neg) e.coeff = -e.coeff;
      if (neg != g.basis_bracket(i, j))
        return Check::fail("antisymmetry", "[x,y] != -[y,x]", {static_cast<long long>(i), static_cast<long long>(j)});
      for (const auto& e : g.basis_bracket(i, j))
        if (g.degree(e.index) != g.degree(i) + g.degree(j))
          return Check::fail("degree", "bracket of " + g.names()[i] + ", " + g.names()[j] + " leaves degree " +
                                           std::to_string(g.degree(i) + g.degree(j)),
                             {static_cast<long long>(i), static_cast<long long>(j), static_cast<long long>(e.index)});
    }
  }
  if (const auto& j = g.complex_structure()) {
    const std::size_t m = g.dim_of_degree(-1);
    if (j->rows() != m || j->cols() != m)
      return Check::fail("complex_structure", "J block size " + std::to_string(j->rows()) +
                                                  " does not match dim g_-1 = " + std::to_string(m),
                         {static_cast<long long>(j->rows()), static_cast<long long>(m)});
    if (*j * *j != Rational(-1) * QMatrix::identity(m))
      return Check::fail("complex_structure", "J^2 != -Id", {});
  }
  auto jac = check_jacobi(g, exec);
  if (!jac.ok) return jac;
  return Check::pass("validate");
}

// ---------------------------------------------------------------------------------------
// Subspace

namespace {

void append_echelon(const Echelon<Rational>& e, std::vector<QVector>& basis, std::vector<std::size_t>& pivots) {
  for (std::size_t k = 0; k < e.rank(); ++k) {
    basis.emplace_back(e.rref.row(k).begin(), e.rref.row(k).end());
    pivots.push_back(e.pivots[k]);
  }
}

}  // namespace

Subspace Subspace::span(const GradedLieAlgebra& g, const std::vector<QVector>& vectors) {
  Subspace s;
  s.parent_ = &g;
  if (vectors.empty()) return s;
  const auto e = row_reduce(QMatrix::from_rows(g.dim(), vectors));
  append_echelon(e, s.basis_, s.pivots_);
  return s;
}

Subspace Subspace::graded_span(const GradedLieAlgebra& g, const std::vector<QVector>& vectors) {
  Subspace s;
  s.parent_ = &g;
  if (vectors.empty()) return s;
  std::map<int, std::vector<QVector>> pieces;
  for (const auto& v : vectors) {
    if (v.size() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace vector length");
    std::map<int, QVector> comp;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      auto [it, inserted] = comp.try_emplace(g.degree(i), QVector(g.dim(), Rational(0)));
      it->second[i] = v[i];
    }
    for (auto& [d, c] : comp) pieces[d].push_back(std::move(c));
  }
  for (const auto& [d, vs] : pieces) {
    const auto e = row_reduce(QMatrix::from_rows(g.dim(), vs));
    append_echelon(e, s.basis_, s.pivots_);
  }
  if (s.dim() != Subspace::span(g, vectors).dim())
    throw Error(ErrorCode::InternalInvariant, "graded_span called on a non-graded span");
  return s;
}

Subspace Subspace::whole(const GradedLieAlgebra& g) {
  std::vector<QVector> vs;
  for (std::size_t i = 0; i < g.dim(); ++i) vs.push_back(unit_vector(g.dim(), i));
  return graded_span(g, vs);
}

Subspace Subspace::zero(const GradedLieAlgebra& g) {
  Subspace s;
  s.parent_ = &g;
  return s;
}

std::optional<QVector> Subspace::coordinates(const QVector& v) const {
  QVector c(dim());
  QVector rebuilt(v.size(), Rational(0));
  for (std::size_t k = 0; k < dim(); ++k) {
    c[k] = v[pivots_[k]];
    if (sgn(c[k]) == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(basis_[k][i]) != 0) rebuilt[i] += c[k] * basis_[k][i];
  }
  if (rebuilt != v) return std::nullopt;
  return c;
}

bool Subspace::contains(const QVector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis().begin(), other.basis().end(), [&](const QVector& v) { return contains(v); });
}

std::vector<int> Subspace::basis_degrees() const {
  std::vector<int> out;
  for (const auto& v : basis_) {
    const auto d = homogeneous_degree(*parent_, v);
    out.push_back(d ? *d : std::numeric_limits<int>::min());
  }
  return out;
}

std::size_t Subspace::dim_of_degree(int p) const {
  const auto ds = basis_degrees();
  return static_cast<std::size_t>(std::count(ds.begin(), ds.end(), p));
}

std::optional<int> homogeneous_degree(const GradedLieAlgebra& g, const QVector& v) {
  std::optional<int> d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (d && *d != g.degree(i)) return std::nullopt;
    d = g.degree(i);
  }
  return d;
}

Subspace bracket_span(const Subspace& a, const Subspace& b) {
  const auto& g = a.parent();
  std::vector<QVector> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      auto z = g.bracket(x, y);
      if (!is_zero_vector(z)) vs.push_back(std::move(z));
    }
  return Subspace::graded_span(g, vs);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  const auto& g = a.parent();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(g);
  // x = sum a_i u_i = sum b_j w_j  <=>  [U | -W] (a, b) = 0
  QMatrix m(g.dim(), a.dim() + b.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    for (std::size_t i = 0; i < g.dim(); ++i) m(i, k) = a.basis()[k][i];
  for (std::size_t k = 0; k < b.dim(); ++k)
    for (std::size_t i = 0; i < g.dim(); ++i) m(i, a.dim() + k) = -b.basis()[k][i];
  std::vector<QVector> vs;
  for (const auto& c : kernel(m)) {
    QVector x(g.dim(), Rational(0));
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (sgn(c[k]) != 0) x = x + c[k] * a.basis()[k];
    vs.push_back(std::move(x));
  }
  return Subspace::span(g, vs);
}

bool is_subalgebra(const Subspace& s) { return s.contains(bracket_span(s, s)); }

bool is_ideal(const Subspace& s) { return s.contains(bracket_span(Subspace::whole(s.parent()), s)); }

GradedLieAlgebra restrict_to(const Subspace& s, const std::string& prefix) {
  const auto& g = s.parent();
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const auto d = homogeneous_degree(g, s.basis()[k]);
    if (!d) throw Error(ErrorCode::InternalInvariant, "restrict_to needs a homogeneous basis");
    names.push_back(prefix + std::to_string(k));
    degrees.push_back(*d);
  }
  GradedLieAlgebra out(names, degrees);
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      const auto c = s.coordinates(g.bracket(s.basis()[a], s.basis()[b]));
      if (!c) throw Error(ErrorCode::InternalInvariant, "restrict_to: subspace is not a subalgebra");
      out.set_bracket(a, b, *c);
    }
  return out;
}

}  // namespace levitanaka::lie
