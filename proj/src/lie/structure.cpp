#include <algorithm>

#include "levitanaka/lie/graded_lie.hpp"

namespace levitanaka::lie {
namespace {

// tr(ad e_i ad e_j) = sum_{l,k} c_{il}^k c_{jk}^l
Rational killing_entry(const GradedLieAlgebra& g, std::size_t i, std::size_t j) {
  Rational s = 0;
  for (std::size_t l = 0; l < g.dim(); ++l)
    for (const auto& a : g.basis_bracket(i, l))
      for (const auto& b : g.basis_bracket(j, a.index))
        if (b.index == l) s += a.coeff * b.coeff;
  return s;
}

// {x in g : form(x, w) = 0 for all w in `against`, x in `within`}, with a form that pairs
// degree p only with degree -p. `within` and `against` must be graded.
Subspace graded_orthogonal(const GradedLieAlgebra& g, const QMatrix& form, const Subspace& within,
                           const Subspace& against) {
  std::vector<QVector> out;
  for (const auto& [p, _] : g.degree_dims()) {
    std::vector<QVector> cand;  // basis of `within` in degree p
    const auto wd = within.basis_degrees();
    for (std::size_t k = 0; k < within.dim(); ++k)
      if (wd[k] == p) cand.push_back(within.basis()[k]);
    if (cand.empty()) continue;
    std::vector<QVector> opp;
    const auto ad = against.basis_degrees();
    for (std::size_t k = 0; k < against.dim(); ++k)
      if (ad[k] == -p) opp.push_back(against.basis()[k]);
    if (opp.empty()) {
      out.insert(out.end(), cand.begin(), cand.end());
      continue;
    }
    // M(o, c) = form(cand_c, opp_o)
    QMatrix m(opp.size(), cand.size());
    for (std::size_t c = 0; c < cand.size(); ++c) {
      const QVector fc = form.apply(cand[c]);  // symmetric
      for (std::size_t o = 0; o < opp.size(); ++o) m(o, c) = dot(fc, opp[o]);
    }
    for (const auto& k : kernel(m)) {
      QVector x(g.dim(), Rational(0));
      for (std::size_t c = 0; c < cand.size(); ++c)
        if (sgn(k[c]) != 0) x = x + k[c] * cand[c];
      out.push_back(std::move(x));
    }
  }
  return Subspace::graded_span(g, out);
}

Subspace embed(const Subspace& outer, const Subspace& part) {
  std::vector<QVector> vs;
  for (const auto& c : part.basis()) {
    QVector x(outer.parent().dim(), Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k)
      if (sgn(c[k]) != 0) x = x + c[k] * outer.basis()[k];
    vs.push_back(std::move(x));
  }
  return Subspace::graded_span(outer.parent(), vs);
}

}  // namespace

QMatrix killing_form(const GradedLieAlgebra& g, Execution exec) {
  const std::size_t n = g.dim();
  QMatrix k(n, n);
  const auto count = static_cast<std::ptrdiff_t>(n);
  auto row = [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j) {
      if (g.degree(i) + g.degree(j) != 0) continue;
      k(i, j) = killing_entry(g, i, j);
      k(j, i) = k(i, j);
    }
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) row(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) row(i);
  }
  return k;
}

bool killing_nondegenerate(const GradedLieAlgebra& g) { return rank(killing_form(g)) == g.dim(); }

Subspace radical(const GradedLieAlgebra& g) {
  const auto whole = Subspace::whole(g);
  return graded_orthogonal(g, killing_form(g), whole, bracket_span(whole, whole));
}

CentralSeries lower_central_series(const Subspace& h) {
  CentralSeries out;
  out.terms.push_back(h);
  while (!out.terms.back().is_zero()) {
    auto next = bracket_span(out.terms.back(), h);
    if (next.dim() == out.terms.back().dim()) break;
    out.terms.push_back(std::move(next));
  }
  out.nilpotent = out.terms.back().is_zero();
  return out;
}

std::vector<Subspace> derived_series(const Subspace& h) {
  std::vector<Subspace> out{h};
  while (!out.back().is_zero()) {
    auto next = bracket_span(out.back(), out.back());
    if (next.dim() == out.back().dim()) break;
    out.push_back(std::move(next));
  }
  return out;
}

Subspace nilradical(const GradedLieAlgebra& g) {
  const auto r = radical(g);
  const auto n = graded_orthogonal(g, killing_form(g), r, r);
  if (!is_ideal(n)) throw Error(ErrorCode::NilradicalUnsupported, "trace-form candidate is not an ideal");
  // ad(n) must act nilpotently on g
  auto v = Subspace::whole(g);
  while (!v.is_zero()) {
    auto next = bracket_span(n, v);
    if (next.dim() == v.dim())
      throw Error(ErrorCode::NilradicalUnsupported, "trace-form candidate does not act nilpotently");
    v = std::move(next);
  }
  return n;
}

QVector characteristic_element(const GradedLieAlgebra& g) {
  const auto zero = g.indices_of_degree(0);
  std::vector<QVector> rows;
  QVector rhs;
  for (std::size_t b = 0; b < g.dim(); ++b)
    for (std::size_t k : g.indices_of_degree(g.degree(b))) {
      QVector row(zero.size(), Rational(0));
      for (std::size_t a = 0; a < zero.size(); ++a)
        for (const auto& e : g.basis_bracket(zero[a], b))
          if (e.index == k) row[a] = e.coeff;
      rows.push_back(std::move(row));
      rhs.push_back(k == b ? Rational(g.degree(b)) : Rational(0));
    }
  const auto m = QMatrix::from_rows(zero.size(), rows);
  const auto x = solve(m, rhs);
  if (!x) throw Error(ErrorCode::NoCharacteristicElement, "no element of degree 0 acts by the degree");
  if (!kernel(m).empty()) throw Error(ErrorCode::NotUnique, "degree 0 has a nonzero central part");
  QVector e(g.dim(), Rational(0));
  for (std::size_t a = 0; a < zero.size(); ++a) e[zero[a]] = (*x)[a];
  return e;
}

// ---------------------------------------------------------------------------------------
// Levi decomposition

namespace {

struct Frame {
  std::vector<QVector> q;                    // unit vectors complementing r, homogeneous
  std::vector<std::vector<QVector>> layers;  // layer i spans r^(i) modulo r^(i+1)
  QMatrix inv;                               // inverse of [q | layers...]
  std::size_t layer_offset(std::size_t i) const {
    std::size_t off = q.size();
    for (std::size_t k = 0; k < i; ++k) off += layers[k].size();
    return off;
  }
};

// Extends the graded basis `base` by vectors of `next` (graded, containing base) that are
// independent modulo base; returns the added vectors.
std::vector<QVector> extend(const GradedLieAlgebra& g, const Subspace& base, const Subspace& next) {
  std::vector<QVector> added;
  std::vector<QVector> cur = base.basis();
  for (const auto& v : next.basis()) {
    cur.push_back(v);
    if (rank(QMatrix::from_rows(g.dim(), cur)) == cur.size())
      added.push_back(v);
    else
      cur.pop_back();
  }
  return added;
}

Frame make_frame(const GradedLieAlgebra& g, const std::vector<Subspace>& series) {
  Frame f;
  std::vector<QVector> cur = series.front().basis();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    cur.push_back(unit_vector(g.dim(), i));
    if (rank(QMatrix::from_rows(g.dim(), cur)) == cur.size())
      f.q.push_back(cur.back());
    else
      cur.pop_back();
  }
  for (std::size_t i = 0; i + 1 < series.size(); ++i) f.layers.push_back(extend(g, series[i + 1], series[i]));
  std::vector<QVector> cols = f.q;
  for (const auto& l : f.layers) cols.insert(cols.end(), l.begin(), l.end());
  auto inv = inverse(QMatrix::from_columns(g.dim(), cols));
  if (!inv) throw Error(ErrorCode::InternalInvariant, "Levi frame is not a basis");
  f.inv = std::move(*inv);
  return f;
}

// Generators of the quotient algebra (bracket gamma on q), greedily chosen.
std::vector<std::size_t> quotient_generators(const std::vector<QVector>& gamma, std::size_t m,
                                             const std::vector<int>& deg) {
  std::vector<std::size_t> order(m);
  for (std::size_t a = 0; a < m; ++a) order[a] = a;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(deg[a]) > std::abs(deg[b]); });
  std::vector<std::size_t> gens;
  std::vector<QVector> span;
  auto closure = [&] {
    std::vector<QVector> vs = span;
    while (true) {
      auto e = row_reduce(QMatrix::from_rows(m, vs));
      std::vector<QVector> basis;
      for (std::size_t k = 0; k < e.rank(); ++k) basis.emplace_back(e.rref.row(k).begin(), e.rref.row(k).end());
      std::vector<QVector> more = basis;
      for (const auto& x : basis)
        for (const auto& y : basis) {
          QVector z(m, Rational(0));
          for (std::size_t a = 0; a < m; ++a) {
            if (sgn(x[a]) == 0) continue;
            for (std::size_t b = 0; b < m; ++b)
              if (sgn(y[b]) != 0) z = z + Rational(x[a] * y[b]) * gamma[a * m + b];
          }
          more.push_back(std::move(z));
        }
      if (rank(QMatrix::from_rows(m, more)) == basis.size()) return basis;
      vs = std::move(more);
    }
  };
  std::vector<QVector> generated;
  for (std::size_t a : order) {
    if (generated.size() == m) break;
    std::vector<QVector> test = generated;
    test.push_back(unit_vector(m, a));
    if (!generated.empty() && rank(QMatrix::from_rows(m, test)) == generated.size()) continue;
    gens.push_back(a);
    span.push_back(unit_vector(m, a));
    generated = closure();
  }
  return gens;
}

}  // namespace

LeviDecomposition levi_decomposition(const GradedLieAlgebra& g) {
  LeviDecomposition out;
  out.r = radical(g);
  const auto series = derived_series(out.r);
  if (!series.back().is_zero()) throw Error(ErrorCode::InternalInvariant, "radical is not solvable");
  const Frame f = make_frame(g, series);
  const std::size_t m = f.q.size();

  std::vector<int> qdeg(m);
  for (std::size_t a = 0; a < m; ++a) qdeg[a] = *homogeneous_degree(g, f.q[a]);

  auto q_part = [&](const QVector& v) {
    const QVector c = f.inv.apply(v);
    return QVector(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m));
  };
  // gamma[a*m+b] = q-coordinates of [q_a, q_b]
  std::vector<QVector> gamma(m * m, QVector(m, Rational(0)));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b) gamma[a * m + b] = q_part(g.bracket(f.q[a], f.q[b]));

  std::vector<QVector> sigma = f.q;  // sigma(q_a) = q_a + phi(q_a)
  auto sigma_of = [&](const QVector& c) {
    QVector x(g.dim(), Rational(0));
    for (std::size_t a = 0; a < m; ++a)
      if (sgn(c[a]) != 0) x = x + c[a] * sigma[a];
    return x;
  };

  const auto gens = quotient_generators(gamma, m, qdeg);

  for (std::size_t i = 0; i < f.layers.size(); ++i) {
    const auto& layer = f.layers[i];
    const std::size_t off = f.layer_offset(i);
    std::vector<int> ldeg(layer.size());
    for (std::size_t t = 0; t < layer.size(); ++t) ldeg[t] = *homogeneous_degree(g, layer[t]);
    auto layer_coords = [&](const QVector& v) {
      const QVector c = f.inv.apply(v);
      return QVector(c.begin() + static_cast<std::ptrdiff_t>(off),
                     c.begin() + static_cast<std::ptrdiff_t>(off + layer.size()));
    };
    // unknown index of (a, t)
    std::vector<std::vector<long>> unk(m, std::vector<long>(layer.size(), -1));
    std::size_t nunk = 0;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t t = 0; t < layer.size(); ++t)
        if (ldeg[t] == qdeg[a]) unk[a][t] = static_cast<long>(nunk++);
    if (nunk == 0) continue;

    std::vector<QVector> rows;
    QVector rhs;
    for (std::size_t a : gens) {
      std::vector<QVector> ad_a(layer.size());  // layer coords of [sigma a, t]
      for (std::size_t t = 0; t < layer.size(); ++t) ad_a[t] = layer_coords(g.bracket(sigma[a], layer[t]));
      for (std::size_t b = 0; b < m; ++b) {
        if (b == a) continue;
        const QVector err = layer_coords(g.bracket(sigma[a], sigma[b]) - sigma_of(gamma[a * m + b]));
        std::vector<QVector> ad_b(layer.size());
        for (std::size_t t = 0; t < layer.size(); ++t) ad_b[t] = layer_coords(g.bracket(sigma[b], layer[t]));
        for (std::size_t tp = 0; tp < layer.size(); ++tp) {
          if (ldeg[tp] != qdeg[a] + qdeg[b]) continue;
          QVector row(nunk, Rational(0));
          for (std::size_t t = 0; t < layer.size(); ++t) {
            if (unk[b][t] >= 0) row[static_cast<std::size_t>(unk[b][t])] += ad_a[t][tp];
            if (unk[a][t] >= 0) row[static_cast<std::size_t>(unk[a][t])] -= ad_b[t][tp];
          }
          for (std::size_t c = 0; c < m; ++c)
            if (sgn(gamma[a * m + b][c]) != 0 && unk[c][tp] >= 0)
              row[static_cast<std::size_t>(unk[c][tp])] -= gamma[a * m + b][c];
          if (is_zero_vector(row) && sgn(err[tp]) == 0) continue;
          rows.push_back(std::move(row));
          rhs.push_back(-err[tp]);
        }
      }
    }
    if (rows.empty()) continue;
    const auto x = solve(QMatrix::from_rows(nunk, rows), rhs);
    if (!x) throw Error(ErrorCode::LiftFailed, "correction system at derived layer " + std::to_string(i) +
                                                   " is inconsistent");
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t t = 0; t < layer.size(); ++t)
        if (unk[a][t] >= 0 && sgn((*x)[static_cast<std::size_t>(unk[a][t])]) != 0)
          sigma[a] = sigma[a] + (*x)[static_cast<std::size_t>(unk[a][t])] * layer[t];
  }

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (g.bracket(sigma[a], sigma[b]) != sigma_of(gamma[a * m + b]))
        throw Error(ErrorCode::LiftFailed, "lifted section is not a homomorphism");

  out.s = Subspace::graded_span(g, sigma);
  try {
    const QVector e = characteristic_element(g);
    out.e_s = sigma_of(q_part(e));
    out.e_r = e - *out.e_s;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::NoCharacteristicElement && err.code() != ErrorCode::NotUnique) throw;
  }
  return out;
}

Check verify_levi(const GradedLieAlgebra& g, const LeviDecomposition& d) {
  if (d.s.dim() + d.r.dim() != g.dim())
    return Check::fail("levi", "dim s + dim r != dim g",
                       {static_cast<long long>(d.s.dim()), static_cast<long long>(d.r.dim())});
  std::vector<QVector> all = d.s.basis();
  all.insert(all.end(), d.r.basis().begin(), d.r.basis().end());
  if (rank(QMatrix::from_rows(g.dim(), all)) != g.dim()) return Check::fail("levi", "s + r is not direct", {});
  if (!is_subalgebra(d.s)) return Check::fail("levi", "s is not a subalgebra", {});
  if (!d.s.is_zero() && !killing_nondegenerate(restrict_to(d.s)))
    return Check::fail("levi", "s is not semisimple", {});
  if (!(d.r == radical(g))) return Check::fail("levi", "r differs from the radical", {});
  if (d.e_s) {
    if (!d.s.contains(*d.e_s) || !d.r.contains(*d.e_r))
      return Check::fail("levi", "E components outside s or r", {});
    if (*d.e_s + *d.e_r != characteristic_element(g)) return Check::fail("levi", "E != E_s + E_r", {});
  }
  return Check::pass("levi");
}

// ---------------------------------------------------------------------------------------
// Simple ideals

namespace {

Subspace generated_ideal(const GradedLieAlgebra& h, const QVector& v) {
  const auto whole = Subspace::whole(h);
  auto cur = Subspace::graded_span(h, {v});
  while (true) {
    auto br = bracket_span(whole, cur);
    std::vector<QVector> vs = cur.basis();
    vs.insert(vs.end(), br.basis().begin(), br.basis().end());
    auto next = Subspace::graded_span(h, vs);
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

// Splits the semisimple algebra h into simple ideals (subspaces of h).
std::vector<Subspace> split(const GradedLieAlgebra& h) {
  const auto whole = Subspace::whole(h);
  std::vector<QVector> probes;
  for (std::size_t i = 0; i < h.dim(); ++i) probes.push_back(unit_vector(h.dim(), i));
  for (const auto& v : probes) {
    const auto ideal = generated_ideal(h, v);
    if (ideal.dim() == h.dim()) continue;
    const auto comp = graded_orthogonal(h, killing_form(h), whole, ideal);
    std::vector<Subspace> out;
    for (const Subspace* part : {&ideal, &comp}) {
      const auto sub = restrict_to(*part, "i");
      for (const auto& piece : split(sub)) out.push_back(embed(*part, piece));
    }
    return out;
  }
  return {whole};
}

}  // namespace

std::vector<Subspace> simple_ideals(const Subspace& s) {
  if (s.is_zero()) return {};
  const auto h = restrict_to(s, "s");
  std::vector<Subspace> out;
  for (const auto& piece : split(h)) out.push_back(embed(s, piece));
  return out;
}

}  // namespace levitanaka::lie
