#include "levitanaka/prolongation/prolongation.hpp"

#include <algorithm>
#include <string>

namespace levitanaka::prolongation {
namespace {

using lie::GradedLieAlgebra;

// position of each basis index inside `idx`, or -1
std::vector<long> positions(std::size_t dim, const std::vector<std::size_t>& idx) {
  std::vector<long> pos(dim, -1);
  for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<long>(k);
  return pos;
}

[[noreturn]] void precondition(const std::string& why) { throw Error(ErrorCode::PreconditionFailed, why); }

}  // namespace

void check_input(const GradedLieAlgebra& m) {
  for (int d : m.degrees())
    if (d != -1 && d != -2) precondition("input must live in degrees -2 and -1");
  const auto& j = m.complex_structure();
  if (!j) precondition("input has no complex structure on g_-1");
  if (auto c = lie::validate(m); !c.ok) precondition("input is not a graded Lie algebra: " + c.violation);
  const auto x = m.indices_of_degree(-1);
  const auto z = m.indices_of_degree(-2);
  if (x.empty()) precondition("g_-1 is zero");
  // fundamental: brackets of g_-1 span g_-2
  std::vector<QVector> br;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b)
      br.push_back(m.bracket(unit_vector(m.dim(), x[a]), unit_vector(m.dim(), x[b])));
  if (br.empty() ? !z.empty() : rank(QMatrix::from_rows(m.dim(), br)) != z.size())
    precondition("not fundamental: [g_-1, g_-1] != g_-2");
  // nondegenerate: ad(X)|g_-1 = 0 only for X = 0
  QMatrix ad(x.size() * z.size(), x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      for (const auto& e : m.basis_bracket(x[a], x[b]))
        for (std::size_t c = 0; c < z.size(); ++c)
          if (z[c] == e.index) ad(b * z.size() + c, a) = e.coeff;
  if (rank(ad) != x.size()) precondition("degenerate: some X in g_-1 commutes with g_-1");
  // [JX, JY] = [X, Y]
  auto embed = [&](const QVector& v) {
    QVector out(m.dim(), Rational(0));
    for (std::size_t k = 0; k < x.size(); ++k) out[x[k]] = v[k];
    return out;
  };
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      const QVector ja = embed(j->column(a)), jb = embed(j->column(b));
      if (m.bracket(ja, jb) != m.bracket(unit_vector(m.dim(), x[a]), unit_vector(m.dim(), x[b])))
        precondition("J is not compatible with the bracket: [JX, JY] != [X, Y]");
    }
}

std::vector<QVector> degree_solutions(const GradedLieAlgebra& g, int p, Execution exec) {
  const auto xs = g.indices_of_degree(-1);
  const auto zs = g.indices_of_degree(-2);
  const auto l1 = g.indices_of_degree(p - 1);
  const auto l2 = g.indices_of_degree(p - 2);
  const auto l3 = g.indices_of_degree(p - 3);
  const std::size_t n1 = xs.size(), n2 = zs.size();
  const std::size_t off = l1.size() * n1;
  const std::size_t unknowns = off + l2.size() * n2;
  if (unknowns == 0) return {};
  const auto pos2 = positions(g.dim(), l2);
  const auto pos3 = positions(g.dim(), l3);
  const auto posz = positions(g.dim(), zs);
  auto u1 = [&](std::size_t r, std::size_t a) { return r * n1 + a; };
  auto u2 = [&](std::size_t s, std::size_t c) { return off + s * n2 + c; };

  std::vector<QVector> rows;
  auto flush = [&](std::vector<QVector>& block) {
    for (auto& r : block)
      if (!is_zero_vector(r)) rows.push_back(std::move(r));
  };
  // u[x_a, x_b] = [u x_a, x_b] + [x_a, u x_b]
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = a + 1; b < n1; ++b) {
      std::vector<QVector> block(l2.size(), QVector(unknowns, Rational(0)));
      for (const auto& e : g.basis_bracket(xs[a], xs[b]))
        if (posz[e.index] >= 0)
          for (std::size_t t = 0; t < l2.size(); ++t)
            block[t][u2(t, static_cast<std::size_t>(posz[e.index]))] += e.coeff;
      for (std::size_t r = 0; r < l1.size(); ++r) {
        for (const auto& e : g.basis_bracket(l1[r], xs[b]))
          if (pos2[e.index] >= 0) block[static_cast<std::size_t>(pos2[e.index])][u1(r, a)] -= e.coeff;
        for (const auto& e : g.basis_bracket(l1[r], xs[a]))
          if (pos2[e.index] >= 0) block[static_cast<std::size_t>(pos2[e.index])][u1(r, b)] += e.coeff;
      }
      flush(block);
    }
  // 0 = [u x_a, z_c] + [x_a, u z_c]
  if (!l3.empty())
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t c = 0; c < n2; ++c) {
        std::vector<QVector> block(l3.size(), QVector(unknowns, Rational(0)));
        for (std::size_t r = 0; r < l1.size(); ++r)
          for (const auto& e : g.basis_bracket(l1[r], zs[c]))
            if (pos3[e.index] >= 0) block[static_cast<std::size_t>(pos3[e.index])][u1(r, a)] += e.coeff;
        for (std::size_t s = 0; s < l2.size(); ++s)
          for (const auto& e : g.basis_bracket(xs[a], l2[s]))
            if (pos3[e.index] >= 0) block[static_cast<std::size_t>(pos3[e.index])][u2(s, c)] += e.coeff;
        flush(block);
      }
  // degree 0 commutes with J
  if (p == 0) {
    const auto& j = g.complex_structure();
    if (!j) precondition("degree 0 needs the complex structure");
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t c = 0; c < n1; ++c) {
        QVector row(unknowns, Rational(0));
        for (std::size_t k = 0; k < n1; ++k) {
          row[u1(i, k)] += (*j)(k, c);
          row[u1(k, c)] -= (*j)(i, k);
        }
        if (!is_zero_vector(row)) rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) {
    std::vector<QVector> all;
    for (std::size_t k = 0; k < unknowns; ++k) all.push_back(unit_vector(unknowns, k));
    return all;
  }
  const auto e = row_reduce(QMatrix::from_rows(unknowns, rows), exec);
  std::vector<bool> is_pivot(unknowns, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    QVector v(unknowns, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rref(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

QVector action_vector(const GradedLieAlgebra& g, const QVector& x, int p) {
  const auto xs = g.indices_of_degree(-1);
  const auto zs = g.indices_of_degree(-2);
  const auto l1 = g.indices_of_degree(p - 1);
  const auto l2 = g.indices_of_degree(p - 2);
  QVector out;
  out.reserve(l1.size() * xs.size() + l2.size() * zs.size());
  std::vector<QVector> images;
  for (auto a : xs) images.push_back(g.bracket(x, unit_vector(g.dim(), a)));
  for (auto r : l1)
    for (const auto& im : images) out.push_back(im[r]);
  images.clear();
  for (auto c : zs) images.push_back(g.bracket(x, unit_vector(g.dim(), c)));
  for (auto s : l2)
    for (const auto& im : images) out.push_back(im[s]);
  return out;
}

namespace {

struct Layer {
  std::vector<QVector> solutions;
  std::vector<std::size_t> free_columns;  // solution i is 1 there, the others 0
};

Layer make_layer(std::vector<QVector> sols) {
  Layer l;
  for (const auto& s : sols) {
    std::size_t f = 0;
    // last unit entry is the free column (pivot entries come before it or are eliminated)
    for (std::size_t c = 0; c < s.size(); ++c)
      if (s[c] == 1) {
        bool other = false;
        for (const auto& t : sols)
          if (&t != &s && sgn(t[c]) != 0) other = true;
        if (!other) {
          f = c;
          break;
        }
      }
    l.free_columns.push_back(f);
  }
  l.solutions = std::move(sols);
  return l;
}

// Copies g and appends degree-p elements acting on g_- as described by `layer`.
GradedLieAlgebra extend(const GradedLieAlgebra& g, int p, const Layer& layer) {
  auto names = g.names();
  auto degrees = g.degrees();
  const std::size_t base = g.dim();
  for (std::size_t i = 0; i < layer.solutions.size(); ++i) {
    names.push_back("g" + std::to_string(p) + "_" + std::to_string(i + 1));
    degrees.push_back(p);
  }
  GradedLieAlgebra out(names, degrees);
  std::map<std::pair<std::size_t, std::size_t>, lie::SparseVector> entries;
  for (const auto& t : g.structure_constants()) entries[{t.i, t.j}].push_back({t.k, t.c});
  for (auto& [ij, v] : entries) out.set_bracket(ij.first, ij.second, std::move(v));
  out.set_complex_structure(g.complex_structure());

  const auto xs = g.indices_of_degree(-1);
  const auto zs = g.indices_of_degree(-2);
  const auto l1 = g.indices_of_degree(p - 1);
  const auto l2 = g.indices_of_degree(p - 2);
  const std::size_t off = l1.size() * xs.size();
  for (std::size_t i = 0; i < layer.solutions.size(); ++i) {
    const auto& u = layer.solutions[i];
    for (std::size_t a = 0; a < xs.size(); ++a) {
      lie::SparseVector v;
      for (std::size_t r = 0; r < l1.size(); ++r)
        if (sgn(u[r * xs.size() + a]) != 0) v.push_back({l1[r], u[r * xs.size() + a]});
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
      if (!v.empty()) out.set_bracket(base + i, xs[a], std::move(v));
    }
    for (std::size_t c = 0; c < zs.size(); ++c) {
      lie::SparseVector v;
      for (std::size_t s = 0; s < l2.size(); ++s)
        if (sgn(u[off + s * zs.size() + c]) != 0) v.push_back({l2[s], u[off + s * zs.size() + c]});
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
      if (!v.empty()) out.set_bracket(base + i, zs[c], std::move(v));
    }
  }
  return out;
}

}  // namespace

ProlongationResult prolong(const GradedLieAlgebra& m, int max_degree, Execution exec) {
  check_input(m);
  if (max_degree < 0) precondition("max_degree must be nonnegative");
  GradedLieAlgebra g = m;
  std::vector<Layer> layers;
  int p = 0;
  for (;; ++p) {
    auto sols = degree_solutions(g, p, exec);
    if (sols.empty()) break;
    if (p >= max_degree)
      throw Error(ErrorCode::CapReached, "g_" + std::to_string(p) + " has dimension " + std::to_string(sols.size()));
    layers.push_back(make_layer(std::move(sols)));
    g = extend(g, p, layers.back());
  }
  const int top = p;  // g_top = 0

  // brackets of nonnegative elements, by increasing total degree
  for (int s = 0; s <= 2 * (top - 1); ++s)
    for (int a = 0; a <= s / 2; ++a) {
      const int b = s - a;
      if (b >= top) continue;
      const auto ua = g.indices_of_degree(a);
      const auto vb = g.indices_of_degree(b);
      const auto target = g.indices_of_degree(s);
      for (std::size_t i = 0; i < ua.size(); ++i)
        for (std::size_t j = (a == b ? i + 1 : 0); j < vb.size(); ++j) {
          const QVector u = unit_vector(g.dim(), ua[i]);
          const QVector v = unit_vector(g.dim(), vb[j]);
          // action of [u, v] on x: [u, [v, x]] - [v, [u, x]]
          const auto xs = g.indices_of_degree(-1);
          const auto zs = g.indices_of_degree(-2);
          const auto l1 = g.indices_of_degree(s - 1);
          const auto l2 = g.indices_of_degree(s - 2);
          QVector act;
          std::vector<QVector> imgs;
          for (auto x : xs) {
            const QVector xv = unit_vector(g.dim(), x);
            imgs.push_back(g.bracket(u, g.bracket(v, xv)) - g.bracket(v, g.bracket(u, xv)));
          }
          for (auto r : l1)
            for (const auto& im : imgs) act.push_back(im[r]);
          imgs.clear();
          for (auto z : zs) {
            const QVector zv = unit_vector(g.dim(), z);
            imgs.push_back(g.bracket(u, g.bracket(v, zv)) - g.bracket(v, g.bracket(u, zv)));
          }
          for (auto r : l2)
            for (const auto& im : imgs) act.push_back(im[r]);

          QVector value(g.dim(), Rational(0));
          if (s < top) {
            const Layer& layer = layers[static_cast<std::size_t>(s)];
            QVector rebuilt(act.size(), Rational(0));
            for (std::size_t k = 0; k < layer.solutions.size(); ++k) {
              const Rational c = act[layer.free_columns[k]];
              if (sgn(c) == 0) continue;
              value[target[k]] = c;
              rebuilt = rebuilt + c * layer.solutions[k];
            }
            if (rebuilt != act)
              throw Error(ErrorCode::InternalInvariant, "[" + g.names()[ua[i]] + ", " + g.names()[vb[j]] +
                                                            "] does not act as an element of g_" + std::to_string(s));
          } else if (!is_zero_vector(act)) {
            throw Error(ErrorCode::InternalInvariant, "bracket lands in the vanishing degree " + std::to_string(s));
          }
          if (!is_zero_vector(value)) g.set_bracket(ua[i], vb[j], value);
        }
    }

  if (auto c = lie::validate(g, exec); !c.ok)
    throw Error(ErrorCode::InternalInvariant, "assembled prolongation fails validation: " + c.violation);
  ProlongationResult out;
  out.degree_dims = g.degree_dims();
  out.characteristic_element = lie::characteristic_element(g);
  out.terminated_at = top;
  out.algebra = std::move(g);
  return out;
}

lie::Check transitivity_check(const GradedLieAlgebra& g) {
  const auto xs = g.indices_of_degree(-1);
  for (int p = 0; p <= g.max_degree(); ++p) {
    const auto gp = g.indices_of_degree(p);
    if (gp.empty()) continue;
    std::vector<QVector> cols;
    for (auto e : gp) {
      QVector c;
      for (auto x : xs) {
        const auto b = g.bracket(unit_vector(g.dim(), e), unit_vector(g.dim(), x));
        c.insert(c.end(), b.begin(), b.end());
      }
      cols.push_back(std::move(c));
    }
    if (rank(QMatrix::from_rows(cols.front().size(), cols)) != gp.size())
      return lie::Check::fail("transitivity", "some element of g_" + std::to_string(p) + " kills g_-1", {p});
  }
  return lie::Check::pass("transitivity");
}

}  // namespace levitanaka::prolongation
