#pragma once
// Brute-force Tanaka prolongation straight from the definition, sharing no code with the
// library's prolongation or quadric modules. Elimination uses the plain field path.
//
// m = g_-2 + g_-1 is rebuilt from the hermitian matrices: g_-1 = C^n as R^{2n} (x, then Jx),
// g_-2 = R^k, [X, Y]_a = Im H_a(X, Y) with H(z, z') = z'^* A z.
// An element u of g_p (p >= 0) is stored by its values u(x) on each basis vector x of g_-1
// and u(t) on each basis vector t of g_-2, in coordinates of g_{p-1} and g_{p-2}.

#include <map>
#include <vector>

#include "levitanaka/exact/elimination.hpp"

namespace oracle {

using levitanaka::GaussRational;
using levitanaka::GMatrix;
using levitanaka::QMatrix;
using levitanaka::QVector;
using levitanaka::Rational;

struct Element {
  std::vector<QVector> on_x;  // values on g_-1 basis
  std::vector<QVector> on_t;  // values on g_-2 basis
};

class BruteProlongation {
 public:
  BruteProlongation(std::size_t n, const std::vector<GMatrix>& forms) : n_(n), k_(forms.size()) {
    // bracket table c[x][y][t]
    c_.assign(2 * n, std::vector<QVector>(2 * n, QVector(k_, Rational(0))));
    for (std::size_t a = 0; a < k_; ++a)
      for (std::size_t x = 0; x < 2 * n; ++x)
        for (std::size_t y = 0; y < 2 * n; ++y) {
          // z = e_{x mod n} times (1 or i)
          const GaussRational zx = x < n ? GaussRational(1) : GaussRational::i();
          const GaussRational zy = y < n ? GaussRational(1) : GaussRational::i();
          const GaussRational h = zy.conj() * forms[a](y % n, x % n) * zx;
          c_[x][y][a] = h.im;
        }
  }

  std::size_t dim_minus(int q) const {
    if (q == -1) return 2 * n_;
    if (q == -2) return k_;
    if (q < -2) return 0;
    return layers_.at(q).size();
  }

  // [u, y] for u in g_q given by coordinates, y a basis vector of g_-1: element of g_{q-1}
  QVector bracket_x(int q, const QVector& u, std::size_t y) const {
    QVector out(dim_minus(q - 1), Rational(0));
    if (q == -1) {
      for (std::size_t x = 0; x < 2 * n_; ++x)
        if (u[x] != 0)
          for (std::size_t t = 0; t < k_; ++t) out[t] += u[x] * c_[x][y][t];
    } else if (q >= 0) {
      for (std::size_t a = 0; a < u.size(); ++a)
        if (u[a] != 0)
          for (std::size_t r = 0; r < out.size(); ++r) out[r] += u[a] * layers_.at(q)[a].on_x[y][r];
    }
    return out;
  }
  // [u, t] for t a basis vector of g_-2: element of g_{q-2}
  QVector bracket_t(int q, const QVector& u, std::size_t t) const {
    QVector out(dim_minus(q - 2), Rational(0));
    if (q >= 0)
      for (std::size_t a = 0; a < u.size(); ++a)
        if (u[a] != 0)
          for (std::size_t r = 0; r < out.size(); ++r) out[r] += u[a] * layers_.at(q)[a].on_t[t][r];
    return out;  // g_-1 and g_-2 bracket g_-2 to zero
  }

  // Degree p of the prolongation; requires degrees 0 .. p-1 computed first.
  std::size_t compute(int p) {
    const std::size_t d1 = dim_minus(p - 1), d2 = dim_minus(p - 2);
    const std::size_t nx = 2 * n_, nu = nx * d1 + k_ * d2;

    // Each equation is linear in u; build it column by column from the unit unknowns.
    auto unit_element = [&](std::size_t col) {
      Element e{std::vector<QVector>(nx, QVector(d1, Rational(0))), std::vector<QVector>(k_, QVector(d2, Rational(0)))};
      if (col < nx * d1) {
        e.on_x[col / d1][col % d1] = 1;
      } else {
        const std::size_t c = col - nx * d1;
        e.on_t[c / d2][c % d2] = 1;
      }
      return e;
    };
    std::vector<std::vector<QVector>> residues(nu);  // residues[col] = list of equation blocks
    for (std::size_t col = 0; col < nu; ++col) {
      const Element u = unit_element(col);
      std::vector<QVector>& out = residues[col];
      // u[x,y] = [ux, y] - [uy, x]
      for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = x + 1; y < nx; ++y) {
          QVector lhs(d2, Rational(0));
          for (std::size_t t = 0; t < k_; ++t)
            if (c_[x][y][t] != 0)
              for (std::size_t r = 0; r < d2; ++r) lhs[r] += c_[x][y][t] * u.on_t[t][r];
          const QVector a = bracket_x(p - 1, u.on_x[x], y);
          const QVector b = bracket_x(p - 1, u.on_x[y], x);
          QVector res(d2);
          for (std::size_t r = 0; r < d2; ++r) res[r] = lhs[r] - a[r] + b[r];
          out.push_back(res);
        }
      // 0 = [ux, t] - [ut, x]
      for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t t = 0; t < k_; ++t) {
          const QVector a = bracket_t(p - 1, u.on_x[x], t);
          const QVector b = bracket_x(p - 2, u.on_t[t], x);
          QVector res(a.size());
          for (std::size_t r = 0; r < a.size(); ++r) res[r] = a[r] - b[r];
          out.push_back(res);
        }
      // 0 = [ut, s] - [us, t]
      for (std::size_t t = 0; t < k_; ++t)
        for (std::size_t s = t + 1; s < k_; ++s) {
          const QVector a = bracket_t(p - 2, u.on_t[t], s);
          const QVector b = bracket_t(p - 2, u.on_t[s], t);
          QVector res(a.size());
          for (std::size_t r = 0; r < a.size(); ++r) res[r] = a[r] - b[r];
          out.push_back(res);
        }
      // degree 0 commutes with J: u(Jx) = J u(x)
      if (p == 0)
        for (std::size_t x = 0; x < nx; ++x) {
          const std::size_t jx = x < n_ ? x + n_ : x - n_;
          const Rational sign = x < n_ ? 1 : -1;  // J e = Je, J Je = -e
          QVector res(nx, Rational(0));
          for (std::size_t r = 0; r < nx; ++r) {
            const std::size_t jr = r < n_ ? r + n_ : r - n_;
            const Rational jsign = r < n_ ? 1 : -1;
            res[r] += sign * u.on_x[jx][r];
            res[jr] -= jsign * u.on_x[x][r];
          }
          out.push_back(res);
        }
    }
    // assemble the coefficient matrix: equations are the concatenated residue blocks
    std::size_t neq = 0;
    for (const auto& b : residues.front()) neq += b.size();
    QMatrix a(neq, nu);
    for (std::size_t col = 0; col < nu; ++col) {
      std::size_t row = 0;
      for (const auto& b : residues[col])
        for (const auto& v : b) a(row++, col) = v;
    }
    const auto e = levitanaka::row_reduce_field(a);
    std::vector<QVector> basis;
    std::vector<bool> pivot(nu, false);
    for (auto c : e.pivots) pivot[c] = true;
    for (std::size_t f = 0; f < nu; ++f) {
      if (pivot[f]) continue;
      QVector v(nu, Rational(0));
      v[f] = 1;
      for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
      basis.push_back(v);
    }
    std::vector<Element> layer;
    for (const auto& v : basis) {
      Element el{std::vector<QVector>(nx, QVector(d1)), std::vector<QVector>(k_, QVector(d2))};
      for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t r = 0; r < d1; ++r) el.on_x[x][r] = v[x * d1 + r];
      for (std::size_t t = 0; t < k_; ++t)
        for (std::size_t r = 0; r < d2; ++r) el.on_t[t][r] = v[nx * d1 + t * d2 + r];
      layer.push_back(el);
    }
    layers_[p] = layer;
    return layer.size();
  }

  // Dimensions of g_-2 .. g_{p-1} where g_p is the first zero layer (or the cap).
  std::map<int, std::size_t> run(int cap = 6) {
    std::map<int, std::size_t> dims{{-2, k_}, {-1, 2 * n_}};
    for (int p = 0; p <= cap; ++p) {
      const auto d = compute(p);
      if (d == 0) break;
      dims[p] = d;
    }
    return dims;
  }

 private:
  std::size_t n_, k_;
  std::vector<std::vector<QVector>> c_;
  std::map<int, std::vector<Element>> layers_;
};

}  // namespace oracle
