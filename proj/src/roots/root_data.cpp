#include "levitanaka/roots/root_data.hpp"

#include <algorithm>
#include <set>

namespace levitanaka::roots {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E6: return "E6";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "D") return Family::D;
  if (s == "E6" || s == "E") return Family::E6;
  throw Error(ErrorCode::Malformed, "unknown family " + s);
}

namespace {

QVector ambient(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> entries) {
  QVector v(dim, Rational(0));
  for (const auto& [i, x] : entries) v[i] += x;
  return v;
}

}  // namespace

RootSystem make_root_system(Family f, std::size_t rank) {
  RootSystem rs;
  rs.family = f;
  rs.rank = rank;
  switch (f) {
    case Family::A:
      if (rank < 1) throw Error(ErrorCode::PreconditionFailed, "A_l needs l >= 1");
      for (std::size_t i = 0; i < rank; ++i) rs.simple_roots.push_back(ambient(rank + 1, {{i, 1}, {i + 1, -1}}));
      break;
    case Family::D:
      if (rank < 4) throw Error(ErrorCode::PreconditionFailed, "D_l needs l >= 4");
      for (std::size_t i = 0; i + 1 < rank; ++i) rs.simple_roots.push_back(ambient(rank, {{i, 1}, {i + 1, -1}}));
      rs.simple_roots.push_back(ambient(rank, {{rank - 2, 1}, {rank - 1, 1}}));
      break;
    case Family::E6: {
      if (rank != 6) throw Error(ErrorCode::PreconditionFailed, "E6 has rank 6");
      const Rational h(1, 2);
      QVector a1(8, -h);
      a1[0] = h;
      a1[7] = h;
      rs.simple_roots.push_back(a1);
      rs.simple_roots.push_back(ambient(8, {{0, 1}, {1, 1}}));
      for (std::size_t k = 1; k <= 4; ++k) rs.simple_roots.push_back(ambient(8, {{k, 1}, {k - 1, -1}}));
      break;
    }
  }
  rs.cartan.assign(rank, std::vector<int>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      rs.cartan[i][j] = static_cast<int>(coroot_pairing(rs.simple_roots[i], rs.simple_roots[j]));
  return rs;
}

QVector from_coefficients(const RootSystem& rs, const QVector& c) {
  QVector v(rs.ambient_dim(), Rational(0));
  for (std::size_t i = 0; i < rs.rank; ++i)
    if (sgn(c[i]) != 0) v = v + c[i] * rs.simple_roots[i];
  return v;
}

QVector simple_coefficients(const RootSystem& rs, const QVector& v) {
  const auto m = QMatrix::from_columns(rs.ambient_dim(), rs.simple_roots);
  auto c = solve(m, v);
  if (!c) throw Error(ErrorCode::PreconditionFailed, "vector is not in the span of the roots");
  return *c;
}

std::vector<QVector> positive_roots(const RootSystem& rs) {
  // closure in simple-root coefficients under the simple reflections
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> queue;
  for (std::size_t i = 0; i < rs.rank; ++i) {
    std::vector<long> c(rs.rank, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto c = queue[q];
    for (std::size_t i = 0; i < rs.rank; ++i) {
      long pair = 0;
      for (std::size_t j = 0; j < rs.rank; ++j) pair += c[j] * rs.cartan[i][j];
      auto d = c;
      d[i] -= pair;
      if (std::all_of(d.begin(), d.end(), [](long x) { return x >= 0; }) && seen.insert(d).second)
        queue.push_back(d);
    }
  }
  std::vector<std::vector<long>> sorted(seen.begin(), seen.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    long ha = 0, hb = 0;
    for (auto x : a) ha += x;
    for (auto x : b) hb += x;
    return ha != hb ? ha < hb : a > b;
  });
  std::vector<QVector> out;
  for (const auto& c : sorted) {
    QVector q;
    for (auto x : c) q.emplace_back(x);
    out.push_back(from_coefficients(rs, q));
  }
  return out;
}

std::vector<int> highest_root_coefficients(const RootSystem& rs) {
  const auto roots = positive_roots(rs);
  const auto c = simple_coefficients(rs, roots.back());
  std::vector<int> out;
  for (const auto& x : c) out.push_back(static_cast<int>(x.get_num().get_si()));
  // the highest root dominates every positive root coefficientwise
  for (const auto& r : roots) {
    const auto rc = simple_coefficients(rs, r);
    for (std::size_t i = 0; i < rs.rank; ++i)
      if (rc[i] > out[i]) throw Error(ErrorCode::InternalInvariant, "no unique highest root");
  }
  return out;
}

QMatrix reflection(const QVector& alpha) {
  const std::size_t n = alpha.size();
  const Rational len = dot(alpha, alpha);
  QMatrix s = QMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(alpha[i]) != 0 && sgn(alpha[j]) != 0) s(i, j) -= 2 * alpha[i] * alpha[j] / len;
  return s;
}

long coroot_pairing(const QVector& alpha, const QVector& lambda) {
  const Rational v = 2 * dot(alpha, lambda) / dot(alpha, alpha);
  if (v.get_den() != 1) throw Error(ErrorCode::NonIntegral, "pairing " + to_string(v) + " is not an integer");
  return v.get_num().get_si();
}

QMatrix inverse_cartan(const RootSystem& rs) {
  QMatrix c(rs.rank, rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i)
    for (std::size_t j = 0; j < rs.rank; ++j) c(i, j) = rs.cartan[i][j];
  auto inv = inverse(c);
  if (!inv) throw Error(ErrorCode::InternalInvariant, "singular Cartan matrix");
  return *inv;
}

std::vector<QVector> fundamental_weights(const RootSystem& rs) {
  // <alpha_i^vee, omega_j> = delta_ij with omega_j = sum_k M_jk alpha_k  =>  M = (C^T)^{-1}
  const QMatrix m = inverse_cartan(rs).transpose();
  std::vector<QVector> out;
  for (std::size_t j = 0; j < rs.rank; ++j) {
    QVector c(rs.rank);
    for (std::size_t k = 0; k < rs.rank; ++k) c[k] = m(j, k);
    out.push_back(from_coefficients(rs, c));
  }
  return out;
}

WeylElement longest_element(const RootSystem& rs) {
  QVector v(rs.ambient_dim(), Rational(0));
  for (const auto& w : fundamental_weights(rs)) v = v + w;
  WeylElement out;
  out.matrix = QMatrix::identity(rs.ambient_dim());
  while (true) {
    std::size_t i = 0;
    while (i < rs.rank && coroot_pairing(rs.simple_roots[i], v) <= 0) ++i;
    if (i == rs.rank) break;
    const QMatrix s = reflection(rs.simple_roots[i]);
    v = s.apply(v);
    out.matrix = s * out.matrix;
    out.word.push_back(i);
  }
  return out;
}

std::vector<std::size_t> w0_involution(const RootSystem& rs) {
  const auto w0 = longest_element(rs);
  std::vector<std::size_t> eps(rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i) {
    const QVector img = w0.matrix.apply(rs.simple_roots[i]);
    std::size_t found = rs.rank;
    for (std::size_t j = 0; j < rs.rank; ++j)
      if (img == Rational(-1) * rs.simple_roots[j]) found = j;
    if (found == rs.rank) throw Error(ErrorCode::InternalInvariant, "w0 does not permute the negative simple roots");
    eps[i] = found;
  }
  return eps;
}

}  // namespace levitanaka::roots
