#include "levitanaka/quadric/quadric.hpp"

#include <algorithm>

namespace levitanaka::quadric {

void check_well_formed(const HermitianFormSystem& h) {
  if (h.n == 0 || h.k == 0) throw Error(ErrorCode::Malformed, "n and k must be positive");
  if (h.components.size() != h.k)
    throw Error(ErrorCode::Malformed, "expected " + std::to_string(h.k) + " components");
  for (std::size_t a = 0; a < h.k; ++a) {
    const auto& m = h.components[a];
    if (m.rows() != h.n || m.cols() != h.n) throw Error(ErrorCode::Malformed, "component size");
    for (std::size_t i = 0; i < h.n; ++i)
      for (std::size_t j = 0; j < h.n; ++j)
        if (!(m(i, j) == m(j, i).conj()))
          throw Error(ErrorCode::Malformed, "component " + std::to_string(a) + " is not hermitian at (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

GVector evaluate(const HermitianFormSystem& h, const GVector& z, const GVector& zp) {
  GVector out(h.k);
  for (std::size_t a = 0; a < h.k; ++a) {
    const GVector az = h.components[a].apply(z);
    for (std::size_t i = 0; i < h.n; ++i) out[a] += zp[i].conj() * az[i];
  }
  return out;
}

std::optional<GVector> degeneracy_witness(const HermitianFormSystem& h) {
  GMatrix stacked(h.k * h.n, h.n);
  for (std::size_t a = 0; a < h.k; ++a)
    for (std::size_t i = 0; i < h.n; ++i)
      for (std::size_t j = 0; j < h.n; ++j) stacked(a * h.n + i, j) = h.components[a](i, j);
  const auto ker = kernel(stacked);
  if (ker.empty()) return std::nullopt;
  return ker.front();
}

bool is_nondegenerate(const HermitianFormSystem& h) { return !degeneracy_witness(h).has_value(); }

std::optional<QVector> dependency_witness(const HermitianFormSystem& h) {
  const std::size_t nn = h.n * h.n;
  QMatrix m(2 * nn, h.k);
  for (std::size_t a = 0; a < h.k; ++a)
    for (std::size_t e = 0; e < nn; ++e) {
      m(e, a) = h.components[a](e / h.n, e % h.n).re;
      m(nn + e, a) = h.components[a](e / h.n, e % h.n).im;
    }
  const auto ker = kernel(m);
  if (ker.empty()) return std::nullopt;
  return ker.front();
}

bool is_fundamental(const HermitianFormSystem& h) { return !dependency_witness(h).has_value(); }

lie::GradedLieAlgebra build_m_minus(const HermitianFormSystem& h) {
  check_well_formed(h);
  if (!is_nondegenerate(h)) throw Error(ErrorCode::DegenerateForm, "the components have a common kernel vector");
  if (!is_fundamental(h)) throw Error(ErrorCode::NotFundamental, "the components are linearly dependent over R");
  const std::size_t n = h.n, k = h.k;
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (std::size_t a = 0; a < k; ++a) names.push_back("T" + std::to_string(a + 1)), degrees.push_back(-2);
  for (std::size_t j = 0; j < n; ++j) names.push_back("e" + std::to_string(j + 1)), degrees.push_back(-1);
  for (std::size_t j = 0; j < n; ++j) names.push_back("Je" + std::to_string(j + 1)), degrees.push_back(-1);
  lie::GradedLieAlgebra g(names, degrees);

  // real basis vector r of g_-1 as a vector of C^n
  auto as_complex = [&](std::size_t r) {
    GVector v(n);
    v[r % n] = r < n ? GaussRational(1) : GaussRational::i();
    return v;
  };
  for (std::size_t x = 0; x < 2 * n; ++x)
    for (std::size_t y = x + 1; y < 2 * n; ++y) {
      const GVector val = evaluate(h, as_complex(x), as_complex(y));
      QVector b(g.dim(), Rational(0));
      for (std::size_t a = 0; a < k; ++a) b[a] = val[a].im;
      if (!is_zero_vector(b)) g.set_bracket(k + x, k + y, b);
    }
  QMatrix jm(2 * n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    jm(n + j, j) = 1;
    jm(j, n + j) = -1;
  }
  g.set_complex_structure(jm);
  return g;
}

HermitianFormSystem extract_components(const ParametrizedHermitian& p) {
  HermitianFormSystem h;
  h.n = p.n;
  h.k = 2 * p.parameters.size();
  h.components.assign(h.k, GMatrix(p.n, p.n));
  for (const auto& e : p.entries) {
    if (e.row >= p.n || e.col >= p.n || e.parameter >= p.parameters.size())
      throw Error(ErrorCode::Malformed, "parametrized entry out of range");
    // p = x + iy: p contributes 1 to Re-coefficient and i to Im-coefficient; conj(p) gives 1 and -i
    h.components[2 * e.parameter](e.row, e.col) += GaussRational(1);
    h.components[2 * e.parameter + 1](e.row, e.col) +=
        e.conjugate ? GaussRational(0, -1) : GaussRational::i();
  }
  check_well_formed(h);
  return h;
}

io::Json to_json(const HermitianFormSystem& h) {
  io::Json comps = io::Json::array();
  for (const auto& m : h.components) comps.push_back(io::to_json(m));
  return io::Json{{"n", h.n}, {"k", h.k}, {"components", comps}};
}

HermitianFormSystem from_json(const io::Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("components") ||
      !j.at("n").is_number_unsigned() || !j.at("k").is_number_unsigned() || !j.at("components").is_array())
    throw Error(ErrorCode::Malformed, "hermitian form needs n, k and components");
  HermitianFormSystem h;
  h.n = j.at("n").get<std::size_t>();
  h.k = j.at("k").get<std::size_t>();
  for (const auto& c : j.at("components")) h.components.push_back(io::gauss_matrix_from_json(c, h.n));
  check_well_formed(h);
  return h;
}

io::Json to_json(const ParametrizedHermitian& p) {
  io::Json entries = io::Json::array();
  for (const auto& e : p.entries)
    entries.push_back({{"row", e.row + 1}, {"col", e.col + 1}, {"parameter", p.parameters.at(e.parameter)},
                       {"conjugate", e.conjugate}});
  return io::Json{{"n", p.n}, {"parameters", p.parameters}, {"entries", entries}};
}

ParametrizedHermitian parametrized_from_json(const io::Json& j) {
  auto bad = [](const std::string& why) { throw Error(ErrorCode::Malformed, "parametrized form: " + why); };
  if (!j.is_object() || !j.contains("n") || !j.contains("parameters") || !j.contains("entries") ||
      !j.at("n").is_number_unsigned() || !j.at("parameters").is_array() || !j.at("entries").is_array())
    bad("needs n, parameters and entries");
  ParametrizedHermitian p;
  p.n = j.at("n").get<std::size_t>();
  for (const auto& x : j.at("parameters")) {
    if (!x.is_string()) bad("parameter names are strings");
    p.parameters.push_back(x.get<std::string>());
  }
  for (const auto& e : j.at("entries")) {
    if (!e.is_object() || !e.contains("row") || !e.contains("col") || !e.contains("parameter") ||
        !e.at("row").is_number_unsigned() || !e.at("col").is_number_unsigned() || !e.at("parameter").is_string())
      bad("entry needs row, col and parameter");
    const auto r = e.at("row").get<std::size_t>();
    const auto c = e.at("col").get<std::size_t>();
    if (r < 1 || r > p.n || c < 1 || c > p.n) bad("entry index out of range");
    const auto it = std::find(p.parameters.begin(), p.parameters.end(), e.at("parameter").get<std::string>());
    if (it == p.parameters.end()) bad("unknown parameter");
    const bool conj = e.contains("conjugate") && e.at("conjugate").is_boolean() && e.at("conjugate").get<bool>();
    p.entries.push_back({r - 1, c - 1, static_cast<std::size_t>(it - p.parameters.begin()), conj});
  }
  return p;
}

HermitianFormSystem any_from_json(const io::Json& j) {
  if (j.is_object() && j.contains("parameters")) {
    auto h = extract_components(parametrized_from_json(j));
    check_well_formed(h);
    return h;
  }
  return from_json(j);
}

}  // namespace levitanaka::quadric
