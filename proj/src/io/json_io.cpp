#include "levitanaka/io/json_io.hpp"

#include <fstream>
#include <sstream>

namespace levitanaka::io {

namespace {
[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::Malformed, why); }
}  // namespace

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const GaussRational& z) { return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const QMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(to_string(m(i, j)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const GMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) malformed("expected a rational string, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    malformed("bad rational " + j.dump());
  }
}

GaussRational gauss_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("re") || !j.contains("im")) malformed("gaussian rational needs re and im");
    return {rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
  }
  return GaussRational(rational_from_json(j));
}

QVector vector_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an array");
  QVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

QMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("entries") || !j.at("rows").is_number_unsigned())
    malformed("matrix needs rows and entries");
  const auto rows = j.at("rows").get<std::size_t>();
  const auto entries = vector_from_json(j.at("entries"));
  if (rows == 0 || entries.size() % rows != 0) malformed("matrix entry count not divisible by rows");
  const std::size_t cols = entries.size() / rows;
  if (j.contains("cols") && j.at("cols") != cols) malformed("matrix cols mismatch");
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = entries[i * cols + c];
  return m;
}

GMatrix gauss_matrix_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) malformed("expected " + std::to_string(n) + " matrix rows");
  GMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) malformed("matrix row " + std::to_string(i) + " has wrong length");
    for (std::size_t c = 0; c < n; ++c) m(i, c) = gauss_from_json(j[i][c]);
  }
  return m;
}

Json algebra_to_json(const lie::GradedLieAlgebra& g) {
  Json brackets = Json::array();
  for (const auto& t : g.structure_constants()) brackets.push_back(Json{t.i, t.j, t.k, to_string(t.c)});
  Json out{{"basis", g.names()}, {"degrees", g.degrees()}, {"brackets", brackets}};
  if (const auto& j = g.complex_structure())
    out["J"] = Json{{"rows", j->rows()}, {"entries", to_json(*j).at("entries")}};
  else
    out["J"] = nullptr;
  return out;
}

lie::GradedLieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("degrees") || !j.contains("brackets"))
    malformed("algebra needs basis, degrees and brackets");
  std::vector<std::string> names;
  std::vector<int> degrees;
  try {
    names = j.at("basis").get<std::vector<std::string>>();
    degrees = j.at("degrees").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
  if (names.size() != degrees.size()) malformed("basis and degrees differ in length");
  lie::GradedLieAlgebra g(names, degrees);
  std::map<std::pair<std::size_t, std::size_t>, QVector> table;
  for (const auto& b : j.at("brackets")) {
    if (!b.is_array() || b.size() != 4 || !b[0].is_number_unsigned() || !b[1].is_number_unsigned() ||
        !b[2].is_number_unsigned())
      malformed("bracket entries are [i, j, k, c]");
    const auto i = b[0].get<std::size_t>(), jj = b[1].get<std::size_t>(), k = b[2].get<std::size_t>();
    if (i >= jj || jj >= names.size() || k >= names.size()) malformed("bracket indices need i < j < dim");
    auto [it, _] = table.try_emplace({i, jj}, QVector(names.size(), Rational(0)));
    it->second[k] += rational_from_json(b[3]);
  }
  for (const auto& [ij, v] : table) g.set_bracket(ij.first, ij.second, v);
  if (j.contains("J") && !j.at("J").is_null()) g.set_complex_structure(matrix_from_json(j.at("J")));
  return g;
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

}  // namespace levitanaka::io
