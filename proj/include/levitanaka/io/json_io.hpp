#pragma once

#include <string>

#include "json.hpp"
#include "levitanaka/exact/matrix.hpp"
#include "levitanaka/lie/graded_lie.hpp"

namespace levitanaka::io {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const GaussRational& z);
Json to_json(const QVector& v);
Json to_json(const QMatrix& m);
Json to_json(const GMatrix& m);

/// All readers throw Error(Malformed) on bad shape or bad numbers.
Rational rational_from_json(const Json& j);
GaussRational gauss_from_json(const Json& j);
QVector vector_from_json(const Json& j);
QMatrix matrix_from_json(const Json& j);  // {"rows": r, "entries": [...]} row-major
GMatrix gauss_matrix_from_json(const Json& j, std::size_t n);  // list of n rows

/// {"basis", "degrees", "brackets": [[i, j, k, "c"]...] with i < j, "J": {...} | null}
Json algebra_to_json(const lie::GradedLieAlgebra& g);
lie::GradedLieAlgebra algebra_from_json(const Json& j);

/// Canonical text: sorted keys, compact unless pretty.
std::string dump(const Json& j, bool pretty = false);

Json read_file(const std::string& path);

}  // namespace levitanaka::io
