#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levitanaka/exact/matrix.hpp"
#include "levitanaka/io/json_io.hpp"
#include "levitanaka/lie/graded_lie.hpp"

namespace levitanaka::quadric {

/// H(z, z') = (z')^* A_a z for a = 1..k: linear in the first argument.
struct HermitianFormSystem {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<GMatrix> components;
};

/// Throws Malformed unless every component is an n x n hermitian matrix and there are k of them.
void check_well_formed(const HermitianFormSystem& h);

GVector evaluate(const HermitianFormSystem& h, const GVector& z, const GVector& zp);

/// A nonzero z with H(z, .) = 0, or nullopt when the form is nondegenerate.
std::optional<GVector> degeneracy_witness(const HermitianFormSystem& h);
bool is_nondegenerate(const HermitianFormSystem& h);

/// A nonzero real combination of the components that vanishes, or nullopt.
std::optional<QVector> dependency_witness(const HermitianFormSystem& h);
bool is_fundamental(const HermitianFormSystem& h);

/// g_-2 (basis T1..Tk) followed by g_-1 (basis e1..en, Je1..Jen) with [X, Y] = Im H(X, Y).
/// Throws DegenerateForm / NotFundamental.
lie::GradedLieAlgebra build_m_minus(const HermitianFormSystem& h);

/// Hermitian matrix with complex parameters: entry (row, col) is the parameter or its conjugate.
struct ParametrizedHermitian {
  std::size_t n = 0;
  std::vector<std::string> parameters;
  struct Entry {
    std::size_t row, col, parameter;
    bool conjugate;
  };
  std::vector<Entry> entries;
};

/// One component per real coordinate: coefficient of Re p then of Im p, for each parameter p.
HermitianFormSystem extract_components(const ParametrizedHermitian& p);

io::Json to_json(const HermitianFormSystem& h);
HermitianFormSystem from_json(const io::Json& j);

/// {"n", "parameters": [names], "entries": [{"row", "col", "parameter", "conjugate"}]}, 1-based.
io::Json to_json(const ParametrizedHermitian& p);
ParametrizedHermitian parametrized_from_json(const io::Json& j);
/// Either format: a "parameters" key selects the parametrized one.
HermitianFormSystem any_from_json(const io::Json& j);

}  // namespace levitanaka::quadric
