#pragma once

#include <map>
#include <vector>

#include "levitanaka/lie/graded_lie.hpp"

namespace levitanaka::prolongation {

struct ProlongationResult {
  lie::GradedLieAlgebra algebra;          // degrees -2 .. terminated_at - 1
  std::map<int, std::size_t> degree_dims;
  QVector characteristic_element;
  int terminated_at = 0;                  // first p >= 0 with g_p = 0
};

/// Maximal pseudocomplex prolongation of m = g_-2 + g_-1 with complex structure J on g_-1.
/// Throws PreconditionFailed for unsuitable input and CapReached if g_{max_degree} != 0.
ProlongationResult prolong(const lie::GradedLieAlgebra& m, int max_degree = 6,
                           Execution exec = Execution::Parallel);

/// Solutions of the degree-p derivation equations computed from the brackets of g between
/// g_- and g_{p-1}, g_{p-2}. A solution u is laid out as the matrix of u on g_-1 (rows indexed
/// by the basis of g_{p-1}, row-major) followed by the matrix of u on g_-2 (rows g_{p-2}).
/// For p = 0 the condition of commuting with J is added.
std::vector<QVector> degree_solutions(const lie::GradedLieAlgebra& g, int p, Execution exec = Execution::Parallel);

/// The action of a degree-p element on g_- in the layout of degree_solutions.
QVector action_vector(const lie::GradedLieAlgebra& g, const QVector& x, int p);

/// For every p >= 0, x -> ad(x)|g_-1 is injective on g_p.
lie::Check transitivity_check(const lie::GradedLieAlgebra& g);

/// Throws PreconditionFailed with the reason when m is not a fundamental nondegenerate
/// algebra of kind 2 with a compatible complex structure.
void check_input(const lie::GradedLieAlgebra& m);

}  // namespace levitanaka::prolongation
