#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "levitanaka/classify/classify.hpp"
#include "levitanaka/lie/graded_lie.hpp"
#include "levitanaka/quadric/quadric.hpp"

namespace levitanaka::corpus {

/// Ground truth attached to a corpus entry. Each value records whether it is stated by the
/// source construction ("stated") or was computed independently ("computed").
struct Expected {
  std::map<int, std::size_t> degree_dims;   // exact
  std::map<int, std::size_t> lower_bounds;  // dim g_p >= bound
  std::vector<classify::FactorDescriptor> kind2, kind1;
  std::optional<bool> has_tilde_s, has_s;
  std::optional<std::size_t> radical_dim;
  std::vector<std::size_t> levi_factor_dims;  // real dims of the simple ideals, sorted descending
  bool has_characteristic_element = true;
  bool transitive = true;
  std::map<std::string, std::string> provenance;  // field -> "stated" | "computed"
};

struct CorpusEntry {
  std::string name;
  std::string summary;
  std::optional<quadric::HermitianFormSystem> quadric;  // prolonged on demand
  std::optional<lie::GradedLieAlgebra> algebra;         // given directly
  Expected expected;
};

/// k = 1 diagonal form diag(signs); each sign is +1 or -1.
CorpusEntry heisenberg(std::size_t n, const std::vector<int>& signs);
/// Signature (p, q): p plus signs then q minus signs.
CorpusEntry heisenberg_signature(std::size_t p, std::size_t q);

quadric::ParametrizedHermitian counterexample_form();
/// n = 7, k = 8 quadric (named "counterexample_n7_k8") with dim g_1 >= 16 > 14 = dim g_-1 and dim g_2 >= 10 > 8 = dim g_-2.
CorpusEntry dimension_counterexample();

/// s + V + W1 + W2 + U1 + U2 + C^2 over s = sl(3, C), as a 70-dimensional real algebra.
CorpusEntry example_algebra_a();

enum class ShiftChoice {
  DoubleDegrees,  // every degree doubled: integral, E_r = 0
  HalfT,          // o(8) + sl(2) grading kept, V shifted by E -> E + T/2 (E_r = T/2)
};
CorpusEntry o8_sl2_example(ShiftChoice shift = ShiftChoice::DoubleDegrees);

/// Every entry with its default parameters, in a fixed order.
std::vector<CorpusEntry> all_entries();
std::vector<std::string> entry_names();
/// Throws PreconditionFailed for an unknown name.
CorpusEntry entry(const std::string& name);

/// The algebra of an entry: given directly or computed by prolongation.
lie::GradedLieAlgebra materialize(const CorpusEntry& e, int max_degree = 6, Execution exec = Execution::Parallel);

/// All expectation checks of an entry against its algebra.
std::vector<lie::Check> run_checks(const CorpusEntry& e, const lie::GradedLieAlgebra& g,
                                   Execution exec = Execution::Parallel);

io::Json expected_to_json(const Expected& x);
/// Entry metadata plus the quadric or algebra in its own format.
io::Json to_json(const CorpusEntry& e);

}  // namespace levitanaka::corpus
