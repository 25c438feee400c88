#pragma once

#include <string>
#include <vector>

#include "levitanaka/io/json_io.hpp"
#include "levitanaka/roots/root_data.hpp"

namespace levitanaka::classify {

using roots::Family;

enum class Form { AIII, DIb, DIIIb, EII, EIII, Complex };

/// One simple graded factor. Nodes are 0-based; for Complex, nodes rank..2*rank-1 are the
/// primed copy and epsilon swaps node i with node rank + i.
struct FactorDescriptor {
  Family family = Family::A;
  std::size_t rank = 0;
  Form form = Form::Complex;
  std::size_t p = 0, q = 0;               // A III/IV(p, q), p <= q, p + q = rank + 1
  std::vector<std::size_t> compact_nodes;  // B-bullet
  std::vector<std::size_t> epsilon;        // involution of the node set
  std::vector<std::size_t> phi;            // sorted

  std::size_t node_count() const { return form == Form::Complex ? 2 * rank : rank; }
  bool is_complex() const { return form == Form::Complex; }
};

/// Fills compact nodes and epsilon from the Satake tables. `p` is used for A III/IV only.
/// Throws PreconditionFailed for combinations that do not exist (e.g. D IIIb with even rank).
FactorDescriptor make_descriptor(Family f, std::size_t rank, Form form, std::vector<std::size_t> phi,
                                 std::size_t p = 0);

std::string form_name(const FactorDescriptor& d);  // "III(p,q)", "Ib", "IIIb", "II", "III", "COMPLEX"
std::string node_name(const FactorDescriptor& d, std::size_t node);  // "alpha3", "alpha3'"
std::string describe(const FactorDescriptor& d);   // "A5 III(2,4) {alpha2}"

io::Json to_json(const FactorDescriptor& d);
/// {"family", "rank", "form", "phi": [node names], "complex": bool}; throws Malformed.
FactorDescriptor from_json(const io::Json& j);

/// Strict conditions (1)-(4). Complex singletons in the unprimed copy with highest-root
/// coefficient 1 are also admitted (kind 1), where condition (3) cannot hold.
bool phi_is_admissible(const FactorDescriptor& d);

struct GradingData {
  QVector e_coords;  // alpha(E) per node
  int kind = 0;
};
GradingData grading_data(const FactorDescriptor& d);  // throws Admissibility

/// E as a vector of the ambient space of one diagram copy (both copies carry the same E).
QVector grading_element(const FactorDescriptor& d);

bool w0_reverses_E(const FactorDescriptor& d);  // throws Admissibility

/// Hardcoded lists: kind 2 from the semisimple theorem, kind 1 from the general theorem.
bool in_kind2_theorem_list(const FactorDescriptor& d);
bool in_kind1_theorem_list(const FactorDescriptor& d);

/// Throws Admissibility / Kind.
bool tilde_s_semisimple(const std::vector<FactorDescriptor>& factors);
bool tilde_s_general(const std::vector<FactorDescriptor>& kind2, const std::vector<FactorDescriptor>& kind1,
                     bool e_r_is_zero);

/// Every Satake form up to max_rank: A (rank >= 1), D (rank >= 4), E6 (when max_rank >= 6).
std::vector<FactorDescriptor> all_forms(std::size_t max_rank);

struct TableRow {
  FactorDescriptor descriptor;
  int kind = 0;
  bool admissible = true;
  bool w0_reverses_e = false;
  bool in_theorem_list = false;
};

/// All admissible descriptors of kind 1 or 2, in a deterministic order.
std::vector<TableRow> regenerate_tables(std::size_t max_rank, Execution exec = Execution::Parallel);
io::Json tables_to_json(const std::vector<TableRow>& rows);

/// The six items of the kind-2 classification, generated directly from their statements.
std::vector<FactorDescriptor> kind2_proposition_list(std::size_t max_rank);

}  // namespace levitanaka::classify
