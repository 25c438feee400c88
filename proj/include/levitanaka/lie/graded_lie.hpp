#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "levitanaka/exact/elimination.hpp"
#include "levitanaka/exact/matrix.hpp"

namespace levitanaka::lie {

struct SparseEntry {
  std::size_t index;
  Rational coeff;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};
using SparseVector = std::vector<SparseEntry>;  // sorted by index, no zero coefficients

SparseVector to_sparse(const QVector& v);

/// Finite-dimensional real graded Lie algebra given by structure constants on a named,
/// degree-homogeneous basis, with an optional complex structure on the degree -1 block.
/// Immutable once built (all mutators are used by builders only).
class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;
  GradedLieAlgebra(std::vector<std::string> names, std::vector<int> degrees);

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int degree(std::size_t i) const { return degrees_.at(i); }
  int min_degree() const;
  int max_degree() const;

  /// Basis indices of degree p, ascending.
  std::vector<std::size_t> indices_of_degree(int p) const;
  std::size_t dim_of_degree(int p) const { return indices_of_degree(p).size(); }
  std::map<int, std::size_t> degree_dims() const;

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value (i != j).
  void set_bracket(std::size_t i, std::size_t j, const QVector& value);
  void set_bracket(std::size_t i, std::size_t j, SparseVector value);

  /// [e_i, e_j] as a sparse vector.
  const SparseVector& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  QVector bracket(const QVector& x, const QVector& y) const;
  /// [e_i, y]
  QVector bracket_with_basis(std::size_t i, const QVector& y) const;

  /// Matrix of ad(x) in the basis.
  QMatrix ad(const QVector& x) const;

  /// Complex structure on the span of the degree -1 basis vectors (in their order).
  const std::optional<QMatrix>& complex_structure() const noexcept { return j_; }
  void set_complex_structure(std::optional<QMatrix> j) { j_ = std::move(j); }

  /// Non-zero structure constants [e_i, e_j] = sum c e_k with i < j.
  struct Triple {
    std::size_t i, j, k;
    Rational c;
  };
  std::vector<Triple> structure_constants() const;

  friend bool operator==(const GradedLieAlgebra& a, const GradedLieAlgebra& b);

 private:
  void check_index(std::size_t i) const;

  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<SparseVector> table_;
  std::optional<QMatrix> j_;
};

/// Outcome of a structural check: either a certificate or the first violation found.
struct Check {
  bool ok = true;
  std::string name;
  std::string violation;               // empty when ok
  std::vector<long long> witness;       // indices / degrees pinpointing the violation

  static Check pass(std::string name) { return {true, std::move(name), {}, {}}; }
  static Check fail(std::string name, std::string why, std::vector<long long> witness) {
    return {false, std::move(name), std::move(why), std::move(witness)};
  }
};

/// Antisymmetry, Jacobi on all basis triples, degree additivity and J^2 = -Id.
Check validate(const GradedLieAlgebra& g, Execution exec = Execution::Parallel);

/// Jacobi identity alone; returns the lexicographically first violated triple.
Check check_jacobi(const GradedLieAlgebra& g, Execution exec = Execution::Parallel);

/// Subspace of a graded Lie algebra, stored as a reduced echelon basis so that
/// coordinates of a member are read off at the pivot columns.
class Subspace {
 public:
  Subspace() = default;
  /// Span of arbitrary vectors.
  static Subspace span(const GradedLieAlgebra& g, const std::vector<QVector>& vectors);
  /// Span of vectors known to span a graded subspace; the basis is homogeneous, sorted by
  /// degree and then pivot. Throws InternalInvariant if the span is not graded.
  static Subspace graded_span(const GradedLieAlgebra& g, const std::vector<QVector>& vectors);
  static Subspace whole(const GradedLieAlgebra& g);
  static Subspace zero(const GradedLieAlgebra& g);

  const GradedLieAlgebra& parent() const { return *parent_; }
  const std::vector<QVector>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates in basis(); nullopt when v is not a member.
  std::optional<QVector> coordinates(const QVector& v) const;

  /// Degree of each basis vector (only meaningful for graded spans).
  std::vector<int> basis_degrees() const;
  std::size_t dim_of_degree(int p) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.dim() == b.dim() && a.contains(b); }

 private:
  const GradedLieAlgebra* parent_ = nullptr;
  std::vector<QVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// span{[a, b] : a in A, b in B} (graded inputs give a graded result).
Subspace bracket_span(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
bool is_subalgebra(const Subspace& s);
bool is_ideal(const Subspace& s);

/// Degree of a homogeneous vector; nullopt for zero or inhomogeneous vectors.
std::optional<int> homogeneous_degree(const GradedLieAlgebra& g, const QVector& v);

/// The subalgebra s with its own structure constants in the basis of s (names "s0", ...).
GradedLieAlgebra restrict_to(const Subspace& s, const std::string& prefix = "s");

QMatrix killing_form(const GradedLieAlgebra& g, Execution exec = Execution::Parallel);
bool killing_nondegenerate(const GradedLieAlgebra& g);

/// Solvable radical as the Killing-orthogonal of [g, g], computed degree by degree.
Subspace radical(const GradedLieAlgebra& g);

struct CentralSeries {
  std::vector<Subspace> terms;  // strictly decreasing
  bool nilpotent = false;       // last term is zero
};
/// n^1 = h, n^{k+1} = [n^k, h], until stabilisation.
CentralSeries lower_central_series(const Subspace& h);
std::vector<Subspace> derived_series(const Subspace& h);

/// Largest nilpotent ideal, via the trace-form candidate {x in r : tr(ad x ad y) = 0, y in r}
/// which is then verified to be an ideal acting nilpotently on g.
Subspace nilradical(const GradedLieAlgebra& g);

/// The unique E in g_0 with [E, x] = deg(x) x. Throws NoCharacteristicElement / NotUnique.
QVector characteristic_element(const GradedLieAlgebra& g);

struct LeviDecomposition {
  Subspace s;
  Subspace r;
  std::optional<QVector> e_s;  // present when g has a characteristic element
  std::optional<QVector> e_r;
};

/// Graded Levi decomposition by degree-preserving lifting along the derived series of the
/// radical. Throws LiftFailed if a correction system is inconsistent.
LeviDecomposition levi_decomposition(const GradedLieAlgebra& g);

/// Independent re-check of a Levi decomposition: g = s + r directly, s closed, Killing
/// form of s nondegenerate, r equal to the radical, E = E_s + E_r.
Check verify_levi(const GradedLieAlgebra& g, const LeviDecomposition& d);

/// Simple ideals of a semisimple subalgebra s, as subspaces of the parent algebra.
std::vector<Subspace> simple_ideals(const Subspace& s);

}  // namespace levitanaka::lie
