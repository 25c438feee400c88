#pragma once

#include <string>
#include <vector>

#include "levitanaka/exact/elimination.hpp"
#include "levitanaka/exact/matrix.hpp"

namespace levitanaka::roots {

enum class Family { A, D, E6 };

std::string family_name(Family f);
Family parse_family(const std::string& s);  // "A", "D", "E6"; throws Malformed

/// Simple roots in the Bourbaki coordinate realisation. Nodes are 0-based internally.
/// A_l lives in Q^{l+1}, D_l in Q^l, E6 in Q^8.
struct RootSystem {
  Family family = Family::A;
  std::size_t rank = 0;
  std::vector<QVector> simple_roots;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>

  std::size_t ambient_dim() const { return simple_roots.empty() ? 0 : simple_roots.front().size(); }
};

/// Throws PreconditionFailed for ranks outside A_{>=1}, D_{>=4}, E6.
RootSystem make_root_system(Family f, std::size_t rank);

/// Positive roots sorted by height, then by coefficient vector.
std::vector<QVector> positive_roots(const RootSystem& rs);
/// Coefficients of a vector in the span of the roots on the simple roots.
QVector simple_coefficients(const RootSystem& rs, const QVector& v);
QVector from_coefficients(const RootSystem& rs, const QVector& c);
std::vector<int> highest_root_coefficients(const RootSystem& rs);

/// s_alpha as a matrix on the ambient space.
QMatrix reflection(const QVector& alpha);

struct WeylElement {
  std::vector<std::size_t> word;  // simple reflections applied first to last
  QMatrix matrix;                 // s_{word.back()} ... s_{word.front()}
};

/// Longest element by descent from a strictly dominant vector to the antidominant chamber.
WeylElement longest_element(const RootSystem& rs);

/// The diagram involution e with w0(alpha_i) = -alpha_{e(i)}, read off from w0.
std::vector<std::size_t> w0_involution(const RootSystem& rs);

/// 2 (alpha, lambda) / (alpha, alpha); throws NonIntegral otherwise.
long coroot_pairing(const QVector& alpha, const QVector& lambda);

std::vector<QVector> fundamental_weights(const RootSystem& rs);

/// Inverse Cartan matrix: omega_j = sum_k inv[j][k] alpha_k.
QMatrix inverse_cartan(const RootSystem& rs);

}  // namespace levitanaka::roots
