#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levitanaka/classify/classify.hpp"

namespace levitanaka::involution {

using classify::FactorDescriptor;

/// Strongly orthogonal positive roots whose reflections multiply to w0 (one diagram copy).
struct OrthogonalWord {
  FactorDescriptor descriptor;
  std::vector<QVector> roots;         // ambient coordinates
  std::vector<QVector> coefficients;  // on the simple roots
};

/// Fixed word per family: A e_j - e_{l+2-j}, D e_{2i-1} +- e_{2i}, E6 four stored roots.
/// Checked for strong orthogonality and product = w0; throws WordInvalid.
OrthogonalWord orthogonal_word(const FactorDescriptor& d);

/// Parities are exponents of -1 on the representation of highest weight omega_j.
struct ParityEntry {
  std::size_t weight = 0;  // 0-based j
  int word_parity = 0;     // sum_i <beta_i^vee, omega_j> mod 2
  int target_parity = 0;   // 2 omega_j(E) mod 2
  bool match = false;
};
std::vector<ParityEntry> parity_table(const OrthogonalWord& w, const FactorDescriptor& d);

/// One candidate lift of a degree-reversing Weyl element, described by the parity of its square.
struct Candidate {
  std::string name;               // "w0~", "w0~ h", "I w0~", "gamma_A", "antidiagonal", "w1~"
  std::vector<int> square_parity;  // per fundamental weight
  bool valid = true;              // false e.g. for an antidiagonal of determinant -1
  bool is_gamma = false;          // square_parity == target parities
  bool is_gamma_prime = false;    // square_parity == 0
};

enum class GammaCase { Both, GammaPrimeOnly, GammaOnly, Kind1Gamma, Kind1None };
std::string gamma_case_name(GammaCase c);  // "BOTH", "GAMMA_PRIME_ONLY", ...

struct Certificate {
  FactorDescriptor descriptor;
  int kind = 0;
  OrthogonalWord word;
  std::vector<ParityEntry> parities;
  std::vector<Candidate> candidates;
  GammaCase gamma_case = GammaCase::Both;
  bool half_coroot_identity = false;  // kind 1: E = 1/2 sum of degree-1 coroots in the word
};

/// Throws Admissibility, Kind (not 1 or 2) or NotTildeS (w0 does not reverse E).
Certificate certify(const FactorDescriptor& d);
GammaCase gamma_case(const FactorDescriptor& d);

/// gamma in SL(l+1) for the A-type grading E = diag(1_i, 0, -1_i), 1 <= i < (l+1)/2.
/// Antidiagonal outer blocks, middle block chosen for det = 1. Throws PreconditionFailed.
QMatrix a_type_gamma(std::size_t l, std::size_t i);

/// Sufficient conditions for (S): semisimple, or no kind-1 A^C with l = 1 mod 4,
/// or no kind-2 factor of type D with l even.
bool s_property_sufficient(const std::vector<FactorDescriptor>& kind2, const std::vector<FactorDescriptor>& kind1,
                           bool is_semisimple);

io::Json to_json(const Certificate& c);

}  // namespace levitanaka::involution
