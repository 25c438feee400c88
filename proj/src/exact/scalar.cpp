#include "levitanaka/exact/scalar.hpp"

#include "levitanaka/error.hpp"

namespace levitanaka {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NonIntegral: return "NON_INTEGRAL";
    case ErrorCode::NoCharacteristicElement: return "NO_CHARACTERISTIC_ELEMENT";
    case ErrorCode::NotUnique: return "NOT_UNIQUE";
    case ErrorCode::LiftFailed: return "LIFT_FAILED";
    case ErrorCode::NilradicalUnsupported: return "NILRADICAL_UNSUPPORTED";
    case ErrorCode::InternalInvariant: return "INTERNAL_INVARIANT";
    case ErrorCode::DegenerateForm: return "DEGENERATE_FORM";
    case ErrorCode::NotFundamental: return "NOT_FUNDAMENTAL";
    case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::CapReached: return "CAP_REACHED";
    case ErrorCode::Admissibility: return "ADMISSIBILITY";
    case ErrorCode::Kind: return "KIND";
    case ErrorCode::WordInvalid: return "WORD_INVALID";
    case ErrorCode::NotTildeS: return "NOT_TILDE_S";
    case ErrorCode::Malformed: return "MALFORMED";
  }
  return "UNKNOWN";
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::Malformed, "empty rational");
  const auto slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::Malformed, "bad rational '" + text + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (sgn(d) == 0) throw Error(ErrorCode::Malformed, "zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t bit_size(const Rational& q) {
  if (sgn(q) == 0) return 0;
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

std::size_t bit_size(const GaussRational& z) { return bit_size(z.re) + bit_size(z.im); }

}  // namespace levitanaka
