#include "levitanaka/involution/involution.hpp"

#include <algorithm>

namespace levitanaka::involution {
namespace {

using roots::Family;

QVector coroot(const QVector& beta) { return Rational(2) / dot(beta, beta) * beta; }

bool is_root(const std::vector<QVector>& positive, const QVector& v) {
  const QVector neg = Rational(-1) * v;
  return std::any_of(positive.begin(), positive.end(), [&](const QVector& r) { return r == v || r == neg; });
}

std::vector<int> add_parity(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = (a[j] + b[j]) % 2;
  return a;
}

std::vector<int> parities_of(const std::vector<QVector>& betas, const std::vector<QVector>& weights) {
  std::vector<int> out;
  for (const auto& w : weights) {
    long s = 0;
    for (const auto& b : betas) s += roots::coroot_pairing(b, w);
    out.push_back(static_cast<int>(((s % 2) + 2) % 2));
  }
  return out;
}

// sq = c Id; c = -1 acts on the j-th fundamental representation of SL(n) by (-1)^j
std::vector<int> scalar_square_parity(const QMatrix& sq, std::size_t rank) {
  const auto n = sq.rows();
  for (const Rational& c : {Rational(1), Rational(-1)}) {
    if (sq == c * QMatrix::identity(n)) {
      std::vector<int> out(rank, 0);
      if (c == -1)
        for (std::size_t j = 0; j < rank; ++j) out[j] = static_cast<int>((j + 1) % 2);
      return out;
    }
  }
  throw Error(ErrorCode::InternalInvariant, "square of the A-type element is not +-Id");
}

Rational determinant(QMatrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

QMatrix antidiagonal(std::size_t n) {
  QMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, n - 1 - i) = 1;
  return a;
}

Candidate make_candidate(std::string name, std::vector<int> square, const std::vector<int>& target, bool valid = true) {
  Candidate c{std::move(name), std::move(square), valid, false, false};
  c.is_gamma = valid && c.square_parity == target;
  c.is_gamma_prime = valid && std::all_of(c.square_parity.begin(), c.square_parity.end(), [](int x) { return x == 0; });
  return c;
}

// smaller node of the (i, l+1-i) pair carried by an A-type kind-2 grading
std::size_t a_type_node(const FactorDescriptor& d) {
  std::size_t i = d.phi.front() % d.rank + 1;
  return std::min(i, d.rank + 1 - i);
}

}  // namespace

OrthogonalWord orthogonal_word(const FactorDescriptor& d) {
  const auto rs = roots::make_root_system(d.family, d.rank);
  const std::size_t l = d.rank;
  const std::size_t n = rs.ambient_dim();
  OrthogonalWord w;
  w.descriptor = d;
  auto e = [&](std::size_t k) { return unit_vector(n, k - 1); };
  switch (d.family) {
    case Family::A:
      for (std::size_t j = 1; 2 * j <= l + 1; ++j) w.roots.push_back(e(j) - e(l + 2 - j));
      break;
    case Family::D:
      for (std::size_t i = 1; 2 * i <= l; ++i) {
        w.roots.push_back(e(2 * i - 1) + e(2 * i));
        w.roots.push_back(e(2 * i - 1) - e(2 * i));
      }
      break;
    case Family::E6:
      for (const std::vector<int>& c : std::vector<std::vector<int>>{
               {1, 0, 1, 1, 1, 1}, {1, 2, 2, 3, 2, 1}, {0, 0, 0, 1, 0, 0}, {0, 0, 1, 1, 1, 0}}) {
        QVector q;
        for (int x : c) q.emplace_back(x);
        w.roots.push_back(roots::from_coefficients(rs, q));
      }
      break;
  }
  for (const auto& b : w.roots) w.coefficients.push_back(roots::simple_coefficients(rs, b));

  const auto positive = roots::positive_roots(rs);
  for (std::size_t a = 0; a < w.roots.size(); ++a) {
    if (std::find(positive.begin(), positive.end(), w.roots[a]) == positive.end())
      throw Error(ErrorCode::WordInvalid, "word entry is not a positive root");
    for (std::size_t b = a + 1; b < w.roots.size(); ++b)
      if (w.roots[a] == w.roots[b] || is_root(positive, w.roots[a] + w.roots[b]) ||
          is_root(positive, w.roots[a] - w.roots[b]))
        throw Error(ErrorCode::WordInvalid, "word roots are not strongly orthogonal");
  }
  QMatrix product = QMatrix::identity(n);
  for (const auto& b : w.roots) product = product * roots::reflection(b);
  if (product != roots::longest_element(rs).matrix)
    throw Error(ErrorCode::WordInvalid, "product of reflections differs from w0");
  return w;
}

std::vector<ParityEntry> parity_table(const OrthogonalWord& w, const FactorDescriptor& d) {
  const auto rs = roots::make_root_system(d.family, d.rank);
  const auto weights = roots::fundamental_weights(rs);
  const QVector e = classify::grading_element(d);
  const auto word = parities_of(w.roots, weights);
  std::vector<ParityEntry> out;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const Rational twice = 2 * dot(weights[j], e);
    if (twice.get_den() != 1) throw Error(ErrorCode::NonIntegral, "2 omega(E) is not an integer");
    const int target = mpz_odd_p(twice.get_num_mpz_t()) ? 1 : 0;
    out.push_back({j, word[j], target, word[j] == target});
  }
  return out;
}

std::string gamma_case_name(GammaCase c) {
  switch (c) {
    case GammaCase::Both: return "BOTH";
    case GammaCase::GammaPrimeOnly: return "GAMMA_PRIME_ONLY";
    case GammaCase::GammaOnly: return "GAMMA_ONLY";
    case GammaCase::Kind1Gamma: return "KIND1_GAMMA";
    case GammaCase::Kind1None: return "KIND1_NONE";
  }
  return "?";
}

QMatrix a_type_gamma(std::size_t l, std::size_t i) {
  if (l < 1 || i < 1 || 2 * i >= l + 1)
    throw Error(ErrorCode::PreconditionFailed, "a_type_gamma needs 1 <= i < (l+1)/2");
  const std::size_t n = l + 1;
  const std::size_t m = l / 2;
  QMatrix g(n, n);
  for (std::size_t k = 0; k < m; ++k) {
    g(k, n - 1 - k) = 1;
    g(n - 1 - k, k) = 1;
  }
  switch (l % 4) {
    case 0: g(m, m) = 1; break;
    case 2: g(m, m) = -1; break;
    case 1: g(m, m) = 1; g(m + 1, m + 1) = 1; break;
    case 3: g(m, m + 1) = 1; g(m + 1, m) = 1; break;
  }
  QMatrix e(n, n);
  for (std::size_t k = 0; k < i; ++k) {
    e(k, k) = 1;
    e(n - 1 - k, n - 1 - k) = -1;
  }
  const auto inv = inverse(g);
  if (determinant(g) != 1 || !inv || g * e * *inv != Rational(-1) * e || g * g * g * g != QMatrix::identity(n))
    throw Error(ErrorCode::InternalInvariant, "A-type gamma fails its defining identities");
  return g;
}

Certificate certify(const FactorDescriptor& d) {
  Certificate c;
  c.descriptor = d;
  c.kind = classify::grading_data(d).kind;
  if (c.kind != 1 && c.kind != 2) throw Error(ErrorCode::Kind, "gamma certificates exist for kind 1 or 2 only");
  if (!classify::w0_reverses_E(d)) throw Error(ErrorCode::NotTildeS, classify::describe(d) + ": w0 does not reverse E");
  c.word = orthogonal_word(d);
  c.parities = parity_table(c.word, d);

  const auto rs = roots::make_root_system(d.family, d.rank);
  const auto weights = roots::fundamental_weights(rs);
  const std::size_t l = d.rank;
  std::vector<int> target, word;
  for (const auto& p : c.parities) {
    target.push_back(p.target_parity);
    word.push_back(p.word_parity);
  }
  auto spin_sign = [&](int s) {
    std::vector<int> v(l, 0);
    v[l - 2] = v[l - 1] = s % 2;
    return v;
  };

  if (c.kind == 1) {
    const QVector e = classify::grading_element(d);
    std::vector<QVector> degree_one;
    for (const auto& b : c.word.roots)
      if (dot(b, e) == 1) degree_one.push_back(b);
    QVector half(e.size(), Rational(0));
    for (const auto& b : degree_one) half = half + Rational(1, 2) * coroot(b);
    QMatrix w1 = QMatrix::identity(e.size());
    for (const auto& b : degree_one) w1 = w1 * roots::reflection(b);
    c.half_coroot_identity = half == e && w1.apply(e) == Rational(-1) * e;
    c.candidates.push_back(make_candidate("w1~", parities_of(degree_one, weights), target));
  }

  switch (d.family) {
    case Family::A:
      if (c.kind == 2) {
        const QMatrix g = a_type_gamma(l, a_type_node(d));
        c.candidates.push_back(make_candidate("gamma_A", scalar_square_parity(g * g, l), target));
      } else {
        const QMatrix a = antidiagonal(l + 1);
        c.candidates.push_back(
            make_candidate("antidiagonal", scalar_square_parity(a * a, l), target, determinant(a) == 1));
      }
      break;
    case Family::D: {
      c.candidates.push_back(make_candidate("w0~", word, target));
      if (l % 2 == 1) {
        // h: image of i Id in the SL(4) on {alpha_{l-2}, alpha_{l-1}, alpha_l}; h^2 pairs with
        // alpha_{l-1}^vee + alpha_l^vee
        std::vector<int> h2;
        for (const auto& w : weights)
          h2.push_back(static_cast<int>(
              ((roots::coroot_pairing(rs.simple_roots[l - 2], w) + roots::coroot_pairing(rs.simple_roots[l - 1], w)) %
                   2 +
               2) %
              2));
        c.candidates.push_back(make_candidate("w0~ h", add_parity(word, h2), target));
      } else {
        // I: spin lift of -Id; I^2 = (-1)^{l/2} on the half-spin representations
        c.candidates.push_back(make_candidate("I w0~", add_parity(word, spin_sign(static_cast<int>(l / 2))), target));
      }
      break;
    }
    case Family::E6: c.candidates.push_back(make_candidate("w0~", word, target)); break;
  }

  auto any = [&](bool Candidate::*field, std::size_t from) {
    return std::any_of(c.candidates.begin() + static_cast<std::ptrdiff_t>(from), c.candidates.end(),
                       [&](const Candidate& x) { return x.*field; });
  };
  if (c.kind == 1) {
    if (!c.half_coroot_identity || !c.candidates.front().is_gamma)
      throw Error(ErrorCode::InternalInvariant, "kind-1 gamma certificate failed");
    c.gamma_case = any(&Candidate::is_gamma_prime, 1) ? GammaCase::Kind1Gamma : GammaCase::Kind1None;
  } else {
    const bool g = any(&Candidate::is_gamma, 0);
    const bool gp = any(&Candidate::is_gamma_prime, 0);
    if (!g && !gp) throw Error(ErrorCode::InternalInvariant, "no degree-reversing element of order 2 or 4");
    c.gamma_case = g && gp ? GammaCase::Both : gp ? GammaCase::GammaPrimeOnly : GammaCase::GammaOnly;
  }
  return c;
}

GammaCase gamma_case(const FactorDescriptor& d) { return certify(d).gamma_case; }

bool s_property_sufficient(const std::vector<FactorDescriptor>& kind2, const std::vector<FactorDescriptor>& kind1,
                           bool is_semisimple) {
  const bool no_a_1mod4 = std::none_of(kind1.begin(), kind1.end(), [](const FactorDescriptor& d) {
    return d.family == Family::A && d.is_complex() && d.rank % 4 == 1;
  });
  const bool no_d_even = std::none_of(kind2.begin(), kind2.end(), [](const FactorDescriptor& d) {
    return d.family == Family::D && d.rank % 2 == 0;
  });
  return is_semisimple || no_a_1mod4 || no_d_even;
}

io::Json to_json(const Certificate& c) {
  io::Json word = io::Json::array();
  for (const auto& q : c.word.coefficients) word.push_back(io::to_json(q));
  io::Json parities = io::Json::array();
  for (const auto& p : c.parities)
    parities.push_back({{"weight", "omega" + std::to_string(p.weight + 1)},
                        {"word_parity", p.word_parity},
                        {"target_parity", p.target_parity},
                        {"match", p.match}});
  io::Json cands = io::Json::array();
  for (const auto& x : c.candidates)
    cands.push_back({{"name", x.name},
                     {"square_parity", x.square_parity},
                     {"valid", x.valid},
                     {"gamma", x.is_gamma},
                     {"gamma_prime", x.is_gamma_prime}});
  io::Json out{{"descriptor", classify::to_json(c.descriptor)},
               {"name", classify::describe(c.descriptor)},
               {"kind", c.kind},
               {"word", word},
               {"parities", parities},
               {"candidates", cands},
               {"gamma_case", gamma_case_name(c.gamma_case)}};
  if (c.kind == 1) out["half_coroot_identity"] = c.half_coroot_identity;
  return out;
}

}  // namespace levitanaka::involution
