#include "levitanaka/classify/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <regex>
#include <set>

namespace levitanaka::classify {
namespace {

struct Context {
  roots::RootSystem rs;
  std::vector<int> highest;
  QMatrix w0;
  std::vector<QVector> weights;
  std::vector<std::vector<std::size_t>> adjacent;  // one copy
};

const Context& context(Family f, std::size_t rank) {
  static std::mutex mu;
  static std::map<std::pair<Family, std::size_t>, Context> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({f, rank});
  if (it != cache.end()) return it->second;
  Context c;
  c.rs = roots::make_root_system(f, rank);
  c.highest = roots::highest_root_coefficients(c.rs);
  c.w0 = roots::longest_element(c.rs).matrix;
  c.weights = roots::fundamental_weights(c.rs);
  c.adjacent.resize(rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      if (i != j && c.rs.cartan[i][j] != 0) c.adjacent[i].push_back(j);
  return cache.emplace(std::make_pair(f, rank), std::move(c)).first->second;
}

std::vector<std::size_t> neighbours(const FactorDescriptor& d, const Context& c, std::size_t node) {
  const std::size_t base = node >= d.rank ? d.rank : 0;
  std::vector<std::size_t> out;
  for (auto j : c.adjacent[node - base]) out.push_back(base + j);
  return out;
}

std::vector<std::size_t> epsilon_image(const FactorDescriptor& d) {
  std::vector<std::size_t> out;
  for (auto i : d.phi) out.push_back(d.epsilon[i]);
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Phi + epsilon(Phi)
std::vector<std::size_t> support(const FactorDescriptor& d) {
  auto s = d.phi;
  for (auto i : d.phi) s.push_back(d.epsilon[i]);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// support restricted to one copy, as 0-based node indices of that copy
std::vector<std::size_t> copy_support(const FactorDescriptor& d, int copy) {
  std::vector<std::size_t> out;
  for (auto i : support(d)) {
    if (!d.is_complex()) {
      out.push_back(i);
    } else if ((i >= d.rank) == (copy == 1)) {
      out.push_back(i % d.rank);
    }
  }
  return out;
}

bool strict_conditions(const FactorDescriptor& d, const Context& c, bool skip_components) {
  const auto eps_phi = epsilon_image(d);
  for (auto i : d.phi)
    if (contains(d.compact_nodes, i) || contains(eps_phi, i)) return false;
  if (!skip_components) {
    const int copies = d.is_complex() ? 2 : 1;
    for (int k = 0; k < copies; ++k) {
      auto in_copy = [&](std::size_t i) { return !d.is_complex() || (i >= d.rank) == (k == 1); };
      if (std::none_of(d.phi.begin(), d.phi.end(), in_copy) || std::none_of(eps_phi.begin(), eps_phi.end(), in_copy))
        return false;
    }
  }
  // paths between elements of Phi must pass through epsilon(Phi): search avoiding epsilon(Phi)
  for (auto start : d.phi) {
    std::vector<bool> seen(d.node_count(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : neighbours(d, c, v)) {
        if (seen[w] || contains(eps_phi, w)) continue;
        if (contains(d.phi, w)) return false;
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return true;
}

bool kind1_singleton(const FactorDescriptor& d, const Context& c) {
  return d.is_complex() && d.phi.size() == 1 && d.phi[0] < d.rank && c.highest[d.phi[0]] == 1;
}

void require_admissible(const FactorDescriptor& d) {
  if (!phi_is_admissible(d)) throw Error(ErrorCode::Admissibility, describe(d) + " is not admissible");
}

// 1-based Phi as (unprimed, primed) node numbers for complex pairs
bool is_pair(const FactorDescriptor& d, std::size_t a, std::size_t b) {
  return d.phi.size() == 2 && d.phi[0] == a - 1 && d.phi[1] == d.rank + b - 1;
}
bool is_single(const FactorDescriptor& d, std::size_t a) { return d.phi.size() == 1 && d.phi[0] == a - 1; }

}  // namespace

FactorDescriptor make_descriptor(Family f, std::size_t rank, Form form, std::vector<std::size_t> phi, std::size_t p) {
  FactorDescriptor d;
  d.family = f;
  d.rank = rank;
  d.form = form;
  (void)context(f, rank);  // validates the rank
  auto bad = [&](const std::string& why) { throw Error(ErrorCode::PreconditionFailed, why); };
  auto swap_last_two = [&] {
    d.epsilon.resize(rank);
    for (std::size_t i = 0; i < rank; ++i) d.epsilon[i] = i;
    std::swap(d.epsilon[rank - 2], d.epsilon[rank - 1]);
  };
  switch (form) {
    case Form::AIII:
      if (f != Family::A) bad("III/IV(p,q) is an A-type form");
      if (p < 1 || 2 * p > rank + 1) bad("A III/IV needs 1 <= p <= (rank+1)/2");
      d.p = p;
      d.q = rank + 1 - p;
      for (std::size_t i = d.p; i + 1 < d.q; ++i) d.compact_nodes.push_back(i);
      for (std::size_t i = 0; i < rank; ++i) d.epsilon.push_back(rank - 1 - i);
      break;
    case Form::DIb:
      if (f != Family::D) bad("Ib is a D-type form");
      swap_last_two();
      break;
    case Form::DIIIb:
      if (f != Family::D || rank % 2 == 0) bad("IIIb is a D-type form of odd rank");
      for (std::size_t i = 0; i + 2 < rank; i += 2) d.compact_nodes.push_back(i);
      swap_last_two();
      break;
    case Form::EII:
    case Form::EIII:
      if (f != Family::E6) bad("II/III are E6 forms");
      d.epsilon = {5, 1, 4, 3, 2, 0};
      if (form == Form::EIII) d.compact_nodes = {2, 3, 4};
      break;
    case Form::Complex:
      for (std::size_t i = 0; i < 2 * rank; ++i) d.epsilon.push_back(i < rank ? i + rank : i - rank);
      break;
  }
  std::sort(phi.begin(), phi.end());
  phi.erase(std::unique(phi.begin(), phi.end()), phi.end());
  for (auto i : phi)
    if (i >= d.node_count()) bad("Phi node out of range");
  d.phi = std::move(phi);
  return d;
}

std::string form_name(const FactorDescriptor& d) {
  switch (d.form) {
    case Form::AIII: return "III(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
    case Form::DIb: return "Ib";
    case Form::DIIIb: return "IIIb";
    case Form::EII: return "II";
    case Form::EIII: return "III";
    case Form::Complex: return "COMPLEX";
  }
  return "?";
}

std::string node_name(const FactorDescriptor& d, std::size_t node) {
  if (node >= d.rank) return "alpha" + std::to_string(node - d.rank + 1) + "'";
  return "alpha" + std::to_string(node + 1);
}

std::string describe(const FactorDescriptor& d) {
  std::string s = roots::family_name(d.family) + (d.family == Family::E6 ? "" : std::to_string(d.rank)) + " " +
                  form_name(d) + " {";
  for (std::size_t k = 0; k < d.phi.size(); ++k) s += (k ? "," : "") + node_name(d, d.phi[k]);
  return s + "}";
}

io::Json to_json(const FactorDescriptor& d) {
  io::Json phi = io::Json::array();
  for (auto i : d.phi) phi.push_back(node_name(d, i));
  return io::Json{{"family", roots::family_name(d.family)},
                  {"rank", d.rank},
                  {"form", form_name(d)},
                  {"phi", phi},
                  {"complex", d.is_complex()}};
}

FactorDescriptor from_json(const io::Json& j) {
  auto bad = [](const std::string& why) { throw Error(ErrorCode::Malformed, "descriptor: " + why); };
  if (!j.is_object() || !j.contains("family") || !j.contains("rank") || !j.contains("phi") ||
      !j.at("family").is_string() || !j.at("rank").is_number_unsigned() || !j.at("phi").is_array())
    bad("needs family, rank and phi");
  const Family f = roots::parse_family(j.at("family").get<std::string>());
  const auto rank = j.at("rank").get<std::size_t>();
  const bool cx = j.contains("complex") && j.at("complex").is_boolean() && j.at("complex").get<bool>();
  const std::string form_text = j.contains("form") && j.at("form").is_string() ? j.at("form").get<std::string>() : "";
  Form form = Form::Complex;
  std::size_t p = 0;
  std::smatch m;
  static const std::regex a_form(R"(^(?:A\s*)?(?:III/IV|III|IV)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)$)");
  if (cx || form_text == "COMPLEX") {
    form = Form::Complex;
  } else if (std::regex_match(form_text, m, a_form)) {
    form = Form::AIII;
    p = std::stoul(m[1]);
    if (p + std::stoul(m[2]) != rank + 1) bad("A III/IV(p,q) needs p + q = rank + 1");
    if (p > std::stoul(m[2])) p = std::stoul(m[2]);
  } else if (form_text == "IV") {
    form = Form::AIII;
    p = 1;
  } else if (form_text == "Ib") {
    form = Form::DIb;
  } else if (form_text == "IIIb") {
    form = Form::DIIIb;
  } else if (form_text == "II") {
    form = Form::EII;
  } else if (form_text == "III" && f == Family::E6) {
    form = Form::EIII;
  } else {
    bad("unknown form '" + form_text + "'");
  }
  static const std::regex node(R"(^alpha(\d+)('?)$)");
  std::vector<std::size_t> phi;
  for (const auto& x : j.at("phi")) {
    if (!x.is_string()) bad("phi entries are node names like alpha2 or alpha4'");
    const auto s = x.get<std::string>();
    if (!std::regex_match(s, m, node)) bad("bad node name " + s);
    const std::size_t k = std::stoul(m[1]);
    if (k < 1 || k > rank) bad("node " + s + " out of range");
    if (m[2].length() && form != Form::Complex) bad("primed node in a real form");
    phi.push_back(k - 1 + (m[2].length() ? rank : 0));
  }
  try {
    return make_descriptor(f, rank, form, phi, p);
  } catch (const Error& e) {
    throw Error(ErrorCode::Malformed, std::string("descriptor: ") + e.what());
  }
}

bool phi_is_admissible(const FactorDescriptor& d) {
  if (d.phi.empty()) return false;
  const Context& c = context(d.family, d.rank);
  if (kind1_singleton(d, c)) return strict_conditions(d, c, true);
  return strict_conditions(d, c, false);
}

GradingData grading_data(const FactorDescriptor& d) {
  require_admissible(d);
  const Context& c = context(d.family, d.rank);
  GradingData g;
  g.e_coords.assign(d.node_count(), Rational(0));
  for (auto i : support(d)) g.e_coords[i] = 1;
  const int copies = d.is_complex() ? 2 : 1;
  std::vector<int> kinds;
  for (int k = 0; k < copies; ++k) {
    int s = 0;
    for (auto i : copy_support(d, k)) s += c.highest[i];
    kinds.push_back(s);
  }
  if (kinds.size() == 2 && kinds[0] != kinds[1]) throw Error(ErrorCode::InternalInvariant, "copies have different kinds");
  g.kind = kinds[0];
  return g;
}

QVector grading_element(const FactorDescriptor& d) {
  const Context& c = context(d.family, d.rank);
  QVector e(c.rs.ambient_dim(), Rational(0));
  for (auto i : copy_support(d, 0)) e = e + c.weights[i];
  return e;
}

bool w0_reverses_E(const FactorDescriptor& d) {
  require_admissible(d);
  const Context& c = context(d.family, d.rank);
  const int copies = d.is_complex() ? 2 : 1;
  for (int k = 0; k < copies; ++k) {
    QVector e(c.rs.ambient_dim(), Rational(0));
    for (auto i : copy_support(d, k)) e = e + c.weights[i];
    if (c.w0.apply(e) != Rational(-1) * e) return false;
  }
  return true;
}

bool in_kind2_theorem_list(const FactorDescriptor& d) {
  const std::size_t l = d.rank;
  switch (d.form) {
    case Form::AIII: {
      if (d.phi.size() != 1) return false;
      const std::size_t i = d.phi[0] + 1;
      return (i <= d.p || i >= d.q) && 2 * i != l + 1;
    }
    case Form::DIb:
    case Form::DIIIb: return is_single(d, l) || is_single(d, l - 1);
    case Form::EII:
    case Form::EIII: return is_single(d, 1) || is_single(d, 6);
    case Form::Complex:
      switch (d.family) {
        case Family::A:
          for (std::size_t j = 1; j <= l; ++j)
            if (is_pair(d, j, l + 1 - j)) return true;
          return false;
        case Family::D:
          if (l % 2 == 0)
            return is_pair(d, 1, l - 1) || is_pair(d, l - 1, l) || is_pair(d, 1, l) || is_pair(d, l - 1, 1) ||
                   is_pair(d, l, l - 1) || is_pair(d, l, 1);
          return is_pair(d, l, l - 1) || is_pair(d, l - 1, l);
        case Family::E6: return is_pair(d, 1, 6) || is_pair(d, 6, 1);
      }
  }
  return false;
}

bool in_kind1_theorem_list(const FactorDescriptor& d) {
  if (!d.is_complex()) return false;
  const std::size_t l = d.rank;
  switch (d.family) {
    case Family::A: return l % 2 == 1 && is_single(d, (l + 1) / 2);
    case Family::D:
      if (l % 2 == 0) return is_single(d, 1) || is_single(d, l - 1) || is_single(d, l);
      return is_single(d, 1);
    case Family::E6: return false;
  }
  return false;
}

bool tilde_s_semisimple(const std::vector<FactorDescriptor>& factors) {
  bool ok = true;
  for (const auto& d : factors) {
    const auto g = grading_data(d);
    if (g.kind != 2) throw Error(ErrorCode::Kind, describe(d) + " has kind " + std::to_string(g.kind) + ", not 2");
    ok = ok && in_kind2_theorem_list(d);
  }
  return ok;
}

bool tilde_s_general(const std::vector<FactorDescriptor>& kind2, const std::vector<FactorDescriptor>& kind1,
                     bool e_r_is_zero) {
  bool ok = tilde_s_semisimple(kind2);
  for (const auto& d : kind1) {
    const auto g = grading_data(d);
    if (g.kind != 1) throw Error(ErrorCode::Kind, describe(d) + " has kind " + std::to_string(g.kind) + ", not 1");
    ok = ok && in_kind1_theorem_list(d);
  }
  // a Levi factor of a quadric with the property has a kind-2 ideal
  return ok && e_r_is_zero && !kind2.empty();
}

std::vector<FactorDescriptor> all_forms(std::size_t max_rank) {
  std::vector<FactorDescriptor> out;
  for (std::size_t l = 1; l <= max_rank; ++l) {
    for (std::size_t p = 1; 2 * p <= l + 1; ++p) out.push_back(make_descriptor(Family::A, l, Form::AIII, {}, p));
    out.push_back(make_descriptor(Family::A, l, Form::Complex, {}));
  }
  for (std::size_t l = 4; l <= max_rank; ++l) {
    out.push_back(make_descriptor(Family::D, l, Form::DIb, {}));
    if (l % 2 == 1) out.push_back(make_descriptor(Family::D, l, Form::DIIIb, {}));
    out.push_back(make_descriptor(Family::D, l, Form::Complex, {}));
  }
  if (max_rank >= 6)
    for (Form f : {Form::EII, Form::EIII, Form::Complex}) out.push_back(make_descriptor(Family::E6, 6, f, {}));
  return out;
}

std::vector<TableRow> regenerate_tables(std::size_t max_rank, Execution exec) {
  const auto forms = all_forms(max_rank);
  for (const auto& f : forms) (void)context(f.family, f.rank);
  std::vector<std::vector<TableRow>> per_form(forms.size());
  auto run = [&](std::size_t k) {
    const auto& form = forms[k];
    const std::size_t n = form.node_count();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      // Phi and epsilon(Phi) are disjoint, so the support on one copy has |Phi| nodes, each of
      // highest-root coefficient >= 1: kind <= 2 forces |Phi| <= 2
      if (std::popcount(mask) > 2) continue;
      FactorDescriptor d = form;
      d.phi.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) d.phi.push_back(i);
      if (!phi_is_admissible(d)) continue;
      const auto g = grading_data(d);
      if (g.kind != 1 && g.kind != 2) continue;
      TableRow row{d, g.kind, true, w0_reverses_E(d), g.kind == 2 ? in_kind2_theorem_list(d) : in_kind1_theorem_list(d)};
      per_form[k].push_back(std::move(row));
    }
    std::sort(per_form[k].begin(), per_form[k].end(),
              [](const TableRow& a, const TableRow& b) { return a.descriptor.phi < b.descriptor.phi; });
  };
  const auto count = static_cast<std::ptrdiff_t>(forms.size());
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < count; ++k) run(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < forms.size(); ++k) run(k);
  }
  std::vector<TableRow> rows;
  for (auto& v : per_form)
    for (auto& r : v) rows.push_back(std::move(r));
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) { return a.kind > b.kind; });
  return rows;
}

io::Json tables_to_json(const std::vector<TableRow>& rows) {
  io::Json out = io::Json::array();
  for (const auto& r : rows)
    out.push_back(io::Json{{"descriptor", to_json(r.descriptor)},
                           {"name", describe(r.descriptor)},
                           {"kind", r.kind},
                           {"admissible", r.admissible},
                           {"w0_reverses_E", r.w0_reverses_e},
                           {"in_theorem_list", r.in_theorem_list}});
  return out;
}

std::vector<FactorDescriptor> kind2_proposition_list(std::size_t max_rank) {
  std::vector<FactorDescriptor> out;
  auto pair = [](Family f, std::size_t l, std::size_t a, std::size_t b) {
    return make_descriptor(f, l, Form::Complex, {a - 1, l + b - 1});
  };
  for (std::size_t l = 1; l <= max_rank; ++l) {
    // (1) A III/IV, Phi = {alpha_i}, i <= p or i >= q, i != (l+1)/2
    for (std::size_t p = 1; 2 * p <= l + 1; ++p) {
      const std::size_t q = l + 1 - p;
      for (std::size_t i = 1; i <= l; ++i)
        if ((i <= p || i >= q) && 2 * i != l + 1) out.push_back(make_descriptor(Family::A, l, Form::AIII, {i - 1}, p));
    }
    // (4) A complex, Phi = {alpha_i, alpha'_j}, i != j
    for (std::size_t i = 1; i <= l; ++i)
      for (std::size_t j = 1; j <= l; ++j)
        if (i != j) out.push_back(pair(Family::A, l, i, j));
  }
  for (std::size_t l = 4; l <= max_rank; ++l) {
    // (2) D Ib / IIIb, Phi = {alpha_l} or {alpha_{l-1}}
    for (std::size_t i : {l - 1, l}) {
      out.push_back(make_descriptor(Family::D, l, Form::DIb, {i - 1}));
      if (l % 2 == 1) out.push_back(make_descriptor(Family::D, l, Form::DIIIb, {i - 1}));
    }
    // (5) D complex
    for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{
             {1, l - 1}, {l - 1, l}, {1, l}, {l - 1, 1}, {l, l - 1}, {l, 1}})
      out.push_back(pair(Family::D, l, a, b));
  }
  if (max_rank >= 6) {
    // (3) E II / III and (6) E6 complex
    for (Form f : {Form::EII, Form::EIII})
      for (std::size_t i : {1, 6}) out.push_back(make_descriptor(Family::E6, 6, f, {i - 1}));
    out.push_back(pair(Family::E6, 6, 1, 6));
    out.push_back(pair(Family::E6, 6, 6, 1));
  }
  return out;
}

}  // namespace levitanaka::classify
