// Command-line front end. Canonical output is JSON with sorted keys and no timings, so two
// runs on the same input are byte-identical. Exit codes: 0 ok, 1 domain failure, 2 input
// error, 3 internal consistency failure.
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "levitanaka/classify/classify.hpp"
#include "levitanaka/corpus/corpus.hpp"
#include "levitanaka/involution/involution.hpp"
#include "levitanaka/io/json_io.hpp"
#include "levitanaka/prolongation/prolongation.hpp"
#include "levitanaka/quadric/quadric.hpp"

using namespace levitanaka;
using io::Json;

namespace {

enum Exit { Ok = 0, Domain = 1, Input = 2, Internal = 3 };

struct Options {
  bool pretty = false;
  std::string out;
};

Json check_json(const lie::Check& c) {
  return Json{{"name", c.name}, {"status", c.ok ? "pass" : "fail"}, {"violation", c.violation}, {"witness", c.witness}};
}

Json dims_json(const std::map<int, std::size_t>& m) {
  Json j = Json::object();
  for (const auto& [p, d] : m) j[std::to_string(p)] = d;
  return j;
}

// Human rendering for --pretty: the report keys that matter most, one per line.
void render(std::ostream& os, const Json& j, const std::string& indent = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !(v.is_array() && !v.empty() && v.front().is_primitive())) {
        os << indent << k << ":\n";
        render(os, v, indent + "  ");
      } else {
        os << indent << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << indent << "-\n";
        render(os, v, indent + "  ");
      } else {
        os << indent << "- " << v.dump() << "\n";
      }
    }
  } else {
    os << indent << j.dump() << "\n";
  }
}

int emit(const Options& o, const Json& report, int code) {
  const std::string canonical = io::dump(report, false) + "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return Input;
    }
    f << canonical;
  }
  if (o.pretty) {
    render(std::cout, report);
  } else if (o.out.empty()) {
    std::cout << canonical;
  }
  return code;
}

int input_error(const Options& o, const std::string& command, const std::string& what) {
  std::cerr << command << ": " << what << "\n";
  return emit(o, Json{{"command", command}, {"error", what}}, Input);
}

Json levi_summary(const lie::GradedLieAlgebra& g, std::vector<lie::Check>& checks) {
  const auto levi = lie::levi_decomposition(g);
  checks.push_back(lie::verify_levi(g, levi));
  std::vector<std::size_t> dims;
  for (const auto& s : lie::simple_ideals(levi.s)) dims.push_back(s.dim());
  std::sort(dims.rbegin(), dims.rend());
  std::vector<QVector> minus_two;
  for (auto i : g.indices_of_degree(-2)) minus_two.push_back(unit_vector(g.dim(), i));
  const auto cap = lie::intersection(levi.r, lie::Subspace::span(g, minus_two));
  Json j{{"s_dim", levi.s.dim()},
         {"r_dim", levi.r.dim()},
         {"simple_ideal_dims", dims},
         {"radical_misses_g_minus_2", cap.dim() < minus_two.size()}};
  j["e_r_zero"] = levi.e_r ? Json(is_zero_vector(*levi.e_r)) : Json(nullptr);
  return j;
}

int cmd_analyze(const Options& o, const std::string& path, int max_degree) {
  Json input;
  quadric::HermitianFormSystem h;
  try {
    input = io::read_file(path);
    h = quadric::any_from_json(input);
  } catch (const Error& e) {
    return input_error(o, "analyze-quadric", e.what());
  }
  Json report{{"command", "analyze-quadric"}, {"input", input}};
  std::vector<lie::Check> checks;
  if (auto w = quadric::degeneracy_witness(h)) {
    checks.push_back(lie::Check::fail("nondegenerate", "H(z, .) = 0 for the witness z", {}));
    Json z = Json::array();
    for (const auto& x : *w) z.push_back(io::to_json(x));
    report["witness"] = z;
  } else {
    checks.push_back(lie::Check::pass("nondegenerate"));
  }
  if (auto w = quadric::dependency_witness(h)) {
    checks.push_back(lie::Check::fail("fundamental", "a real combination of components vanishes", {}));
    report["dependency"] = io::to_json(*w);
  } else {
    checks.push_back(lie::Check::pass("fundamental"));
  }
  auto finish = [&](int code) {
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back(check_json(c));
    report["checks"] = cs;
    return emit(o, report, code);
  };
  if (!checks[0].ok || !checks[1].ok) return finish(Domain);

  try {
    const auto m = quadric::build_m_minus(h);
    const auto r = prolongation::prolong(m, max_degree);
    checks.push_back(lie::validate(r.algebra));
    checks.push_back(prolongation::transitivity_check(r.algebra));
    report["degree_dims"] = dims_json(r.degree_dims);
    report["characteristic_element"] = io::to_json(r.characteristic_element);
    Json levi = levi_summary(r.algebra, checks);
    bool symmetric = true;
    for (const auto& [p, d] : r.degree_dims)
      if (p > 0) symmetric = symmetric && r.algebra.dim_of_degree(-p) == d;
    report["levi"] = levi;
    // necessary conditions only; matching factors to descriptors is not attempted
    const bool necessary = symmetric && levi["radical_misses_g_minus_2"].get<bool>() && levi["e_r_zero"] == true;
    report["verdicts"] = Json{{"dims_symmetric", symmetric},
                              {"tilde_s", necessary ? Json(nullptr) : Json(false)},
                              {"s_sufficient", nullptr}};
  } catch (const Error& e) {
    checks.push_back(lie::Check::fail(std::string(error_code_name(e.code())), e.what(), {}));
    return finish(e.code() == ErrorCode::InternalInvariant ? Internal : Domain);
  }
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const lie::Check& c) { return c.ok; });
  return finish(ok ? Ok : Internal);
}

int cmd_classify(const Options& o, const std::string& path) {
  std::vector<classify::FactorDescriptor> factors;
  std::optional<bool> semisimple;
  Json input;
  try {
    input = io::read_file(path);
    const Json* list = &input;
    if (input.is_object()) {
      if (!input.contains("factors")) throw Error(ErrorCode::Malformed, "expected a list or {\"factors\": [...]}");
      list = &input.at("factors");
      if (input.contains("semisimple") && input.at("semisimple").is_boolean())
        semisimple = input.at("semisimple").get<bool>();
    }
    if (!list->is_array() || list->empty()) throw Error(ErrorCode::Malformed, "descriptor list must be non-empty");
    for (const auto& d : *list) factors.push_back(classify::from_json(d));
  } catch (const Error& e) {
    return input_error(o, "classify", e.what());
  }

  Json report{{"command", "classify"}, {"input", input}};
  Json rows = Json::array();
  std::vector<classify::FactorDescriptor> kind2, kind1;
  bool tilde_s = true;
  for (const auto& d : factors) {
    Json row{{"name", classify::describe(d)}, {"admissible", classify::phi_is_admissible(d)}};
    if (!row["admissible"].get<bool>()) {
      tilde_s = false;
      rows.push_back(row);
      continue;
    }
    const int kind = classify::grading_data(d).kind;
    const bool w0 = classify::w0_reverses_E(d);
    row["kind"] = kind;
    row["w0_reverses_E"] = w0;
    if (kind == 2) {
      kind2.push_back(d);
      row["in_theorem_list"] = classify::in_kind2_theorem_list(d);
    } else if (kind == 1) {
      kind1.push_back(d);
      row["in_theorem_list"] = classify::in_kind1_theorem_list(d);
    } else {
      tilde_s = false;
    }
    if ((kind == 1 || kind == 2) && w0) {
      row["gamma_case"] = involution::gamma_case_name(involution::gamma_case(d));
    } else {
      tilde_s = false;
    }
    rows.push_back(row);
  }
  report["factors"] = rows;
  if (kind2.empty() && !kind1.empty() && kind1.size() == factors.size())
    return input_error(o, "classify", "incomplete: a Levi factor must contain an ideal of kind 2");
  if (tilde_s) tilde_s = classify::tilde_s_general(kind2, kind1, true);
  Json verdicts{{"tilde_s", tilde_s}};
  if (!tilde_s) {
    verdicts["s"] = false;
  } else {
    const bool suff = involution::s_property_sufficient(kind2, kind1, semisimple.value_or(kind1.empty()));
    verdicts["s"] = suff ? Json(true) : Json(nullptr);  // null: the sufficient conditions do not decide
  }
  verdicts["s_sufficient"] = tilde_s && verdicts["s"] == true;
  report["verdicts"] = verdicts;
  return emit(o, report, Ok);
}

int cmd_tables(const Options& o, std::size_t max_rank) {
  const auto rows = classify::regenerate_tables(max_rank);
  std::size_t disagreements = 0;
  std::set<std::string> kind2, listed;
  Json bad = Json::array();
  for (const auto& r : rows) {
    if (r.w0_reverses_e != r.in_theorem_list) {
      ++disagreements;
      bad.push_back(classify::describe(r.descriptor));
    }
    if (r.kind == 2) kind2.insert(classify::describe(r.descriptor));
  }
  for (const auto& d : classify::kind2_proposition_list(max_rank)) listed.insert(classify::describe(d));
  Json report{{"command", "tables"},
              {"max_rank", max_rank},
              {"rows", classify::tables_to_json(rows)},
              {"disagreements", bad},
              {"kind2_enumeration_matches_list", kind2 == listed}};
  return emit(o, report, disagreements == 0 && kind2 == listed ? Ok : Internal);
}

int cmd_corpus(const Options& o, const std::string& only, int max_degree) {
  std::vector<corpus::CorpusEntry> entries;
  try {
    entries = only.empty() ? corpus::all_entries() : std::vector{corpus::entry(only)};
  } catch (const Error& e) {
    return input_error(o, "corpus", e.what());
  }
  Json report{{"command", "corpus"}};
  Json out = Json::array();
  bool all_ok = true;
  for (const auto& e : entries) {
    Json row{{"name", e.name}, {"summary", e.summary}, {"expected", corpus::expected_to_json(e.expected)}};
    Json cs = Json::array();
    try {
      const auto g = corpus::materialize(e, max_degree);
      row["degree_dims"] = dims_json(g.degree_dims());
      for (const auto& c : corpus::run_checks(e, g)) {
        all_ok = all_ok && c.ok;
        cs.push_back(check_json(c));
      }
    } catch (const Error& err) {
      all_ok = false;
      cs.push_back(check_json(lie::Check::fail(std::string(error_code_name(err.code())), err.what(), {})));
    }
    row["checks"] = cs;
    out.push_back(row);
  }
  report["entries"] = out;
  report["all_pass"] = all_ok;
  return emit(o, report, all_ok ? Ok : Domain);
}

int cmd_prolong(const Options& o, const std::string& path, int max_degree) {
  lie::GradedLieAlgebra m;
  try {
    m = io::algebra_from_json(io::read_file(path));
    prolongation::check_input(m);
  } catch (const Error& e) {
    return input_error(o, "prolong", e.what());
  }
  try {
    const auto r = prolongation::prolong(m, max_degree);
    Json report{{"command", "prolong"},
                {"degree_dims", dims_json(r.degree_dims)},
                {"characteristic_element", io::to_json(r.characteristic_element)},
                {"algebra", io::algebra_to_json(r.algebra)}};
    return emit(o, report, Ok);
  } catch (const Error& e) {
    return emit(o, Json{{"command", "prolong"}, {"error", e.what()}},
                e.code() == ErrorCode::InternalInvariant ? Internal : Domain);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Levi-Tanaka algebras of CR quadrics: prolongation, structure and classification checks"};
  app.require_subcommand(1);
  Options o;
  int max_degree = 6;
  std::size_t max_rank = 8;
  std::string path, only;

  auto common = [&](CLI::App* c) {
    c->add_flag("--pretty", o.pretty, "Human-readable rendering on stdout");
    c->add_option("--out", o.out, "Write the canonical JSON report to this file");
  };
  auto* analyze = app.add_subcommand("analyze-quadric", "Prolong and analyse a hermitian form system");
  analyze->add_option("path", path, "Hermitian form JSON")->required();
  analyze->add_option("--max-degree", max_degree, "Prolongation cap")->check(CLI::Range(0, 64));
  common(analyze);
  auto* cls = app.add_subcommand("classify", "(S~)/(S) verdicts for a list of factor descriptors");
  cls->add_option("path", path, "Descriptor list JSON")->required();
  common(cls);
  auto* tables = app.add_subcommand("tables", "Compare the w0 oracle against the stated lists");
  tables->add_option("--max-rank", max_rank, "Largest rank enumerated")->check(CLI::Range(4, 12));
  common(tables);
  auto* corp = app.add_subcommand("corpus", "Build every corpus entry and run its checks");
  corp->add_option("--only", only, "Run a single entry");
  corp->add_flag("--run-all", "Run every entry (default)");
  corp->add_option("--max-degree", max_degree, "Prolongation cap")->check(CLI::Range(0, 64));
  common(corp);
  auto* prol = app.add_subcommand("prolong", "Prolong a raw negative-part algebra");
  prol->add_option("path", path, "Graded algebra JSON")->required();
  prol->add_option("--max-degree", max_degree, "Prolongation cap")->check(CLI::Range(0, 64));
  common(prol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? Ok : Input;
  }
  try {
    if (*analyze) return cmd_analyze(o, path, max_degree);
    if (*cls) return cmd_classify(o, path);
    if (*tables) return cmd_tables(o, max_rank);
    if (*corp) return cmd_corpus(o, only, max_degree);
    if (*prol) return cmd_prolong(o, path, max_degree);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::Malformed ? Input : Internal;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return Internal;
  }
  return Input;
}
