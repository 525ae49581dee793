// Command line front end for the exact (weak) Hopf algebra workbench.
//
// Subcommands: verify, rmatrix, tensor, decompose, green-table,
// presentation, catalog. Output formats: text, json, csv. Exit code 0 when
// every check passes, 1 when any check fails or deviates (or a computation
// errors out), 2 on usage errors. All output is deterministic for a fixed
// command line, independent of H4N_THREADS.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "h4n/algebra.hpp"
#include "h4n/coalgebra.hpp"
#include "h4n/green_ring.hpp"
#include "h4n/quasitriangular.hpp"
#include "h4n/representations.hpp"

using nlohmann::json;
using namespace h4n;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Document {
  std::string command;
  std::string family;
  int n = 0;
  std::string a;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  Report report;
};

std::string csv_field(const std::string& s) {
  bool needs = s.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string render_text(const Document& d) {
  std::ostringstream os;
  os << "command: " << d.command << "\n";
  os << "family: " << d.family << "\n";
  os << "n: " << d.n << "\n";
  os << "a: " << d.a << "\n";
  if (!d.facts.empty()) {
    os << "\n";
    for (const auto& [k, v] : d.facts) os << k << ": " << v << "\n";
  }
  if (!d.rows.empty()) {
    os << "\n";
    for (const auto& row : d.rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) os << " | ";
        os << row[i];
      }
      os << "\n";
    }
  }
  if (!d.report.items.empty()) {
    os << "\n";
    for (const CheckItem& it : d.report.items) {
      std::string tag = status_str(it.status);
      for (char& c : tag) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      os << "[" << tag << "] " << it.id;
      if (!it.detail.empty()) os << ": " << it.detail;
      os << "\n";
    }
    os << "\n";
    os << "summary: pass=" << d.report.count(Status::Pass)
       << " fail=" << d.report.count(Status::Fail)
       << " deviation=" << d.report.count(Status::Deviation)
       << " info=" << d.report.count(Status::Info) << "\n";
  }
  return os.str();
}

std::string render_csv(const Document& d) {
  std::ostringstream os;
  if (!d.rows.empty()) {
    for (size_t i = 0; i < d.columns.size(); ++i) {
      if (i) os << ",";
      os << csv_field(d.columns[i]);
    }
    os << "\r\n";
    for (const auto& row : d.rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) os << ",";
        os << csv_field(row[i]);
      }
      os << "\r\n";
    }
  } else {
    os << "id,status,detail\r\n";
    for (const CheckItem& it : d.report.items) {
      os << csv_field(it.id) << "," << csv_field(status_str(it.status)) << ","
         << csv_field(it.detail) << "\r\n";
    }
  }
  return os.str();
}

std::string render_json(const Document& d) {
  json j;
  j["command"] = d.command;
  j["family"] = d.family;
  j["n"] = d.n;
  j["a"] = d.a;
  json data = json::object();
  for (const auto& [k, v] : d.facts) data[k] = v;
  j["data"] = data;
  json items = json::array();
  for (const CheckItem& it : d.report.items) {
    items.push_back({{"id", it.id}, {"status", status_str(it.status)}, {"detail", it.detail}});
  }
  j["items"] = items;
  j["summary"] = {{"pass", d.report.count(Status::Pass)},
                  {"fail", d.report.count(Status::Fail)},
                  {"deviation", d.report.count(Status::Deviation)},
                  {"info", d.report.count(Status::Info)}};
  if (!d.rows.empty()) {
    json table;
    table["columns"] = d.columns;
    json rows = json::array();
    for (const auto& row : d.rows) rows.push_back(row);
    table["rows"] = rows;
    j["table"] = table;
  }
  return j.dump(2) + "\n";
}

int env_threads() {
  const char* tv = std::getenv("H4N_THREADS");
  if (!tv) return 1;
  int t = std::atoi(tv);
  return t < 1 ? 1 : t;
}

/// Notices about parameter corner cases, prepended to every report.
Report parameter_notices(const AlgebraSpec& spec) {
  Report rep;
  if (spec.a == Rat(0) && !is_dual(spec.family)) {
    rep.info("a-zero-notice",
             "a = 0 drops the x-part of the coproduct correction and of the "
             "braiding; all structure checks remain meaningful");
  }
  if (spec.family == Family::WHDual && !(spec.a == Rat(1))) {
    rep.info("a-ignored-notice",
             "family wh4n-dual fixes the coefficient in x^2 = 1 - g^2; the "
             "given a is not used");
  }
  return rep;
}

/// Commands that build modules cannot run over h4n-dual at a = 0 (the
/// canonical 2-dimensional modules degenerate).
void require_modules_ok(const AlgebraSpec& spec) {
  if (spec.family == Family::HDual && spec.a == Rat(0)) {
    throw UsageError("family h4n-dual needs --a != 0 for module-level commands");
  }
}

Document run_verify(const Algebra& alg, const StructureMaps& sm) {
  Document d;
  d.command = "verify";
  d.facts.push_back({"dim", std::to_string(alg.dim())});
  d.facts.push_back({"scalar field", "Q(q) with q a primitive root of unity of order " +
                                         std::to_string(alg.field().order()) + " (degree " +
                                         std::to_string(alg.field().degree()) + ")"});
  d.report.merge(parameter_notices(alg.spec()));
  d.report.merge(verify_algebra_structure(alg));
  if (is_weak(alg.spec().family)) {
    d.report.merge(peirce_decomposition(alg).checks);
  }
  d.report.merge(verify_coalgebra_axioms(sm));
  if (is_weak(alg.spec().family)) {
    d.report.merge(verify_peirce_coalgebra(sm));
  }
  if (alg.spec().family == Family::HDual && alg.spec().a == Rat(0)) {
    d.report.info("catalog-skipped", "module catalog needs a != 0 for h4n-dual");
  } else {
    d.report.merge(verify_catalog(alg));
  }
  return d;
}

Document run_rmatrix(const Algebra& alg, const StructureMaps& sm) {
  Document d;
  d.command = "rmatrix";
  RMatrixCheck rc = verify_r_matrix(sm);
  int terms = 0;
  for (int i = 0; i < alg.dim(); ++i) {
    for (int j = 0; j < alg.dim(); ++j) {
      if (!rc.R.at(i, j).is_zero()) ++terms;
    }
  }
  d.facts.push_back({"r-terms", std::to_string(terms)});
  d.facts.push_back({"r-matrix", rc.R.str()});
  d.facts.push_back({"r-inverse", rc.Rinv.str()});
  d.report.merge(parameter_notices(alg.spec()));
  d.report.merge(rc.checks);
  return d;
}

Label parse_label_or_throw(const std::string& text, const Algebra& alg) {
  auto l = Label::parse(text, alg.spec().family, alg.n());
  if (!l) {
    std::string valid;
    for (const Label& c : catalog_labels(alg)) {
      if (!valid.empty()) valid += ", ";
      valid += c.str();
    }
    throw UsageError("unknown module label '" + text + "' for family " +
                     family_code(alg.spec().family) + "; catalog: " + valid);
  }
  return *l;
}

Document run_tensor(const Algebra& alg, const StructureMaps& sm, const std::string& ltext,
                    const std::string& rtext) {
  Document d;
  d.command = "tensor";
  Label ll = parse_label_or_throw(ltext, alg);
  Label rl = parse_label_or_throw(rtext, alg);
  Rep r1 = make_indec(alg, ll);
  Rep r2 = make_indec(alg, rl);
  Rep prod = tensor_rep(sm, r1, r2);
  Decomposition dec = decompose(alg, prod);
  d.facts.push_back({"left", ll.str() + " (dim " + std::to_string(r1.vdim()) + ")"});
  d.facts.push_back({"right", rl.str() + " (dim " + std::to_string(r2.vdim()) + ")"});
  d.facts.push_back({"product dim", std::to_string(prod.vdim())});
  d.facts.push_back({"decomposition", multiplicity_str(dec.mult)});
  d.columns = {"summand", "multiplicity"};
  for (const auto& [l, c] : dec.mult) {
    d.rows.push_back({l.str(), std::to_string(c)});
  }
  d.report.merge(parameter_notices(alg.spec()));
  d.report.pass("tensor-certified",
                "change of basis conjugates the action onto the canonical block forms");
  return d;
}

/// Matrix entry: rational string/integer, or array of rational strings read
/// as coefficients of 1, q, q^2, ...
Cyc entry_from_json(const CycField& F, const json& v) {
  if (v.is_number_integer()) {
    return F.from_rational(Rat(static_cast<long>(v.get<long long>())));
  }
  if (v.is_string()) {
    return F.from_rational(rat_parse(v.get<std::string>()));
  }
  if (v.is_array()) {
    if (static_cast<int>(v.size()) > F.degree()) {
      throw UsageError("coefficient vector longer than the field degree " +
                       std::to_string(F.degree()));
    }
    std::vector<Rat> coeffs(F.degree(), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_number_integer()) {
        coeffs[i] = Rat(static_cast<long>(v[i].get<long long>()));
      } else if (v[i].is_string()) {
        coeffs[i] = rat_parse(v[i].get<std::string>());
      } else {
        throw UsageError("coefficient entries must be integers or rational strings");
      }
    }
    return Cyc(&F, std::move(coeffs));
  }
  throw UsageError("matrix entries must be integers, rational strings, or coefficient arrays");
}

Mat matrix_from_json(const Algebra& alg, const json& rows, int dim, const std::string& name) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw UsageError("'" + name + "' must be a " + std::to_string(dim) + "x" +
                     std::to_string(dim) + " array of rows");
  }
  Mat m(&alg.field(), dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = rows[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw UsageError("'" + name + "' must be a " + std::to_string(dim) + "x" +
                       std::to_string(dim) + " array of rows");
    }
    for (int c = 0; c < dim; ++c) {
      m.at(r, c) = entry_from_json(alg.field(), row[static_cast<size_t>(c)]);
    }
  }
  return m;
}

Rep rep_from_file(const Algebra& alg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw UsageError(std::string("input file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("input file must hold a JSON object");
  if (j.contains("family") &&
      j["family"].get<std::string>() != family_code(alg.spec().family)) {
    throw UsageError("input file family does not match --family");
  }
  if (j.contains("n") && j["n"].get<int>() != alg.n()) {
    throw UsageError("input file n does not match --n");
  }
  if (j.contains("a") && !(rat_parse(j["a"].get<std::string>()) == alg.spec().a)) {
    throw UsageError("input file a does not match --a");
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw UsageError("input file needs an integer 'dim'");
  }
  int dim = j["dim"].get<int>();
  if (dim < 1) throw UsageError("'dim' must be positive");
  if (!j.contains("g") || !j.contains("x")) {
    throw UsageError("input file needs action matrices 'g' and 'x'");
  }
  Mat g = matrix_from_json(alg, j["g"], dim, "g");
  Mat x = matrix_from_json(alg, j["x"], dim, "x");
  return Rep(&alg, std::move(g), std::move(x));
}

Document run_decompose(const Algebra& alg, bool regular, const std::string& input) {
  Document d;
  d.command = "decompose";
  Rep rep;
  if (regular) {
    rep = regular_rep(alg);
    d.facts.push_back({"input", "regular module (dim " + std::to_string(rep.vdim()) + ")"});
  } else {
    rep = rep_from_file(alg, input);
    d.facts.push_back(
        {"input", input + " (dim " + std::to_string(rep.vdim()) + ")"});
  }
  Decomposition dec = decompose(alg, rep);
  d.facts.push_back({"decomposition", multiplicity_str(dec.mult)});
  d.columns = {"summand", "multiplicity"};
  for (const auto& [l, c] : dec.mult) {
    d.rows.push_back({l.str(), std::to_string(c)});
  }
  d.report.merge(parameter_notices(alg.spec()));
  d.report.pass("decompose-certified",
                "change of basis conjugates the action onto the canonical block forms");
  return d;
}

Document run_green_table(const Algebra& alg, const StructureMaps& sm) {
  Document d;
  d.command = "green-table";
  FusionTable table = compute_fusion_table(sm, env_threads());
  const auto& labels = table.labels();
  d.facts.push_back({"basis size", std::to_string(labels.size())});
  d.columns = {"left", "right", "product"};
  for (size_t i = 0; i < labels.size(); ++i) {
    for (size_t j = 0; j < labels.size(); ++j) {
      d.rows.push_back({labels[i].str(), labels[j].str(),
                        ge_str(table.product_basis(static_cast<int>(i), static_cast<int>(j)))});
    }
  }
  d.report.merge(parameter_notices(alg.spec()));
  d.report.merge(verify_fusion_rules(sm, table));
  d.report.merge(verify_table_associativity(table));
  d.report.merge(commutativity_report(table));
  return d;
}

Document run_presentation(const Algebra& alg, const StructureMaps& sm) {
  Document d;
  d.command = "presentation";
  FusionTable table = compute_fusion_table(sm, env_threads());
  d.facts.push_back({"basis size", std::to_string(table.labels().size())});
  d.report.merge(parameter_notices(alg.spec()));
  d.report.merge(commutativity_report(table));
  d.report.merge(verify_presentation(table));
  return d;
}

Document run_catalog(const Algebra& alg) {
  Document d;
  d.command = "catalog";
  std::vector<Label> labels = catalog_labels(alg);
  d.facts.push_back({"modules", std::to_string(labels.size())});
  d.columns = {"label", "dim", "fingerprint"};
  for (const Label& l : labels) {
    Rep r = make_indec(alg, l);
    d.rows.push_back({l.str(), std::to_string(r.vdim()), rep_fingerprint(r)});
  }
  d.report.merge(parameter_notices(alg.spec()));
  d.report.merge(verify_catalog(alg));
  return d;
}

int emit(const Document& d, const std::string& format, const std::string& output) {
  std::string text;
  if (format == "json") {
    text = render_json(d);
  } else if (format == "csv") {
    text = render_csv(d);
  } else {
    text = render_text(d);
  }
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return 1;
    }
    out << text;
  }
  return (d.report.any_fail() || d.report.any_deviation()) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for a family of (weak) Hopf algebras of dimension 4n / 4n+2"};
  app.require_subcommand(1);

  std::string family = "h4n";
  int n = 2;
  std::string a_text = "1";
  std::string format = "text";
  std::string output;
  app.add_option("--family", family, "Algebra family")
      ->check(CLI::IsMember({"h4n", "wh4n", "h4n-dual", "wh4n-dual"}));
  app.add_option("--n", n, "Half the number of group-like powers (q has order 2n)")
      ->check(CLI::Range(1, 32));
  app.add_option("--a", a_text, "Scalar parameter as an exact rational, e.g. 1 or 3/2");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", output, "Write the report to this file instead of stdout");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "Check the algebra, coalgebra and antipode laws plus the module catalog");
  CLI::App* c_rmatrix = app.add_subcommand(
      "rmatrix", "Build and certify the universal braiding element (family h4n only)");
  CLI::App* c_tensor =
      app.add_subcommand("tensor", "Decompose the tensor product of two catalog modules");
  std::string left_label, right_label;
  c_tensor->add_option("left", left_label, "Left factor label, e.g. M1")->required();
  c_tensor->add_option("right", right_label, "Right factor label, e.g. S2")->required();
  CLI::App* c_decompose = app.add_subcommand(
      "decompose", "Split a module into catalog indecomposables with a certificate");
  bool regular = false;
  std::string input;
  c_decompose->add_flag("--regular", regular, "Use the algebra acting on itself");
  c_decompose->add_option("--input", input, "JSON file with action matrices g and x")
      ->check(CLI::ExistingFile);
  CLI::App* c_table = app.add_subcommand(
      "green-table", "Compute the fusion table and check it against the bundled product rules");
  CLI::App* c_pres = app.add_subcommand(
      "presentation", "Evaluate the generators-and-relations description of the "
                      "representation ring");
  CLI::App* c_catalog = app.add_subcommand(
      "catalog", "List the certified indecomposables with separation fingerprints");
  for (CLI::App* sub : {c_verify, c_rmatrix, c_tensor, c_decompose, c_table, c_pres, c_catalog}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    AlgebraSpec spec;
    auto fam = family_from_code(family);
    if (!fam) throw UsageError("unknown family " + family);
    spec.family = *fam;
    spec.n = n;
    try {
      spec.a = rat_parse(a_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad --a value: ") + e.what());
    }

    Algebra alg(spec);
    Document d;
    if (app.got_subcommand(c_verify)) {
      StructureMaps sm(&alg);
      d = run_verify(alg, sm);
    } else if (app.got_subcommand(c_rmatrix)) {
      if (spec.family != Family::H) {
        throw UsageError("the braiding element is only built for --family h4n");
      }
      StructureMaps sm(&alg);
      d = run_rmatrix(alg, sm);
    } else if (app.got_subcommand(c_tensor)) {
      require_modules_ok(spec);
      StructureMaps sm(&alg);
      d = run_tensor(alg, sm, left_label, right_label);
    } else if (app.got_subcommand(c_decompose)) {
      require_modules_ok(spec);
      if (regular == !input.empty()) {
        throw UsageError("decompose needs exactly one of --regular or --input FILE");
      }
      d = run_decompose(alg, regular, input);
    } else if (app.got_subcommand(c_table)) {
      require_modules_ok(spec);
      StructureMaps sm(&alg);
      d = run_green_table(alg, sm);
    } else if (app.got_subcommand(c_pres)) {
      require_modules_ok(spec);
      StructureMaps sm(&alg);
      d = run_presentation(alg, sm);
    } else if (app.got_subcommand(c_catalog)) {
      require_modules_ok(spec);
      d = run_catalog(alg);
    }
    d.family = family;
    d.n = n;
    d.a = rat_str(spec.a);
    return emit(d, format, output);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
