#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cstarineq/convexity.hpp"
#include "cstarineq/errors.hpp"
#include "cstarineq/inequalities.hpp"
#include "cstarineq/linalg.hpp"
#include "cstarineq/localization.hpp"
#include "cstarineq/matrix.hpp"
#include "cstarineq/scalar_function.hpp"
#include "cstarineq/state.hpp"
#include "cstarineq/suite.hpp"

namespace cstarineq::cli {

namespace {

using ojson = nlohmann::ordered_json;

/// Rounds to 12 significant digits so text and json emissions carry the
/// same numeric values.
double round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string fmt4(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[48];
  std::snprintf(buf, sizeof buf, "%10.4f", v);
  return buf;
}

ojson entry_to_json(const Complex& z) {
  if (z.imag() == 0.0) return round12(z.real());
  return ojson::array({round12(z.real()), round12(z.imag())});
}

ojson matrix_to_json(const ComplexMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return ojson{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Complex entry_from_json(const ojson& j, const std::string& what) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  throw ValidationError(what + ": each entry must be a number or a [re, im] pair");
}

ComplexMatrix matrix_from_json(const ojson& j, const std::string& what) {
  if (!j.is_object()) throw ValidationError(what + ": matrix file must be a JSON object");
  for (const char* field : {"rows", "cols", "entries"}) {
    if (!j.contains(field)) throw ValidationError(what + ": missing field '" + field + "'");
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
    throw ValidationError(what + ": rows and cols must be nonnegative integers");
  }
  const std::size_t rows = j["rows"].get<std::size_t>();
  const std::size_t cols = j["cols"].get<std::size_t>();
  if (rows == 0 || cols == 0) throw ValidationError(what + ": matrix must be nonempty");
  const ojson& data = j["entries"];
  if (!data.is_array() || data.size() != rows) {
    throw ValidationError(what + ": entries must be an array of " + std::to_string(rows) +
                          " rows");
  }
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const ojson& row = data[i];
    if (!row.is_array() || row.size() != cols) {
      throw ValidationError(what + ": row " + std::to_string(i) + " must hold exactly " +
                            std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) entries.push_back(entry_from_json(row[k], what));
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

ComplexMatrix load_matrix_file(const std::string& path) {
  std::ifstream input(path);
  if (!input) throw ValidationError("cannot read file: " + path);
  ojson parsed;
  try {
    parsed = ojson::parse(input);
  } catch (const ojson::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return matrix_from_json(parsed, path);
}

std::vector<Complex> diagonal_values(const ComplexMatrix& m, const std::string& what) {
  if (m.rows() == 1 || m.cols() == 1) return m.entries();
  if (m.is_square()) {
    std::vector<Complex> values(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (i != j && m(i, j) != Complex(0.0, 0.0)) {
          throw ValidationError(what + " must be diagonal for the commutative family");
        }
      }
      values[i] = m(i, i);
    }
    return values;
  }
  throw ValidationError(what + " must be a vector or a square diagonal matrix");
}

bool needs_nonnegative_domain(const std::string& label) {
  if (label.rfind("negpow:", 0) == 0) return true;
  if (label.rfind("pow:", 0) == 0) {
    const char* text = label.c_str() + 4;
    char* end = nullptr;
    const double p = std::strtod(text, &end);
    if (end != text && *end == '\0') return p != std::floor(p);
  }
  return false;
}

/// Builds a catalog function whose domain covers the spectrum of an
/// operator with the given norm bound; fractional powers get [0, radius].
ScalarFunction build_function(const std::string& label, double radius) {
  if (needs_nonnegative_domain(label)) return make_catalog_function(label, 0.0, radius);
  return make_catalog_function(label, -radius, radius);
}

std::string paper_layout(const std::string& name, const ComplexMatrix& m) {
  std::string text = name + " =\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    text += "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      text += " " + fmt4(z.real());
      if (z.imag() != 0.0) text += "+" + fmt4(z.imag()) + "i";
    }
    text += " ]\n";
  }
  return text;
}

ojson report_to_json(const InequalityReport& report) {
  ojson j;
  j["family"] = family_name(report.family);
  if (report.exponent) j["exponent"] = round12(*report.exponent);
  if (!report.function_label.empty()) j["function"] = report.function_label;
  j["is_scalar"] = report.is_scalar;
  if (report.is_scalar) {
    j["lhs"] = round12(report.lhs_value);
    j["rhs"] = round12(report.rhs_value);
    j["difference"] = round12(report.difference_value);
  } else {
    j["lhs"] = matrix_to_json(report.lhs_matrix);
    j["rhs"] = matrix_to_json(report.rhs_matrix);
    j["difference"] = matrix_to_json(report.difference_matrix);
  }
  if (report.min_eigenvalue) j["min_eigenvalue"] = round12(*report.min_eigenvalue);
  if (report.difference_det) j["difference_det"] = round12(*report.difference_det);
  if (!report.pure_state_values.empty()) {
    ojson values = ojson::array();
    for (double v : report.pure_state_values) values.push_back(round12(v));
    j["pure_state_values"] = std::move(values);
  }
  j["tolerance"] = round12(report.tolerance);
  j["holds"] = report.holds;
  if (report.degenerate) j["degenerate"] = true;
  return j;
}

/// Text rendering of the same json document: identical numbers, with
/// nested objects indented and multi-line strings printed raw.
void emit_text(std::ostream& out, const ojson& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      emit_text(out, value, indent + 2);
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        out << pad << key << "[" << i << "]:\n";
        emit_text(out, value[i], indent + 2);
      }
    } else if (value.is_string()) {
      const std::string text = value.get<std::string>();
      if (text.find('\n') != std::string::npos) {
        out << pad << key << ":\n" << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
      } else {
        out << pad << key << ": " << text << "\n";
      }
    } else {
      out << pad << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(std::ostream& out, const ojson& document, const std::string& format) {
  if (format == "json") {
    out << document.dump(2) << "\n";
  } else {
    emit_text(out, document, 0);
  }
}

std::optional<double> effective_tolerance(const std::optional<double>& flag_tol) {
  if (flag_tol) return flag_tol;
  if (const char* env = std::getenv("CSTAR_INEQ_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw UsageError("CSTAR_INEQ_TOL must be a decimal literal");
    }
    return value;
  }
  return std::nullopt;
}

// ------------------------------------------------------------- handlers

int run_verify_paper(std::ostream& out, const std::string& format) {
  std::vector<InequalityReport> reports = reproduce_paper_counterexamples();
  ojson doc;
  doc["command"] = "verify-paper";
  doc["inputs"] = ojson::object();
  ojson emitted = ojson::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const InequalityReport& report = reports[i];
    ojson instance;
    instance["instance"] = i + 1;
    const bool difference_is_b_minus_a = report.exponent.value_or(1.0) >= 1.0;
    std::string layout = paper_layout("A", report.lhs_matrix);
    layout += paper_layout("B", report.rhs_matrix);
    layout += paper_layout(difference_is_b_minus_a ? "C = B - A" : "C = A - B",
                           report.difference_matrix);
    instance["layout"] = std::move(layout);
    instance["report"] = report_to_json(report);
    emitted.push_back(std::move(instance));
  }
  doc["reports"] = std::move(emitted);
  doc["exit_code"] = 0;
  emit(out, doc, format);
  return 0;
}

struct CheckArgs {
  std::string family;
  std::string t_path;
  std::string x_path;
  double r = 0.0;
  std::string rho_path;
  std::string f_label;
  std::optional<double> tol;
};

int run_check(std::ostream& out, const std::string& format, const CheckArgs& args) {
  const std::optional<double> tol = effective_tolerance(args.tol);
  ComplexMatrix t = load_matrix_file(args.t_path);
  ComplexMatrix x = load_matrix_file(args.x_path);

  ojson inputs;
  inputs["family"] = args.family;
  inputs["r"] = round12(args.r);
  inputs["t"] = matrix_to_json(t);
  inputs["x"] = matrix_to_json(x);
  if (tol) inputs["tol"] = round12(*tol);

  InequalityReport report;
  if (args.family == "hilbert" || args.family == "hilbert-mccarty") {
    report = check_hilbert_mccarty(t, x, args.r, tol);
  } else if (args.family == "mond-pecaric" || args.family == "mond-pecaric-state") {
    if (args.rho_path.empty() || args.f_label.empty()) {
      throw UsageError("family mond-pecaric needs --rho and --f");
    }
    State rho = make_state(load_matrix_file(args.rho_path));
    inputs["rho"] = matrix_to_json(rho.density);
    inputs["f"] = args.f_label;
    ScalarFunction f = build_function(args.f_label, operator_norm(t) + 1.0);
    report = check_mond_pecaric_state(ModuleOperator{t}, rho, ModuleElement{x}, f, tol);
  } else if (args.family == "state" || args.family == "state-mccarty") {
    if (args.rho_path.empty()) throw UsageError("family state needs --rho");
    State rho = make_state(load_matrix_file(args.rho_path));
    inputs["rho"] = matrix_to_json(rho.density);
    report = check_state_mccarty(ModuleOperator{t}, rho, ModuleElement{x}, args.r, tol);
  } else if (args.family == "norm" || args.family == "norm-mccarty") {
    report = check_norm_mccarty(ModuleOperator{t}, ModuleElement{x}, args.r, tol);
  } else if (args.family == "loewner" || args.family == "loewner-mccarty") {
    report = check_loewner_mccarty(ModuleOperator{t}, ModuleElement{x}, args.r, tol);
  } else if (args.family == "commutative" || args.family == "commutative-loewner") {
    DiagonalAlgebraElement dt(diagonal_values(t, "t"));
    DiagonalAlgebraElement dx(diagonal_values(x, "x"));
    report = check_commutative_loewner(dt, dx, args.r, tol);
  } else {
    throw UsageError("unknown family: " + args.family);
  }

  const int exit_code = report.holds ? 0 : 1;
  ojson doc;
  doc["command"] = "check";
  doc["inputs"] = std::move(inputs);
  doc["reports"] = ojson::array({report_to_json(report)});
  doc["exit_code"] = exit_code;
  emit(out, doc, format);
  return exit_code;
}

struct SearchArgs {
  std::size_t dim = 2;
  double r_min = 2.0;
  double r_max = 3.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string dist = "integer-small";
  std::string family;
};

int run_search(std::ostream& out, const std::string& format, const SearchArgs& args) {
  SearchConfig cfg;
  cfg.dim = args.dim;
  cfg.r_min = args.r_min;
  cfg.r_max = args.r_max;
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  if (args.dist == "real-gaussian") {
    cfg.entry_distribution = EntryDistribution::real_gaussian;
  } else if (args.dist == "complex-gaussian") {
    cfg.entry_distribution = EntryDistribution::complex_gaussian;
  } else if (args.dist == "integer-small") {
    cfg.entry_distribution = EntryDistribution::integer_small;
  } else {
    throw UsageError("unknown distribution: " + args.dist);
  }
  SearchFamily family;
  if (args.family == "loewner-r>1" || args.family == "loewner-r-greater-1") {
    family = SearchFamily::loewner_r_greater_1;
  } else if (args.family == "loewner-r<1" || args.family == "loewner-r-less-1") {
    family = SearchFamily::loewner_r_less_1;
  } else {
    throw UsageError("family " + args.family +
                     " is not searchable; pick loewner-r>1 or loewner-r<1");
  }

  std::vector<SearchFinding> findings = search_counterexamples(cfg, family);

  ojson inputs;
  inputs["family"] = search_family_name(family);
  inputs["dim"] = cfg.dim;
  inputs["r_min"] = round12(cfg.r_min);
  inputs["r_max"] = round12(cfg.r_max);
  inputs["trials"] = cfg.trials;
  inputs["seed"] = cfg.seed;
  inputs["dist"] = distribution_name(cfg.entry_distribution);

  ojson emitted = ojson::array();
  for (const SearchFinding& finding : findings) {
    ojson f;
    f["index"] = finding.index;
    f["r"] = round12(finding.r);
    f["min_eigenvalue"] = round12(finding.min_eigenvalue);
    f["tolerance"] = round12(finding.tolerance);
    f["t"] = matrix_to_json(finding.t);
    f["x"] = matrix_to_json(finding.x);
    emitted.push_back(std::move(f));
  }

  const int exit_code = findings.empty() ? 0 : 1;
  ojson doc;
  doc["command"] = "search";
  doc["inputs"] = std::move(inputs);
  doc["finding_count"] = findings.size();
  doc["reports"] = std::move(emitted);
  doc["exit_code"] = exit_code;
  emit(out, doc, format);
  return exit_code;
}

struct GnsArgs {
  std::size_t m = 0;
  std::size_t n = 0;
  std::string rho_path;
  std::string t_path;
  std::string f_label;
  std::size_t samples = 2;
  std::uint64_t seed = 0;
};

int run_gns(std::ostream& out, const std::string& format, const GnsArgs& args) {
  State rho = make_state(load_matrix_file(args.rho_path));
  ComplexMatrix t = load_matrix_file(args.t_path);
  Localization loc = build_localization(args.m, args.n, rho);
  ModuleOperator op{t};
  InducedOperator induced = induced_operator(loc, op);
  ScalarFunction f = build_function(args.f_label, operator_norm(t) + 1.0);
  TransportReport report = verify_transport(loc, op, f, args.samples, args.seed);

  ojson inputs;
  inputs["m"] = args.m;
  inputs["n"] = args.n;
  inputs["rho"] = matrix_to_json(rho.density);
  inputs["t"] = matrix_to_json(t);
  inputs["f"] = args.f_label;
  inputs["samples"] = args.samples;
  inputs["seed"] = args.seed;

  ojson result;
  result["dim_quotient"] = loc.dim_quotient;
  result["operator_norm_t"] = round12(operator_norm(t));
  result["operator_norm_induced"] = round12(operator_norm(induced.matrix));
  result["samples"] = report.samples;
  result["max_residual_linear"] = round12(report.max_residual_linear);
  result["max_residual_function"] = round12(report.max_residual_function);
  result["max_residual_pairing"] = round12(report.max_residual_pairing);
  result["tolerance"] = round12(report.tolerance);
  result["pass"] = report.pass;

  const int exit_code = report.pass ? 0 : 1;
  ojson doc;
  doc["command"] = "gns";
  doc["inputs"] = std::move(inputs);
  doc["reports"] = ojson::array({std::move(result)});
  doc["exit_code"] = exit_code;
  emit(out, doc, format);
  return exit_code;
}

struct LineArgs {
  std::string f_label;
  double a = 0.0;
  double b = 0.0;
  double x0 = 0.0;
  double eps = 0.0;
};

int run_supporting_line(std::ostream& out, const std::string& format, const LineArgs& args) {
  ScalarFunction f = make_catalog_function(args.f_label, args.a, args.b);
  SupportingLine line = supporting_line(f, args.x0, args.eps);

  ojson inputs;
  inputs["f"] = args.f_label;
  inputs["a"] = round12(args.a);
  inputs["b"] = round12(args.b);
  inputs["x0"] = round12(args.x0);
  inputs["eps"] = round12(args.eps);

  ojson result;
  result["slope"] = round12(line.slope);
  result["intercept"] = round12(line.intercept);
  result["min_margin"] = round12(line.min_margin);
  result["touch_gap"] = round12(line.touch_gap);
  result["grid_points"] = kValidationGridPoints;

  ojson doc;
  doc["command"] = "supporting-line";
  doc["inputs"] = std::move(inputs);
  doc["reports"] = ojson::array({std::move(result)});
  doc["exit_code"] = 0;
  emit(out, doc, format);
  return 0;
}

int run_suite(std::ostream& out, const std::string& format) {
  std::vector<SuiteCheck> checks = run_full_suite();
  const bool all_pass = suite_passed(checks);
  const int exit_code = all_pass ? 0 : 1;

  ojson emitted = ojson::array();
  for (const SuiteCheck& check : checks) {
    ojson j;
    j["module"] = check.module;
    j["name"] = check.name;
    j["pass"] = check.pass;
    j["trials"] = check.trials;
    j["failures"] = check.failures;
    j["worst"] = round12(check.worst);
    j["detail"] = check.detail;
    emitted.push_back(std::move(j));
  }

  if (format == "json") {
    ojson doc;
    doc["command"] = "suite";
    doc["inputs"] = ojson{{"seed", kDefaultSuiteSeed}};
    doc["reports"] = std::move(emitted);
    doc["exit_code"] = exit_code;
    out << doc.dump(2) << "\n";
  } else {
    for (const ojson& j : emitted) {
      out << (j["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << j["module"].get<std::string>()
          << "/" << j["name"].get<std::string>() << ": trials=" << j["trials"].dump()
          << " failures=" << j["failures"].dump() << " worst=" << j["worst"].dump() << " ("
          << j["detail"].get<std::string>() << ")\n";
    }
    std::size_t failed = 0;
    for (const SuiteCheck& check : checks) {
      if (!check.pass) ++failed;
    }
    out << "suite: " << checks.size() << " checks, "
        << (all_pass ? "all passed" : std::to_string(failed) + " failed") << "\n";
  }
  return exit_code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for operator power inequalities"};
  app.name("cstar-ineq");
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&format](CLI::App* target) {
    target->add_option("--out", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };
  add_format(&app);

  CLI::App* verify = app.add_subcommand(
      "verify-paper", "Rerun the two built-in counterexample instances and print them");
  add_format(verify);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "Check one inequality family on given data");
  check->add_option("--family", check_args.family,
                    "hilbert | mond-pecaric | state | norm | loewner | commutative")
      ->required();
  check->add_option("--t", check_args.t_path, "Operator matrix file")->required();
  check->add_option("--x", check_args.x_path, "Module element matrix file")->required();
  check->add_option("--r", check_args.r, "Exponent")->required();
  check->add_option("--rho", check_args.rho_path, "Density matrix file (state families)");
  check->add_option("--f", check_args.f_label, "Convex function label (mond-pecaric)");
  double tol_flag = 0.0;
  CLI::Option* tol_option = check->add_option("--tol", tol_flag, "Verdict tolerance override");
  add_format(check);

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "Random search for ordered-version violations");
  search->add_option("--dim", search_args.dim, "Matrix dimension")->capture_default_str();
  search->add_option("--r-min", search_args.r_min, "Exponent lower bound")->capture_default_str();
  search->add_option("--r-max", search_args.r_max, "Exponent upper bound")->capture_default_str();
  search->add_option("--trials", search_args.trials, "Candidate count")->capture_default_str();
  search->add_option("--seed", search_args.seed, "Generator seed")->capture_default_str();
  search->add_option("--dist", search_args.dist,
                     "real-gaussian | complex-gaussian | integer-small")
      ->capture_default_str();
  search->add_option("--family", search_args.family, "loewner-r>1 | loewner-r<1")->required();
  add_format(search);

  GnsArgs gns_args;
  CLI::App* gns = app.add_subcommand(
      "gns", "Verify operator transport through the state-induced quotient space");
  gns->add_option("--m", gns_args.m, "Operator algebra dimension")->required();
  gns->add_option("--n", gns_args.n, "Coefficient algebra dimension")->required();
  gns->add_option("--rho", gns_args.rho_path, "Density matrix file")->required();
  gns->add_option("--t", gns_args.t_path, "Operator matrix file")->required();
  gns->add_option("--f", gns_args.f_label, "Function label for calculus transport")->required();
  gns->add_option("--samples", gns_args.samples, "Random probes")->capture_default_str();
  gns->add_option("--seed", gns_args.seed, "Probe seed")->capture_default_str();
  add_format(gns);

  LineArgs line_args;
  CLI::App* line = app.add_subcommand("supporting-line",
                                      "Construct a supporting line for a convex catalog function");
  line->add_option("--f", line_args.f_label, "Catalog function label")->required();
  line->add_option("--a", line_args.a, "Domain lower endpoint")->required();
  line->add_option("--b", line_args.b, "Domain upper endpoint")->required();
  line->add_option("--x0", line_args.x0, "Base point")->required();
  line->add_option("--eps", line_args.eps, "Touch gap bound")->required();
  add_format(line);

  CLI::App* suite = app.add_subcommand("suite", "Run every property suite");
  add_format(suite);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cstar-ineq");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return run_verify_paper(out, format);
    if (app.got_subcommand(check)) {
      if (tol_option->count() > 0) check_args.tol = tol_flag;
      return run_check(out, format, check_args);
    }
    if (app.got_subcommand(search)) return run_search(out, format, search_args);
    if (app.got_subcommand(gns)) return run_gns(out, format, gns_args);
    if (app.got_subcommand(line)) return run_supporting_line(out, format, line_args);
    if (app.got_subcommand(suite)) return run_suite(out, format);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace cstarineq::cli
