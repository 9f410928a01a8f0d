#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include <Eigen/Core>

#include "hardyapprox/json_io.hpp"
#include "hardyapprox/parallel.hpp"
#include "hardyapprox/selftest.hpp"

namespace {

using hardy::ojson;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitStructure = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOpts {
  double p = 1.0;
  int budget = -1;
  int grid = 4096;
  double tol = 1e-13;
  int max_iters = 4000;
  unsigned seed = 0;
  std::string input;
  std::string output;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--p", o.p, "Norm exponent p in [1, inf)");
  cmd->add_option("--budget", o.budget,
                  "Approximant degree budget (-1 selects automatically)");
  cmd->add_option("--grid", o.grid, "Circle grid size, a power of two");
  cmd->add_option("--tol", o.tol, "Relative stopping tolerance");
  cmd->add_option("--max-iters", o.max_iters, "Solver iteration cap");
  cmd->add_option("--seed", o.seed,
                  "0 = default start, otherwise perturbed deterministically");
  cmd->add_option("--input", o.input,
                  "Input JSON: a path, inline JSON, or - for stdin");
  cmd->add_option("--output", o.output, "Output path (default stdout)");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

hardy::ApproxConfig to_config(const CommonOpts& o) {
  hardy::ApproxConfig cfg;
  cfg.p = o.p;
  cfg.degree_budget = o.budget;
  cfg.grid = o.grid;
  cfg.tol = o.tol;
  cfg.max_iters = o.max_iters;
  cfg.seed = o.seed;
  return cfg;
}

nlohmann::json load_input(const CommonOpts& o) {
  if (o.input.empty()) {
    throw std::invalid_argument("--input is required for this command");
  }
  std::string text;
  if (o.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    const size_t first = o.input.find_first_not_of(" \t\r\n");
    if (first != std::string::npos &&
        (o.input[first] == '{' || o.input[first] == '[')) {
      text = o.input;
    } else {
      std::ifstream f(o.input);
      if (!f) throw IoError("cannot open input file: " + o.input);
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
  }
  return nlohmann::json::parse(text);
}

void csv_scalar(const ojson& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::detail::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", j.get<double>());
      out += buf;
      return;
    }
    case nlohmann::detail::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      return;
    case nlohmann::detail::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      return;
    case nlohmann::detail::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case nlohmann::detail::value_t::string: {
      out += "\"";
      for (char c : j.get<std::string>()) {
        if (c == '"') {
          out += "\"\"";
        } else {
          out += c;
        }
      }
      out += "\"";
      return;
    }
    default:
      out += "null";
      return;
  }
}

void csv_flatten(const ojson& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      csv_flatten(it.value(), prefix + "/" + it.key(), out);
    }
    return;
  }
  if (j.is_array()) {
    int i = 0;
    for (const auto& el : j) {
      csv_flatten(el, prefix + "/" + std::to_string(i), out);
      ++i;
    }
    return;
  }
  out += prefix;
  out += ",";
  csv_scalar(j, out);
  out += "\n";
}

std::string render(const ojson& doc, const std::string& format) {
  if (format == "csv") {
    std::string out = "key,value\n";
    csv_flatten(doc, "", out);
    return out;
  }
  return hardy::dump_deterministic(doc);
}

void write_output(const CommonOpts& o, const ojson& doc) {
  const std::string text = render(doc, o.format);
  if (o.output.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw IoError("cannot open output file: " + o.output);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw IoError("failed writing output file: " + o.output);
}

ojson make_doc(const std::string& command, const CommonOpts& o,
               const nlohmann::json* input_echo) {
  ojson doc;
  doc["command"] = command;
  ojson versions;
  versions["hardyapprox"] = HARDYAPPROX_VERSION;
  {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%d.%d.%d", EIGEN_WORLD_VERSION,
                  EIGEN_MAJOR_VERSION, EIGEN_MINOR_VERSION);
    versions["eigen"] = buf;
  }
  doc["versions"] = versions;
  ojson cfg;
  cfg["p"] = o.p;
  cfg["budget"] = o.budget;
  cfg["grid"] = o.grid;
  cfg["tol"] = o.tol;
  cfg["max_iters"] = o.max_iters;
  cfg["seed"] = o.seed;
  cfg["threads"] = hardy::thread_cap();
  doc["config"] = cfg;
  if (input_echo != nullptr) doc["input"] = ojson(*input_echo);
  return doc;
}

// Input is either a trig polynomial or a numerator/blaschke quotient;
// returns true for the trig case.
bool parse_symbol_input(const nlohmann::json& j, hardy::TrigPolynomial* trig,
                        hardy::RationalDiskFunction* rational) {
  if (j.is_object() && j.contains("numerator")) {
    if (!j.contains("blaschke")) {
      throw std::invalid_argument(
          "rational input needs both \"numerator\" and \"blaschke\"");
    }
    rational->numerator = hardy::analytic_from_json(j["numerator"]);
    rational->denominator_blaschke = hardy::blaschke_from_json(j["blaschke"]);
    return false;
  }
  *trig = hardy::trig_from_json(j);
  return true;
}

hardy::cplx parse_complex_arg(const std::string& s, const char* what) {
  try {
    return hardy::complex_from_json(nlohmann::json::parse(s));
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) +
                                " must be a number or [re, im]");
  }
}

int run_approx(const CommonOpts& o) {
  const nlohmann::json in = load_input(o);
  hardy::TrigPolynomial trig;
  hardy::RationalDiskFunction rational;
  const bool is_trig = parse_symbol_input(in, &trig, &rational);
  const hardy::ApproxConfig cfg = to_config(o);
  const hardy::ApproxResult res =
      is_trig ? hardy::best_approx(trig, cfg) : hardy::best_approx(rational, cfg);
  ojson doc = make_doc("approx", o, &in);
  doc["result"] = hardy::to_json(res);
  write_output(o, doc);
  return res.converged ? kExitOk : kExitNoConvergence;
}

void parse_residual_input(const nlohmann::json& in, const CommonOpts& o,
                          hardy::SampledCircleFunction* residual,
                          hardy::FiniteBlaschke* theta, double* c_hint) {
  if (!in.is_object() || !in.contains("residual") || !in.contains("theta")) {
    throw std::invalid_argument(
        "input needs a \"residual\" trig polynomial and a \"theta\" blaschke "
        "product");
  }
  const hardy::TrigPolynomial r = hardy::trig_from_json(in["residual"]);
  *theta = hardy::blaschke_from_json(in["theta"]);
  *residual = hardy::sample(r, o.grid);
  *c_hint = in.value("c", -1.0);
}

int run_certify(const CommonOpts& o) {
  const nlohmann::json in = load_input(o);
  hardy::SampledCircleFunction residual;
  hardy::FiniteBlaschke theta;
  double c_hint = -1.0;
  parse_residual_input(in, o, &residual, &theta, &c_hint);
  const hardy::StructuralCertificate cert =
      hardy::extract_certificate(residual, theta, o.p, c_hint);
  ojson doc = make_doc("certify", o, &in);
  doc["result"] = hardy::to_json(cert);
  write_output(o, doc);
  return cert.valid ? kExitOk : kExitStructure;
}

int run_dual(const CommonOpts& o) {
  const nlohmann::json in = load_input(o);
  hardy::SampledCircleFunction residual;
  hardy::FiniteBlaschke theta;
  double c_hint = -1.0;
  parse_residual_input(in, o, &residual, &theta, &c_hint);
  const hardy::StructuralCertificate cert =
      hardy::extract_certificate(residual, theta, o.p, c_hint);
  const hardy::DualCertificate dual = hardy::dual_extremal(cert, &residual);
  ojson doc = make_doc("dual", o, &in);
  ojson result;
  result["certificate"] = hardy::to_json(cert);
  result["dual"] = hardy::to_json(dual);
  result["pointwise_equality_defect"] =
      hardy::holder_equality_check(residual, dual.h_g, cert.c, o.p);
  doc["result"] = result;
  write_output(o, doc);
  return (cert.valid && dual.valid) ? kExitOk : kExitStructure;
}

int run_badly(const CommonOpts& o, bool cross_check) {
  const nlohmann::json in = load_input(o);
  if (!in.is_object() || !in.contains("g") || !in.contains("theta")) {
    throw std::invalid_argument(
        "input needs a \"g\" trig polynomial and a \"theta\" blaschke "
        "product");
  }
  const hardy::TrigPolynomial g = hardy::trig_from_json(in["g"]);
  const hardy::FiniteBlaschke theta = hardy::blaschke_from_json(in["theta"]);
  const hardy::BadlyApproximableReport rep =
      hardy::is_badly_approximable(g, theta, o.p, to_config(o), cross_check);
  ojson doc = make_doc("badly", o, &in);
  ojson result;
  result["badly"] = rep.badly;
  result["certificate"] = hardy::to_json(rep.certificate);
  result["cross_distance"] = rep.cross_distance;
  result["cross_pg_norm"] = rep.cross_pg_norm;
  doc["result"] = result;
  write_output(o, doc);
  return kExitOk;
}

int run_interp_etheta(const CommonOpts& o) {
  const nlohmann::json in = load_input(o);
  if (!in.is_object() || !in.contains("f1") || !in.contains("theta")) {
    throw std::invalid_argument(
        "input needs an \"f1\" polynomial and a \"theta\" blaschke product");
  }
  const hardy::FiniteBlaschke theta = hardy::blaschke_from_json(in["theta"]);
  const nlohmann::json& f1 = in["f1"];
  hardy::InterpolationResult res;
  if (f1.is_object() && f1.contains("coeffs") && f1["coeffs"].is_array()) {
    res = hardy::interpolate_etheta(hardy::analytic_from_json(f1), theta, o.p,
                                    to_config(o));
  } else {
    res = hardy::interpolate_etheta(hardy::trig_from_json(f1), theta, o.p,
                                    to_config(o));
  }
  ojson doc = make_doc("interp-etheta", o, &in);
  doc["result"] = hardy::to_json(res);
  write_output(o, doc);
  return res.converged ? kExitOk : kExitNoConvergence;
}

int run_schur(const CommonOpts& o) {
  const nlohmann::json in = load_input(o);
  if (!in.is_object() || !in.contains("a") || !in["a"].is_array()) {
    throw std::invalid_argument(
        "input needs \"a\": the Taylor data [a0, a1, ...]");
  }
  hardy::SchurProblem prob;
  for (const auto& el : in["a"]) {
    prob.a.push_back(hardy::complex_from_json(el));
  }
  const hardy::InterpolationResult res = hardy::schur_minimal(prob, o.grid);
  ojson doc = make_doc("schur", o, &in);
  doc["result"] = hardy::to_json(res);
  write_output(o, doc);
  return res.converged ? kExitOk : kExitNoConvergence;
}

int run_pick(const CommonOpts& o) {
  const nlohmann::json in = load_input(o);
  if (!in.is_object() || !in.contains("nodes") || !in.contains("values")) {
    throw std::invalid_argument(
        "input needs \"nodes\" and \"values\" arrays of equal length");
  }
  hardy::PickProblem prob;
  for (const auto& el : in["nodes"]) {
    prob.nodes.push_back(hardy::complex_from_json(el));
  }
  for (const auto& el : in["values"]) {
    prob.values.push_back(hardy::complex_from_json(el));
  }
  hardy::PickOptions popts;
  popts.grid = o.grid;
  const hardy::InterpolationResult res = hardy::pick_minimal(prob, popts);
  ojson doc = make_doc("pick", o, &in);
  doc["result"] = hardy::to_json(res);
  write_output(o, doc);
  return res.converged ? kExitOk : kExitNoConvergence;
}

int run_extremal(const CommonOpts& o, const std::string& a0_str,
                 const std::string& a1_str) {
  const hardy::cplx a0 = parse_complex_arg(a0_str, "--a0");
  const hardy::cplx a1 = parse_complex_arg(a1_str, "--a1");
  const hardy::ExtremalFunctional res = hardy::extremal_functional(a0, a1);
  ojson doc = make_doc("extremal", o, nullptr);
  ojson input;
  input["a0"] = hardy::complex_to_json(a0);
  input["a1"] = hardy::complex_to_json(a1);
  doc["input"] = input;
  ojson result;
  result["value"] = res.value;
  result["maximizer"] = hardy::to_json(res.extremal_f);
  result["description"] = res.description;
  result["certificate"] = hardy::to_json(res.certificate);
  doc["result"] = result;
  write_output(o, doc);
  return kExitOk;
}

int run_selftest(const CommonOpts& o) {
  const std::vector<hardy::CheckOutcome> outcomes =
      hardy::run_acceptance_suite();
  for (const auto& oc : outcomes) {
    std::printf("%s %s (%.2fs)%s%s\n", oc.pass ? "PASS" : "FAIL",
                oc.name.c_str(), oc.seconds,
                oc.detail.empty() ? "" : ": ",
                oc.detail.c_str());
  }
  std::fflush(stdout);
  if (!o.output.empty()) {
    ojson doc = make_doc("selftest", o, nullptr);
    ojson checks = ojson::array();
    for (const auto& oc : outcomes) {
      ojson row;
      row["name"] = oc.name;
      row["pass"] = oc.pass;
      row["seconds"] = oc.seconds;
      row["detail"] = oc.detail;
      checks.push_back(row);
    }
    doc["result"] = ojson{{"checks", checks},
                          {"all_passed", hardy::all_passed(outcomes)}};
    write_output(o, doc);
  }
  return hardy::all_passed(outcomes) ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Best analytic approximation on the unit circle: L^p distances, "
      "residual factorizations, dual certificates, and minimal-norm "
      "interpolation"};
  app.require_subcommand(1);

  CommonOpts opts;
  bool cross_check = true;
  std::string a0_str = "0";
  std::string a1_str = "0";

  CLI::App* c_approx = app.add_subcommand(
      "approx", "Best degree-budgeted analytic approximation of g");
  add_common(c_approx, opts);
  CLI::App* c_certify = app.add_subcommand(
      "certify", "Factor a residual as c * conj(theta) * I * F^(2/p)");
  add_common(c_certify, opts);
  CLI::App* c_dual = app.add_subcommand(
      "dual", "Certificate plus the dual extremal function h_g");
  add_common(c_dual, opts);
  CLI::App* c_badly = app.add_subcommand(
      "badly", "Decide whether g is badly approximable for theta");
  add_common(c_badly, opts);
  c_badly->add_flag("--cross-check,!--no-cross-check", cross_check,
                    "Cross-check the verdict against a fresh solve");
  CLI::App* c_interp = app.add_subcommand(
      "interp-etheta", "Minimal L^p interpolant of f1 modulo theta H^p");
  add_common(c_interp, opts);
  CLI::App* c_schur = app.add_subcommand(
      "schur", "Minimal sup-norm function with given Taylor data at 0");
  add_common(c_schur, opts);
  CLI::App* c_pick = app.add_subcommand(
      "pick", "Minimal sup-norm function with given node values");
  add_common(c_pick, opts);
  CLI::App* c_extremal = app.add_subcommand(
      "extremal", "Largest |a1 f(0) + a0 f'(0)| over analytic |f| <= 1");
  add_common(c_extremal, opts);
  c_extremal->add_option("--a0", a0_str, "Coefficient a0 (number or [re,im])");
  c_extremal->add_option("--a1", a1_str, "Coefficient a1 (number or [re,im])");
  CLI::App* c_selftest = app.add_subcommand(
      "selftest", "Run the acceptance checks and print one line per check");
  add_common(c_selftest, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_approx->parsed()) return run_approx(opts);
    if (c_certify->parsed()) return run_certify(opts);
    if (c_dual->parsed()) return run_dual(opts);
    if (c_badly->parsed()) return run_badly(opts, cross_check);
    if (c_interp->parsed()) return run_interp_etheta(opts);
    if (c_schur->parsed()) return run_schur(opts);
    if (c_pick->parsed()) return run_pick(opts);
    if (c_extremal->parsed()) return run_extremal(opts, a0_str, a1_str);
    if (c_selftest->parsed()) return run_selftest(opts);
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const nlohmann::json::parse_error& e) {
    std::fprintf(stderr, "error: input is not valid JSON: %s\n", e.what());
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "error: malformed input document: %s\n", e.what());
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitStructure;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  }
  return kExitOk;
}
