#include "hardyapprox/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hardy {

namespace {

using value_t = nlohmann::detail::value_t;

AnalyticPolynomial truncated_coeffs(const SampledCircleFunction& s,
                                    int max_degree) {
  const double scale = max_abs(s);
  if (scale <= 0.0) return AnalyticPolynomial{};
  const int cap = std::min(max_degree, s.n_points / 4);
  return analytic_from_samples(s, cap, 1e-13 * scale);
}

TrigPolynomial truncated_trig(const SampledCircleFunction& s) {
  const double scale = max_abs(s);
  if (scale <= 0.0) return TrigPolynomial{};
  return trig_from_samples(s, s.n_points / 4, 1e-12 * scale);
}

void dump_double(double v, std::string& out) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

bool is_scalar(const ojson& j) {
  return !j.is_object() && !j.is_array();
}

void dump_rec(const ojson& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
  const std::string close_pad(static_cast<size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += ojson(it.key()).dump();
        out += ": ";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      out += "\n";
      out += close_pad;
      out += "}";
      return;
    }
    case value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& el : j) {
        if (!is_scalar(el)) flat = false;
      }
      if (flat) {
        out += "[";
        bool first = true;
        for (const auto& el : j) {
          if (!first) out += ", ";
          first = false;
          dump_rec(el, out, indent, depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& el : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_rec(el, out, indent, depth + 1);
      }
      out += "\n";
      out += close_pad;
      out += "]";
      return;
    }
    case value_t::number_float:
      dump_double(j.get<double>(), out);
      return;
    case value_t::number_integer:
      out += std::to_string(j.get<long long>());
      return;
    case value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      return;
    case value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case value_t::string:
      out += j.dump();
      return;
    default:
      out += "null";
      return;
  }
}

}  // namespace

ojson complex_to_json(const cplx& z) {
  return ojson::array({z.real(), z.imag()});
}

cplx complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return cplx(j[0].get<double>(), j[1].get<double>());
  }
  throw std::invalid_argument(
      "complex value must be a number or a [re, im] pair");
}

ojson to_json(const TrigPolynomial& t) {
  ojson coeffs = ojson::object();
  for (const auto& [k, v] : t.coeffs) {
    coeffs[std::to_string(k)] = complex_to_json(v);
  }
  return ojson{{"coeffs", coeffs}};
}

ojson to_json(const AnalyticPolynomial& p) {
  ojson coeffs = ojson::array();
  for (const cplx& c : p.coeffs) coeffs.push_back(complex_to_json(c));
  return ojson{{"coeffs", coeffs}};
}

ojson to_json(const FiniteBlaschke& b) {
  ojson zeros = ojson::array();
  for (const cplx& z : b.zeros) zeros.push_back(complex_to_json(z));
  return ojson{{"zeros", zeros},
               {"const", complex_to_json(b.unimodular_const)}};
}

ojson to_json(const SampledCircleFunction& s) {
  ojson values = ojson::array();
  for (const cplx& v : s.values) values.push_back(complex_to_json(v));
  return ojson{{"n_points", s.n_points}, {"values", values}};
}

ojson to_json(const ApproxResult& r) {
  ojson doc;
  doc["c"] = r.c;
  doc["converged"] = r.converged;
  doc["iterations"] = r.iterations;
  doc["p_g"] = to_json(r.p_g);
  doc["residual_coeffs"] = to_json(truncated_trig(r.residual));
  doc["residual_linf"] = max_abs(r.residual);
  return doc;
}

ojson to_json(const StructuralCertificate& c) {
  ojson doc;
  doc["c"] = c.c;
  doc["p"] = c.p;
  doc["theta"] = to_json(c.theta);
  doc["inner_I"] = to_json(c.inner_I);
  doc["outer_F"] = to_json(truncated_coeffs(c.outer_F, 256));
  if (c.rational_form) {
    doc["P_F"] = to_json(c.P_F);
    doc["Q_B"] = to_json(c.Q_B);
  }
  doc["rational_form"] = c.rational_form;
  ojson alphas = ojson::array();
  for (const cplx& a : c.alphas) alphas.push_back(complex_to_json(a));
  doc["alphas"] = alphas;
  ojson diag;
  diag["reconstruction_error"] = c.reconstruction_error;
  diag["unimodularity_error"] = c.unimodularity_error;
  diag["membership_error"] = c.membership_error;
  diag["outer_norm_error"] = c.outer_norm_error;
  diag["rational_fit_error"] = c.rational_fit_error;
  diag["modulus_floored"] = c.modulus_floored;
  doc["diagnostics"] = diag;
  doc["valid"] = c.valid;
  doc["failure"] = c.failure;
  return doc;
}

ojson to_json(const DualCertificate& d) {
  ojson doc;
  doc["inner_J"] = to_json(d.inner_J);
  doc["h_g_coeffs"] = to_json(truncated_trig(d.h_g));
  doc["pairing_value"] = complex_to_json(d.pairing_value);
  ojson diag;
  diag["norm_error"] = d.norm_error;
  diag["positive_freq_error"] = d.positive_freq_error;
  diag["unimodularity_error"] = d.unimodularity_error;
  doc["diagnostics"] = diag;
  doc["valid"] = d.valid;
  doc["failure"] = d.failure;
  return doc;
}

ojson to_json(const RootPairing& p) {
  ojson pairs = ojson::array();
  for (const auto& lp : p.lambda_pairs) {
    ojson row;
    row["lambda"] = complex_to_json(lp.lambda);
    if (lp.partner.has_value()) {
      row["partner"] = complex_to_json(*lp.partner);
    } else {
      row["partner"] = nullptr;
    }
    pairs.push_back(row);
  }
  ojson mus = ojson::array();
  for (const cplx& m : p.mu_doubles) mus.push_back(complex_to_json(m));
  ojson rest = ojson::array();
  for (const cplx& r : p.leftover) rest.push_back(complex_to_json(r));
  return ojson{{"lambda_pairs", pairs}, {"mu_doubles", mus},
               {"leftover", rest}};
}

ojson to_json(const InterpolationResult& r) {
  ojson doc;
  doc["sigma"] = r.sigma;
  doc["converged"] = r.converged;
  doc["iterations"] = r.iterations;
  if (!r.f.coeffs.empty()) {
    doc["f"] = to_json(r.f);
  } else if (r.f_samples.n_points > 0) {
    doc["f"] = to_json(truncated_coeffs(r.f_samples, 128));
  }
  ojson zeros = ojson::array();
  for (const cplx& z : r.blaschke_zeros) zeros.push_back(complex_to_json(z));
  doc["zeros"] = zeros;
  if (r.has_allpass_form) doc["allpass_form"] = to_json(r.allpass_form);
  doc["allpass_deviation"] = r.allpass_deviation;
  doc["unique_top"] = r.unique_top;
  doc["sigma_pick"] = r.sigma_pick;
  doc["sigma_hankel"] = r.sigma_hankel;
  doc["interpolation_error"] = r.interpolation_error;
  if (r.has_certificate) doc["certificate"] = to_json(r.certificate);
  return doc;
}

TrigPolynomial trig_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object()) {
    throw std::invalid_argument(
        "trig polynomial must be {\"coeffs\": {\"<freq>\": [re, im], ...}}");
  }
  TrigPolynomial t;
  for (const auto& [key, val] : j["coeffs"].items()) {
    size_t used = 0;
    int freq = 0;
    try {
      freq = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size()) {
      throw std::invalid_argument("frequency key '" + key +
                                  "' is not an integer");
    }
    t.coeffs[freq] = complex_from_json(val);
  }
  t.prune(0.0);
  return t;
}

AnalyticPolynomial analytic_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument(
        "analytic polynomial must be {\"coeffs\": [[re, im], ...]}");
  }
  AnalyticPolynomial p;
  for (const auto& el : j["coeffs"]) p.coeffs.push_back(complex_from_json(el));
  return p;
}

FiniteBlaschke blaschke_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("zeros") || !j["zeros"].is_array()) {
    throw std::invalid_argument(
        "blaschke product must be {\"zeros\": [[re, im], ...], \"const\": "
        "[re, im]}");
  }
  FiniteBlaschke b;
  for (const auto& el : j["zeros"]) b.zeros.push_back(complex_from_json(el));
  if (j.contains("const")) b.unimodular_const = complex_from_json(j["const"]);
  validate(b);
  return b;
}

std::string dump_deterministic(const ojson& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  out += "\n";
  return out;
}

}  // namespace hardy
