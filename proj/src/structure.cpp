#include "hardyapprox/structure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardy {

namespace {

SampledCircleFunction zbar_shift(const SampledCircleFunction& s) {
  SampledCircleFunction out(s.n_points);
  for (int j = 0; j < s.n_points; ++j)
    out.values[static_cast<size_t>(j)] =
        std::conj(circle_point(j, s.n_points)) * s.values[static_cast<size_t>(j)];
  return out;
}

SampledCircleFunction z_shift(const SampledCircleFunction& s) {
  SampledCircleFunction out(s.n_points);
  for (int j = 0; j < s.n_points; ++j)
    out.values[static_cast<size_t>(j)] = circle_point(j, s.n_points) * s.values[static_cast<size_t>(j)];
  return out;
}

AnalyticPolynomial reflected_denominator(const FiniteBlaschke& b) {
  AnalyticPolynomial q{{cplx(1.0)}};
  for (const auto& z : b.zeros) q = poly_mul(q, AnalyticPolynomial{{cplx(1.0), -std::conj(z)}});
  return q;
}

cplx mean_ratio(const SampledCircleFunction& num, const SampledCircleFunction& den) {
  cplx acc(0.0);
  for (int j = 0; j < num.n_points; ++j)
    acc += num.values[static_cast<size_t>(j)] / den.values[static_cast<size_t>(j)];
  return acc / double(num.n_points);
}

std::vector<cplx> sorted_canonical(std::vector<cplx> v) {
  std::sort(v.begin(), v.end(), [](const cplx& a, const cplx& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
  return v;
}

}  // namespace

MembershipReport k_theta_membership(const SampledCircleFunction& f, const FiniteBlaschke& theta,
                                    double tol) {
  MembershipReport rep;
  rep.analytic_error = analytic_defect(f);
  const SampledCircleFunction ts = sample(theta, f.n_points);
  rep.conjugate_error = analytic_defect(zbar_shift(ts * conj_samples(f)));
  rep.member = rep.analytic_error < tol && rep.conjugate_error < tol;
  return rep;
}

StructuralCertificate extract_certificate(const SampledCircleFunction& residual,
                                          const FiniteBlaschke& theta, double p, double c_hint) {
  if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("p must lie in [1, inf)");
  validate(theta);
  if (theta.degree() < 1) throw std::invalid_argument("theta must have degree at least 1");
  const int n_grid = residual.n_points;
  const int n = theta.degree();

  StructuralCertificate cert;
  cert.theta = theta;
  cert.p = p;
  cert.c = lp_norm(residual, p);
  if (cert.c <= 0.0) throw std::domain_error("residual is identically zero");
  const double scale = c_hint > 0.0 ? std::max(cert.c, c_hint) : cert.c;

  const SampledCircleFunction theta_s = sample(theta, n_grid);
  const SampledCircleFunction tg = theta_s * residual;
  if (analytic_defect(tg) > 1e-5 * std::max(scale, max_abs(tg)))
    throw std::domain_error("residual is not in conj(theta) H^p");

  SampledCircleFunction phi(n_grid);
  for (int j = 0; j < n_grid; ++j)
    phi.values[static_cast<size_t>(j)] =
        cplx(std::pow(std::abs(residual.values[static_cast<size_t>(j)]) / cert.c, p), 0.0);
  cert.outer_F = outer_from_modulus(phi, &cert.modulus_floored);
  cert.outer_norm_error = std::abs(lp_norm(cert.outer_F, 2.0) - 1.0);

  const SampledCircleFunction f_pow = outer_power(cert.outer_F, 2.0 / p);
  SampledCircleFunction i_raw(n_grid);
  for (int j = 0; j < n_grid; ++j)
    i_raw.values[static_cast<size_t>(j)] =
        tg.values[static_cast<size_t>(j)] / (cert.c * f_pow.values[static_cast<size_t>(j)]);
  for (int j = 0; j < n_grid; ++j)
    cert.unimodularity_error = std::max(
        cert.unimodularity_error, std::abs(std::abs(i_raw.values[static_cast<size_t>(j)]) - 1.0));

  // Rational identification: I F in the model space means I F Q_B is an
  // analytic polynomial of degree <= n-1 whose roots inside the disk are
  // exactly the zeros of I.
  cert.Q_B = reflected_denominator(theta);
  const SampledCircleFunction qb_s = sample(cert.Q_B, n_grid);
  const SampledCircleFunction if_s = i_raw * cert.outer_F;
  const SampledCircleFunction ifq = if_s * qb_s;
  AnalyticPolynomial p_poly = analytic_from_samples(ifq, n - 1);
  p_poly.prune(1e-10);

  std::vector<cplx> lambdas;
  AnalyticPolynomial pf = p_poly;
  if (p_poly.degree() >= 1) {
    for (const auto& r : poly_roots(p_poly)) {
      if (std::abs(r) < 1.0 - 1e-5) lambdas.push_back(r);
    }
    lambdas = sorted_canonical(lambdas);
    for (const auto& l : lambdas) {
      pf = poly_deflate(pf, l);
      pf = poly_mul(pf, AnalyticPolynomial{{cplx(1.0), -std::conj(l)}});
    }
  }

  cert.inner_I.zeros = lambdas;
  cert.inner_I.unimodular_const = cplx(1.0);
  const SampledCircleFunction i_id = sample(cert.inner_I, n_grid);
  cplx u = mean_ratio(i_raw, i_id);
  if (std::abs(u) > 0.0) u /= std::abs(u);
  cert.inner_I.unimodular_const = u;

  // Remove the unimodular constant from P_F so that P_F / Q_B matches the
  // normalized outer factor itself.
  for (auto& c : pf.coeffs) c /= u;
  cert.P_F = pf;
  const SampledCircleFunction pf_s = sample(cert.P_F, n_grid);
  double fit = 0.0;
  for (int j = 0; j < n_grid; ++j)
    fit = std::max(fit, std::abs(pf_s.values[static_cast<size_t>(j)] /
                                     qb_s.values[static_cast<size_t>(j)] -
                                 cert.outer_F.values[static_cast<size_t>(j)]));
  cert.rational_fit_error = fit / std::max(1e-300, max_abs(cert.outer_F));
  cert.rational_form = cert.rational_fit_error < 1e-5;

  if (cert.rational_form) {
    std::vector<cplx> alphas;
    if (cert.P_F.degree() >= 1) {
      for (const auto& r : poly_roots(cert.P_F)) {
        const double m = std::abs(r);
        alphas.push_back(m > 0.0 ? cplx(1.0) / std::conj(r) : cplx(0.0));
      }
    }
    while (static_cast<int>(alphas.size()) < n - 1) alphas.push_back(cplx(0.0));
    cert.alphas = sorted_canonical(alphas);
  }

  const SampledCircleFunction i_final = sample(cert.inner_I, n_grid);
  double recon = 0.0;
  for (int j = 0; j < n_grid; ++j) {
    const cplx model = cert.c * std::conj(theta_s.values[static_cast<size_t>(j)]) *
                       i_final.values[static_cast<size_t>(j)] * f_pow.values[static_cast<size_t>(j)];
    recon = std::max(recon, std::abs(residual.values[static_cast<size_t>(j)] - model));
  }
  cert.reconstruction_error = recon;

  const MembershipReport member =
      k_theta_membership(i_final * cert.outer_F, theta, 1e-6 * std::max(1.0, max_abs(if_s)));
  cert.membership_error = std::max(member.analytic_error, member.conjugate_error);

  const cplx f0 = fourier_coeff(cert.outer_F, 0);
  cert.valid = true;
  auto fail = [&cert](const std::string& why) {
    cert.valid = false;
    if (!cert.failure.empty()) cert.failure += "; ";
    cert.failure += why;
  };
  if (cert.reconstruction_error > 1e-6 * cert.c) fail("reconstruction error above 1e-6 c");
  if (cert.unimodularity_error > 1e-5) fail("inner factor deviates from unit modulus");
  if (cert.outer_norm_error > 1e-8) fail("outer factor is not unit norm");
  if (!member.member) fail("I F leaves the model space");
  if (!(f0.real() > 0.0) || std::abs(f0.imag()) > 1e-8)
    fail("outer factor is not positive at the origin");
  return cert;
}

RootPairing pair_roots(const AnalyticPolynomial& p, double tol) {
  RootPairing out;
  AnalyticPolynomial q = p;
  q.prune(1e-12);
  if (q.degree() < 1) return out;
  const std::vector<cplx> roots = poly_roots(q);
  const size_t n = roots.size();
  std::vector<bool> used(n, false);

  for (size_t i = 0; i < n; ++i) {
    if (used[i] || std::abs(roots[i]) >= 1.0 - tol) continue;
    const cplx target = cplx(1.0) / std::conj(roots[i]);
    const double reach = tol * (1.0 + std::norm(target));
    size_t best = n;
    double best_d = reach;
    for (size_t j = 0; j < n; ++j) {
      if (j == i || used[j]) continue;
      const double d = std::abs(roots[j] - target);
      if (d <= best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best < n) {
      used[i] = used[best] = true;
      out.lambda_pairs.push_back({roots[i], roots[best]});
    } else if (std::abs(roots[i]) < tol) {
      used[i] = true;
      out.lambda_pairs.push_back({roots[i], std::nullopt});
    }
  }

  for (size_t i = 0; i < n; ++i) {
    if (used[i] || std::abs(roots[i]) < 1.0 - tol) continue;
    const double reach = tol * (1.0 + std::norm(roots[i]));
    size_t best = n;
    double best_d = reach;
    for (size_t j = i + 1; j < n; ++j) {
      if (used[j] || std::abs(roots[j]) < 1.0 - tol) continue;
      const double d = std::abs(roots[j] - roots[i]);
      if (d <= best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best < n) {
      used[i] = used[best] = true;
      const cplx mid = 0.5 * (roots[i] + roots[best]);
      out.mu_doubles.push_back(std::abs(mid) >= 1.0 ? cplx(1.0) / std::conj(mid) : mid);
    }
  }

  for (size_t i = 0; i < n; ++i) {
    if (!used[i]) out.leftover.push_back(roots[i]);
  }
  return out;
}

AnalyticPolynomial pairing_polynomial(const RootPairing& pairing, const cplx& leading) {
  AnalyticPolynomial out{{leading}};
  for (const auto& lp : pairing.lambda_pairs) {
    out = poly_mul(out, AnalyticPolynomial{{-lp.lambda, cplx(1.0)}});
    if (lp.partner)
      out = poly_mul(out, AnalyticPolynomial{{cplx(1.0), -std::conj(lp.lambda)}});
  }
  for (const auto& mu : pairing.mu_doubles) {
    const AnalyticPolynomial f{{cplx(1.0), -std::conj(mu)}};
    out = poly_mul(out, poly_mul(f, f));
  }
  return out;
}

DualCertificate dual_extremal(const StructuralCertificate& cert,
                              const SampledCircleFunction* true_residual) {
  DualCertificate dual;
  const int n_grid = cert.outer_F.n_points;
  const double pprime = conjugate_exponent(cert.p);

  const SampledCircleFunction theta_s = sample(cert.theta, n_grid);
  const SampledCircleFunction i_s = sample(cert.inner_I, n_grid);
  const SampledCircleFunction jf = zbar_shift(theta_s * conj_samples(i_s * cert.outer_F));
  const SampledCircleFunction j_s = pointwise_div(jf, cert.outer_F);
  for (const auto& v : j_s.values)
    dual.unimodularity_error = std::max(dual.unimodularity_error, std::abs(std::abs(v) - 1.0));

  // J F lies in the model space as well, so the same polynomial trick
  // identifies J's zeros.
  const int n = cert.theta.degree();
  const AnalyticPolynomial qb = reflected_denominator(cert.theta);
  AnalyticPolynomial pj = analytic_from_samples(jf * sample(qb, n_grid), n - 1);
  pj.prune(1e-10);
  std::vector<cplx> j_zeros;
  if (pj.degree() >= 1) {
    for (const auto& r : poly_roots(pj)) {
      if (std::abs(r) < 1.0 - 1e-5) j_zeros.push_back(r);
    }
  }
  dual.inner_J.zeros = sorted_canonical(j_zeros);
  dual.inner_J.unimodular_const = cplx(1.0);
  cplx u = mean_ratio(j_s, sample(dual.inner_J, n_grid));
  if (std::abs(u) > 0.0) u /= std::abs(u);
  dual.inner_J.unimodular_const = u;

  SampledCircleFunction h = z_shift(j_s);
  if (std::isfinite(pprime)) h = h * outer_power(cert.outer_F, 2.0 / pprime);
  dual.h_g = h;
  dual.norm_error = std::abs(lp_norm(h, pprime) - 1.0);
  dual.positive_freq_error = analytic_defect(zbar_shift(h));

  SampledCircleFunction residual(n_grid);
  if (true_residual) {
    residual = *true_residual;
  } else {
    const SampledCircleFunction f_pow = outer_power(cert.outer_F, 2.0 / cert.p);
    for (int j = 0; j < n_grid; ++j)
      residual.values[static_cast<size_t>(j)] =
          cert.c * std::conj(theta_s.values[static_cast<size_t>(j)]) *
          i_s.values[static_cast<size_t>(j)] * f_pow.values[static_cast<size_t>(j)];
  }
  cplx pairing(0.0);
  for (int j = 0; j < n_grid; ++j)
    pairing += residual.values[static_cast<size_t>(j)] * h.values[static_cast<size_t>(j)];
  dual.pairing_value = pairing / double(n_grid);

  dual.valid = true;
  auto fail = [&dual](const std::string& why) {
    dual.valid = false;
    if (!dual.failure.empty()) dual.failure += "; ";
    dual.failure += why;
  };
  if (dual.norm_error > 1e-8) fail("dual function is not unit norm");
  if (dual.positive_freq_error > 1e-6) fail("dual function leaks outside z H^p'");
  if (dual.unimodularity_error > 1e-5) fail("J deviates from unit modulus");
  if (std::abs(dual.pairing_value - cert.c) > 1e-5 * cert.c) fail("pairing does not attain c");
  return dual;
}

double holder_equality_check(const SampledCircleFunction& residual, const SampledCircleFunction& h_g,
                             double c, double p) {
  double dev = 0.0;
  const double cpow = std::pow(c, 1.0 - p);
  for (int j = 0; j < residual.n_points; ++j) {
    const cplx f = residual.values[static_cast<size_t>(j)];
    const cplx prod = f * h_g.values[static_cast<size_t>(j)];
    dev = std::max(dev, std::abs(prod - cpow * std::pow(std::abs(f), p)));
  }
  return dev;
}

BadlyApproximableReport is_badly_approximable(const TrigPolynomial& g, const FiniteBlaschke& theta,
                                              double p, const ApproxConfig& cfg, bool cross_check) {
  BadlyApproximableReport rep;
  const SampledCircleFunction gs = sample(g, cfg.grid);
  const SampledCircleFunction tg = sample(theta, cfg.grid) * gs;
  if (analytic_defect(tg) > 1e-5 * std::max(1.0, max_abs(tg)))
    throw std::domain_error("g is not in conj(theta) H^p");

  rep.certificate = extract_certificate(gs, theta, p);
  rep.badly = rep.certificate.valid;

  if (cross_check) {
    ApproxConfig run = cfg;
    run.p = p;
    const ApproxResult res = best_approx(g, run);
    rep.cross_distance = res.c;
    rep.cross_pg_norm = res.p_g.max_abs_coeff();
    const double norm_g = lp_norm(gs, p);
    if (std::abs(res.c - norm_g) > 1e-5 * norm_g) rep.badly = false;
    if (rep.cross_pg_norm > 1e-5 * std::max(1.0, max_abs(gs))) rep.badly = false;
  }
  return rep;
}

ReflectionForm reflection_form(const StructuralCertificate& cert, const FiniteBlaschke& b) {
  ReflectionForm form;
  if (!cert.rational_form) {
    form.failure = "certificate carries no rational form";
    return form;
  }
  const int n = b.degree();
  std::vector<cplx> alphas;
  bool roots_ok = true;
  if (cert.P_F.degree() >= 1) {
    for (const auto& r : poly_roots(cert.P_F)) {
      if (std::abs(r) < 1.0 - 1e-5) {
        roots_ok = false;
        continue;
      }
      alphas.push_back(cplx(1.0) / std::conj(r));
    }
  }
  while (static_cast<int>(alphas.size()) < n - 1) alphas.push_back(cplx(0.0));
  form.alphas = sorted_canonical(alphas);
  form.selected.assign(form.alphas.size(), false);

  form.consistent = roots_ok;
  if (!roots_ok) form.failure = "outer numerator has roots inside the disk";
  for (const auto& zero : cert.inner_I.zeros) {
    size_t best = form.alphas.size();
    double best_d = 1e300;
    for (size_t i = 0; i < form.alphas.size(); ++i) {
      if (form.selected[i]) continue;
      const double d = std::abs(form.alphas[i] - zero);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best < form.alphas.size() && best_d <= 1e-5 * (1.0 + std::abs(zero))) {
      form.selected[best] = true;
      form.match_error = std::max(form.match_error, best_d);
    } else {
      form.consistent = false;
      form.match_error = std::max(form.match_error, best_d);
      if (!form.failure.empty()) form.failure += "; ";
      form.failure += "inner zero matches no alpha";
    }
  }
  return form;
}

}  // namespace hardy
