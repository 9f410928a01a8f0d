#pragma once

#include <optional>
#include <string>

#include "hardyapprox/approx.hpp"

namespace hardy {

struct MembershipReport {
  bool member = false;
  // Largest negative-frequency coefficient of f itself.
  double analytic_error = 0.0;
  // Same for zbar * theta * conj(f); both must vanish for the model space.
  double conjugate_error = 0.0;
};

MembershipReport k_theta_membership(const SampledCircleFunction& f, const FiniteBlaschke& theta,
                                    double tol);

// The residual factorization residual = c * conj(theta) * I * F^(2/p) with
// I a finite Blaschke product and F outer of unit grid L^2 norm, F(0) > 0.
struct StructuralCertificate {
  double c = 0.0;
  FiniteBlaschke inner_I;
  SampledCircleFunction outer_F;
  // F = P_F / Q_B with Q_B = prod(1 - conj(beta_i) z); set when the rational
  // identification agrees with the sampled F.
  AnalyticPolynomial P_F;
  AnalyticPolynomial Q_B;
  bool rational_form = false;
  FiniteBlaschke theta;
  double p = 1.0;
  double reconstruction_error = 0.0;
  std::vector<cplx> alphas;

  double unimodularity_error = 0.0;
  double membership_error = 0.0;
  double outer_norm_error = 0.0;
  double rational_fit_error = 0.0;
  bool modulus_floored = false;
  bool valid = false;
  std::string failure;
};

StructuralCertificate extract_certificate(const SampledCircleFunction& residual,
                                          const FiniteBlaschke& theta, double p,
                                          double c_hint = -1.0);

struct LambdaPair {
  cplx lambda;
  // Reflected root near 1/conj(lambda); absent when lambda ~ 0 and the
  // partner sits beyond the resolvable range (the factor degenerates to z).
  std::optional<cplx> partner;
};

struct RootPairing {
  std::vector<LambdaPair> lambda_pairs;
  std::vector<cplx> mu_doubles;
  std::vector<cplx> leftover;
};

RootPairing pair_roots(const AnalyticPolynomial& p, double tol = 1e-5);

// Rebuilds prod (z - lambda)(1 - conj(lambda) z) * prod (1 - conj(mu) z)^2
// from a pairing, for round-trip checks.
AnalyticPolynomial pairing_polynomial(const RootPairing& pairing, const cplx& leading = cplx(1.0));

struct DualCertificate {
  FiniteBlaschke inner_J;
  SampledCircleFunction h_g;
  cplx pairing_value;
  double norm_error = 0.0;
  // Leakage of h_g at frequencies <= 0 (h_g must lie in z H^{p'}).
  double positive_freq_error = 0.0;
  double unimodularity_error = 0.0;
  bool valid = false;
  std::string failure;
};

// Builds h_g = z J F^(2/p') with I J F = zbar theta conj(F). The pairing
// integral uses *true_residual when given, otherwise the certificate's own
// reconstruction.
DualCertificate dual_extremal(const StructuralCertificate& cert,
                              const SampledCircleFunction* true_residual = nullptr);

// sup_j |residual_j * h_j - c^(1-p) |residual_j|^p|.
double holder_equality_check(const SampledCircleFunction& residual, const SampledCircleFunction& h_g,
                             double c, double p);

struct BadlyApproximableReport {
  bool badly = false;
  StructuralCertificate certificate;
  // Filled by cross-check mode: the solver's distance and approximant norm.
  double cross_distance = -1.0;
  double cross_pg_norm = -1.0;
};

BadlyApproximableReport is_badly_approximable(const TrigPolynomial& g, const FiniteBlaschke& theta,
                                              double p, const ApproxConfig& cfg,
                                              bool cross_check = false);

// The alpha form of a certificate: P_F = c1 * prod(1 - conj(alpha_i) z) with
// the inner factor a sub-product of (z - alpha_i)/(1 - conj(alpha_i) z).
struct ReflectionForm {
  std::vector<cplx> alphas;
  std::vector<bool> selected;
  double match_error = 0.0;
  bool consistent = false;
  std::string failure;
};

ReflectionForm reflection_form(const StructuralCertificate& cert, const FiniteBlaschke& b);

}  // namespace hardy
