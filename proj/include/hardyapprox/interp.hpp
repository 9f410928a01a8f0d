#pragma once

#include "hardyapprox/structure.hpp"

namespace hardy {

// Minimal-norm bounded analytic interpolation of fixed Taylor data at 0.
struct SchurProblem {
  std::vector<cplx> a;
};

// Nodes strictly inside the disk, pairwise distinct.
struct PickProblem {
  std::vector<cplx> nodes;
  std::vector<cplx> values;
};

struct InterpolationResult {
  // Polynomial representation when one exists (the model-space path with
  // theta = z^n); otherwise empty and f_samples carries the function.
  AnalyticPolynomial f;
  SampledCircleFunction f_samples;
  double sigma = 0.0;
  SampledCircleFunction residual;
  // sup | |f| - sigma | over the grid, for the sup-norm problems.
  double allpass_deviation = 0.0;
  // Zeros of f inside the disk: f = sigma * const * prod (z-l)/(1-conj(l)z).
  std::vector<cplx> blaschke_zeros;
  FiniteBlaschke allpass_form;
  bool has_allpass_form = false;
  bool unique_top = true;
  int iterations = 0;
  bool converged = true;
  StructuralCertificate certificate;
  bool has_certificate = false;
  // Pick path: bisection value and finite-section value, two independent
  // computations of the same number.
  double sigma_pick = -1.0;
  double sigma_hankel = -1.0;
  // Worst relative defect of the interpolation conditions.
  double interpolation_error = 0.0;
};

// Unique minimal L^p interpolant f2 of f1 modulo theta H^p: f2 = f1 - theta
// p_g where p_g best-approximates conj(theta) f1. sigma = ||f2||_p.
InterpolationResult interpolate_etheta(const AnalyticPolynomial& f1, const FiniteBlaschke& theta,
                                       double p, const ApproxConfig& cfg);
InterpolationResult interpolate_etheta(const TrigPolynomial& f1, const FiniteBlaschke& theta,
                                       double p, const ApproxConfig& cfg);

// Minimal sup-norm f with f^(k)(0)/k! = a_k, k < n, through the exact n x n
// Hankel matrix of the data: sigma is its top singular value and f is the
// all-pass Schmidt-pair quotient.
InterpolationResult schur_minimal(const SchurProblem& prob, int grid = 1024);

struct PickOptions {
  int grid = 4096;
  // Fourier truncation order of the Hankel finite section.
  int hankel_section = 256;
  // Re-check the top singular value at twice the section size (values must
  // agree to 1e-8 relative).
  bool doubling_check = true;
};

// Minimal sup-norm f with f(z_i) = w_i: sigma by bisection on the Pick
// matrix, the extremal function by the finite-section Hankel route.
InterpolationResult pick_minimal(const PickProblem& prob, const PickOptions& opts = {});

struct ExtremalFunctional {
  double value = 0.0;
  // Maximizer of |a1 f(0) + a0 f'(0)| over analytic f bounded by one.
  FiniteBlaschke extremal_f;
  std::string description;
  StructuralCertificate certificate;
};

// Largest |a1 f(0) + a0 f'(0)| over analytic |f| <= 1, computed as the L^1
// norm of the minimal interpolant of a0 + a1 z modulo z^2 H^1.
ExtremalFunctional extremal_functional(const cplx& a0, const cplx& a1);

}  // namespace hardy
