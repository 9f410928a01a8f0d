#pragma once

#include "hardyapprox/circle.hpp"

namespace hardy {

struct ApproxConfig {
  double p = 1.0;
  // Analytic polynomial budget; negative means max(4 deg g, deg theta + deg g).
  int degree_budget = -1;
  int grid = 4096;
  // Relative objective-change stopping threshold, applied once the smoothing
  // floor is reached.
  double tol = 1e-13;
  int max_iters = 4000;
  // Initial smoothing; negative means 1e-2 * c0^2 with c0 the starting
  // residual norm.
  double eps0 = -1.0;
  // 0 starts at the analytic projection; anything else adds a deterministic
  // relative 1e-6 perturbation to that start.
  unsigned seed = 0;
};

void validate(const ApproxConfig& cfg);
double conjugate_exponent(double p);

struct ApproxResult {
  AnalyticPolynomial p_g;
  SampledCircleFunction residual;
  double c = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct IrlsOutcome {
  std::vector<cplx> coeffs;
  int iterations = 0;
  bool converged = false;
  double objective = 0.0;
};

// Minimizer of the grid L^p norm of g - h over analytic polynomials h of
// degree <= M. p = 2 is the closed-form analytic projection; other p in
// [1, inf) run iteratively reweighted least squares. p = inf is not accepted
// here (use the Hankel interpolation path).
ApproxResult best_approx(const TrigPolynomial& g, const ApproxConfig& cfg);
ApproxResult best_approx(const RationalDiskFunction& g, const ApproxConfig& cfg);
ApproxResult best_approx_samples(const SampledCircleFunction& g, int width, const ApproxConfig& cfg);

ApproxResult best_approx_p2(const TrigPolynomial& g, int budget, int grid);
ApproxResult best_approx_p2(const RationalDiskFunction& g, int budget, int grid);

// One IRLS run on already-sampled data; returns the coefficient vector of the
// approximant (degree <= budget). Iteration count, convergence flag and final
// smoothed objective are reported through *outcome when given.
std::vector<cplx> irls_solve(const SampledCircleFunction& g_samples, double p, int budget,
                             const ApproxConfig& cfg, IrlsOutcome* outcome = nullptr);

}  // namespace hardy
