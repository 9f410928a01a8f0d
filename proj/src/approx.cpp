#include "hardyapprox/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace hardy {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_grid(int n, int budget, int width) {
  require(is_power_of_two(n), "grid size must be a power of two");
  require(n >= 4 * (budget + width), "grid too small for budget plus spectrum (aliasing guard)");
}

SampledCircleFunction eval_on_grid(const std::vector<cplx>& coeffs, int n) {
  std::vector<cplx> bins(static_cast<size_t>(n), cplx(0.0));
  for (size_t m = 0; m < coeffs.size(); ++m) bins[m] = coeffs[m];
  return from_spectrum_bins(bins);
}

std::vector<cplx> projection_coeffs(const SampledCircleFunction& g, int budget) {
  const auto bins = spectrum_bins(g);
  std::vector<cplx> a(static_cast<size_t>(budget) + 1, cplx(0.0));
  for (int m = 0; m <= budget; ++m) a[static_cast<size_t>(m)] = bins[static_cast<size_t>(m)];
  return a;
}

double smoothed_objective(const std::vector<cplx>& r, double p, double eps) {
  double acc = 0.0;
  for (const auto& v : r) acc += std::pow(std::norm(v) + eps, 0.5 * p);
  return acc / double(r.size());
}

// Solves min_a sum_j w_j |g_j - sum_m a_m zeta_j^m|^2. The normal equations
// are Hermitian Toeplitz with symbol w, so both the matrix and the right
// side come out of two transforms.
std::vector<cplx> weighted_projection(const SampledCircleFunction& g, const std::vector<double>& w,
                                      int budget) {
  const int n = g.n_points;
  SampledCircleFunction ws(n), wg(n);
  for (int j = 0; j < n; ++j) {
    ws.values[static_cast<size_t>(j)] = cplx(w[static_cast<size_t>(j)], 0.0);
    wg.values[static_cast<size_t>(j)] = w[static_cast<size_t>(j)] * g.values[static_cast<size_t>(j)];
  }
  const auto what = spectrum_bins(ws);
  const auto wghat = spectrum_bins(wg);
  const int m = budget + 1;
  Eigen::MatrixXcd gram(m, m);
  for (int l = 0; l < m; ++l) {
    for (int c = 0; c < m; ++c) {
      const int k = l - c;
      gram(l, c) = what[static_cast<size_t>(bin_index(k, n))];
    }
  }
  Eigen::VectorXcd rhs(m);
  for (int l = 0; l < m; ++l) rhs(l) = wghat[static_cast<size_t>(l)];
  Eigen::LDLT<Eigen::MatrixXcd> ldlt(gram);
  Eigen::VectorXcd sol = ldlt.solve(rhs);
  std::vector<cplx> a(static_cast<size_t>(m));
  for (int l = 0; l < m; ++l) a[static_cast<size_t>(l)] = sol(l);
  return a;
}

}  // namespace

void validate(const ApproxConfig& cfg) {
  require(cfg.p >= 1.0, "p must be at least 1");
  require(is_power_of_two(cfg.grid), "grid size must be a power of two");
  require(cfg.tol > 0.0, "tol must be positive");
  require(cfg.max_iters >= 1, "max_iters must be positive");
}

double conjugate_exponent(double p) {
  require(p >= 1.0, "p must be at least 1");
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

std::vector<cplx> irls_solve(const SampledCircleFunction& g_samples, double p, int budget,
                             const ApproxConfig& cfg, IrlsOutcome* outcome) {
  require(p >= 1.0 && !std::isinf(p), "p must lie in [1, inf)");
  require(budget >= 0, "degree budget must be nonnegative");
  const int n = g_samples.n_points;

  std::vector<cplx> a = projection_coeffs(g_samples, budget);
  if (p != 2.0 && cfg.seed != 0) {
    double scale = 0.0;
    for (const auto& c : a) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) scale = max_abs(g_samples);
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (auto& c : a) c += 1e-6 * scale * cplx(unit(rng), unit(rng));
  }

  auto residual_of = [&](const std::vector<cplx>& coeffs) {
    const SampledCircleFunction h = eval_on_grid(coeffs, n);
    std::vector<cplx> r(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
      r[static_cast<size_t>(j)] = g_samples.values[static_cast<size_t>(j)] - h.values[static_cast<size_t>(j)];
    return r;
  };

  std::vector<cplx> r = residual_of(a);
  double c0 = 0.0;
  for (const auto& v : r) c0 += std::pow(std::norm(v), 0.5 * p);
  c0 = std::pow(c0 / double(n), 1.0 / p);

  IrlsOutcome result;
  result.coeffs = a;
  if (p == 2.0 || c0 <= 1e-14 * std::max(1.0, max_abs(g_samples))) {
    result.iterations = 1;
    result.converged = true;
    result.objective = std::pow(c0, p);
    if (outcome) *outcome = result;
    return result.coeffs;
  }

  const double eps_floor = 1e-14;
  const double eps0 = cfg.eps0 > 0.0 ? cfg.eps0 : 1e-2 * c0 * c0;
  double eps = std::max(eps_floor, eps0);
  double obj = smoothed_objective(r, p, eps);
  bool converged = false;
  int iters = 0;
  std::vector<double> w(static_cast<size_t>(n));

  for (int k = 1; k <= cfg.max_iters; ++k) {
    iters = k;
    for (int j = 0; j < n; ++j)
      w[static_cast<size_t>(j)] = std::pow(std::norm(r[static_cast<size_t>(j)]) + eps, 0.5 * (p - 2.0));
    const std::vector<cplx> a_ls = weighted_projection(g_samples, w, budget);

    double t = 0.5;
    bool accepted = false;
    std::vector<cplx> cand(a.size());
    std::vector<cplx> r_cand;
    double obj_cand = 0.0;
    for (int h = 0; h < 60; ++h) {
      for (size_t m = 0; m < a.size(); ++m) cand[m] = a[m] + t * (a_ls[m] - a[m]);
      r_cand = residual_of(cand);
      obj_cand = smoothed_objective(r_cand, p, eps);
      if (obj_cand <= obj) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      converged = false;
      break;
    }
    a = cand;
    r = std::move(r_cand);
    const double rel_drop = (obj - obj_cand) / std::max(obj_cand, 1e-300);
    const bool at_floor = eps <= eps_floor * (1.0 + 1e-9);
    if (at_floor && rel_drop < cfg.tol) {
      converged = true;
      obj = obj_cand;
      break;
    }
    eps = std::max(eps_floor, eps0 * std::pow(0.7, k));
    obj = smoothed_objective(r, p, eps);
  }

  result.coeffs = a;
  result.iterations = iters;
  result.converged = converged;
  result.objective = obj;
  if (outcome) *outcome = result;
  return result.coeffs;
}

namespace {

ApproxResult finish_result(const SampledCircleFunction& g, const std::vector<cplx>& coeffs,
                           double p, int iterations, bool converged) {
  ApproxResult out;
  out.p_g.coeffs = coeffs;
  out.p_g.prune(1e-15);
  const SampledCircleFunction h = eval_on_grid(coeffs, g.n_points);
  out.residual = g - h;
  out.c = lp_norm(out.residual, p);
  out.iterations = iterations;
  out.converged = converged;
  return out;
}

ApproxResult solve_sampled(const SampledCircleFunction& g, int width, const ApproxConfig& cfg,
                           int budget) {
  check_grid(cfg.grid, budget, width);
  require(g.n_points == cfg.grid, "sampled input does not match cfg.grid");
  if (cfg.p == 2.0) {
    return finish_result(g, projection_coeffs(g, budget), 2.0, 1, true);
  }
  IrlsOutcome outcome;
  irls_solve(g, cfg.p, budget, cfg, &outcome);
  return finish_result(g, outcome.coeffs, cfg.p, outcome.iterations, outcome.converged);
}

}  // namespace

ApproxResult best_approx_samples(const SampledCircleFunction& g, int width, const ApproxConfig& cfg) {
  validate(cfg);
  require(!std::isinf(cfg.p), "p = inf is handled by the Hankel interpolation path");
  require(cfg.degree_budget >= 0, "degree budget required for sampled input");
  return solve_sampled(g, width, cfg, cfg.degree_budget);
}

ApproxResult best_approx(const TrigPolynomial& g, const ApproxConfig& cfg) {
  validate(cfg);
  require(!std::isinf(cfg.p), "p = inf is handled by the Hankel interpolation path");
  const int width = spectral_width(g);
  const int budget = cfg.degree_budget >= 0 ? cfg.degree_budget : 4 * width;
  check_grid(cfg.grid, budget, width);
  return solve_sampled(sample(g, cfg.grid), width, cfg, budget);
}

ApproxResult best_approx(const RationalDiskFunction& g, const ApproxConfig& cfg) {
  validate(cfg);
  require(!std::isinf(cfg.p), "p = inf is handled by the Hankel interpolation path");
  const int width = spectral_width(g);
  const int deg = std::max(0, g.numerator.degree());
  const int budget = cfg.degree_budget >= 0
                         ? cfg.degree_budget
                         : std::max(4 * deg, g.denominator_blaschke.degree() + deg);
  check_grid(cfg.grid, budget, width);
  return solve_sampled(sample(g, cfg.grid), width, cfg, budget);
}

ApproxResult best_approx_p2(const TrigPolynomial& g, int budget, int grid) {
  ApproxConfig cfg;
  cfg.p = 2.0;
  cfg.degree_budget = budget;
  cfg.grid = grid;
  return best_approx(g, cfg);
}

ApproxResult best_approx_p2(const RationalDiskFunction& g, int budget, int grid) {
  ApproxConfig cfg;
  cfg.p = 2.0;
  cfg.degree_budget = budget;
  cfg.grid = grid;
  return best_approx(g, cfg);
}

}  // namespace hardy
