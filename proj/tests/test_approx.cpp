#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "hardyapprox/approx.hpp"

using namespace hardy;

namespace {

double unif(std::mt19937& rng) {
  return static_cast<double>(rng()) * (1.0 / 4294967296.0);
}

cplx rand_coeff(std::mt19937& rng) {
  return cplx(2.0 * unif(rng) - 1.0, 2.0 * unif(rng) - 1.0);
}

cplx coeff_at(const AnalyticPolynomial& p, int k) {
  if (k < 0 || k >= static_cast<int>(p.coeffs.size())) return cplx(0.0);
  return p.coeffs[static_cast<size_t>(k)];
}

// Independent reference: monotone gradient descent on the smoothed grid L^1
// objective, run from several starts. The objective is convex, so every run
// heads for the same optimum; the best value is the reference.
double descent_reference(const SampledCircleFunction& g, int budget,
                         std::mt19937& rng) {
  const int n = g.n_points;
  const int m = budget + 1;
  const double eps = 1e-14;
  std::vector<cplx> grid(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) grid[static_cast<size_t>(j)] = circle_point(j, n);

  auto objective = [&](const std::vector<cplx>& a) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      cplx h(0.0);
      const cplx z = grid[static_cast<size_t>(j)];
      for (int k = m - 1; k >= 0; --k) h = h * z + a[static_cast<size_t>(k)];
      sum += std::sqrt(std::norm(g.values[static_cast<size_t>(j)] - h) + eps);
    }
    return sum / n;
  };
  auto gradient = [&](const std::vector<cplx>& a, std::vector<cplx>& grad) {
    std::fill(grad.begin(), grad.end(), cplx(0.0));
    for (int j = 0; j < n; ++j) {
      cplx h(0.0);
      const cplx z = grid[static_cast<size_t>(j)];
      for (int k = m - 1; k >= 0; --k) h = h * z + a[static_cast<size_t>(k)];
      const cplx r = g.values[static_cast<size_t>(j)] - h;
      const cplx w = r / std::sqrt(std::norm(r) + eps);
      cplx zbar_pow(1.0);
      for (int k = 0; k < m; ++k) {
        grad[static_cast<size_t>(k)] -= w * zbar_pow;
        zbar_pow *= std::conj(z);
      }
    }
    for (cplx& v : grad) v /= static_cast<double>(n);
  };

  double best = std::numeric_limits<double>::infinity();
  for (int start = 0; start < 8; ++start) {
    std::vector<cplx> a(static_cast<size_t>(m));
    for (cplx& v : a) v = (start == 0) ? cplx(0.0) : rand_coeff(rng);
    std::vector<cplx> grad(static_cast<size_t>(m));
    double fa = objective(a);
    double t = 0.5;
    int stale = 0;
    for (int it = 0; it < 6000 && stale < 60; ++it) {
      gradient(a, grad);
      std::vector<cplx> next(static_cast<size_t>(m));
      double fn = 0.0;
      int halvings = 0;
      for (; halvings < 60; ++halvings) {
        for (int k = 0; k < m; ++k) {
          next[static_cast<size_t>(k)] =
              a[static_cast<size_t>(k)] - t * grad[static_cast<size_t>(k)];
        }
        fn = objective(next);
        if (fn < fa) break;
        t *= 0.5;
      }
      if (halvings == 60) break;
      stale = (fa - fn < 1e-15 * std::max(1.0, fa)) ? stale + 1 : 0;
      a.swap(next);
      fa = fn;
      t *= 1.9;
    }
    best = std::min(best, fa);
  }
  return best;
}

}  // namespace

TEST_CASE("p=2 is the closed-form analytic projection") {
  TrigPolynomial g;
  g.coeffs[-1] = cplx(1.0);
  g.coeffs[0] = cplx(3.0);
  g.coeffs[1] = cplx(1.0);
  ApproxConfig cfg;
  cfg.p = 2.0;
  cfg.degree_budget = 1;
  cfg.grid = 64;
  const ApproxResult res = best_approx(g, cfg);
  CHECK(res.converged);
  CHECK(res.iterations == 1);
  CHECK(std::abs(coeff_at(res.p_g, 0) - cplx(3.0)) <= 1e-13);
  CHECK(std::abs(coeff_at(res.p_g, 1) - cplx(1.0)) <= 1e-13);
  CHECK(res.c == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("analytic inputs are their own best approximation") {
  TrigPolynomial g;
  g.coeffs[0] = cplx(1.0);
  g.coeffs[1] = cplx(1.0);
  ApproxConfig cfg;
  cfg.p = 1.0;
  cfg.degree_budget = 3;
  cfg.grid = 64;
  const ApproxResult res = best_approx(g, cfg);
  CHECK(res.converged);
  CHECK(res.iterations == 1);
  CHECK(res.c <= 1e-12);
  CHECK(std::abs(coeff_at(res.p_g, 0) - cplx(1.0)) <= 1e-12);
  CHECK(std::abs(coeff_at(res.p_g, 1) - cplx(1.0)) <= 1e-12);
}

TEST_CASE("conj(z) admits no degree-zero improvement") {
  TrigPolynomial g;
  g.coeffs[-1] = cplx(1.0);
  for (double p : {1.0, 1.5}) {
    ApproxConfig cfg;
    cfg.p = p;
    cfg.degree_budget = 0;
    cfg.grid = 64;
    const ApproxResult res = best_approx(g, cfg);
    CHECK(res.converged);
    CHECK(std::abs(coeff_at(res.p_g, 0)) <= 1e-8);
    CHECK(res.c == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("the two-term fixture is its own residual") {
  TrigPolynomial g;
  g.coeffs[0] = cplx(-0.4);
  g.coeffs[-1] = cplx(1.0);
  g.coeffs[-2] = cplx(-0.4);
  ApproxConfig cfg;
  cfg.p = 1.0;
  cfg.degree_budget = 2;
  cfg.grid = 512;
  const ApproxResult res = best_approx(g, cfg);
  CHECK(res.converged);
  CHECK(res.c == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(res.p_g.max_abs_coeff() <= 1e-6);
}

TEST_CASE("iterative solve matches a generic descent reference") {
  std::mt19937 rng(6301);
  TrigPolynomial g;
  for (int k = -3; k <= 3; ++k) g.coeffs[k] = rand_coeff(rng);
  ApproxConfig cfg;
  cfg.p = 1.0;
  cfg.degree_budget = 3;
  cfg.grid = 256;
  const ApproxResult res = best_approx(g, cfg);
  CHECK(res.converged);
  const double reference = descent_reference(sample(g, 256), 3, rng);
  CHECK(std::abs(res.c - reference) <= 1e-6);
}

TEST_CASE("seeded restarts land on the same optimum") {
  std::mt19937 rng(411);
  TrigPolynomial g;
  for (int k = -2; k <= 2; ++k) g.coeffs[k] = rand_coeff(rng);
  ApproxConfig cfg;
  cfg.p = 1.0;
  cfg.degree_budget = 2;
  cfg.grid = 256;
  const ApproxResult a = best_approx(g, cfg);
  cfg.seed = 7;
  const ApproxResult b = best_approx(g, cfg);
  CHECK(std::abs(a.c - b.c) <= 1e-9);
  for (int k = 0; k <= 2; ++k) {
    CHECK(std::abs(coeff_at(a.p_g, k) - coeff_at(b.p_g, k)) <= 1e-7);
  }
}

TEST_CASE("distances do not rise with the budget") {
  std::mt19937 rng(77);
  TrigPolynomial g;
  for (int k = -2; k <= 2; ++k) g.coeffs[k] = rand_coeff(rng);
  double prev = std::numeric_limits<double>::infinity();
  for (int budget = 0; budget <= 5; ++budget) {
    ApproxConfig cfg;
    cfg.p = 1.0;
    cfg.degree_budget = budget;
    cfg.grid = 256;
    const ApproxResult res = best_approx(g, cfg);
    CHECK(res.converged);
    CHECK(res.c <= prev + 1e-10);
    prev = res.c;
  }
}

TEST_CASE("the solve commutes with scalar multiples") {
  std::mt19937 rng(901);
  TrigPolynomial g;
  for (int k = -2; k <= 2; ++k) g.coeffs[k] = rand_coeff(rng);
  const cplx alpha(1.7, -0.3);
  TrigPolynomial ga;
  for (const auto& [k, v] : g.coeffs) ga.coeffs[k] = alpha * v;

  ApproxConfig cfg;
  cfg.p = 1.0;
  cfg.degree_budget = 2;
  cfg.grid = 256;
  const ApproxResult r1 = best_approx(g, cfg);
  const ApproxResult r2 = best_approx(ga, cfg);
  CHECK(r2.c == doctest::Approx(std::abs(alpha) * r1.c).epsilon(1e-8));
  for (int k = 0; k <= 2; ++k) {
    CHECK(std::abs(coeff_at(r2.p_g, k) - alpha * coeff_at(r1.p_g, k)) <= 1e-6);
  }
}

TEST_CASE("rational input reduces to a geometric series") {
  // g = conj(B) for B with the single zero 1/2; its Laurent coefficients are
  // -1/2 at k=0 and (3/4) 2^{1-k} at k<0, so the analytic projection is the
  // constant -1/2 and the L^2 distance is sqrt(3)/2.
  RationalDiskFunction g;
  g.numerator = AnalyticPolynomial({cplx(1.0)});
  g.denominator_blaschke.zeros = {cplx(0.5, 0.0)};
  ApproxConfig cfg;
  cfg.p = 2.0;
  cfg.degree_budget = 2;
  cfg.grid = 512;
  const ApproxResult res = best_approx(g, cfg);
  CHECK(res.converged);
  CHECK(std::abs(coeff_at(res.p_g, 0) - cplx(-0.5)) <= 1e-9);
  CHECK(std::abs(coeff_at(res.p_g, 1)) <= 1e-9);
  CHECK(res.c == doctest::Approx(std::sqrt(0.75)).epsilon(1e-9));
}

TEST_CASE("configuration validation and honest non-convergence") {
  TrigPolynomial g;
  g.coeffs[-1] = cplx(1.0);

  ApproxConfig cfg;
  cfg.p = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(best_approx(g, cfg), std::invalid_argument);
  cfg.p = 0.5;
  CHECK_THROWS_AS(best_approx(g, cfg), std::invalid_argument);
  cfg.p = 1.0;
  cfg.grid = 100;
  CHECK_THROWS_AS(best_approx(g, cfg), std::invalid_argument);

  TrigPolynomial wiggle;
  std::mt19937 rng(3);
  for (int k = -2; k <= 2; ++k) wiggle.coeffs[k] = rand_coeff(rng);
  ApproxConfig tight;
  tight.p = 1.0;
  tight.degree_budget = 2;
  tight.grid = 256;
  tight.max_iters = 1;
  const ApproxResult res = best_approx(wiggle, tight);
  CHECK(!res.converged);
  CHECK(res.iterations == 1);
}
