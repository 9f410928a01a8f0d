#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "hardyapprox/circle.hpp"

using namespace hardy;

namespace {

double unif(std::mt19937& rng) {
  return static_cast<double>(rng()) * (1.0 / 4294967296.0);
}

cplx rand_coeff(std::mt19937& rng) {
  return cplx(2.0 * unif(rng) - 1.0, 2.0 * unif(rng) - 1.0);
}

double max_pointwise_gap(const SampledCircleFunction& a,
                         const SampledCircleFunction& b) {
  REQUIRE(a.n_points == b.n_points);
  double worst = 0.0;
  for (size_t j = 0; j < a.values.size(); ++j) {
    worst = std::max(worst, std::abs(a.values[j] - b.values[j]));
  }
  return worst;
}

}  // namespace

TEST_CASE("sampling hits the grid points") {
  TrigPolynomial z;
  z.coeffs[1] = cplx(1.0);
  const SampledCircleFunction s = sample(z, 8);
  for (int j = 0; j < 8; ++j) {
    CHECK(std::abs(s.values[static_cast<size_t>(j)] - circle_point(j, 8)) <=
          1e-15);
  }
}

TEST_CASE("rational sampling matches direct pointwise evaluation") {
  RationalDiskFunction g;
  g.numerator = AnalyticPolynomial({cplx(1.0), cplx(0.25, -0.5)});
  g.denominator_blaschke.zeros = {cplx(0.5, 0.0), cplx(-0.2, 0.3)};
  const int n = 256;
  const SampledCircleFunction s = sample(g, n);
  for (int j = 0; j < n; ++j) {
    const cplx z = circle_point(j, n);
    const cplx direct =
        std::conj(g.denominator_blaschke.eval(z)) * g.numerator.eval(z);
    CHECK(std::abs(s.values[static_cast<size_t>(j)] - direct) <= 1e-12);
  }
}

TEST_CASE("sampling rejects grids too small for the degree") {
  TrigPolynomial t;
  t.coeffs[2] = cplx(1.0);
  t.coeffs[-2] = cplx(1.0);
  CHECK_THROWS_AS(sample(t, 8), std::invalid_argument);
  CHECK_NOTHROW(sample(t, 16));
}

TEST_CASE("fourier coefficients match construction") {
  TrigPolynomial t;
  t.coeffs[-1] = cplx(1.0);
  const SampledCircleFunction s = sample(t, 64);
  CHECK(std::abs(fourier_coeff(s, -1) - cplx(1.0)) <= 1e-14);
  CHECK(std::abs(fourier_coeff(s, 0)) <= 1e-14);
  CHECK(std::abs(fourier_coeff(s, 2)) <= 1e-14);

  const AnalyticPolynomial two_plus_z({cplx(2.0), cplx(1.0)});
  const AnalyticPolynomial sq =
      poly_mul(two_plus_z, two_plus_z);  // 4 + 4z + z^2
  SampledCircleFunction q = sample(sq, 64);
  q = cplx(0.25) * q;
  CHECK(std::abs(fourier_coeff(q, 0) - cplx(1.0)) <= 1e-14);
  CHECK(std::abs(fourier_coeff(q, 1) - cplx(1.0)) <= 1e-14);
  CHECK(std::abs(fourier_coeff(q, 2) - cplx(0.25)) <= 1e-14);
}

TEST_CASE("coefficient round trip and Parseval") {
  std::mt19937 rng(2024);
  TrigPolynomial t;
  for (int k = -5; k <= 5; ++k) t.coeffs[k] = rand_coeff(rng);
  const SampledCircleFunction s = sample(t, 64);
  const TrigPolynomial back = trig_from_samples(s, 5);
  double sum_sq = 0.0;
  for (int k = -5; k <= 5; ++k) {
    CHECK(std::abs(back.at(k) - t.at(k)) <= 1e-12);
    sum_sq += std::norm(t.at(k));
  }
  const double l2 = lp_norm(s, 2.0);
  CHECK(l2 * l2 == doctest::Approx(sum_sq).epsilon(1e-12));
}

TEST_CASE("grid norms agree with closed forms") {
  TrigPolynomial t;
  t.coeffs[0] = cplx(2.0);
  t.coeffs[1] = cplx(1.0);
  const SampledCircleFunction s = sample(t, 64);
  CHECK(lp_norm(s, 2.0) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-13));

  // |(2+z)^2 / 4| integrates to 5/4 because |2+z|^2 is band-limited.
  TrigPolynomial sq;
  sq.coeffs[0] = cplx(1.0);
  sq.coeffs[1] = cplx(1.0);
  sq.coeffs[2] = cplx(0.25);
  const SampledCircleFunction sq_s = sample(sq, 64);
  CHECK(lp_norm(sq_s, 1.0) == doctest::Approx(1.25).epsilon(1e-13));
  CHECK(lp_norm(sq_s, std::numeric_limits<double>::infinity()) ==
        doctest::Approx(2.25).epsilon(1e-13));

  TrigPolynomial c;
  c.coeffs[0] = cplx(-3.0, 4.0);
  const SampledCircleFunction cs = sample(c, 16);
  for (double p : {1.0, 1.5, 2.0, 7.0}) {
    CHECK(lp_norm(cs, p) == doctest::Approx(5.0).epsilon(1e-13));
  }
}

TEST_CASE("riesz projection keeps the analytic part") {
  TrigPolynomial t;
  t.coeffs[-1] = cplx(1.0);
  t.coeffs[0] = cplx(3.0);
  t.coeffs[1] = cplx(1.0);
  const SampledCircleFunction proj = riesz_projection(sample(t, 64));
  TrigPolynomial expect;
  expect.coeffs[0] = cplx(3.0);
  expect.coeffs[1] = cplx(1.0);
  CHECK(max_pointwise_gap(proj, sample(expect, 64)) <= 1e-13);

  // 1/(z - 1/2) has only negative frequencies on the circle.
  const int n = 256;
  SampledCircleFunction antianalytic(n);
  for (int j = 0; j < n; ++j) {
    antianalytic.values[static_cast<size_t>(j)] =
        1.0 / (circle_point(j, n) - 0.5);
  }
  CHECK(max_abs(riesz_projection(antianalytic)) <= 1e-10);
  CHECK(analytic_defect(antianalytic) ==
        doctest::Approx(1.0).epsilon(1e-12));  // leading tail coefficient

  const SampledCircleFunction analytic = sample(expect, 64);
  CHECK(analytic_defect(analytic) <= 1e-14);
}

TEST_CASE("outer reconstruction from known moduli") {
  const int n = 256;

  SampledCircleFunction ones(n);
  for (auto& v : ones.values) v = cplx(1.0);
  CHECK(max_pointwise_gap(outer_from_modulus(ones), ones) <= 1e-12);

  const AnalyticPolynomial two_plus_z({cplx(2.0), cplx(1.0)});
  const SampledCircleFunction f = sample(two_plus_z, n);
  const SampledCircleFunction phi = f * conj_samples(f);
  bool floored = true;
  const SampledCircleFunction rec = outer_from_modulus(phi, &floored);
  CHECK(!floored);
  CHECK(max_pointwise_gap(rec, f) <= 1e-8);

  const AnalyticPolynomial two_minus_z({cplx(2.0), cplx(-1.0)});
  SampledCircleFunction f2 = sample(two_minus_z, n);
  f2 = cplx(1.0 / std::sqrt(5.0)) * f2;
  const SampledCircleFunction rec2 = outer_from_modulus(f2 * conj_samples(f2));
  CHECK(max_pointwise_gap(rec2, f2) <= 1e-8);
}

TEST_CASE("outer invariants on a generic smooth modulus") {
  const int n = 512;
  SampledCircleFunction phi(n);
  for (int j = 0; j < n; ++j) {
    const double theta = 2.0 * kPi * j / n;
    phi.values[static_cast<size_t>(j)] =
        std::exp(std::cos(theta) + 0.3 * std::sin(2.0 * theta));
  }
  const SampledCircleFunction f = outer_from_modulus(phi);
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    worst = std::max(worst,
                     std::abs(std::norm(f.values[static_cast<size_t>(j)]) -
                              phi.values[static_cast<size_t>(j)].real()));
  }
  CHECK(worst <= 1e-10);
  CHECK(analytic_defect(f) <= 1e-9);
  const cplx f0 = fourier_coeff(f, 0);
  CHECK(f0.real() > 0.0);
  CHECK(std::abs(f0.imag()) <= 1e-12);
}

TEST_CASE("outer handles a vanishing modulus by flooring") {
  const int n = 128;
  SampledCircleFunction phi(n);
  for (int j = 0; j < n; ++j) {
    phi.values[static_cast<size_t>(j)] = std::norm(circle_point(j, n) - 1.0);
  }
  bool floored = false;
  const SampledCircleFunction f = outer_from_modulus(phi, &floored);
  CHECK(floored);
  for (const cplx& v : f.values) CHECK(std::isfinite(std::abs(v)));
}

TEST_CASE("outer rejects invalid moduli") {
  SampledCircleFunction phi(16);
  for (auto& v : phi.values) v = cplx(1.0);
  phi.values[3] = cplx(-0.5);
  CHECK_THROWS_AS(outer_from_modulus(phi), std::invalid_argument);
  phi.values[3] = cplx(1.0, 0.4);
  CHECK_THROWS_AS(outer_from_modulus(phi), std::invalid_argument);
}

TEST_CASE("outer powers multiply moduli") {
  const int n = 256;
  const AnalyticPolynomial two_plus_z({cplx(2.0), cplx(1.0)});
  SampledCircleFunction f = sample(two_plus_z, n);
  f = cplx(1.0 / std::sqrt(5.0)) * f;

  const SampledCircleFunction squared = outer_power(f, 2.0);
  const AnalyticPolynomial sq = poly_mul(two_plus_z, two_plus_z);
  SampledCircleFunction expect = sample(sq, n);
  expect = cplx(0.2) * expect;
  CHECK(max_pointwise_gap(squared, expect) <= 1e-9);
  CHECK(lp_norm(squared, 1.0) == doctest::Approx(1.0).epsilon(1e-9));

  const SampledCircleFunction half = outer_power(f, 0.5);
  CHECK(max_pointwise_gap(half * half, f) <= 1e-9);
  CHECK(max_pointwise_gap(outer_power(f, 1.0), f) <= 1e-11);
}

TEST_CASE("polynomial roots with multiplicities and deflation") {
  const AnalyticPolynomial p({cplx(1.0), cplx(-2.5), cplx(1.0)});
  const std::vector<cplx> r = poly_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - cplx(0.5)) <= 1e-10);
  CHECK(std::abs(r[1] - cplx(2.0)) <= 1e-10);

  const AnalyticPolynomial dbl({cplx(1.0), cplx(1.0), cplx(0.25)});
  const std::vector<cplx> rd = poly_roots(dbl);
  REQUIRE(rd.size() == 2);
  CHECK(std::abs(rd[0] - cplx(-2.0)) <= 1e-5);
  CHECK(std::abs(rd[1] - cplx(-2.0)) <= 1e-5);

  const AnalyticPolynomial cube({cplx(0.0), cplx(0.0), cplx(0.0), cplx(1.0)});
  const std::vector<cplx> rc = poly_roots(cube);
  REQUIRE(rc.size() == 3);
  for (const cplx& z : rc) CHECK(std::abs(z) <= 1e-12);

  std::mt19937 rng(5150);
  std::vector<cplx> truth;
  for (int i = 0; i < 4; ++i) {
    truth.push_back(std::polar(0.3 + 1.7 * unif(rng), 2.0 * kPi * unif(rng)));
  }
  std::sort(truth.begin(), truth.end(), [](const cplx& a, const cplx& b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return std::arg(a) < std::arg(b);
  });
  const std::vector<cplx> found = poly_roots(poly_from_roots(truth));
  REQUIRE(found.size() == truth.size());
  for (size_t i = 0; i < truth.size(); ++i) {
    CHECK(std::abs(found[i] - truth[i]) <= 1e-8);
  }

  const AnalyticPolynomial two = poly_from_roots({cplx(0.3), cplx(-0.7)});
  const AnalyticPolynomial one = poly_deflate(two, cplx(0.3));
  REQUIRE(one.degree() == 1);
  CHECK(std::abs(one.eval(cplx(-0.7))) <= 1e-14);
}

TEST_CASE("blaschke products are unimodular and validated") {
  FiniteBlaschke b;
  b.zeros = {cplx(0.5, 0.0), cplx(-0.2, 0.3)};
  b.unimodular_const = std::polar(1.0, 0.7);
  validate(b);
  for (int j = 0; j < 64; ++j) {
    CHECK(std::abs(std::abs(b.eval(circle_point(j, 64))) - 1.0) <= 1e-14);
  }
  CHECK(std::abs(b.eval(cplx(0.5, 0.0))) <= 1e-15);

  const FiniteBlaschke z3 = FiniteBlaschke::power_of_z(3);
  const cplx z = std::polar(1.0, 0.4);
  CHECK(std::abs(z3.eval(z) - z * z * z) <= 1e-14);

  FiniteBlaschke bad;
  bad.zeros = {cplx(1.2, 0.0)};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  FiniteBlaschke bad2;
  bad2.unimodular_const = cplx(2.0, 0.0);
  CHECK_THROWS_AS(validate(bad2), std::invalid_argument);
}

TEST_CASE("spectral width covers the rational tail") {
  TrigPolynomial t;
  t.coeffs[-3] = cplx(1.0);
  t.coeffs[2] = cplx(0.5);
  CHECK(spectral_width(t) == 3);

  RationalDiskFunction g;
  g.numerator = AnalyticPolynomial({cplx(1.0)});
  g.denominator_blaschke.zeros = {cplx(0.5, 0.0)};
  const int w = spectral_width(g);
  CHECK(w > 10);
  const int n = 512;
  const SampledCircleFunction s = sample(g, n);
  double tail = 0.0;
  for (const auto& [k, v] : fourier_coeffs(s)) {
    if (std::abs(k) > w) tail = std::max(tail, std::abs(v));
  }
  CHECK(tail <= 1e-12);
}
