#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "hardyapprox/interp.hpp"

using namespace hardy;

namespace {

cplx coeff_at(const AnalyticPolynomial& p, int k) {
  if (k < 0 || k >= static_cast<int>(p.coeffs.size())) return cplx(0.0);
  return p.coeffs[static_cast<size_t>(k)];
}

}  // namespace

TEST_CASE("minimal interpolant of 1+z modulo z^2") {
  ApproxConfig cfg;
  const InterpolationResult r = interpolate_etheta(
      AnalyticPolynomial({cplx(1.0), cplx(1.0)}), FiniteBlaschke::power_of_z(2),
      1.0, cfg);
  CHECK(r.converged);
  CHECK(r.sigma == doctest::Approx(1.25).epsilon(1e-6));
  CHECK(std::abs(coeff_at(r.f, 0) - cplx(1.0)) <= 1e-6);
  CHECK(std::abs(coeff_at(r.f, 1) - cplx(1.0)) <= 1e-6);
  CHECK(std::abs(coeff_at(r.f, 2) - cplx(0.25)) <= 1e-6);
  CHECK(r.f.degree() <= 2);
  CHECK(r.has_certificate);
  CHECK(r.certificate.valid);
  CHECK(r.blaschke_zeros.empty());
  // The reported norm is the norm of the interpolant itself.
  CHECK(std::abs(lp_norm(r.f_samples, 1.0) - r.sigma) <= 1e-12);
  // Interpolation conditions at 0: matching Taylor data below theta's degree.
  CHECK(r.interpolation_error <= 1e-8);
}

TEST_CASE("functions already of minimal type are fixed points") {
  ApproxConfig cfg;
  const InterpolationResult r = interpolate_etheta(
      AnalyticPolynomial({cplx(1.0), cplx(1.0), cplx(0.25)}),
      FiniteBlaschke::power_of_z(2), 1.0, cfg);
  CHECK(r.converged);
  CHECK(r.sigma == doctest::Approx(1.25).epsilon(1e-6));
  CHECK(std::abs(coeff_at(r.f, 2) - cplx(0.25)) <= 1e-6);

  const cplx a(2.0, -1.0);
  const InterpolationResult rc = interpolate_etheta(
      AnalyticPolynomial({a}), FiniteBlaschke::power_of_z(3), 1.0, cfg);
  CHECK(rc.converged);
  CHECK(rc.sigma == doctest::Approx(std::abs(a)).epsilon(1e-8));
  CHECK(std::abs(coeff_at(rc.f, 0) - a) <= 1e-6);
  CHECK(std::abs(coeff_at(rc.f, 1)) <= 1e-6);
}

TEST_CASE("interpolation accepts trig input and rejects negative frequencies") {
  ApproxConfig cfg;
  TrigPolynomial f1;
  f1.coeffs[0] = cplx(1.0);
  f1.coeffs[1] = cplx(1.0);
  const InterpolationResult r =
      interpolate_etheta(f1, FiniteBlaschke::power_of_z(2), 1.0, cfg);
  CHECK(r.sigma == doctest::Approx(1.25).epsilon(1e-6));

  TrigPolynomial bad;
  bad.coeffs[-1] = cplx(1.0);
  CHECK_THROWS_AS(
      interpolate_etheta(bad, FiniteBlaschke::power_of_z(2), 1.0, cfg),
      std::invalid_argument);
}

TEST_CASE("interpolation is stable across seeds") {
  ApproxConfig a;
  ApproxConfig b;
  b.seed = 9;
  const AnalyticPolynomial f1({cplx(1.0), cplx(0.3, 0.4), cplx(-0.2)});
  const InterpolationResult ra =
      interpolate_etheta(f1, FiniteBlaschke::power_of_z(3), 1.0, a);
  const InterpolationResult rb =
      interpolate_etheta(f1, FiniteBlaschke::power_of_z(3), 1.0, b);
  CHECK(std::abs(ra.sigma - rb.sigma) <= 1e-9);
  for (int k = 0; k <= std::max(ra.f.degree(), rb.f.degree()); ++k) {
    CHECK(std::abs(coeff_at(ra.f, k) - coeff_at(rb.f, k)) <= 1e-6);
  }
}

TEST_CASE("taylor-data interpolation fixtures") {
  const cplx a0(0.7, -0.2);
  const InterpolationResult r1 = schur_minimal(SchurProblem{{a0}});
  CHECK(r1.converged);
  CHECK(r1.sigma == doctest::Approx(std::abs(a0)).epsilon(1e-14));
  CHECK(r1.blaschke_zeros.empty());

  const InterpolationResult r2 =
      schur_minimal(SchurProblem{{cplx(0.0), cplx(1.0)}});
  CHECK(r2.converged);
  CHECK(r2.sigma == doctest::Approx(1.0).epsilon(1e-10));
  REQUIRE(r2.blaschke_zeros.size() == 1);
  CHECK(std::abs(r2.blaschke_zeros[0]) <= 1e-8);
  for (int j = 0; j < r2.f_samples.n_points; ++j) {
    CHECK(std::abs(r2.f_samples.values[static_cast<size_t>(j)] -
                   circle_point(j, r2.f_samples.n_points)) <= 1e-8);
  }

  // Data (1, 1): the top singular value of [[1, 1], [1, 0]] solves
  // s^4 - 3 s^2 + 1 = 0, and the interpolant has its zero at 1 - phi.
  const double sigma_star = std::sqrt((3.0 + std::sqrt(5.0)) / 2.0);
  const InterpolationResult r3 =
      schur_minimal(SchurProblem{{cplx(1.0), cplx(1.0)}});
  CHECK(r3.converged);
  CHECK(r3.sigma == doctest::Approx(sigma_star).epsilon(1e-8));
  CHECK(r3.unique_top);
  CHECK(std::abs(fourier_coeff(r3.f_samples, 0) - cplx(1.0)) <= 1e-7);
  CHECK(std::abs(fourier_coeff(r3.f_samples, 1) - cplx(1.0)) <= 1e-7);
  REQUIRE(r3.blaschke_zeros.size() == 1);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(r3.blaschke_zeros[0] - cplx(1.0 - phi)) <= 1e-7);
  CHECK(r3.allpass_deviation <= 1e-5 * r3.sigma);
  CHECK(r3.interpolation_error <= 1e-8);
  CHECK(r3.has_allpass_form);

  const InterpolationResult r0 =
      schur_minimal(SchurProblem{{cplx(0.0), cplx(0.0)}});
  CHECK(r0.converged);
  CHECK(r0.sigma <= 1e-15);
}

TEST_CASE("node-data interpolation fixtures") {
  const cplx node(0.3, 0.2);
  const cplx w(0.0, 0.5);
  const InterpolationResult r1 = pick_minimal(PickProblem{{node}, {w}});
  CHECK(r1.converged);
  CHECK(r1.sigma == doctest::Approx(0.5).epsilon(1e-9));
  double worst = 0.0;
  for (const cplx& v : r1.f_samples.values) {
    worst = std::max(worst, std::abs(v - w));
  }
  CHECK(worst <= 1e-6);

  const InterpolationResult r2 = pick_minimal(
      PickProblem{{cplx(0.0), cplx(0.5)}, {cplx(0.0), cplx(0.3)}});
  CHECK(r2.converged);
  CHECK(r2.sigma == doctest::Approx(0.6).epsilon(1e-6));
  REQUIRE(r2.blaschke_zeros.size() == 1);
  CHECK(std::abs(r2.blaschke_zeros[0]) <= 1e-6);
  for (int j = 0; j < r2.f_samples.n_points; ++j) {
    CHECK(std::abs(r2.f_samples.values[static_cast<size_t>(j)] -
                   0.6 * circle_point(j, r2.f_samples.n_points)) <= 1e-6);
  }

  const InterpolationResult r3 = pick_minimal(
      PickProblem{{cplx(0.0), cplx(0.5)}, {cplx(0.3), cplx(0.3)}});
  CHECK(r3.converged);
  CHECK(r3.sigma == doctest::Approx(0.3).epsilon(1e-8));
  CHECK(r3.blaschke_zeros.empty());
  CHECK(r3.allpass_deviation <= 1e-6);

  const InterpolationResult r4 = pick_minimal(PickProblem{
      {cplx(0.4, 0.0), cplx(-0.4, 0.0)}, {cplx(0.2, 0.0), cplx(-0.2, 0.0)}});
  CHECK(r4.converged);
  CHECK(std::abs(r4.sigma_pick - r4.sigma_hankel) <= 1e-6 * r4.sigma_hankel);
  CHECK(r4.interpolation_error <= 1e-6);
}

TEST_CASE("node-data problems validate their input") {
  CHECK_THROWS_AS(
      pick_minimal(PickProblem{{cplx(1.2, 0.0)}, {cplx(0.1)}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      pick_minimal(PickProblem{{cplx(0.1), cplx(0.1)}, {cplx(0.1), cplx(0.2)}}),
      std::invalid_argument);
  CHECK_THROWS_AS(pick_minimal(PickProblem{{cplx(0.1)}, {}}),
                  std::invalid_argument);
}

TEST_CASE("dropping a node cannot raise the minimal norm") {
  const PickProblem full{{cplx(0.0), cplx(0.5, 0.0), cplx(0.0, -0.3)},
                         {cplx(0.0), cplx(0.3), cplx(0.1)}};
  const PickProblem sub{{cplx(0.0), cplx(0.5, 0.0)}, {cplx(0.0), cplx(0.3)}};
  const InterpolationResult rf = pick_minimal(full);
  const InterpolationResult rs = pick_minimal(sub);
  CHECK(rf.converged);
  CHECK(rs.converged);
  CHECK(rs.sigma <= rf.sigma + 1e-10);
}

TEST_CASE("coefficient functional fixtures") {
  const ExtremalFunctional e11 = extremal_functional(cplx(1.0), cplx(1.0));
  CHECK(e11.value == doctest::Approx(1.25).epsilon(1e-6));
  REQUIRE(e11.extremal_f.zeros.size() == 1);
  CHECK(std::abs(e11.extremal_f.zeros[0] - cplx(-0.5)) <= 1e-5);
  CHECK(!e11.description.empty());
  CHECK(e11.certificate.valid);

  const ExtremalFunctional e10 = extremal_functional(cplx(1.0), cplx(0.0));
  CHECK(e10.value == doctest::Approx(1.0).epsilon(1e-8));
  REQUIRE(e10.extremal_f.zeros.size() == 1);
  CHECK(std::abs(e10.extremal_f.zeros[0]) <= 1e-7);

  const ExtremalFunctional e01 = extremal_functional(cplx(0.0), cplx(1.0));
  CHECK(e01.value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(e01.extremal_f.zeros.empty());

  CHECK_THROWS_AS(extremal_functional(cplx(0.0), cplx(0.0)),
                  std::invalid_argument);
}
