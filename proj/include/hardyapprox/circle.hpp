#pragma once

#include <complex>
#include <map>
#include <vector>

namespace hardy {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Two-sided finite Fourier series sum_k coeffs[k] z^k, |k| <= degree().
struct TrigPolynomial {
  std::map<int, cplx> coeffs;

  TrigPolynomial() = default;
  explicit TrigPolynomial(std::map<int, cplx> c) : coeffs(std::move(c)) {}

  int degree() const;
  cplx at(int k) const;
  cplx eval(const cplx& z) const;
  void prune(double tol);
};

// sum_k coeffs[k] z^k, k = 0..degree(); degree() is -1 for the zero polynomial.
struct AnalyticPolynomial {
  std::vector<cplx> coeffs;

  AnalyticPolynomial() = default;
  explicit AnalyticPolynomial(std::vector<cplx> c) : coeffs(std::move(c)) {}

  int degree() const;
  cplx eval(const cplx& z) const;
  AnalyticPolynomial derivative() const;
  double max_abs_coeff() const;
  // Zeroes coefficients below rel_tol * max|coeff| and drops the zero tail.
  void prune(double rel_tol = 1e-12);
};

AnalyticPolynomial poly_mul(const AnalyticPolynomial& a, const AnalyticPolynomial& b);
AnalyticPolynomial poly_from_roots(const std::vector<cplx>& roots, const cplx& leading = cplx(1.0));
// Divides by (z - root); the remainder is discarded.
AnalyticPolynomial poly_deflate(const AnalyticPolynomial& p, const cplx& root);

// const * prod_i (z - zeros[i]) / (1 - conj(zeros[i]) z), all |zeros[i]| < 1.
struct FiniteBlaschke {
  std::vector<cplx> zeros;
  cplx unimodular_const{1.0, 0.0};

  int degree() const { return static_cast<int>(zeros.size()); }
  cplx eval(const cplx& z) const;
  static FiniteBlaschke power_of_z(int n);
};

void validate(const FiniteBlaschke& b);

// Values on the uniform grid zeta_j = exp(2 pi i j / N), N a power of two.
struct SampledCircleFunction {
  int n_points = 0;
  std::vector<cplx> values;

  SampledCircleFunction() = default;
  explicit SampledCircleFunction(int n) : n_points(n), values(static_cast<size_t>(n), cplx(0.0)) {}
};

// g = h / B, equal to conj(B) * h on the circle.
struct RationalDiskFunction {
  AnalyticPolynomial numerator;
  FiniteBlaschke denominator_blaschke;
};

bool is_power_of_two(int n);
cplx circle_point(int j, int n);

// Frequency k <-> FFT bin (k mod N); k must lie in [-N/2, N/2).
int bin_index(int k, int n);
int bin_frequency(int bin, int n);

// bins[bin_index(k)] = (1/N) sum_j values[j] zeta_j^{-k}; matches Laurent
// coefficients, so analyticity means the negative-frequency bins vanish.
std::vector<cplx> spectrum_bins(const SampledCircleFunction& s);
SampledCircleFunction from_spectrum_bins(const std::vector<cplx>& bins);

std::map<int, cplx> fourier_coeffs(const SampledCircleFunction& s);
cplx fourier_coeff(const SampledCircleFunction& s, int k);

// Effective one-sided Fourier support used by aliasing guards. For rational
// inputs this includes the geometric tail of 1/B down to 1e-14.
int spectral_width(const TrigPolynomial& g);
int spectral_width(const RationalDiskFunction& g);

SampledCircleFunction sample(const TrigPolynomial& f, int n_points);
SampledCircleFunction sample(const AnalyticPolynomial& f, int n_points);
SampledCircleFunction sample(const FiniteBlaschke& f, int n_points);
SampledCircleFunction sample(const RationalDiskFunction& f, int n_points);

SampledCircleFunction operator+(const SampledCircleFunction& a, const SampledCircleFunction& b);
SampledCircleFunction operator-(const SampledCircleFunction& a, const SampledCircleFunction& b);
SampledCircleFunction operator*(const SampledCircleFunction& a, const SampledCircleFunction& b);
SampledCircleFunction operator*(const cplx& a, const SampledCircleFunction& b);
SampledCircleFunction pointwise_div(const SampledCircleFunction& a, const SampledCircleFunction& b);
SampledCircleFunction conj_samples(const SampledCircleFunction& s);
SampledCircleFunction abs_samples(const SampledCircleFunction& s);
double max_abs(const SampledCircleFunction& s);

// Largest |coefficient| at frequencies < 0; the H^p membership defect.
double analytic_defect(const SampledCircleFunction& s);

// (1/N sum |s_j|^p)^(1/p); p = infinity gives max_j |s_j|.
double lp_norm(const SampledCircleFunction& s, double p);

// Zeroes every negative-frequency bin.
SampledCircleFunction riesz_projection(const SampledCircleFunction& s);

// Outer function with |F| = sqrt(phi) on the grid and F(0) = exp(mean log
// sqrt(phi)) > 0. Values below 1e-14 * max(phi) are floored before the log;
// *floored reports whether that happened.
SampledCircleFunction outer_from_modulus(const SampledCircleFunction& phi, bool* floored = nullptr);

// exp(s * Log F) for outer F, where Log F is the analytic logarithm with real
// mean; |result| = |F|^s on the grid.
SampledCircleFunction outer_power(const SampledCircleFunction& f, double s);

// All roots with multiplicity (companion matrix + one Newton polish), sorted
// by modulus then argument.
std::vector<cplx> poly_roots(const AnalyticPolynomial& p);

// Reads coefficients back off the grid. Coefficients with |c| <= prune_tol
// are dropped.
TrigPolynomial trig_from_samples(const SampledCircleFunction& s, int max_abs_freq, double prune_tol = 0.0);
AnalyticPolynomial analytic_from_samples(const SampledCircleFunction& s, int max_degree, double prune_tol = 0.0);

}  // namespace hardy
