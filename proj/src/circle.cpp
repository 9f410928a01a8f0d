#include "hardyapprox/circle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include "hardyapprox/parallel.hpp"

namespace hardy {

namespace {

Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> engine;
  return engine;
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

cplx int_pow(const cplx& z, int k) {
  if (k < 0) return int_pow(cplx(1.0) / z, -k);
  cplx acc(1.0), base = z;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

}  // namespace

int TrigPolynomial::degree() const {
  int d = 0;
  for (const auto& [k, v] : coeffs) {
    if (v != cplx(0.0)) d = std::max(d, std::abs(k));
  }
  return d;
}

cplx TrigPolynomial::at(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? cplx(0.0) : it->second;
}

cplx TrigPolynomial::eval(const cplx& z) const {
  cplx acc(0.0);
  for (const auto& [k, v] : coeffs) acc += v * int_pow(z, k);
  return acc;
}

void TrigPolynomial::prune(double tol) {
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (std::abs(it->second) <= tol)
      it = coeffs.erase(it);
    else
      ++it;
  }
}

int AnalyticPolynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (coeffs[static_cast<size_t>(i)] != cplx(0.0)) return i;
  }
  return -1;
}

cplx AnalyticPolynomial::eval(const cplx& z) const {
  cplx acc(0.0);
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

AnalyticPolynomial AnalyticPolynomial::derivative() const {
  AnalyticPolynomial d;
  if (coeffs.size() <= 1) return d;
  d.coeffs.resize(coeffs.size() - 1);
  for (size_t i = 1; i < coeffs.size(); ++i) d.coeffs[i - 1] = double(i) * coeffs[i];
  return d;
}

double AnalyticPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

void AnalyticPolynomial::prune(double rel_tol) {
  const double thresh = rel_tol * max_abs_coeff();
  for (auto& c : coeffs) {
    if (std::abs(c) <= thresh) c = cplx(0.0);
  }
  while (!coeffs.empty() && coeffs.back() == cplx(0.0)) coeffs.pop_back();
}

AnalyticPolynomial poly_mul(const AnalyticPolynomial& a, const AnalyticPolynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return AnalyticPolynomial{};
  AnalyticPolynomial out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, cplx(0.0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    for (size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

AnalyticPolynomial poly_from_roots(const std::vector<cplx>& roots, const cplx& leading) {
  AnalyticPolynomial p;
  p.coeffs = {leading};
  for (const auto& r : roots) p = poly_mul(p, AnalyticPolynomial{{-r, cplx(1.0)}});
  return p;
}

AnalyticPolynomial poly_deflate(const AnalyticPolynomial& p, const cplx& root) {
  const int d = p.degree();
  if (d < 1) return AnalyticPolynomial{};
  AnalyticPolynomial q;
  q.coeffs.assign(static_cast<size_t>(d), cplx(0.0));
  cplx carry = p.coeffs[static_cast<size_t>(d)];
  for (int i = d - 1; i >= 0; --i) {
    q.coeffs[static_cast<size_t>(i)] = carry;
    carry = p.coeffs[static_cast<size_t>(i)] + carry * root;
  }
  return q;
}

cplx FiniteBlaschke::eval(const cplx& z) const {
  cplx acc = unimodular_const;
  for (const auto& b : zeros) acc *= (z - b) / (cplx(1.0) - std::conj(b) * z);
  return acc;
}

FiniteBlaschke FiniteBlaschke::power_of_z(int n) {
  FiniteBlaschke b;
  b.zeros.assign(static_cast<size_t>(n), cplx(0.0));
  return b;
}

void validate(const FiniteBlaschke& b) {
  for (const auto& z : b.zeros) require(std::abs(z) < 1.0, "Blaschke zero must lie strictly inside the disk");
  require(std::abs(std::abs(b.unimodular_const) - 1.0) < 1e-12, "Blaschke constant must be unimodular");
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

cplx circle_point(int j, int n) {
  const double t = 2.0 * kPi * double(j) / double(n);
  return cplx(std::cos(t), std::sin(t));
}

int bin_index(int k, int n) {
  require(k >= -n / 2 && k < n / 2, "frequency outside [-N/2, N/2)");
  return k >= 0 ? k : k + n;
}

int bin_frequency(int bin, int n) { return bin < n / 2 ? bin : bin - n; }

std::vector<cplx> spectrum_bins(const SampledCircleFunction& s) {
  require(is_power_of_two(s.n_points), "grid size must be a power of two");
  require(static_cast<int>(s.values.size()) == s.n_points, "sample length mismatch");
  std::vector<cplx> bins;
  fft_engine().fwd(bins, s.values);
  const double inv = 1.0 / double(s.n_points);
  for (auto& b : bins) b *= inv;
  return bins;
}

SampledCircleFunction from_spectrum_bins(const std::vector<cplx>& bins) {
  const int n = static_cast<int>(bins.size());
  require(is_power_of_two(n), "grid size must be a power of two");
  SampledCircleFunction s;
  s.n_points = n;
  fft_engine().inv(s.values, bins);
  for (auto& v : s.values) v *= double(n);
  return s;
}

std::map<int, cplx> fourier_coeffs(const SampledCircleFunction& s) {
  const auto bins = spectrum_bins(s);
  std::map<int, cplx> out;
  for (int b = 0; b < s.n_points; ++b) out[bin_frequency(b, s.n_points)] = bins[static_cast<size_t>(b)];
  return out;
}

cplx fourier_coeff(const SampledCircleFunction& s, int k) {
  const auto bins = spectrum_bins(s);
  return bins[static_cast<size_t>(bin_index(k, s.n_points))];
}

int spectral_width(const TrigPolynomial& g) { return g.degree(); }

int spectral_width(const RationalDiskFunction& g) {
  double rho = 0.0;
  for (const auto& z : g.denominator_blaschke.zeros) rho = std::max(rho, std::abs(z));
  int tail = 0;
  if (rho > 0.0) tail = static_cast<int>(std::ceil(std::log(1e-14) / std::log(rho)));
  return std::max(0, g.numerator.degree()) + g.denominator_blaschke.degree() + tail;
}

SampledCircleFunction sample(const TrigPolynomial& f, int n_points) {
  require(is_power_of_two(n_points), "grid size must be a power of two");
  const int d = f.degree();
  require(n_points >= 4 * (d + 1), "grid too small for the trig polynomial's spectrum");
  std::vector<cplx> bins(static_cast<size_t>(n_points), cplx(0.0));
  for (const auto& [k, v] : f.coeffs) bins[static_cast<size_t>(bin_index(k, n_points))] += v;
  return from_spectrum_bins(bins);
}

SampledCircleFunction sample(const AnalyticPolynomial& f, int n_points) {
  require(is_power_of_two(n_points), "grid size must be a power of two");
  require(n_points >= 4 * (f.degree() + 2), "grid too small for the polynomial's degree");
  std::vector<cplx> bins(static_cast<size_t>(n_points), cplx(0.0));
  for (size_t i = 0; i < f.coeffs.size(); ++i) bins[i] += f.coeffs[i];
  return from_spectrum_bins(bins);
}

SampledCircleFunction sample(const FiniteBlaschke& f, int n_points) {
  require(is_power_of_two(n_points), "grid size must be a power of two");
  validate(f);
  SampledCircleFunction s(n_points);
  parallel_for(n_points, [&](int begin, int end) {
    for (int j = begin; j < end; ++j) s.values[static_cast<size_t>(j)] = f.eval(circle_point(j, n_points));
  });
  return s;
}

SampledCircleFunction sample(const RationalDiskFunction& f, int n_points) {
  require(is_power_of_two(n_points), "grid size must be a power of two");
  validate(f.denominator_blaschke);
  SampledCircleFunction s(n_points);
  parallel_for(n_points, [&](int begin, int end) {
    for (int j = begin; j < end; ++j) {
      const cplx z = circle_point(j, n_points);
      s.values[static_cast<size_t>(j)] = std::conj(f.denominator_blaschke.eval(z)) * f.numerator.eval(z);
    }
  });
  return s;
}

namespace {

void require_same_grid(const SampledCircleFunction& a, const SampledCircleFunction& b) {
  require(a.n_points == b.n_points, "grid size mismatch");
}

}  // namespace

SampledCircleFunction operator+(const SampledCircleFunction& a, const SampledCircleFunction& b) {
  require_same_grid(a, b);
  SampledCircleFunction out(a.n_points);
  for (size_t j = 0; j < out.values.size(); ++j) out.values[j] = a.values[j] + b.values[j];
  return out;
}

SampledCircleFunction operator-(const SampledCircleFunction& a, const SampledCircleFunction& b) {
  require_same_grid(a, b);
  SampledCircleFunction out(a.n_points);
  for (size_t j = 0; j < out.values.size(); ++j) out.values[j] = a.values[j] - b.values[j];
  return out;
}

SampledCircleFunction operator*(const SampledCircleFunction& a, const SampledCircleFunction& b) {
  require_same_grid(a, b);
  SampledCircleFunction out(a.n_points);
  for (size_t j = 0; j < out.values.size(); ++j) out.values[j] = a.values[j] * b.values[j];
  return out;
}

SampledCircleFunction operator*(const cplx& a, const SampledCircleFunction& b) {
  SampledCircleFunction out(b.n_points);
  for (size_t j = 0; j < out.values.size(); ++j) out.values[j] = a * b.values[j];
  return out;
}

SampledCircleFunction pointwise_div(const SampledCircleFunction& a, const SampledCircleFunction& b) {
  require_same_grid(a, b);
  SampledCircleFunction out(a.n_points);
  for (size_t j = 0; j < out.values.size(); ++j) out.values[j] = a.values[j] / b.values[j];
  return out;
}

SampledCircleFunction conj_samples(const SampledCircleFunction& s) {
  SampledCircleFunction out(s.n_points);
  for (size_t j = 0; j < out.values.size(); ++j) out.values[j] = std::conj(s.values[j]);
  return out;
}

SampledCircleFunction abs_samples(const SampledCircleFunction& s) {
  SampledCircleFunction out(s.n_points);
  for (size_t j = 0; j < out.values.size(); ++j) out.values[j] = cplx(std::abs(s.values[j]), 0.0);
  return out;
}

double max_abs(const SampledCircleFunction& s) {
  double m = 0.0;
  for (const auto& v : s.values) m = std::max(m, std::abs(v));
  return m;
}

double analytic_defect(const SampledCircleFunction& s) {
  const auto bins = spectrum_bins(s);
  double m = 0.0;
  for (int b = s.n_points / 2; b < s.n_points; ++b) m = std::max(m, std::abs(bins[static_cast<size_t>(b)]));
  return m;
}

double lp_norm(const SampledCircleFunction& s, double p) {
  require(p >= 1.0, "p must be at least 1");
  if (std::isinf(p)) return max_abs(s);
  double acc = 0.0;
  for (const auto& v : s.values) acc += std::pow(std::abs(v), p);
  return std::pow(acc / double(s.n_points), 1.0 / p);
}

SampledCircleFunction riesz_projection(const SampledCircleFunction& s) {
  auto bins = spectrum_bins(s);
  for (int b = s.n_points / 2; b < s.n_points; ++b) bins[static_cast<size_t>(b)] = cplx(0.0);
  return from_spectrum_bins(bins);
}

namespace {

// Analytic completion of real grid data u: returns L with nonnegative-
// frequency spectrum, real mean, and Re L = u exactly on the grid.
SampledCircleFunction analytic_completion(const std::vector<double>& u, int n) {
  SampledCircleFunction ur(n);
  for (int j = 0; j < n; ++j) ur.values[static_cast<size_t>(j)] = cplx(u[static_cast<size_t>(j)], 0.0);
  auto bins = spectrum_bins(ur);
  for (int b = 1; b < n / 2; ++b) bins[static_cast<size_t>(b)] *= 2.0;
  bins[0] = cplx(bins[0].real(), 0.0);
  bins[static_cast<size_t>(n / 2)] = cplx(bins[static_cast<size_t>(n / 2)].real(), 0.0);
  for (int b = n / 2 + 1; b < n; ++b) bins[static_cast<size_t>(b)] = cplx(0.0);
  return from_spectrum_bins(bins);
}

}  // namespace

SampledCircleFunction outer_from_modulus(const SampledCircleFunction& phi, bool* floored) {
  require(is_power_of_two(phi.n_points), "grid size must be a power of two");
  const int n = phi.n_points;
  double mx = 0.0;
  for (const auto& v : phi.values) {
    require(std::abs(v.imag()) <= 1e-10 * (1.0 + std::abs(v.real())), "modulus data must be real");
    require(v.real() >= -1e-12 * std::max(1.0, mx), "modulus data must be nonnegative");
    mx = std::max(mx, v.real());
  }
  require(mx > 0.0, "modulus data is identically zero");
  const double floor_val = 1e-14 * mx;
  bool any_floored = false;
  std::vector<double> u(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    double v = phi.values[static_cast<size_t>(j)].real();
    if (v < floor_val) {
      v = floor_val;
      any_floored = true;
    }
    u[static_cast<size_t>(j)] = 0.5 * std::log(v);
  }
  if (floored) *floored = any_floored;
  const SampledCircleFunction logf = analytic_completion(u, n);
  SampledCircleFunction f(n);
  for (int j = 0; j < n; ++j) f.values[static_cast<size_t>(j)] = std::exp(logf.values[static_cast<size_t>(j)]);
  return f;
}

SampledCircleFunction outer_power(const SampledCircleFunction& f, double s) {
  require(is_power_of_two(f.n_points), "grid size must be a power of two");
  const int n = f.n_points;
  std::vector<double> u(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    const double a = std::abs(f.values[static_cast<size_t>(j)]);
    require(a > 1e-150, "outer factor vanishes on the grid");
    u[static_cast<size_t>(j)] = s * std::log(a);
  }
  const SampledCircleFunction logf = analytic_completion(u, n);
  SampledCircleFunction out(n);
  for (int j = 0; j < n; ++j) out.values[static_cast<size_t>(j)] = std::exp(logf.values[static_cast<size_t>(j)]);
  return out;
}

namespace {

// Parlett-Reinsch style diagonal balancing of a dense complex matrix.
void balance_in_place(Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows());
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double row = 0.0, col = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        row += std::abs(m(i, j));
        col += std::abs(m(j, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      double f = 1.0;
      const double s = row + col;
      while (col < row / 2.0) {
        col *= 2.0;
        row /= 2.0;
        f *= 2.0;
      }
      while (col > row * 2.0) {
        col /= 2.0;
        row *= 2.0;
        f /= 2.0;
      }
      if (row + col < 0.95 * s) {
        done = false;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

}  // namespace

std::vector<cplx> poly_roots(const AnalyticPolynomial& p) {
  AnalyticPolynomial q = p;
  q.prune(1e-12);
  const int d = q.degree();
  require(d >= 1, "root finding needs degree >= 1 after pruning");

  std::vector<cplx> roots;
  size_t low = 0;
  while (low < q.coeffs.size() && q.coeffs[low] == cplx(0.0)) {
    roots.push_back(cplx(0.0));
    ++low;
  }
  const int dd = d - static_cast<int>(low);
  if (dd >= 1) {
    const cplx lead = q.coeffs[static_cast<size_t>(d)];
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(dd, dd);
    for (int i = 1; i < dd; ++i) companion(i, i - 1) = cplx(1.0);
    for (int i = 0; i < dd; ++i) companion(i, dd - 1) = -q.coeffs[low + static_cast<size_t>(i)] / lead;
    balance_in_place(companion);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    require(solver.info() == Eigen::Success, "companion eigenvalue iteration failed");
    const AnalyticPolynomial dq = q.derivative();
    for (int i = 0; i < dd; ++i) {
      cplx r = solver.eigenvalues()(i);
      const cplx dv = dq.eval(r);
      if (std::abs(dv) > 0.0) {
        const cplx polished = r - q.eval(r) / dv;
        if (std::abs(q.eval(polished)) < std::abs(q.eval(r))) r = polished;
      }
      roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
  return roots;
}

TrigPolynomial trig_from_samples(const SampledCircleFunction& s, int max_abs_freq, double prune_tol) {
  require(max_abs_freq < s.n_points / 2, "requested frequency range exceeds the grid");
  const auto bins = spectrum_bins(s);
  TrigPolynomial out;
  for (int k = -max_abs_freq; k <= max_abs_freq; ++k) {
    const cplx c = bins[static_cast<size_t>(bin_index(k, s.n_points))];
    if (std::abs(c) > prune_tol) out.coeffs[k] = c;
  }
  return out;
}

AnalyticPolynomial analytic_from_samples(const SampledCircleFunction& s, int max_degree, double prune_tol) {
  require(max_degree < s.n_points / 2, "requested degree exceeds the grid");
  const auto bins = spectrum_bins(s);
  AnalyticPolynomial out;
  out.coeffs.assign(static_cast<size_t>(max_degree) + 1, cplx(0.0));
  for (int k = 0; k <= max_degree; ++k) {
    const cplx c = bins[static_cast<size_t>(k)];
    if (std::abs(c) > prune_tol) out.coeffs[static_cast<size_t>(k)] = c;
  }
  while (!out.coeffs.empty() && out.coeffs.back() == cplx(0.0)) out.coeffs.pop_back();
  return out;
}

}  // namespace hardy
