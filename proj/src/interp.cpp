#include "hardyapprox/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace hardy {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool theta_is_power_of_z(const FiniteBlaschke& theta) {
  if (std::abs(theta.unimodular_const - cplx(1.0)) > 0.0) return false;
  for (const auto& z : theta.zeros) {
    if (z != cplx(0.0)) return false;
  }
  return true;
}

SampledCircleFunction zbar_pow_shift(const SampledCircleFunction& s, int n) {
  SampledCircleFunction out(s.n_points);
  for (int j = 0; j < s.n_points; ++j) {
    cplx zb = std::conj(circle_point(j, s.n_points));
    cplx acc(1.0);
    for (int k = 0; k < n; ++k) acc *= zb;
    out.values[static_cast<size_t>(j)] = acc * s.values[static_cast<size_t>(j)];
  }
  return out;
}

// Evaluates sum_k coeffs[k] z^{-k} on the grid.
SampledCircleFunction antianalytic_eval(const std::vector<cplx>& coeffs, int n_grid) {
  std::vector<cplx> bins(static_cast<size_t>(n_grid), cplx(0.0));
  for (size_t k = 0; k < coeffs.size(); ++k) {
    const int freq = -static_cast<int>(k);
    bins[static_cast<size_t>(bin_index(freq, n_grid))] += coeffs[k];
  }
  return from_spectrum_bins(bins);
}

SampledCircleFunction analytic_eval(const std::vector<cplx>& coeffs, int n_grid) {
  std::vector<cplx> bins(static_cast<size_t>(n_grid), cplx(0.0));
  for (size_t k = 0; k < coeffs.size(); ++k) bins[k] += coeffs[k];
  return from_spectrum_bins(bins);
}

cplx fitted_allpass_const(const SampledCircleFunction& f, const FiniteBlaschke& b, double sigma) {
  const SampledCircleFunction bs = sample(b, f.n_points);
  cplx acc(0.0);
  for (int j = 0; j < f.n_points; ++j)
    acc += f.values[static_cast<size_t>(j)] / (sigma * bs.values[static_cast<size_t>(j)]);
  acc /= double(f.n_points);
  const double m = std::abs(acc);
  return m > 0.0 ? acc / m : cplx(1.0);
}

// Zeros of a grid-sampled analytic function with no zeros on the circle:
// winding number plus contour power sums, then Newton's identities.
std::vector<cplx> analytic_zeros_inside(const SampledCircleFunction& f, int max_count, bool* ok) {
  const int n = f.n_points;
  auto bins = spectrum_bins(f);
  for (int b = n / 2; b < n; ++b) bins[static_cast<size_t>(b)] = cplx(0.0);
  std::vector<cplx> dbins(static_cast<size_t>(n), cplx(0.0));
  for (int k = 1; k < n / 2; ++k)
    dbins[static_cast<size_t>(k - 1)] = double(k) * bins[static_cast<size_t>(k)];
  const SampledCircleFunction fa = from_spectrum_bins(bins);
  const SampledCircleFunction fd = from_spectrum_bins(dbins);

  std::vector<cplx> ratio(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    ratio[static_cast<size_t>(j)] = fd.values[static_cast<size_t>(j)] / fa.values[static_cast<size_t>(j)];

  auto power_sum = [&](int m) {
    cplx acc(0.0);
    for (int j = 0; j < n; ++j) {
      cplx zp(1.0);
      const cplx z = circle_point(j, n);
      for (int t = 0; t <= m; ++t) zp *= z;
      acc += zp * ratio[static_cast<size_t>(j)];
    }
    return acc / double(n);
  };

  if (ok) *ok = true;
  const cplx s0 = power_sum(0);
  const int count = static_cast<int>(std::lround(s0.real()));
  if (std::abs(s0 - cplx(double(count))) > 1e-6 || count < 0 || count > max_count) {
    if (ok) *ok = false;
    return {};
  }
  if (count == 0) return {};

  std::vector<cplx> s(static_cast<size_t>(count) + 1, cplx(0.0));
  for (int m = 1; m <= count; ++m) s[static_cast<size_t>(m)] = power_sum(m);
  std::vector<cplx> e(static_cast<size_t>(count) + 1, cplx(0.0));
  e[0] = cplx(1.0);
  for (int k = 1; k <= count; ++k) {
    cplx acc(0.0);
    for (int i = 1; i <= k; ++i) {
      const double sign = (i % 2 == 1) ? 1.0 : -1.0;
      acc += sign * e[static_cast<size_t>(k - i)] * s[static_cast<size_t>(i)];
    }
    e[static_cast<size_t>(k)] = acc / double(k);
  }
  AnalyticPolynomial poly;
  poly.coeffs.assign(static_cast<size_t>(count) + 1, cplx(0.0));
  for (int k = 0; k <= count; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    poly.coeffs[static_cast<size_t>(count - k)] = sign * e[static_cast<size_t>(k)];
  }
  return poly_roots(poly);
}

double top_singular_value_power_iteration(const Eigen::MatrixXcd& h) {
  const int n = static_cast<int>(h.rows());
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(n);
  for (int i = 0; i < n; ++i) v(i) += cplx(0.0, 1.0 / double(i + 1));
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < 3000; ++it) {
    Eigen::VectorXcd w = h.adjoint() * (h * v);
    const double nrm = w.norm();
    if (nrm == 0.0) return 0.0;
    w /= nrm;
    const double next = std::sqrt(nrm);
    const bool settled = std::abs(next - sigma) <= 1e-13 * std::max(1e-300, next);
    sigma = next;
    v = w;
    if (settled && it > 4) break;
  }
  return sigma;
}

}  // namespace

InterpolationResult interpolate_etheta(const AnalyticPolynomial& f1, const FiniteBlaschke& theta,
                                       double p, const ApproxConfig& cfg) {
  validate(theta);
  require(theta.degree() >= 1, "theta must have degree at least 1");
  require(p >= 1.0 && !std::isinf(p), "p must lie in [1, inf)");

  InterpolationResult out;
  AnalyticPolynomial f1p = f1;
  f1p.prune(0.0);
  if (f1p.degree() < 0) {
    out.f_samples = SampledCircleFunction(cfg.grid);
    out.residual = SampledCircleFunction(cfg.grid);
    return out;
  }

  RationalDiskFunction g;
  g.numerator = f1p;
  g.denominator_blaschke = theta;
  ApproxConfig run = cfg;
  run.p = p;
  const ApproxResult res = best_approx(g, run);
  out.iterations = res.iterations;
  out.converged = res.converged;
  out.sigma = res.c;

  const int n_grid = res.residual.n_points;
  const SampledCircleFunction theta_s = sample(theta, n_grid);
  out.f_samples = theta_s * res.residual;
  out.residual = res.residual;

  out.certificate = extract_certificate(res.residual, theta, p, res.c);
  out.has_certificate = true;
  out.blaschke_zeros = out.certificate.inner_I.zeros;

  if (theta_is_power_of_z(theta)) {
    const int n = theta.degree();
    AnalyticPolynomial f2 = f1p;
    const int top = n + std::max(0, res.p_g.degree());
    if (f2.degree() < top) f2.coeffs.resize(static_cast<size_t>(top) + 1, cplx(0.0));
    for (int k = 0; k <= res.p_g.degree(); ++k)
      f2.coeffs[static_cast<size_t>(n + k)] -= res.p_g.coeffs[static_cast<size_t>(k)];
    // Coefficients under 1e-9 of the peak sit below the solver's noise
    // floor and would otherwise inflate the reported degree.
    f2.prune(1e-9);
    out.f = f2;
  }

  // f1 - f2 = theta p_g must lie in theta H^p.
  const SampledCircleFunction diff = sample(f1p, n_grid) - out.f_samples;
  out.interpolation_error = analytic_defect(conj_samples(theta_s) * diff);
  return out;
}

InterpolationResult interpolate_etheta(const TrigPolynomial& f1, const FiniteBlaschke& theta,
                                       double p, const ApproxConfig& cfg) {
  AnalyticPolynomial conv;
  int top = 0;
  for (const auto& [k, v] : f1.coeffs) {
    if (v == cplx(0.0)) continue;
    require(k >= 0, "f1 must be analytic (no negative frequencies)");
    top = std::max(top, k);
  }
  conv.coeffs.assign(static_cast<size_t>(top) + 1, cplx(0.0));
  for (const auto& [k, v] : f1.coeffs) {
    if (k >= 0) conv.coeffs[static_cast<size_t>(k)] = v;
  }
  return interpolate_etheta(conv, theta, p, cfg);
}

InterpolationResult schur_minimal(const SchurProblem& prob, int grid) {
  const int n = static_cast<int>(prob.a.size());
  require(n >= 1, "need at least one Taylor coefficient");
  int n_grid = 4;
  while (n_grid < std::max(grid, 8 * (n + 2))) n_grid *= 2;

  InterpolationResult out;
  double amax = 0.0;
  for (const auto& c : prob.a) amax = std::max(amax, std::abs(c));
  if (amax == 0.0) {
    out.f_samples = SampledCircleFunction(n_grid);
    out.residual = SampledCircleFunction(n_grid);
    out.has_allpass_form = false;
    return out;
  }

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; j + k <= n - 1; ++k) h(j, k) = prob.a[static_cast<size_t>(n - 1 - j - k)];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double sigma = svd.singularValues()(0);
  out.sigma = sigma;
  out.unique_top = n < 2 || (svd.singularValues()(0) - svd.singularValues()(1)) > 1e-10 * sigma;

  std::vector<cplx> u(static_cast<size_t>(n)), v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    u[static_cast<size_t>(i)] = svd.matrixU()(i, 0);
    v[static_cast<size_t>(i)] = svd.matrixV()(i, 0);
  }
  std::vector<cplx> u_rev(u.rbegin(), u.rend());

  const SampledCircleFunction num = analytic_eval(u_rev, n_grid);
  const SampledCircleFunction den = analytic_eval(v, n_grid);
  out.f_samples = SampledCircleFunction(n_grid);
  for (int j = 0; j < n_grid; ++j) {
    const cplx d = den.values[static_cast<size_t>(j)];
    out.f_samples.values[static_cast<size_t>(j)] = sigma * num.values[static_cast<size_t>(j)] / d;
  }
  out.residual = zbar_pow_shift(out.f_samples, n);
  for (const auto& val : out.f_samples.values)
    out.allpass_deviation = std::max(out.allpass_deviation, std::abs(std::abs(val) - sigma));

  AnalyticPolynomial pu{u_rev}, pv{v};
  pu.prune(1e-11);
  pv.prune(1e-11);
  std::vector<cplx> zeros_u = pu.degree() >= 1 ? poly_roots(pu) : std::vector<cplx>{};
  const std::vector<cplx> zeros_v = pv.degree() >= 1 ? poly_roots(pv) : std::vector<cplx>{};
  for (const auto& rv : zeros_v) {
    auto it = std::min_element(zeros_u.begin(), zeros_u.end(), [&rv](const cplx& a, const cplx& b) {
      return std::abs(a - rv) < std::abs(b - rv);
    });
    if (it != zeros_u.end() && std::abs(*it - rv) <= 1e-7 * (1.0 + std::abs(rv))) zeros_u.erase(it);
  }
  for (const auto& r : zeros_u) {
    if (std::abs(r) < 1.0) out.blaschke_zeros.push_back(r);
  }
  std::sort(out.blaschke_zeros.begin(), out.blaschke_zeros.end(), [](const cplx& a, const cplx& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });

  out.allpass_form.zeros = out.blaschke_zeros;
  out.allpass_form.unimodular_const = fitted_allpass_const(out.f_samples, out.allpass_form, sigma);
  out.has_allpass_form = true;

  const auto bins = spectrum_bins(out.f_samples);
  for (int k = 0; k < n; ++k)
    out.interpolation_error =
        std::max(out.interpolation_error,
                 std::abs(bins[static_cast<size_t>(k)] - prob.a[static_cast<size_t>(k)]) / (1.0 + amax));
  return out;
}

InterpolationResult pick_minimal(const PickProblem& prob, const PickOptions& opts) {
  const int n = static_cast<int>(prob.nodes.size());
  require(n >= 1, "need at least one node");
  require(prob.values.size() == prob.nodes.size(), "nodes and values must match in length");
  for (const auto& z : prob.nodes) require(std::abs(z) < 1.0, "nodes must lie strictly inside the disk");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      require(std::abs(prob.nodes[static_cast<size_t>(i)] - prob.nodes[static_cast<size_t>(j)]) > 1e-10,
              "nodes must be pairwise distinct");
  }
  const int m_h = opts.hankel_section;
  require(is_power_of_two(opts.grid) && opts.grid >= 4 * m_h, "grid must cover the Hankel section");

  InterpolationResult out;
  double wmax = 0.0;
  for (const auto& w : prob.values) wmax = std::max(wmax, std::abs(w));
  if (wmax == 0.0) {
    out.f_samples = SampledCircleFunction(opts.grid);
    out.residual = SampledCircleFunction(opts.grid);
    out.sigma_pick = out.sigma_hankel = 0.0;
    return out;
  }

  auto feasible = [&](double rho) {
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        a(i, j) = (rho * rho - prob.values[static_cast<size_t>(i)] *
                                   std::conj(prob.values[static_cast<size_t>(j)])) /
                  (cplx(1.0) - prob.nodes[static_cast<size_t>(i)] *
                                   std::conj(prob.nodes[static_cast<size_t>(j)]));
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(a, Eigen::EigenvaluesOnly);
    return eig.eigenvalues()(0) >= -1e-10 * wmax;
  };

  double lo = 0.0, hi = wmax;
  const double cap = std::ldexp(wmax, 20);
  while (!feasible(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > cap) throw std::runtime_error("Pick bisection failed to bracket sigma");
  }
  for (int it = 0; it < 300 && (hi - lo) > 1e-13 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid))
      hi = mid;
    else
      lo = mid;
  }
  out.sigma_pick = hi;
  out.sigma = hi;

  // Nehari route for the extremal function.
  FiniteBlaschke b;
  b.zeros = prob.nodes;
  Eigen::MatrixXcd vand(n, n);
  Eigen::VectorXcd w(n);
  for (int i = 0; i < n; ++i) {
    cplx zp(1.0);
    for (int j = 0; j < n; ++j) {
      vand(i, j) = zp;
      zp *= prob.nodes[static_cast<size_t>(i)];
    }
    w(i) = prob.values[static_cast<size_t>(i)];
  }
  const Eigen::VectorXcd coef = vand.partialPivLu().solve(w);
  AnalyticPolynomial f1;
  f1.coeffs.assign(static_cast<size_t>(n), cplx(0.0));
  for (int i = 0; i < n; ++i) f1.coeffs[static_cast<size_t>(i)] = coef(i);

  const int n_grid = opts.grid;
  const SampledCircleFunction b_s = sample(b, n_grid);
  const SampledCircleFunction psi = conj_samples(b_s) * sample(f1, n_grid);
  const auto psi_bins = spectrum_bins(psi);
  auto psi_neg = [&](int k) { return psi_bins[static_cast<size_t>(bin_index(-k, n_grid))]; };

  Eigen::MatrixXcd hank(m_h, m_h);
  for (int j = 0; j < m_h; ++j) {
    for (int k = 0; k < m_h; ++k) hank(j, k) = psi_neg(j + k + 1);
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(hank, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double sigma_h = svd.singularValues()(0);
  out.sigma_hankel = sigma_h;
  out.unique_top = (svd.singularValues()(0) - svd.singularValues()(1)) > 1e-10 * sigma_h;

  if (opts.doubling_check) {
    const int m2 = 2 * m_h;
    require(n_grid >= 4 * m2, "grid must cover the doubled Hankel section");
    Eigen::MatrixXcd hank2(m2, m2);
    for (int j = 0; j < m2; ++j) {
      for (int k = 0; k < m2; ++k) hank2(j, k) = psi_neg(j + k + 1);
    }
    const double sigma_2 = top_singular_value_power_iteration(hank2);
    if (std::abs(sigma_2 - sigma_h) > 1e-8 * std::max(1e-300, sigma_h)) out.converged = false;
  }

  std::vector<cplx> u(static_cast<size_t>(m_h)), v(static_cast<size_t>(m_h));
  for (int i = 0; i < m_h; ++i) {
    u[static_cast<size_t>(i)] = svd.matrixU()(i, 0);
    v[static_cast<size_t>(i)] = svd.matrixV()(i, 0);
  }
  const SampledCircleFunction u_sharp = antianalytic_eval(u, n_grid);
  const SampledCircleFunction den = analytic_eval(v, n_grid);
  SampledCircleFunction err(n_grid);
  for (int j = 0; j < n_grid; ++j) {
    const cplx zb = std::conj(circle_point(j, n_grid));
    err.values[static_cast<size_t>(j)] = sigma_h * zb * u_sharp.values[static_cast<size_t>(j)] /
                                         den.values[static_cast<size_t>(j)];
  }
  out.residual = err;
  out.f_samples = b_s * err;
  for (const auto& val : out.f_samples.values)
    out.allpass_deviation = std::max(out.allpass_deviation, std::abs(std::abs(val) - sigma_h));

  bool zeros_ok = true;
  out.blaschke_zeros = analytic_zeros_inside(out.f_samples, n - 1, &zeros_ok);
  if (!zeros_ok) out.converged = false;
  out.allpass_form.zeros = out.blaschke_zeros;
  out.allpass_form.unimodular_const = fitted_allpass_const(out.f_samples, out.allpass_form, sigma_h);
  out.has_allpass_form = true;

  auto f_bins = spectrum_bins(out.f_samples);
  for (int bn = n_grid / 2; bn < n_grid; ++bn) f_bins[static_cast<size_t>(bn)] = cplx(0.0);
  for (int i = 0; i < n; ++i) {
    cplx acc(0.0), zp(1.0);
    for (int k = 0; k < n_grid / 2; ++k) {
      acc += f_bins[static_cast<size_t>(k)] * zp;
      zp *= prob.nodes[static_cast<size_t>(i)];
    }
    out.interpolation_error =
        std::max(out.interpolation_error, std::abs(acc - prob.values[static_cast<size_t>(i)]) /
                                              (1.0 + std::abs(prob.values[static_cast<size_t>(i)])));
  }
  return out;
}

ExtremalFunctional extremal_functional(const cplx& a0, const cplx& a1) {
  require(a0 != cplx(0.0) || a1 != cplx(0.0), "need a nonzero functional");
  ExtremalFunctional out;
  AnalyticPolynomial f1{{a0, a1}};
  f1.prune(0.0);
  ApproxConfig cfg;
  const InterpolationResult res =
      interpolate_etheta(f1, FiniteBlaschke::power_of_z(2), 1.0, cfg);
  out.value = res.sigma;
  out.certificate = res.certificate;
  const DualCertificate dual = dual_extremal(res.certificate, &res.residual);
  out.extremal_f = dual.inner_J;
  out.description =
      "largest |a1 f(0) + a0 f'(0)| over analytic f with |f| <= 1 on the disk; "
      "the maximizer is the reported Blaschke product";
  return out;
}

}  // namespace hardy
