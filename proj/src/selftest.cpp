#include "hardyapprox/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>

#include "hardyapprox/interp.hpp"

namespace hardy {

namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return std::string(buf);
}

struct Gate {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& msg) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
};

template <class Fn>
void run_check(std::vector<CheckOutcome>& out, const std::string& name,
               double budget_seconds, Fn&& body) {
  Stopwatch sw;
  Gate g;
  std::string ok_detail;
  try {
    ok_detail = body(g);
  } catch (const std::exception& e) {
    g.check(false, std::string("exception: ") + e.what());
  }
  const double secs = sw.elapsed();
  if (secs >= budget_seconds) {
    g.check(false, fmt("took %.2fs, budget %.0fs", secs, budget_seconds));
  }
  out.push_back(CheckOutcome{name, g.pass, secs, g.pass ? ok_detail : g.detail});
}

// Platform-independent uniforms; the standard distribution adapters are not
// pinned down across implementations.
double unif(std::mt19937& rng) {
  return static_cast<double>(rng()) * (1.0 / 4294967296.0);
}

cplx rand_coeff(std::mt19937& rng) {
  const double re = 2.0 * unif(rng) - 1.0;
  const double im = 2.0 * unif(rng) - 1.0;
  return cplx(re, im);
}

cplx coeff_at(const AnalyticPolynomial& p, int k) {
  if (k < 0 || k >= static_cast<int>(p.coeffs.size())) return cplx(0.0);
  return p.coeffs[static_cast<size_t>(k)];
}

TrigPolynomial random_trig(std::mt19937& rng, int n) {
  TrigPolynomial g;
  for (int k = -n; k <= n; ++k) g.coeffs[k] = rand_coeff(rng);
  return g;
}

struct SolveRecord {
  TrigPolynomial g;
  int n = 0;
  ApproxResult res;
  double g_sup = 0.0;
};

struct CertRecord {
  StructuralCertificate cert;
  SampledCircleFunction residual;
};

constexpr double kNoBudget = 1e9;

// z^n * residual as a polynomial, read off the frequencies [-n, n] and
// relatively pruned so solver noise cannot masquerade as extra roots.
AnalyticPolynomial shifted_residual_polynomial(const SampledCircleFunction& r,
                                               int n) {
  const TrigPolynomial tr = trig_from_samples(r, n, 0.0);
  AnalyticPolynomial p;
  p.coeffs.assign(static_cast<size_t>(2 * n + 1), cplx(0.0));
  for (int k = -n; k <= n; ++k) {
    p.coeffs[static_cast<size_t>(k + n)] = tr.at(k);
  }
  p.prune(1e-7);
  return p;
}

double max_zero_discrepancy(const std::vector<cplx>& a,
                            const std::vector<cplx>& b) {
  if (a.size() != b.size()) return 1e9;
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace

std::vector<CheckOutcome> run_acceptance_suite() {
  std::vector<CheckOutcome> out;

  std::vector<SolveRecord> records;
  std::vector<CertRecord> dual_inputs;
  int flags_total = 0;
  int flags_ok = 0;
  auto note_flag = [&](bool converged) {
    ++flags_total;
    if (converged) ++flags_ok;
  };

  run_check(out, "example-values", 5.0, [&](Gate& g) {
    const ExtremalFunctional ex = extremal_functional(cplx(1.0), cplx(1.0));
    g.check(std::abs(ex.value - 1.25) <= 1e-6,
            fmt("functional value %.9f, want 1.25", ex.value));

    ApproxConfig cfg;
    cfg.p = 1.0;
    const AnalyticPolynomial f1({cplx(1.0), cplx(1.0)});
    const InterpolationResult r =
        interpolate_etheta(f1, FiniteBlaschke::power_of_z(2), 1.0, cfg);
    note_flag(r.converged);
    const cplx c0 = coeff_at(r.f, 0);
    const cplx c1 = coeff_at(r.f, 1);
    const cplx c2 = coeff_at(r.f, 2);
    g.check(std::abs(c0 - cplx(1.0)) <= 1e-6 &&
                std::abs(c1 - cplx(1.0)) <= 1e-6 &&
                std::abs(c2 - cplx(0.25)) <= 1e-6 &&
                r.f.degree() <= 2,
            fmt("interpolant coeffs (%.8f%+.1ei, %.8f%+.1ei, %.8f%+.1ei), "
                "want (1, 1, 0.25)",
                c0.real(), c0.imag(), c1.real(), c1.imag(), c2.real(),
                c2.imag()));
    g.check(std::abs(r.sigma - 1.25) <= 1e-6,
            fmt("sigma %.9f, want 1.25", r.sigma));
    return fmt("value %.9f, sigma %.9f", ex.value, r.sigma);
  });

  run_check(out, "degree-preservation", 180.0, [&](Gate& g) {
    std::mt19937 rng(12345);
    double worst_ratio = 0.0;
    for (int i = 0; i < 50; ++i) {
      const int n = 1 + (i % 8);
      SolveRecord rec;
      rec.g = random_trig(rng, n);
      rec.n = n;
      ApproxConfig cfg;
      cfg.p = 1.0;
      cfg.degree_budget = 4 * n;
      cfg.grid = 4096;
      rec.res = best_approx(rec.g, cfg);
      rec.g_sup = max_abs(sample(rec.g, cfg.grid));
      note_flag(rec.res.converged);
      for (int k = n + 1; k <= 4 * n; ++k) {
        const double tail = std::abs(coeff_at(rec.res.p_g, k));
        worst_ratio = std::max(worst_ratio, tail / rec.g_sup);
      }
      records.push_back(std::move(rec));
    }
    g.check(worst_ratio < 1e-5,
            fmt("worst approximant coefficient beyond degree n: %.2e of "
                "||g||_inf, want < 1e-5",
                worst_ratio));
    return fmt("50 solves, worst tail %.2e of ||g||_inf", worst_ratio);
  });

  run_check(out, "certificate-structure", kNoBudget, [&](Gate& g) {
    g.check(!records.empty(), "no solves available from degree-preservation");
    int used = 0;
    double worst_recon = 0.0;
    double worst_unimod = 0.0;
    double worst_outer = 0.0;
    for (const SolveRecord& rec : records) {
      if (!rec.res.converged) continue;
      ++used;
      const StructuralCertificate cert = extract_certificate(
          rec.res.residual, FiniteBlaschke::power_of_z(rec.n), 1.0, rec.res.c);
      worst_recon = std::max(worst_recon, cert.reconstruction_error / cert.c);
      worst_unimod = std::max(worst_unimod, cert.unimodularity_error);
      worst_outer = std::max(worst_outer, cert.outer_norm_error);
      const AnalyticPolynomial p =
          shifted_residual_polynomial(rec.res.residual, rec.n);
      // Double roots split by the square root of the solver's coefficient
      // error, about 1e-4 here, which sets the pairing tolerance.
      const RootPairing pairing = pair_roots(p, 1e-4);
      g.check(pairing.leftover.empty(),
              fmt("degree-%d residual left %zu unpaired roots", rec.n,
                  pairing.leftover.size()));
      const int km = static_cast<int>(pairing.lambda_pairs.size() +
                                      pairing.mu_doubles.size());
      g.check(km <= rec.n - 1,
              fmt("degree-%d residual has K+M=%d > n-1", rec.n, km));
      dual_inputs.push_back(CertRecord{cert, rec.res.residual});
    }
    g.check(used > 0, "no converged solves to certify");
    g.check(worst_recon < 1e-5,
            fmt("worst reconstruction %.2e of c, want < 1e-5", worst_recon));
    g.check(worst_unimod <= 1e-6,
            fmt("worst |I| deviation %.2e, want <= 1e-6", worst_unimod));
    g.check(worst_outer <= 1e-6,
            fmt("worst ||F||_2 deviation %.2e, want <= 1e-6", worst_outer));
    return fmt("%d certificates, recon %.2e c, |I| dev %.2e, ||F|| dev %.2e",
               used, worst_recon, worst_unimod, worst_outer);
  });

  run_check(out, "projection-equivalence", 10.0, [&](Gate& g) {
    std::mt19937 rng(777);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const int n = 1 + (i % 8);
      const TrigPolynomial gp = random_trig(rng, n);
      const int budget = (i % 2 == 0) ? n : std::max(0, n - 2);
      ApproxConfig cfg;
      cfg.p = 2.0;
      cfg.degree_budget = budget;
      cfg.grid = 1024;
      const ApproxResult res = best_approx(gp, cfg);
      note_flag(res.converged);
      g.check(res.p_g.degree() <= budget,
              fmt("p=2 approximant degree %d exceeds budget %d",
                  res.p_g.degree(), budget));
      for (int k = 0; k <= budget; ++k) {
        worst = std::max(worst, std::abs(coeff_at(res.p_g, k) - gp.at(k)));
      }
    }
    g.check(worst <= 1e-12,
            fmt("worst coefficient gap to truncation %.2e, want <= 1e-12",
                worst));
    return fmt("100 inputs, worst coefficient gap %.2e", worst);
  });

  run_check(out, "badly-approximable-fixtures", kNoBudget, [&](Gate& g) {
    ApproxConfig cfg;
    cfg.p = 1.0;
    for (int n = 1; n <= 5; ++n) {
      TrigPolynomial gp;
      gp.coeffs[-n] = cplx(1.0);
      const BadlyApproximableReport rep =
          is_badly_approximable(gp, FiniteBlaschke::power_of_z(n), 1.0, cfg,
                                true);
      g.check(rep.badly, fmt("conj(z)^%d not flagged badly approximable", n));
      g.check(std::abs(rep.certificate.c - 1.0) <= 1e-9,
              fmt("conj(z)^%d distance %.12f, want 1", n, rep.certificate.c));
      g.check(rep.cross_pg_norm >= 0.0 && rep.cross_pg_norm < 1e-6,
              fmt("conj(z)^%d best approximant norm %.2e, want < 1e-6", n,
                  rep.cross_pg_norm));
      dual_inputs.push_back(CertRecord{rep.certificate, sample(gp, cfg.grid)});
    }

    TrigPolynomial gp2;
    gp2.coeffs[0] = cplx(-0.4);
    gp2.coeffs[-1] = cplx(1.0);
    gp2.coeffs[-2] = cplx(-0.4);
    const BadlyApproximableReport rep2 = is_badly_approximable(
        gp2, FiniteBlaschke::power_of_z(2), 1.0, cfg, true);
    g.check(rep2.badly, "two-term fixture not flagged badly approximable");
    g.check(std::abs(rep2.certificate.c - 1.0) <= 1e-5,
            fmt("fixture distance %.9f, want 1 +- 1e-5", rep2.certificate.c));
    g.check(rep2.cross_pg_norm >= 0.0 && rep2.cross_pg_norm < 1e-5,
            fmt("fixture best approximant norm %.2e, want < 1e-5",
                rep2.cross_pg_norm));
    g.check(rep2.certificate.inner_I.zeros.size() == 1,
            fmt("fixture inner factor has %zu zeros, want 1",
                rep2.certificate.inner_I.zeros.size()));
    if (rep2.certificate.inner_I.zeros.size() == 1) {
      g.check(std::abs(rep2.certificate.inner_I.zeros[0] - cplx(0.5)) <= 1e-5,
              fmt("fixture inner zero %.7f%+.7fi, want 0.5",
                  rep2.certificate.inner_I.zeros[0].real(),
                  rep2.certificate.inner_I.zeros[0].imag()));
    }
    const SampledCircleFunction& fs = rep2.certificate.outer_F;
    double worst_f = 0.0;
    const double inv_sqrt5 = 1.0 / std::sqrt(5.0);
    for (int j = 0; j < fs.n_points; ++j) {
      const cplx z = circle_point(j, fs.n_points);
      worst_f = std::max(
          worst_f,
          std::abs(fs.values[static_cast<size_t>(j)] - (2.0 - z) * inv_sqrt5));
    }
    g.check(worst_f <= 1e-5,
            fmt("fixture outer factor off by %.2e pointwise, want <= 1e-5",
                worst_f));
    dual_inputs.push_back(CertRecord{rep2.certificate, sample(gp2, cfg.grid)});
    return fmt("6 fixtures, outer factor off by %.2e", worst_f);
  });

  run_check(out, "dual-certificates", kNoBudget, [&](Gate& g) {
    g.check(!dual_inputs.empty(), "no certificates to dualize");
    double worst_norm = 0.0;
    double worst_pair = 0.0;
    double worst_holder = 0.0;
    for (const CertRecord& cr : dual_inputs) {
      const DualCertificate dual = dual_extremal(cr.cert, &cr.residual);
      worst_norm = std::max(worst_norm, dual.norm_error);
      worst_pair = std::max(
          worst_pair, std::abs(dual.pairing_value - cplx(cr.cert.c)) /
                          cr.cert.c);
      const double holder = holder_equality_check(cr.residual, dual.h_g,
                                                  cr.cert.c, cr.cert.p);
      worst_holder = std::max(worst_holder, holder / cr.cert.c);
    }
    g.check(worst_norm <= 1e-6,
            fmt("worst dual norm deviation %.2e, want <= 1e-6", worst_norm));
    g.check(worst_pair <= 1e-5,
            fmt("worst pairing gap %.2e of c, want <= 1e-5", worst_pair));
    g.check(worst_holder <= 1e-5,
            fmt("worst pointwise equality defect %.2e of c, want <= 1e-5",
                worst_holder));
    return fmt("%zu duals, norm dev %.2e, pairing gap %.2e c, equality %.2e c",
               dual_inputs.size(), worst_norm, worst_pair, worst_holder);
  });

  run_check(out, "taylor-interpolation", 5.0, [&](Gate& g) {
    const cplx a0(0.7, -0.2);
    const InterpolationResult r1 = schur_minimal(SchurProblem{{a0}});
    note_flag(r1.converged);
    g.check(std::abs(r1.sigma - std::abs(a0)) <= 1e-14,
            fmt("scalar sigma %.17f, want |a0| %.17f", r1.sigma,
                std::abs(a0)));

    const InterpolationResult r2 =
        schur_minimal(SchurProblem{{cplx(0.0), cplx(1.0)}});
    note_flag(r2.converged);
    g.check(std::abs(r2.sigma - 1.0) <= 1e-10,
            fmt("shift sigma %.12f, want 1", r2.sigma));
    double worst_shift = 0.0;
    for (int j = 0; j < r2.f_samples.n_points; ++j) {
      worst_shift = std::max(
          worst_shift, std::abs(r2.f_samples.values[static_cast<size_t>(j)] -
                                circle_point(j, r2.f_samples.n_points)));
    }
    g.check(worst_shift <= 1e-8,
            fmt("shift interpolant off by %.2e pointwise, want <= 1e-8",
                worst_shift));

    // Data (1, 1): the Hankel matrix is [[1, 1], [1, 0]], whose squared top
    // singular value solves s^4 - 3 s^2 + 1 = 0.
    const double sigma_star = std::sqrt((3.0 + std::sqrt(5.0)) / 2.0);
    const InterpolationResult r3 =
        schur_minimal(SchurProblem{{cplx(1.0), cplx(1.0)}});
    note_flag(r3.converged);
    g.check(std::abs(r3.sigma - sigma_star) <= 1e-8,
            fmt("golden-data sigma %.12f, want %.12f", r3.sigma, sigma_star));

    const InterpolationResult* results[3] = {&r1, &r2, &r3};
    const int sizes[3] = {1, 2, 2};
    for (int t = 0; t < 3; ++t) {
      const InterpolationResult& r = *results[t];
      g.check(r.allpass_deviation <= 1e-5 * std::max(r.sigma, 1e-300),
              fmt("case %d modulus deviates %.2e from sigma", t,
                  r.allpass_deviation));
      g.check(static_cast<int>(r.blaschke_zeros.size()) <= sizes[t] - 1,
              fmt("case %d has %zu zeros, want <= n-1=%d", t,
                  r.blaschke_zeros.size(), sizes[t] - 1));
    }
    return fmt("sigma %.12f / %.12f / %.12f", r1.sigma, r2.sigma, r3.sigma);
  });

  run_check(out, "node-interpolation", 30.0, [&](Gate& g) {
    const cplx w(0.4, 0.3);
    const InterpolationResult r1 =
        pick_minimal(PickProblem{{cplx(0.0)}, {w}});
    note_flag(r1.converged);
    g.check(std::abs(r1.sigma - std::abs(w)) <= 1e-10,
            fmt("single-node sigma %.12f, want %.12f", r1.sigma, std::abs(w)));
    double worst1 = 0.0;
    for (const cplx& v : r1.f_samples.values) {
      worst1 = std::max(worst1, std::abs(v - w));
    }
    g.check(worst1 <= 1e-6,
            fmt("single-node interpolant off by %.2e, want <= 1e-6", worst1));

    const InterpolationResult r2 =
        pick_minimal(PickProblem{{cplx(0.0), cplx(0.5)}, {cplx(0.0), cplx(0.3)}});
    note_flag(r2.converged);
    g.check(std::abs(r2.sigma - 0.6) <= 1e-6,
            fmt("two-node sigma %.9f, want 0.6", r2.sigma));
    double worst2 = 0.0;
    for (int j = 0; j < r2.f_samples.n_points; ++j) {
      worst2 = std::max(
          worst2, std::abs(r2.f_samples.values[static_cast<size_t>(j)] -
                           0.6 * circle_point(j, r2.f_samples.n_points)));
    }
    g.check(worst2 <= 1e-6,
            fmt("two-node interpolant off by %.2e, want <= 1e-6", worst2));

    std::mt19937 rng(4242);
    double worst_rel = 0.0;
    for (int t = 0; t < 20; ++t) {
      const int k = 2 + (t % 2);
      std::vector<cplx> nodes;
      while (static_cast<int>(nodes.size()) < k) {
        const cplx cand(1.2 * unif(rng) - 0.6, 1.2 * unif(rng) - 0.6);
        if (std::abs(cand) > 0.6) continue;
        bool ok = true;
        for (const cplx& z : nodes) {
          if (std::abs(z - cand) < 0.15) ok = false;
        }
        if (ok) nodes.push_back(cand);
      }
      std::vector<cplx> values;
      for (int i = 0; i < k; ++i) values.push_back(0.6 * rand_coeff(rng));
      const InterpolationResult rr = pick_minimal(PickProblem{nodes, values});
      note_flag(rr.converged);
      const double denom = std::max(rr.sigma_hankel, 1e-12);
      worst_rel = std::max(
          worst_rel, std::abs(rr.sigma_pick - rr.sigma_hankel) / denom);
    }
    g.check(worst_rel <= 1e-6,
            fmt("matrix-bound vs operator-norm gap %.2e relative, want <= "
                "1e-6",
                worst_rel));
    return fmt("two routes agree to %.2e relative on 20 random problems",
               worst_rel);
  });

  run_check(out, "outer-recovery", 30.0, [&](Gate& g) {
    std::mt19937 rng(31337);
    const int n_points = 2048;
    double worst_leak = 0.0;
    double worst_rec = 0.0;
    for (int i = 0; i < 100; ++i) {
      const int n = 1 + (i % 8);
      std::vector<cplx> roots;
      for (int t = 0; t + 1 < n; ++t) {
        const double radius = 1.2 + 1.8 * unif(rng);
        const double angle = 2.0 * kPi * unif(rng);
        roots.push_back(std::polar(radius, angle));
      }
      AnalyticPolynomial f = poly_from_roots(roots);
      const cplx c0 = f.coeffs[0];
      const cplx rot = std::conj(c0) / std::abs(c0);
      for (cplx& c : f.coeffs) c *= rot;
      const SampledCircleFunction pre = sample(f, n_points);
      const double scale = 1.0 / max_abs(pre);
      for (cplx& c : f.coeffs) c *= scale;
      const SampledCircleFunction fs = sample(f, n_points);
      const SampledCircleFunction phi = fs * conj_samples(fs);

      for (const auto& [k, v] : fourier_coeffs(phi)) {
        if (std::abs(k) > n - 1) worst_leak = std::max(worst_leak, std::abs(v));
      }
      const SampledCircleFunction rec = outer_from_modulus(phi);
      for (int j = 0; j < n_points; ++j) {
        worst_rec = std::max(
            worst_rec, std::abs(rec.values[static_cast<size_t>(j)] -
                                fs.values[static_cast<size_t>(j)]));
      }
    }
    g.check(worst_leak <= 1e-10,
            fmt("squared-modulus support leaks %.2e beyond degree n-1, want "
                "<= 1e-10",
                worst_leak));
    g.check(worst_rec <= 1e-6,
            fmt("outer reconstruction off by %.2e pointwise, want <= 1e-6",
                worst_rec));
    return fmt("100 outers, leakage %.2e, recovery %.2e", worst_leak,
               worst_rec);
  });

  run_check(out, "stability-monotonicity", kNoBudget, [&](Gate& g) {
    std::mt19937 rng(99);
    double worst_bump = 0.0;
    for (int t = 0; t < 5; ++t) {
      const TrigPolynomial gp = random_trig(rng, 3);
      double prev = 0.0;
      for (int budget = 0; budget <= 8; ++budget) {
        ApproxConfig cfg;
        cfg.p = 1.0;
        cfg.degree_budget = budget;
        cfg.grid = 2048;
        const ApproxResult res = best_approx(gp, cfg);
        note_flag(res.converged);
        if (budget > 0) worst_bump = std::max(worst_bump, res.c - prev);
        prev = res.c;
      }
    }
    g.check(worst_bump <= 1e-10,
            fmt("distance rose by %.2e when the budget grew, want <= 1e-10",
                worst_bump));

    struct Fixture {
      SampledCircleFunction lo;
      SampledCircleFunction hi;
      int n;
      const char* label;
    };
    std::vector<Fixture> fixtures;
    {
      TrigPolynomial r_a;
      r_a.coeffs[-2] = cplx(1.0);
      r_a.coeffs[-1] = cplx(1.0);
      r_a.coeffs[0] = cplx(0.25);
      fixtures.push_back(
          Fixture{sample(r_a, 4096), sample(r_a, 8192), 2, "square"});
      TrigPolynomial r_b;
      r_b.coeffs[0] = cplx(-0.4);
      r_b.coeffs[-1] = cplx(1.0);
      r_b.coeffs[-2] = cplx(-0.4);
      fixtures.push_back(
          Fixture{sample(r_b, 4096), sample(r_b, 8192), 2, "two-term"});

      FiniteBlaschke inner;
      inner.zeros = {cplx(0.3, 0.2), cplx(-0.4, 0.0)};
      AnalyticPolynomial fp = poly_from_roots({cplx(3.0), cplx(-2.5)});
      auto build = [&](int n_points) {
        SampledCircleFunction s(n_points);
        for (int j = 0; j < n_points; ++j) {
          const cplx z = circle_point(j, n_points);
          const cplx f = fp.eval(z);
          s.values[static_cast<size_t>(j)] =
              std::conj(z * z * z) * inner.eval(z) * f * f;
        }
        return s;
      };
      fixtures.push_back(Fixture{build(4096), build(8192), 3, "synthetic"});
    }
    for (const Fixture& fx : fixtures) {
      const StructuralCertificate lo = extract_certificate(
          fx.lo, FiniteBlaschke::power_of_z(fx.n), 1.0);
      const StructuralCertificate hi = extract_certificate(
          fx.hi, FiniteBlaschke::power_of_z(fx.n), 1.0);
      g.check(lo.inner_I.zeros.size() == hi.inner_I.zeros.size(),
              fmt("%s fixture: inner zero count changed under grid doubling "
                  "(%zu vs %zu)",
                  fx.label, lo.inner_I.zeros.size(), hi.inner_I.zeros.size()));
      const double drift =
          max_zero_discrepancy(lo.inner_I.zeros, hi.inner_I.zeros);
      g.check(drift <= 1e-6,
              fmt("%s fixture: inner zeros drifted %.2e under grid doubling, "
                  "want <= 1e-6",
                  fx.label, drift));
    }

    g.check(flags_ok == flags_total,
            fmt("%d of %d solver runs reported convergence", flags_ok,
                flags_total));
    return fmt("budget bump %.2e, %d/%d runs converged", worst_bump, flags_ok,
               flags_total);
  });

  return out;
}

bool all_passed(const std::vector<CheckOutcome>& outcomes) {
  for (const auto& o : outcomes) {
    if (!o.pass) return false;
  }
  return true;
}

}  // namespace hardy
