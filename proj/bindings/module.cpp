#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "hardyapprox/interp.hpp"
#include "hardyapprox/selftest.hpp"

namespace py = pybind11;
using namespace hardy;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Best analytic approximation on the unit circle: L^p distances, "
      "residual factorizations, dual certificates, and minimal-norm "
      "interpolation";
  m.attr("__version__") = HARDYAPPROX_VERSION;

  py::class_<TrigPolynomial>(m, "TrigPolynomial")
      .def(py::init<>())
      .def(py::init<std::map<int, cplx>>(), py::arg("coeffs"))
      .def_readwrite("coeffs", &TrigPolynomial::coeffs)
      .def("degree", &TrigPolynomial::degree)
      .def("at", &TrigPolynomial::at, py::arg("k"))
      .def("eval", &TrigPolynomial::eval, py::arg("z"));

  py::class_<AnalyticPolynomial>(m, "AnalyticPolynomial")
      .def(py::init<>())
      .def(py::init<std::vector<cplx>>(), py::arg("coeffs"))
      .def_readwrite("coeffs", &AnalyticPolynomial::coeffs)
      .def("degree", &AnalyticPolynomial::degree)
      .def("eval", &AnalyticPolynomial::eval, py::arg("z"));

  py::class_<FiniteBlaschke>(m, "FiniteBlaschke")
      .def(py::init<>())
      .def(py::init([](std::vector<cplx> zeros, cplx c) {
             FiniteBlaschke b;
             b.zeros = std::move(zeros);
             b.unimodular_const = c;
             validate(b);
             return b;
           }),
           py::arg("zeros"), py::arg("unimodular_const") = cplx(1.0))
      .def_readwrite("zeros", &FiniteBlaschke::zeros)
      .def_readwrite("unimodular_const", &FiniteBlaschke::unimodular_const)
      .def("degree", &FiniteBlaschke::degree)
      .def("eval", &FiniteBlaschke::eval, py::arg("z"))
      .def_static("power_of_z", &FiniteBlaschke::power_of_z, py::arg("n"));

  py::class_<SampledCircleFunction>(m, "SampledCircleFunction")
      .def(py::init<>())
      .def(py::init<int>(), py::arg("n_points"))
      .def_readwrite("n_points", &SampledCircleFunction::n_points)
      .def_readwrite("values", &SampledCircleFunction::values);

  py::class_<RationalDiskFunction>(m, "RationalDiskFunction")
      .def(py::init<>())
      .def_readwrite("numerator", &RationalDiskFunction::numerator)
      .def_readwrite("denominator_blaschke",
                     &RationalDiskFunction::denominator_blaschke);

  py::class_<ApproxConfig>(m, "ApproxConfig")
      .def(py::init<>())
      .def_readwrite("p", &ApproxConfig::p)
      .def_readwrite("degree_budget", &ApproxConfig::degree_budget)
      .def_readwrite("grid", &ApproxConfig::grid)
      .def_readwrite("tol", &ApproxConfig::tol)
      .def_readwrite("max_iters", &ApproxConfig::max_iters)
      .def_readwrite("eps0", &ApproxConfig::eps0)
      .def_readwrite("seed", &ApproxConfig::seed);

  py::class_<ApproxResult>(m, "ApproxResult")
      .def_readonly("p_g", &ApproxResult::p_g)
      .def_readonly("residual", &ApproxResult::residual)
      .def_readonly("c", &ApproxResult::c)
      .def_readonly("iterations", &ApproxResult::iterations)
      .def_readonly("converged", &ApproxResult::converged);

  py::class_<MembershipReport>(m, "MembershipReport")
      .def_readonly("member", &MembershipReport::member)
      .def_readonly("analytic_error", &MembershipReport::analytic_error)
      .def_readonly("conjugate_error", &MembershipReport::conjugate_error);

  py::class_<StructuralCertificate>(m, "StructuralCertificate")
      .def_readonly("c", &StructuralCertificate::c)
      .def_readonly("inner_I", &StructuralCertificate::inner_I)
      .def_readonly("outer_F", &StructuralCertificate::outer_F)
      .def_readonly("P_F", &StructuralCertificate::P_F)
      .def_readonly("Q_B", &StructuralCertificate::Q_B)
      .def_readonly("rational_form", &StructuralCertificate::rational_form)
      .def_readonly("theta", &StructuralCertificate::theta)
      .def_readonly("p", &StructuralCertificate::p)
      .def_readonly("reconstruction_error",
                    &StructuralCertificate::reconstruction_error)
      .def_readonly("alphas", &StructuralCertificate::alphas)
      .def_readonly("unimodularity_error",
                    &StructuralCertificate::unimodularity_error)
      .def_readonly("membership_error",
                    &StructuralCertificate::membership_error)
      .def_readonly("outer_norm_error",
                    &StructuralCertificate::outer_norm_error)
      .def_readonly("rational_fit_error",
                    &StructuralCertificate::rational_fit_error)
      .def_readonly("modulus_floored", &StructuralCertificate::modulus_floored)
      .def_readonly("valid", &StructuralCertificate::valid)
      .def_readonly("failure", &StructuralCertificate::failure);

  py::class_<LambdaPair>(m, "LambdaPair")
      .def_readonly("lambda_", &LambdaPair::lambda)
      .def_readonly("partner", &LambdaPair::partner);

  py::class_<RootPairing>(m, "RootPairing")
      .def_readonly("lambda_pairs", &RootPairing::lambda_pairs)
      .def_readonly("mu_doubles", &RootPairing::mu_doubles)
      .def_readonly("leftover", &RootPairing::leftover);

  py::class_<DualCertificate>(m, "DualCertificate")
      .def_readonly("inner_J", &DualCertificate::inner_J)
      .def_readonly("h_g", &DualCertificate::h_g)
      .def_readonly("pairing_value", &DualCertificate::pairing_value)
      .def_readonly("norm_error", &DualCertificate::norm_error)
      .def_readonly("positive_freq_error",
                    &DualCertificate::positive_freq_error)
      .def_readonly("unimodularity_error",
                    &DualCertificate::unimodularity_error)
      .def_readonly("valid", &DualCertificate::valid)
      .def_readonly("failure", &DualCertificate::failure);

  py::class_<BadlyApproximableReport>(m, "BadlyApproximableReport")
      .def_readonly("badly", &BadlyApproximableReport::badly)
      .def_readonly("certificate", &BadlyApproximableReport::certificate)
      .def_readonly("cross_distance", &BadlyApproximableReport::cross_distance)
      .def_readonly("cross_pg_norm", &BadlyApproximableReport::cross_pg_norm);

  py::class_<ReflectionForm>(m, "ReflectionForm")
      .def_readonly("alphas", &ReflectionForm::alphas)
      .def_readonly("selected", &ReflectionForm::selected)
      .def_readonly("match_error", &ReflectionForm::match_error)
      .def_readonly("consistent", &ReflectionForm::consistent)
      .def_readonly("failure", &ReflectionForm::failure);

  py::class_<SchurProblem>(m, "SchurProblem")
      .def(py::init([](std::vector<cplx> a) {
             return SchurProblem{std::move(a)};
           }),
           py::arg("a"))
      .def_readwrite("a", &SchurProblem::a);

  py::class_<PickProblem>(m, "PickProblem")
      .def(py::init([](std::vector<cplx> nodes, std::vector<cplx> values) {
             return PickProblem{std::move(nodes), std::move(values)};
           }),
           py::arg("nodes"), py::arg("values"))
      .def_readwrite("nodes", &PickProblem::nodes)
      .def_readwrite("values", &PickProblem::values);

  py::class_<PickOptions>(m, "PickOptions")
      .def(py::init<>())
      .def_readwrite("grid", &PickOptions::grid)
      .def_readwrite("hankel_section", &PickOptions::hankel_section)
      .def_readwrite("doubling_check", &PickOptions::doubling_check);

  py::class_<InterpolationResult>(m, "InterpolationResult")
      .def_readonly("f", &InterpolationResult::f)
      .def_readonly("f_samples", &InterpolationResult::f_samples)
      .def_readonly("sigma", &InterpolationResult::sigma)
      .def_readonly("residual", &InterpolationResult::residual)
      .def_readonly("allpass_deviation",
                    &InterpolationResult::allpass_deviation)
      .def_readonly("blaschke_zeros", &InterpolationResult::blaschke_zeros)
      .def_readonly("allpass_form", &InterpolationResult::allpass_form)
      .def_readonly("has_allpass_form", &InterpolationResult::has_allpass_form)
      .def_readonly("unique_top", &InterpolationResult::unique_top)
      .def_readonly("iterations", &InterpolationResult::iterations)
      .def_readonly("converged", &InterpolationResult::converged)
      .def_readonly("certificate", &InterpolationResult::certificate)
      .def_readonly("has_certificate", &InterpolationResult::has_certificate)
      .def_readonly("sigma_pick", &InterpolationResult::sigma_pick)
      .def_readonly("sigma_hankel", &InterpolationResult::sigma_hankel)
      .def_readonly("interpolation_error",
                    &InterpolationResult::interpolation_error);

  py::class_<ExtremalFunctional>(m, "ExtremalFunctional")
      .def_readonly("value", &ExtremalFunctional::value)
      .def_readonly("extremal_f", &ExtremalFunctional::extremal_f)
      .def_readonly("description", &ExtremalFunctional::description)
      .def_readonly("certificate", &ExtremalFunctional::certificate);

  py::class_<CheckOutcome>(m, "CheckOutcome")
      .def_readonly("name", &CheckOutcome::name)
      .def_readonly("pass_", &CheckOutcome::pass)
      .def_readonly("seconds", &CheckOutcome::seconds)
      .def_readonly("detail", &CheckOutcome::detail);

  m.def("sample",
        py::overload_cast<const TrigPolynomial&, int>(&sample),
        py::arg("f"), py::arg("n_points"));
  m.def("sample",
        py::overload_cast<const AnalyticPolynomial&, int>(&sample),
        py::arg("f"), py::arg("n_points"));
  m.def("sample",
        py::overload_cast<const FiniteBlaschke&, int>(&sample),
        py::arg("f"), py::arg("n_points"));
  m.def("sample",
        py::overload_cast<const RationalDiskFunction&, int>(&sample),
        py::arg("f"), py::arg("n_points"));
  m.def("fourier_coeffs", &fourier_coeffs, py::arg("s"));
  m.def("fourier_coeff", &fourier_coeff, py::arg("s"), py::arg("k"));
  m.def("lp_norm", &lp_norm, py::arg("s"), py::arg("p"));
  m.def("max_abs", &max_abs, py::arg("s"));
  m.def("analytic_defect", &analytic_defect, py::arg("s"));
  m.def("riesz_projection", &riesz_projection, py::arg("s"));
  m.def(
      "outer_from_modulus",
      [](const SampledCircleFunction& phi) {
        bool floored = false;
        SampledCircleFunction f = outer_from_modulus(phi, &floored);
        return py::make_tuple(f, floored);
      },
      py::arg("phi"));
  m.def("outer_power", &outer_power, py::arg("f"), py::arg("s"));
  m.def("poly_roots", &poly_roots, py::arg("p"));

  m.def("best_approx",
        py::overload_cast<const TrigPolynomial&, const ApproxConfig&>(
            &best_approx),
        py::arg("g"), py::arg("config") = ApproxConfig{});
  m.def("best_approx",
        py::overload_cast<const RationalDiskFunction&, const ApproxConfig&>(
            &best_approx),
        py::arg("g"), py::arg("config") = ApproxConfig{});

  m.def("k_theta_membership", &k_theta_membership, py::arg("f"),
        py::arg("theta"), py::arg("tol"));
  m.def("extract_certificate", &extract_certificate, py::arg("residual"),
        py::arg("theta"), py::arg("p"), py::arg("c_hint") = -1.0);
  m.def(
      "dual_extremal",
      [](const StructuralCertificate& cert,
         std::optional<SampledCircleFunction> true_residual) {
        return dual_extremal(cert,
                             true_residual ? &*true_residual : nullptr);
      },
      py::arg("cert"), py::arg("true_residual") = std::nullopt);
  m.def("holder_equality_check", &holder_equality_check, py::arg("residual"),
        py::arg("h_g"), py::arg("c"), py::arg("p"));
  m.def("pair_roots", &pair_roots, py::arg("p"), py::arg("tol") = 1e-5);
  m.def("pairing_polynomial", &pairing_polynomial, py::arg("pairing"),
        py::arg("leading") = cplx(1.0));
  m.def("is_badly_approximable", &is_badly_approximable, py::arg("g"),
        py::arg("theta"), py::arg("p"), py::arg("config") = ApproxConfig{},
        py::arg("cross_check") = false);
  m.def("reflection_form", &reflection_form, py::arg("cert"), py::arg("b"));

  m.def("interpolate_etheta",
        py::overload_cast<const AnalyticPolynomial&, const FiniteBlaschke&,
                          double, const ApproxConfig&>(&interpolate_etheta),
        py::arg("f1"), py::arg("theta"), py::arg("p"),
        py::arg("config") = ApproxConfig{});
  m.def("interpolate_etheta",
        py::overload_cast<const TrigPolynomial&, const FiniteBlaschke&, double,
                          const ApproxConfig&>(&interpolate_etheta),
        py::arg("f1"), py::arg("theta"), py::arg("p"),
        py::arg("config") = ApproxConfig{});
  m.def("schur_minimal", &schur_minimal, py::arg("problem"),
        py::arg("grid") = 1024);
  m.def("pick_minimal", &pick_minimal, py::arg("problem"),
        py::arg("options") = PickOptions{});
  m.def("extremal_functional", &extremal_functional, py::arg("a0"),
        py::arg("a1"));

  m.def("run_acceptance_suite", &run_acceptance_suite);
}
