import hardyapprox as ha


def test_version():
    assert ha.__version__


def test_extremal_value():
    res = ha.extremal_functional(1.0, 1.0)
    assert abs(res.value - 1.25) < 1e-6
    assert len(res.extremal_f.zeros) == 1
    assert abs(res.extremal_f.zeros[0] - (-0.5)) < 1e-5


def test_best_approx_p2():
    g = ha.TrigPolynomial({-1: 1.0, 0: 3.0, 1: 1.0})
    cfg = ha.ApproxConfig()
    cfg.p = 2.0
    cfg.degree_budget = 1
    cfg.grid = 64
    r = ha.best_approx(g, cfg)
    assert r.converged
    assert abs(r.c - 1.0) < 1e-9
    assert abs(r.p_g.coeffs[0] - 3.0) < 1e-12
    assert abs(r.p_g.coeffs[1] - 1.0) < 1e-12


def test_certificate_round_trip():
    g = ha.TrigPolynomial({0: -0.4, -1: 1.0, -2: -0.4})
    rep = ha.is_badly_approximable(
        g, ha.FiniteBlaschke.power_of_z(2), 1.0, ha.ApproxConfig(), True
    )
    assert rep.badly
    assert abs(rep.certificate.c - 1.0) < 1e-5
    assert len(rep.certificate.inner_I.zeros) == 1
    assert abs(rep.certificate.inner_I.zeros[0] - 0.5) < 1e-5


def test_schur_golden():
    r = ha.schur_minimal(ha.SchurProblem([1.0, 1.0]))
    assert abs(r.sigma - ((3 + 5**0.5) / 2) ** 0.5) < 1e-8


def test_pick_two_nodes():
    r = ha.pick_minimal(ha.PickProblem([0.0, 0.5], [0.0, 0.3]))
    assert r.converged
    assert abs(r.sigma - 0.6) < 1e-6
