import math

try:
    import gwnoise as gw
except ImportError:
    import _gwnoise as gw


def ligo():
    return gw.DetectorConfig.preset("initial-ligo")


def test_sql():
    assert abs(gw.sql(ligo()) - 1.24e-19) / 1.24e-19 < 0.05


def test_coherent_optimum():
    opt = gw.coherent_optimum(ligo())
    assert abs(opt.power_opt - 191e3) / 191e3 < 0.05
    assert abs(opt.dz_opt - gw.sql(ligo())) / gw.sql(ligo()) < 1e-6


def test_numerical_optimization_roundtrip():
    config = ligo()
    opt = gw.optimize_budget(lambda nbar: gw.budget_coherent(nbar, config), config)
    assert abs(opt.nbar_opt - gw.coherent_optimum(config).nbar_opt) < 1e-4 * opt.nbar_opt


def test_twin_fock_heisenberg_limit():
    state = gw.twin_fock_state(2)
    u = gw.phase_uncertainty(state, gw.ObservableKind.SquaredDifference, 0.0)
    assert abs(u - 1.0 / math.sqrt(12.0)) < 1e-7


def test_intelligent_state():
    sol = gw.solve_intelligent_state(gw.IrrepLabel(4), 0.5, 0)
    m = gw.moments_of(sol.state)
    assert abs(math.sqrt(m.var_jx * m.var_jy) - 0.5 * abs(m.mean_jz)) < 1e-8


def test_loss_threshold():
    assert gw.loss_threshold_check(4.3e10, 1e-11).ok
    assert not gw.loss_threshold_check(4.3e10, 2e-11).ok


def test_verification_quick():
    ok, report = gw.run_verification("quick", 7)
    assert ok, report
