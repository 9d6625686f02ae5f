import pytest

from gfverify.errors import ConvergenceError, DomainError
from gfverify.expansions import jacobi as J
from gfverify.expansions.registry import REGISTRY, Param, get_spec, identity_ids
from gfverify.expansions.series import N_MAX, clear_cache, truncated_series

EXPECTED_IDS = [
    "gf.gegenbauer",
    "gf.jacobi.plus", "gf.jacobi.minus", "gf.jacobi.ext.plus", "gf.jacobi.ext.minus",
    "exp.jacobi.thm21", "exp.jacobi.cor22", "exp.jacobi.szego23",
    "exp.gegenbauer.plus", "exp.gegenbauer.minus",
    "gf.gegenbauer.koekoek", "gf.gegenbauer.rainville",
    "exp.chebu.plus", "exp.chebu.minus", "gf.chebu.brafman", "gf.chebu.rainville",
    "exp.legendre.plus", "exp.legendre.minus", "gf.legendre.brafman", "gf.legendre.rainville",
    "exp.chebt.plus", "exp.chebt.minus",
    "thm.wanzudilin.quadratic", "thm.wanzudilin.cubic",
]


def test_registry_ids():
    assert identity_ids() == EXPECTED_IDS
    assert len(REGISTRY) == 24
    with pytest.raises(KeyError):
        get_spec("exp.unknown")


def test_integral_flags():
    flagged = sorted(i for i, s in REGISTRY.items() if s.integral)
    expected = sorted([i for i in EXPECTED_IDS if i.startswith("exp.")]
                      + ["gf.gegenbauer.koekoek", "gf.gegenbauer.rainville"])
    assert flagged == expected
    for i in flagged:
        assert len(REGISTRY[i].integral_points) == 2


def test_param_checks():
    p = Param("rho", 0.0, 0.8, lo_open=True)
    p.check(0.8)
    with pytest.raises(DomainError):
        p.check(0.0)
    with pytest.raises(DomainError):
        Param("m", 0, 10, integer=True).check(1.5)
    with pytest.raises(DomainError):
        Param("mu", -0.5, 5.0, lo_open=True, nonzero=True).check(0.0)
    assert "(0, 0.8]" in p.describe()


def test_check_point_rejects_bad_keys():
    spec = get_spec("gf.gegenbauer")
    with pytest.raises(DomainError):
        spec.check_point({"mu": 0.5, "rho": 0.3})
    with pytest.raises(DomainError):
        spec.check_point({"mu": 0.5, "rho": 0.3, "x": 0.1, "beta": 1.0})
    with pytest.raises(DomainError):
        spec.check_point({"mu": 0.5, "rho": 0.95, "x": 0.1})


def test_gegenbauer_binomial_series():
    res = truncated_series(get_spec("gf.gegenbauer"), {"mu": 1.0, "rho": 0.5, "x": 1.0})
    assert res.value == pytest.approx(4.0, rel=1e-14)
    assert res.tail_estimate >= 0
    assert res.terms_used <= N_MAX


def test_theorem_point():
    point = {"m": 2, "alpha": 0.5, "beta": -0.25, "rho": 0.3, "x": 0.1}
    res = truncated_series(get_spec("exp.jacobi.thm21"), point)
    assert abs(res.value - J.lhs_theorem(2, 0.5, -0.25, 0.3, 0.1)) <= 1e-9


def test_small_rho_keeps_head_only():
    spec = get_spec("gf.gegenbauer")
    res = truncated_series(spec, {"mu": 0.75, "rho": 1e-12, "x": 0.3})
    assert res.value == pytest.approx(1.0, rel=1e-11)


def test_convergence_error():
    spec = get_spec("gf.gegenbauer")
    with pytest.raises(ConvergenceError):
        truncated_series(spec, {"mu": 0.75, "rho": 0.8, "x": 1.0}, n_max=10)


def test_cache_consistency():
    spec = get_spec("exp.legendre.plus")
    point = {"m": 3, "rho": 0.4, "x": 0.2}
    first = truncated_series(spec, point).value
    clear_cache()
    assert truncated_series(spec, point).value == first


@pytest.mark.parametrize("identity", EXPECTED_IDS)
def test_default_grid_residual(identity):
    spec = get_spec(identity)
    worst = 0.0
    for point in spec.grid_points():
        lhs = spec.lhs(point)
        value = truncated_series(spec, point).value
        worst = max(worst, abs(lhs - value) / max(1.0, abs(lhs)))
    assert worst <= 1e-8


def test_domain_descriptions():
    for spec in REGISTRY.values():
        text = spec.domain_description()
        for name in spec.param_names:
            assert name in text
