"""Tests for kernel norms, divergence traces and annulus asymptotics."""

import math
from fractions import Fraction

import numpy as np
import pytest

from polyharm.cellgeom import b_curve
from polyharm.errors import (
    BadIndex,
    NonIntegrable,
    PostconditionFailed,
    SingularPoint,
    ToleranceNotReached,
)
from polyharm.kernelnum import (
    Divergent,
    I_series,
    KernelSpec,
    annulus_norm,
    annulus_regime_exponent,
    annulus_scan,
    effective_exponent,
    fit_slope,
    kernel_eval,
    kernel_norm,
    kernel_truncated_trace,
    norms,
    olofsson_uniform_potential,
)
from polyharm.quadrature import BoundaryPointSpec, integrate_about_boundary_point
from polyharm.symcalc import uniform_potential_polynomial

F = Fraction


@pytest.mark.parametrize(("j", "n"), [(-1, 2), (3, 2), (0, 0)])
def test_kernel_spec_rejects(j, n):
    with pytest.raises(BadIndex):
        KernelSpec(j, n)


def test_exponents_and_values():
    k = KernelSpec(1, 2)
    assert k.exponents(F(1, 2), F(-1)) == (F(0), F(1, 2))
    assert kernel_eval(k, 0.5) == pytest.approx(2.25)
    assert kernel_eval(KernelSpec(0, 2), 1) == 0
    with pytest.raises(SingularPoint):
        kernel_eval(k, 1)


def test_effective_exponent():
    assert effective_exponent(1.0, 1.0) == 0.0
    assert effective_exponent(2.0, 0.25) == 2.0


def test_finite_verdict_constant_kernel():
    verdict = kernel_norm(KernelSpec(0, 1), 1, 0)
    assert verdict.finite
    assert verdict.value == pytest.approx(math.pi)
    assert verdict.agrees
    doc = verdict.to_json()
    assert set(doc) == {"finite", "method", "quadrature", "terms_used", "tol", "value"}
    assert doc["method"] == "series"


def test_finite_verdict_without_cross_check():
    verdict = kernel_norm(KernelSpec(2, 2), F(1, 2), F(-1, 2), cross_check=False)
    assert verdict.finite
    assert verdict.agrees is None
    assert verdict.quadrature_value is None


def test_kernel_norm_rejects():
    with pytest.raises(BadIndex):
        kernel_norm(KernelSpec(1, 1), 0, 0)


@pytest.mark.slow
def test_poisson_kernel_norm():
    verdict = kernel_norm(KernelSpec(1, 1), 1, 0)
    assert verdict.value == pytest.approx(math.pi, rel=1e-9)
    assert verdict.quadrature_value == pytest.approx(math.pi, rel=1e-9)


@pytest.mark.slow
def test_divergent_verdict_is_witnessed():
    verdict = kernel_norm(KernelSpec(1, 1), 1, F(-3, 2))
    assert not verdict.finite
    assert verdict.witnessed
    assert verdict.growth_ratio > 10
    doc = verdict.to_json()
    assert set(doc) == {"finite", "growth_ratio", "trace", "witnessed"}
    radii = [r for r, _ in doc["trace"]]
    assert radii == sorted(radii)


@pytest.mark.slow
def test_truncated_trace_of_finite_norm_levels_off():
    trace = kernel_truncated_trace(KernelSpec(0, 1), 1, 0, k_values=range(3, 8), growth_factor=1e9)
    assert not trace.witnessed
    r, value = trace.rows[-1]
    assert value == pytest.approx(math.pi * r * r, rel=1e-6)
    with pytest.raises(BadIndex):
        kernel_truncated_trace(KernelSpec(0, 1), 1, 0, k_values=[5, 3])


@pytest.mark.parametrize("theta", [0, 1, 2, 3])
def test_uniform_potential(theta):
    z = 0.3 + 0.4j
    expected = uniform_potential_polynomial(theta).evaluate(z).real
    assert olofsson_uniform_potential(theta, z) == pytest.approx(expected, rel=1e-9)


def test_uniform_potential_rejects():
    with pytest.raises(BadIndex):
        olofsson_uniform_potential(-1, 0.1)
    with pytest.raises(BadIndex):
        olofsson_uniform_potential(1, 1.0)


@pytest.mark.parametrize(
    ("n", "p", "expected"),
    [(2, F(1), (1.0, False)), (2, F(1, 4), (1.75, True)), (2, F(1, 8), (1.375, False)), (1, F(1, 2), (1.5, True))],
)
def test_annulus_regime_exponent(n, p, expected):
    assert annulus_regime_exponent(n, p) == expected


def test_annulus_norm():
    assert annulus_norm(1, 1, 0.0) == pytest.approx(math.pi, rel=1e-9)
    assert annulus_norm(1, 1, 0.5) == pytest.approx(0.75 * math.pi, rel=1e-9)
    with pytest.raises(NonIntegrable):
        annulus_norm(1, 2, 0.5)
    with pytest.raises(BadIndex):
        annulus_norm(1, 1, 1.0)


def test_fit_slope():
    assert fit_slope([(0.0, 1.0), (1.0, 3.0), (2.0, 5.0)]) == pytest.approx(2.0)
    with pytest.raises(BadIndex):
        fit_slope([(0.0, 1.0)])


@pytest.mark.slow
@pytest.mark.parametrize(("n", "p"), [(2, F(1)), (2, F(1, 2)), (1, F(1, 4))])
def test_annulus_scan_slope(n, p):
    scan = annulus_scan(n, p)
    assert [row[0] for row in scan.rows] == list(range(6, 13))
    assert scan.fitted_slope == pytest.approx(scan.predicted, abs=0.1)


@pytest.mark.slow
@pytest.mark.parametrize("p", [F(2, 5), F(1, 5)])
def test_annulus_slopes_in_both_regimes(p):
    scan = annulus_scan(2, p)
    assert scan.predicted == pytest.approx(1.6)
    assert scan.fitted_slope == pytest.approx(1.6, abs=0.05)


def test_disagreeing_cross_check_is_an_error(monkeypatch):
    monkeypatch.setattr(norms, "_cross_check", lambda a, b, tol: (1.0, 0.0))
    with pytest.raises(PostconditionFailed):
        kernel_norm(KernelSpec(1, 1), 1, 0)


def test_near_critical_cross_check():
    # a = 1/10, b = 1: I = 10 pi
    verdict = kernel_norm(KernelSpec(1, 1), 1, F(-9, 10))
    assert verdict.value == pytest.approx(10 * math.pi, rel=1e-9)
    assert verdict.quadrature_value == pytest.approx(10 * math.pi, rel=1e-7)
    assert verdict.agrees


def test_series_and_quadrature_on_random_pairs():
    rng = np.random.default_rng(20240101)
    for _ in range(20):
        a = float(rng.uniform(-0.9, 3.0))
        b = max(0.0, (a + 2 - float(rng.uniform(0.25, 3.0))) / 2)
        series = I_series(a, b, tol=1e-8)
        spec = BoundaryPointSpec(norms._point_kernel_power(a, b), a, -2 * b)
        quad = integrate_about_boundary_point(spec, tol=1e-8)
        assert quad.value == pytest.approx(series.value, rel=1e-6), (a, b)


def test_divergence_verdicts_straddle_the_boundary():
    rng = np.random.default_rng(7)
    for _ in range(200):
        b = F(int(rng.integers(0, 17)), int(rng.integers(1, 5)))
        edge = max(F(-1), 2 * (b - 1)) if b > 0 else F(-1)
        offset = F(int(rng.integers(1, 50)), 1000) * (1 if rng.random() < 0.5 else -1)
        try:
            divergent = isinstance(I_series(edge + offset, b, tol=1e-3, term_cap=1000), Divergent)
        except ToleranceNotReached:
            divergent = False
        assert divergent == (offset < 0), (edge + offset, b)


def kernel_grid():
    for n in range(1, 4):
        for j in range(n + 1):
            for p in (F(1, 8), F(1, 4), F(1, 3), F(1, 2), F(1), F(2)):
                yield n, j, p


@pytest.mark.slow
@pytest.mark.parametrize(("n", "j", "p"), list(kernel_grid()))
def test_kernel_dichotomy_above_and_below_the_curve(n, j, p):
    k = KernelSpec(j, n)
    edge = b_curve(j, n)(p)
    above = kernel_norm(k, p, edge + F(1, 10))
    assert above.finite
    assert above.agrees
    assert above.quadrature_value == pytest.approx(above.value, rel=1e-6)
    below = kernel_norm(k, p, edge - F(1, 10))
    assert not below.finite
    assert below.witnessed
    assert below.growth_ratio > 10
    values = [v for _, v in below.divergence_trace]
    assert values == sorted(values)
