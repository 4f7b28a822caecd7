"""Extremal kernels U_{j,N}, their weighted norms and annulus asymptotics."""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from ..cellgeom import b_curve
from ..const import (
    CROSS_CHECK_TOL,
    DEFAULT_GROWTH_FACTOR,
    DEFAULT_TOL,
    SLOPE_K_VALUES,
    TRACE_K_CAP,
    TRACE_K_END,
    TRACE_K_START,
)
from ..errors import BadIndex, PostconditionFailed, SingularPoint, ToleranceNotReached
from ..quadrature import BoundaryPointSpec, integrate_about_boundary_point, integrate_radial
from .series import (
    Divergent,
    I_closed_form,
    I_series,
    angular_mean,
    circle_average,
)

_LOGGER = logging.getLogger(__name__)

TRACE_TOL = 1e-8

type Rational = Fraction | int | str


@dataclass(frozen=True)
class KernelSpec:
    """U_{j,N}(z) = (1-|z|^2)^(N+j-1) / |1-z|^(2j)."""

    j: int
    N: int

    def __post_init__(self) -> None:
        if self.N < 1 or not 0 <= self.j <= self.N:
            raise BadIndex(f"kernel index j={self.j}, N={self.N} needs 0 <= j <= N, N >= 1")

    def exponents(self, p: Fraction, alpha: Fraction) -> tuple[Fraction, Fraction]:
        """(a, b) with ||U_{j,N}||^p_{p,alpha} = I(a, b)."""
        return (self.N + self.j - 1) * p + alpha, self.j * p


def _rational(value: Rational) -> Fraction:
    return Fraction(value)


def kernel_eval(k: KernelSpec, z: complex) -> float:
    """Pointwise value of U_{j,N}."""
    z = complex(z)
    if k.j >= 1 and z == 1:
        raise SingularPoint(f"U_{k.j},{k.N} is singular at z=1")
    weight = 1 - abs(z) ** 2
    return weight ** (k.N + k.j - 1) / abs(1 - z) ** (2 * k.j)


def effective_exponent(a: float, b: float) -> float:
    """Power of (1-r) in the angular mean of (1-r^2)^a |1-z|^(-2b)."""
    return a + min(0.0, 1 - 2 * b)


@dataclass(frozen=True)
class DivergenceTrace:
    rows: tuple[tuple[float, float], ...]
    growth_ratio: float
    witnessed: bool


@dataclass(frozen=True)
class NormVerdict:
    """Finiteness verdict for ||U_{j,N}||^p_{p,alpha}."""

    finite: bool
    value: float | None = None
    tol: float = DEFAULT_TOL
    terms_used: int = 0
    method: str = "series"
    quadrature_value: float | None = None
    quadrature_error: float | None = None
    agrees: bool | None = None
    divergence_trace: tuple[tuple[float, float], ...] = field(default_factory=tuple)
    growth_ratio: float | None = None
    witnessed: bool | None = None

    def to_json(self) -> dict[str, Any]:
        if self.finite:
            return {
                "finite": True,
                "method": self.method,
                "quadrature": {
                    "agrees": self.agrees,
                    "err_estimate": self.quadrature_error,
                    "value": self.quadrature_value,
                },
                "terms_used": self.terms_used,
                "tol": self.tol,
                "value": self.value,
            }
        return {
            "finite": False,
            "growth_ratio": self.growth_ratio,
            "trace": [[r, v] for r, v in self.divergence_trace],
            "witnessed": self.witnessed,
        }


def kernel_truncated_trace(
    k: KernelSpec,
    p: Rational,
    alpha: Rational,
    k_values: Sequence[int] = range(TRACE_K_START, TRACE_K_END + 1),
    growth_factor: float = DEFAULT_GROWTH_FACTOR,
) -> DivergenceTrace:
    """Integrals of |U_{j,N}|^p (1-|z|^2)^alpha over |z| < 1-2^-k.

    The radii are extended past the last k (up to TRACE_K_CAP) until the
    last-to-first ratio exceeds growth_factor.
    """
    a, b = (float(x) for x in k.exponents(_rational(p), _rational(alpha)))

    def radial(r: np.ndarray, d: np.ndarray) -> np.ndarray:
        return 2 * math.pi * r * (d * (2 - d)) ** a * angular_mean(b, r, d)

    def piece(r_in: float, r_out: float) -> float:
        try:
            return integrate_radial(radial, r_in, r_out, tol=TRACE_TOL).value
        except ToleranceNotReached as err:
            _LOGGER.debug(f"kernel_truncated_trace (WARNING): {err}")
            return err.value

    ks = list(k_values)
    if not ks or any(x < 1 for x in ks) or any(x >= y for x, y in zip(ks, ks[1:], strict=False)):
        raise BadIndex(f"trace levels must be increasing positive integers, got {ks}")
    rows: list[tuple[float, float]] = []
    total, inner = 0.0, 0.0
    level = ks[0]
    queue = list(ks)
    while queue:
        level = queue.pop(0)
        r = 1.0 - 2.0**-level
        total += piece(inner, r)
        rows.append((r, total))
        inner = r
        ratio = total / rows[0][1]
        if not queue and ratio <= growth_factor and level < TRACE_K_CAP:
            queue.append(level + 1)
    ratio = rows[-1][1] / rows[0][1]
    witnessed = ratio > growth_factor
    _LOGGER.debug(
        f"kernel_truncated_trace: U_{k.j},{k.N} p={p} alpha={alpha} "
        f"k<= {level} ratio={ratio:.3g} witnessed={witnessed}"
    )
    return DivergenceTrace(tuple(rows), ratio, witnessed)


def _point_kernel_power(a: float, b: float):
    """(1-|z|^2)^a |1-z|^(-2b) in polar coordinates about z = 1."""

    def evaluator(rho: np.ndarray, psi: np.ndarray, w: np.ndarray) -> np.ndarray:
        return np.exp(a * np.log(w) - 2 * b * np.log(rho)) + 0 * psi

    return evaluator


def _cross_check(a: float, b: float, tol: float) -> tuple[float, float]:
    spec = BoundaryPointSpec(_point_kernel_power(a, b), boundary_exponent=a, point_exponent=-2 * b)
    result = integrate_about_boundary_point(spec, tol)
    return result.value, result.err_estimate


def kernel_norm(
    k: KernelSpec,
    p: Rational,
    alpha: Rational,
    tol: float = DEFAULT_TOL,
    term_cap: int | None = None,
    growth_factor: float = DEFAULT_GROWTH_FACTOR,
    cross_check: bool = True,
) -> NormVerdict:
    """||U_{j,N}||^p_{p,alpha} through I((N+j-1)p+alpha, jp)."""
    p, alpha = _rational(p), _rational(alpha)
    if p <= 0:
        raise BadIndex(f"p={p} must be positive")
    a, b = k.exponents(p, alpha)
    exact_finite = alpha > b_curve(k.j, k.N)(p)
    try:
        series = I_series(a, b, tol, term_cap)
    except ToleranceNotReached as err:
        _LOGGER.debug(f"kernel_norm: falling back to closed form ({err})")
        series = None

    if isinstance(series, Divergent):
        if exact_finite:
            raise PostconditionFailed(
                f"series diverges for U_{k.j},{k.N} at p={p} alpha={alpha} above b-curve"
            )
        trace = kernel_truncated_trace(k, p, alpha, growth_factor=growth_factor)
        return NormVerdict(
            finite=False,
            tol=tol,
            divergence_trace=trace.rows,
            growth_ratio=trace.growth_ratio,
            witnessed=trace.witnessed,
        )

    if not exact_finite:
        raise PostconditionFailed(
            f"series converges for U_{k.j},{k.N} at p={p} alpha={alpha} on or below b-curve"
        )
    if series is None:
        value, terms, method = I_closed_form(a, b), 0, "closed_form"
    else:
        value, terms, method = series.value, series.terms_used, "series"
    return _finite_verdict(k, a, b, value, terms, method, tol, cross_check)


def _finite_verdict(
    k: KernelSpec,
    a: Fraction,
    b: Fraction,
    value: float,
    terms: int,
    method: str,
    tol: float,
    cross_check: bool,
) -> NormVerdict:
    quad_value = quad_err = agrees = None
    if cross_check:
        check_tol = max(tol, CROSS_CHECK_TOL)
        quad_value, quad_err = _cross_check(float(a), float(b), check_tol / 10)
        agrees = abs(quad_value - value) <= check_tol * abs(value)
        if not agrees:
            _LOGGER.debug(
                f"kernel_norm (ERROR): U_{k.j},{k.N} series {value} vs quadrature {quad_value}"
            )
            raise PostconditionFailed(
                f"U_{k.j},{k.N}: series {value} and quadrature {quad_value} differ beyond {check_tol}"
            )
    return NormVerdict(
        finite=True,
        value=value,
        tol=tol,
        terms_used=terms,
        method=method,
        quadrature_value=quad_value,
        quadrature_error=quad_err,
        agrees=agrees,
    )


def olofsson_uniform_potential(theta: int, z: complex, tol: float = DEFAULT_TOL) -> float:
    """Uniform-density potential (1-|z|^2)^(2 theta+1) * circle_average(theta+1, |z|)."""
    if theta < 0 or int(theta) != theta:
        raise BadIndex(f"theta={theta} must be a nonnegative integer")
    r = abs(complex(z))
    if r >= 1:
        raise BadIndex(f"|z|={r} must be < 1")
    mean = circle_average(theta + 1, r, tol)
    return (1 - r * r) ** (2 * theta + 1) * mean.value


def annulus_regime_exponent(n: int, p: Rational) -> tuple[float, bool]:
    """Power of (1-r) in the annulus integral of |U_{N,N}|^p, with log flag."""
    if n < 1:
        raise BadIndex(f"order N={n} < 1")
    p = _rational(p)
    if p <= 0:
        raise BadIndex(f"p={p} must be positive")
    threshold = Fraction(1, 2 * n)
    if p > threshold:
        return float(2 - p), False
    if p == threshold:
        return float(2 - p), True
    return float(1 + (2 * n - 1) * p), False


def annulus_norm(n: int, p: Rational, r: float, tol: float = DEFAULT_TOL) -> float:
    """Integral of |U_{N,N}|^p over r < |z| < 1."""
    if n < 1:
        raise BadIndex(f"order N={n} < 1")
    p = float(_rational(p))
    if p <= 0:
        raise BadIndex(f"p={p} must be positive")
    if not 0 <= r < 1:
        raise BadIndex(f"r={r} must lie in [0, 1)")
    a, b = (2 * n - 1) * p, n * p

    def radial(rho: np.ndarray, d: np.ndarray) -> np.ndarray:
        return 2 * math.pi * rho * (d * (2 - d)) ** a * angular_mean(b, rho, d)

    return integrate_radial(radial, r, 1.0, exponent=effective_exponent(a, b), tol=tol).value


def fit_slope(points: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of (x, y) pairs."""
    if len(points) < 2:
        raise BadIndex("need at least two points for a slope")
    xs, ys = np.array(points, dtype=float).T
    return float(np.polyfit(xs, ys, 1)[0])


@dataclass(frozen=True)
class AnnulusScan:
    """Annulus integrals at r = 1-2^-k with the fitted and predicted exponents."""

    n: int
    p: Fraction
    rows: tuple[tuple[int, float, float, float, float], ...]
    fitted_slope: float
    predicted: float
    log_factor: bool


def annulus_scan(
    n: int,
    p: Rational,
    k_values: Sequence[int] = SLOPE_K_VALUES,
    tol: float = CROSS_CHECK_TOL * 1e-2,
) -> AnnulusScan:
    """Scan annulus_norm over r = 1-2^-k and fit log I against log(1-r)."""
    p = _rational(p)
    predicted, log_factor = annulus_regime_exponent(n, p)
    rows = []
    for k in k_values:
        r = 1.0 - 2.0**-k
        try:
            value = annulus_norm(n, p, r, tol)
        except ToleranceNotReached as err:
            _LOGGER.debug(f"annulus_scan (WARNING): k={k} {err}")
            value = err.value
        rows.append((k, r, value, -k * math.log(2), math.log(value)))
    slope = fit_slope([(row[3], row[4]) for row in rows])
    if log_factor:
        _LOGGER.debug(f"annulus_scan: p={p} = 1/(2N), slope {slope} carries a log factor")
    _LOGGER.debug(f"annulus_scan: N={n} p={p} slope={slope:.4f} predicted={predicted}")
    return AnnulusScan(n, p, tuple(rows), slope, predicted, log_factor)
