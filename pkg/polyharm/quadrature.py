"""Polar quadrature on the disk, annuli and sectors.

The radial direction is split into Gauss-Legendre panels graded toward the
unit circle at distances 2^-k, k up to RADIAL_GRADING_DEPTH. Beyond the last
panel the variable t = -log(1-r) turns a boundary weight (1-r)^gamma into
an exponential, integrated with a Gauss-Laguerre rule of matching rate.
Angular integrals use the periodic trapezoid rule (smooth integrands) or
Gauss-Legendre panels graded toward singular boundary points. Integrands with
a point singularity on the circle strong enough to spoil those panels go
through integrate_about_boundary_point instead.

Evaluators are called as f(r, phi, d) with d = 1 - r computed exactly from
the mesh, and must broadcast over numpy arrays.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from scipy import special

from .const import (
    ANGULAR_GRADING,
    ANGULAR_MAX_NODES,
    ANGULAR_REL_TOL,
    ANGULAR_START_NODES,
    DEFAULT_TOL,
    QUAD_LEVELS,
    RADIAL_GRADING_DEPTH,
    TAIL_MIN_DISTANCE,
)
from .errors import BadIndex, NonIntegrable, ToleranceNotReached

_LOGGER = logging.getLogger(__name__)

TWO_PI = 2 * math.pi

type PolarEvaluator = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]
type RadialEvaluator = Callable[[np.ndarray, np.ndarray], np.ndarray]
type PointEvaluator = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


class QuadratureResult(NamedTuple):
    value: float
    err_estimate: float


@dataclass(frozen=True)
class Region:
    """Disk, annulus or sector {r_in < |z| < r_out, angle in arc}."""

    kind: str = "disk"
    r_in: float = 0.0
    r_out: float = 1.0
    arc_start: float = 0.0
    arc_end: float = TWO_PI

    def __post_init__(self) -> None:
        if self.kind not in ("disk", "annulus", "sector"):
            raise BadIndex(f"unknown region kind {self.kind!r}")
        if not 0 <= self.r_in < self.r_out <= 1:
            raise BadIndex(f"need 0 <= r_in < r_out <= 1, got {self.r_in}, {self.r_out}")
        if self.kind == "disk" and self.r_in != 0:
            raise BadIndex("a disk has r_in = 0")
        if self.kind == "sector" and not 0 < self.arc_end - self.arc_start < TWO_PI:
            raise BadIndex("sector arc must have length in (0, 2pi)")

    @classmethod
    def disk(cls, r_out: float = 1.0) -> Region:
        return cls("disk", 0.0, r_out)

    @classmethod
    def annulus(cls, r_in: float, r_out: float = 1.0) -> Region:
        return cls("annulus", r_in, r_out)

    @classmethod
    def sector(
        cls, arc_start: float, arc_end: float, r_in: float = 0.0, r_out: float = 1.0
    ) -> Region:
        return cls("sector", r_in, r_out, arc_start, arc_end)

    @property
    def full_circle(self) -> bool:
        return self.kind != "sector"

    @property
    def touches_boundary(self) -> bool:
        return self.r_out == 1.0


@dataclass(frozen=True)
class IntegrandSpec:
    """Pointwise integrand with its known boundary behaviour.

    radial_exponent_at_1 is the power gamma with angular means ~ (1-r)^gamma;
    singular_points are points of the unit circle where f blows up.
    """

    evaluator: PolarEvaluator
    radial_exponent_at_1: float = 0.0
    singular_points: tuple[complex, ...] = ()

    @property
    def singular_angles(self) -> tuple[float, ...]:
        return tuple(sorted(float(np.angle(z)) % TWO_PI for z in self.singular_points))


@lru_cache(maxsize=16)
def _legendre(q: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = special.roots_legendre(q)
    return x, w


@lru_cache(maxsize=16)
def _laguerre(q: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = special.roots_laguerre(q)
    return x, w


def _panel_rule(edges: np.ndarray, q: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes and weights over consecutive edges."""
    x, w = _legendre(q)
    a, b = edges[:-1, None], edges[1:, None]
    half = (b - a) / 2
    nodes = (a + b) / 2 + half * x[None, :]
    weights = np.abs(half) * w[None, :]
    return nodes.ravel(), weights.ravel()


def _radial_rule(
    r_in: float, r_out: float, gamma: float, q: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Nodes (r, d) and weights for dr over (r_in, r_out)."""
    d_in, d_out = 1.0 - r_in, 1.0 - r_out
    floor = 2.0**-RADIAL_GRADING_DEPTH
    grading = [2.0**-k for k in range(1, RADIAL_GRADING_DEPTH + 1)]
    inner = [g for g in grading if max(d_out, floor) < g < d_in]
    edges = [d_in, *inner]
    if d_out > 0:
        edges.append(d_out)
    elif d_in > floor:
        edges.append(floor)
    d_nodes = np.empty(0)
    weights = np.empty(0)
    if len(edges) > 1:
        d_nodes, weights = _panel_rule(np.array(edges), q)
    if d_out == 0:
        start = min(d_in, floor)
        t0 = -math.log(start)
        rate = gamma + 1.0
        x, w = _laguerre(q)
        s = x / rate
        keep = t0 + s <= -math.log(TAIL_MIN_DISTANCE)
        tail_d = start * np.exp(-s[keep])
        tail_w = w[keep] * np.exp(x[keep]) * tail_d / rate
        d_nodes = np.concatenate([d_nodes, tail_d])
        weights = np.concatenate([weights, tail_w])
    return 1.0 - d_nodes, d_nodes, weights


def _graded_edges(u: float, v: float, width: float, toward_left: bool) -> np.ndarray:
    length = v - u
    offsets = [0.0]
    step = width
    while step < length:
        offsets.append(step)
        step *= 2
    offsets.append(length)
    off = np.array(offsets)
    return u + off if toward_left else (v - off)[::-1]


def _angular_intervals(region: Region, singular: Sequence[float]) -> list[tuple[float, float, bool, bool]]:
    """Arc intervals with flags marking singular endpoints."""
    if region.full_circle:
        if not singular:
            return [(region.arc_start, region.arc_start + TWO_PI, False, False)]
        cuts = sorted(singular)
        return [
            (a, b, True, True)
            for a, b in zip(cuts, [*cuts[1:], cuts[0] + TWO_PI], strict=True)
        ]
    start, end = region.arc_start, region.arc_end
    lifted = sorted({start + ((s - start) % TWO_PI) for s in singular})
    inside = [c for c in lifted if c <= end]
    cuts = [start, *(c for c in inside if start < c < end), end]
    flags = set(inside)
    return [(a, b, a in flags, b in flags) for a, b in zip(cuts, cuts[1:], strict=False)]


def _angular_rule(
    region: Region, singular: Sequence[float], d: float, q: int
) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre panels graded toward singular angles at width ~ d."""
    width = max(ANGULAR_GRADING * d, TAIL_MIN_DISTANCE)
    edges_all = []
    for a, b, sa, sb in _angular_intervals(region, singular):
        if sa and sb:
            mid = (a + b) / 2
            edges_all.append(_graded_edges(a, mid, width, True))
            edges_all.append(_graded_edges(mid, b, width, False))
        elif sa:
            edges_all.append(_graded_edges(a, b, width, True))
        elif sb:
            edges_all.append(_graded_edges(a, b, width, False))
        else:
            panels = max(1, math.ceil((b - a) / (math.pi / 8)))
            edges_all.append(np.linspace(a, b, panels + 1))
    nodes, weights = zip(*(_panel_rule(e, q) for e in edges_all), strict=True)
    return np.concatenate(nodes), np.concatenate(weights)


def _trapezoid_means(
    f: PolarEvaluator, r: np.ndarray, d: np.ndarray, phase: float
) -> np.ndarray:
    """Integrals over the full circle by doubling the periodic trapezoid rule."""
    m = ANGULAR_START_NODES
    previous = None
    while True:
        phi = phase + TWO_PI * np.arange(m) / m
        vals = f(r[:, None], phi[None, :], d[:, None])
        current = TWO_PI * np.mean(np.broadcast_to(vals, (r.size, m)), axis=1)
        if previous is not None:
            scale = np.max(np.abs(current), initial=0.0)
            if np.max(np.abs(current - previous), initial=0.0) <= ANGULAR_REL_TOL * scale:
                return current
        if m >= ANGULAR_MAX_NODES:
            _LOGGER.debug(f"_trapezoid_means (WARNING): node cap {m} reached")
            return current
        previous = current
        m *= 2


def _angular_integrals(
    f: IntegrandSpec, region: Region, r: np.ndarray, d: np.ndarray, q: int
) -> np.ndarray:
    singular = f.singular_angles
    if region.full_circle and not singular:
        return _trapezoid_means(f.evaluator, r, d, region.arc_start)
    out = np.empty(r.size)
    for i in range(r.size):
        phi, w = _angular_rule(region, singular, float(d[i]), q)
        vals = f.evaluator(r[i : i + 1], phi, d[i : i + 1])
        out[i] = np.sum(w * np.broadcast_to(vals, phi.shape))
    return out


def _refine(level_value: Callable[[int], float], tol: float, label: str) -> QuadratureResult:
    previous = None
    err = math.inf
    for q in QUAD_LEVELS:
        value = level_value(q)
        if previous is not None:
            err = abs(value - previous)
            if err <= tol * abs(value):
                return QuadratureResult(value, err)
        previous = value
    _LOGGER.debug(f"{label} (WARNING): tolerance {tol} not met, estimate {err}")
    raise ToleranceNotReached(f"{label}: tolerance {tol} not met", value=previous, estimate=err)


def _check_exponent(gamma: float, touches_boundary: bool) -> None:
    if touches_boundary and gamma <= -1:
        raise NonIntegrable(f"boundary exponent {gamma} <= -1")


def integrate(f: IntegrandSpec, region: Region, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """Integral of f over region with respect to area measure."""
    _check_exponent(f.radial_exponent_at_1, region.touches_boundary)

    def level(q: int) -> float:
        r, d, w = _radial_rule(region.r_in, region.r_out, f.radial_exponent_at_1, q)
        ang = _angular_integrals(f, region, r, d, q)
        return float(np.sum(w * r * ang))

    return _refine(level, tol, "integrate")


@dataclass(frozen=True)
class BoundaryPointSpec:
    """Integrand on the disk in polar coordinates (rho, psi) about z = 1.

    z = 1 - rho e^(i psi) with |psi| < pi/2 and 0 < rho < 2 cos(psi). The
    evaluator is called as g(rho, psi, w) with w = 1 - |z|^2 = rho (2 cos(psi) - rho)
    computed in factored form. g must behave like w^boundary_exponent * rho^point_exponent.
    """

    evaluator: PointEvaluator
    boundary_exponent: float = 0.0
    point_exponent: float = 0.0


@lru_cache(maxsize=64)
def _jacobi(q: int, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray]:
    x, w = special.roots_jacobi(q, alpha, beta)
    return x, w


def integrate_about_boundary_point(
    f: BoundaryPointSpec, tol: float = DEFAULT_TOL
) -> QuadratureResult:
    """Integral of g over the unit disk with a singular boundary point at z = 1.

    With rho = 2 cos(psi) s the area element is (2 cos psi)^2 s ds dpsi. Gauss-Jacobi
    rules absorb s^(a+c+1) (1-s)^a in s and cos^(2a+c+2) at psi = +-pi/2, where
    a and c are the boundary and point exponents, leaving a smooth remainder.
    """
    a, c = f.boundary_exponent, f.point_exponent
    _check_exponent(a, True)
    if a + c + 2 <= 0:
        raise NonIntegrable(f"point exponent {c} with boundary exponent {a} at z=1")
    beta = a + c + 1
    e = 2 * a + c + 2

    def level(q: int) -> float:
        xs, ws = _jacobi(q, a, beta)
        xp, wp = _jacobi(q, e, e)
        s = (1 + xs) / 2
        psi = (math.pi / 2) * xp
        two_cos = (2 * np.cos(psi))[:, None]
        rho = two_cos * s[None, :]
        w = two_cos * rho * (1 - s[None, :])
        vals = f.evaluator(rho, psi[:, None], w)
        smooth = vals / (s[None, :] ** (a + c) * (1 - s[None, :]) ** a)
        inner = 2.0 ** -(2 * a + c + 2) * (smooth @ ws)
        outer = two_cos[:, 0] ** 2 * inner / (1 - xp * xp) ** e
        return float((math.pi / 2) * np.sum(wp * outer))

    return _refine(level, tol, "integrate_about_boundary_point")


def integrate_radial(
    f: RadialEvaluator,
    r_in: float,
    r_out: float = 1.0,
    exponent: float = 0.0,
    tol: float = DEFAULT_TOL,
) -> QuadratureResult:
    """Integral of f(r, d) dr over (r_in, r_out), d = 1 - r."""
    if not 0 <= r_in < r_out <= 1:
        raise BadIndex(f"need 0 <= r_in < r_out <= 1, got {r_in}, {r_out}")
    _check_exponent(exponent, r_out == 1.0)

    def level(q: int) -> float:
        r, d, w = _radial_rule(r_in, r_out, exponent, q)
        return float(np.sum(w * f(r, d)))

    return _refine(level, tol, "integrate_radial")


def truncated_scan(
    f: IntegrandSpec, radii: Sequence[float], tol: float = DEFAULT_TOL
) -> list[tuple[float, float]]:
    """Integrals over the disks |z| < r for increasing r, built from annuli."""
    radii = [float(r) for r in radii]
    if any(not 0 < r < 1 for r in radii) or any(
        a >= b for a, b in zip(radii, radii[1:], strict=False)
    ):
        raise BadIndex("radii must be increasing in (0,1)")
    rows = []
    total = 0.0
    inner = 0.0
    for r in radii:
        region = Region.disk(r) if inner == 0.0 else Region.annulus(inner, r)
        total += integrate(f, region, tol).value
        rows.append((r, total))
        inner = r
    return rows
