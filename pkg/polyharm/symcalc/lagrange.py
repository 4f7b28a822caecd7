"""Lagrange interpolation in rho^2 and the polyharmonic Poisson formula.

Since E[u](z, rho) is a polynomial of degree N-1 in rho^2 and harmonic in
z, its values on N circles |zeta| = rho_j determine u inside the smallest
circle. The weights M_j carry the interpolation and the Poisson kernel.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from ..const import ANGULAR_MAX_NODES, MIN_ANGULAR_NODES, RECONSTRUCT_REL_TOL
from ..errors import (
    BadIndex,
    DegenerateRadii,
    NotPolyharmonic,
    RadiusViolation,
    ToleranceNotReached,
)
from .bilaurent import BiLaurent
from .operators import is_n_harmonic

_LOGGER = logging.getLogger(__name__)

RHO = sympy.Symbol("rho", positive=True)


def _q(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


@dataclass(frozen=True)
class LagrangeFrame:
    """Strictly increasing radii in (0,1)."""

    radii: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        radii = tuple(Fraction(r) for r in self.radii)
        object.__setattr__(self, "radii", radii)
        if not radii:
            raise DegenerateRadii("empty frame")
        if any(not 0 < r < 1 for r in radii):
            raise DegenerateRadii(f"radii must lie in (0,1): {radii}")
        if any(r1 >= r2 for r1, r2 in zip(radii, radii[1:], strict=False)):
            raise DegenerateRadii(f"radii must be strictly increasing: {radii}")

    @property
    def order(self) -> int:
        return len(self.radii)

    @property
    def delta(self) -> Fraction:
        """Smallest gap between distinct squared radii (1 for one radius)."""
        squares = [r * r for r in self.radii]
        gaps = [b - a for a, b in zip(squares, squares[1:], strict=False)]
        return min(gaps, default=Fraction(1))


@dataclass(frozen=True)
class LagrangePolys:
    """Interpolation polynomials L_j and weights M_j in rho over QQ."""

    frame: LagrangeFrame
    L: tuple[sympy.Poly, ...]
    M: tuple[sympy.Poly, ...]

    def weights_at(self, rho: float) -> np.ndarray:
        """Float values M_j(rho) for all j."""
        return np.array(
            [np.polyval([float(c) for c in m.all_coeffs()], rho) for m in self.M]
        )


def lagrange_polys(frame: LagrangeFrame) -> LagrangePolys:
    """Build L_j and M_j exactly."""
    squares = [_q(r) ** 2 for r in frame.radii]
    ls, ms = [], []
    for j, rj in enumerate(frame.radii):
        lj = sympy.Poly(1, RHO, domain="QQ")
        for k, sk in enumerate(squares):
            if k != j:
                lj = lj * sympy.Poly((RHO**2 - sk) / (squares[j] - sk), RHO, domain="QQ")
        mj = lj * sympy.Poly((squares[j] - RHO**2) / (2 * _q(rj)), RHO, domain="QQ")
        ls.append(lj)
        ms.append(mj)
    return LagrangePolys(frame, tuple(ls), tuple(ms))


def _circle_integrals(
    u: BiLaurent, frame: LagrangeFrame, z: complex, nodes: int
) -> tuple[np.ndarray, np.ndarray]:
    """Trapezoid values of the integral of u(zeta)/|z-zeta|^2 ds over each circle.

    The second array integrates the absolute value instead, as a scale.
    """
    phi = 2 * np.pi * np.arange(nodes) / nodes
    out, mags = [], []
    for rj in frame.radii:
        rho = float(rj)
        zeta = rho * np.exp(1j * phi)
        vals = u.evaluate(zeta) / np.abs(z - zeta) ** 2
        out.append(rho * 2 * np.pi * np.mean(vals))
        mags.append(rho * 2 * np.pi * np.mean(np.abs(vals)))
    return np.array(out), np.array(mags)


def lagrange_reconstruct(
    u: BiLaurent,
    n: int,
    frame: LagrangeFrame,
    z: complex,
    angular_nodes: int = MIN_ANGULAR_NODES,
    polys: LagrangePolys | None = None,
) -> complex:
    """Recover u(z) from its values on the frame circles."""
    if angular_nodes < MIN_ANGULAR_NODES:
        raise BadIndex(f"angular_nodes {angular_nodes} < {MIN_ANGULAR_NODES}")
    if frame.order != n:
        raise BadIndex(f"frame has {frame.order} radii for order {n}")
    if not is_n_harmonic(u, n):
        raise NotPolyharmonic(f"input is not {n}-harmonic")
    if abs(z) >= float(frame.radii[0]):
        raise RadiusViolation(f"|z|={abs(z)} not inside rho_1={frame.radii[0]}")
    polys = polys or lagrange_polys(frame)
    weights = polys.weights_at(abs(z))

    nodes = angular_nodes
    integrals, _ = _circle_integrals(u, frame, z, nodes)
    previous = complex(weights @ integrals) / np.pi
    while nodes < ANGULAR_MAX_NODES:
        nodes *= 2
        integrals, mags = _circle_integrals(u, frame, z, nodes)
        value = complex(weights @ integrals) / np.pi
        # absolute floor where u(z) = 0
        scale = max(abs(value), float(np.abs(weights) @ mags) / np.pi)
        if abs(value - previous) <= RECONSTRUCT_REL_TOL * scale:
            _LOGGER.debug(f"lagrange_reconstruct: converged with {nodes} nodes")
            return value
        previous = value
    _LOGGER.debug(f"lagrange_reconstruct (WARNING): node cap {ANGULAR_MAX_NODES} hit")
    raise ToleranceNotReached(
        "angular sampling did not stabilise", value=previous, estimate=abs(value - previous)
    )
