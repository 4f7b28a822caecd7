"""Critical integrability curves in the (p, alpha) plane.

b_{j,N}(p) is the critical weight exponent of the extremal kernel U_{j,N};
the sawtooth beta(N, p) is their lower envelope. The curves a_{j,N}
coincide with b_{j,N} on (0, 1] and continue affinely past p = 1.
"""

import logging
from fractions import Fraction

from ..errors import BadIndex
from .piecewise import PiecewiseAffine, pointwise_max, pointwise_min

_LOGGER = logging.getLogger(__name__)


def _check_order(n: int) -> None:
    if n < 1:
        raise BadIndex(f"order N={n} < 1")


def b_curve(j: int, n: int, p_max: Fraction | None = None) -> PiecewiseAffine:
    """Critical exponent of U_{j,N}: alpha > b_{j,N}(p) iff the norm is finite."""
    _check_order(n)
    if not 0 <= j <= n:
        raise BadIndex(f"b_curve index j={j} outside [0, {n}]")
    if j == 0:
        curve = PiecewiseAffine.affine(-(n - 1), -1)
    else:
        curve = pointwise_max(
            [
                PiecewiseAffine.affine(-(j + n - 1), -1),
                PiecewiseAffine.affine(j - n + 1, -2),
            ]
        )
    return curve if p_max is None else curve.restrict(p_max)


def a_curve(j: int, n: int, p_max: Fraction | None = None) -> PiecewiseAffine:
    """Three-branch curve bounding the cells of the admissible region."""
    _check_order(n)
    if not 1 <= j <= n:
        raise BadIndex(f"a_curve index j={j} outside [1, {n}]")
    curve = PiecewiseAffine(
        (Fraction(1, 2 * j), Fraction(1)),
        (
            (Fraction(-(j + n - 1)), Fraction(-1)),
            (Fraction(j - n + 1), Fraction(-2)),
            (Fraction(j - n), Fraction(-1)),
        ),
    )
    return curve if p_max is None else curve.restrict(p_max)


def beta_curve(n: int, p_max: Fraction | None = None) -> PiecewiseAffine:
    """Sawtooth beta(N, p) = min_j b_{j,N}(p), exact."""
    _check_order(n)
    beta = pointwise_min([b_curve(j, n) for j in range(n + 1)])
    _LOGGER.debug(f"beta_curve: N={n} breakpoints={[str(b) for b in beta.breakpoints]}")
    return beta if p_max is None else beta.restrict(p_max)


def extremal_indices(n: int, p: Fraction) -> tuple[int, ...]:
    """Indices j whose kernel attains beta(N, p)."""
    p = Fraction(p)
    values = {j: b_curve(j, n)(p) for j in range(n + 1)}
    low = min(values.values())
    return tuple(j for j, v in values.items() if v == low)


def local_critical_alpha(n: int, p: Fraction) -> Fraction:
    """Critical exponent of the local uniqueness problem: -(2N-1)p - 1."""
    _check_order(n)
    p = Fraction(p)
    if p <= 0:
        raise BadIndex(f"p={p} must be positive")
    return -(2 * n - 1) * p - 1


def polyanalytic_beta(n: int, p: Fraction) -> Fraction:
    """Critical exponent for N-analytic functions: -1 - (N-1)p."""
    _check_order(n)
    p = Fraction(p)
    if p <= 0:
        raise BadIndex(f"p={p} must be positive")
    return -1 - (n - 1) * p
