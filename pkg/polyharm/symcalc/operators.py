"""Differential operators on BiLaurent polynomials.

All operators are exact and act termwise on z**a * conj(z)**b.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb

from ..errors import BadIndex
from .bilaurent import BiLaurent

_LOGGER = logging.getLogger(__name__)


def dz(u: BiLaurent) -> BiLaurent:
    """Complex derivative in z."""
    return BiLaurent(
        {(a - 1, b): c * a for (a, b), c in u.terms.items() if a != 0}
    )


def dzbar(u: BiLaurent) -> BiLaurent:
    """Complex derivative in conj(z)."""
    return BiLaurent(
        {(a, b - 1): c * b for (a, b), c in u.terms.items() if b != 0}
    )


def laplacian(u: BiLaurent) -> BiLaurent:
    """Return 4 * dz(dzbar(u))."""
    return BiLaurent(
        {
            (a - 1, b - 1): c * (4 * a * b)
            for (a, b), c in u.terms.items()
            if a != 0 and b != 0
        }
    )


def laplacian_power(u: BiLaurent, n: int) -> BiLaurent:
    """Return the n-fold laplacian of u."""
    if n < 0:
        raise BadIndex(f"laplacian power {n} < 0")
    for _ in range(n):
        if not u:
            break
        u = laplacian(u)
    return u


def dzbar_power(u: BiLaurent, n: int) -> BiLaurent:
    """Return the n-fold conj(z)-derivative of u."""
    for _ in range(n):
        if not u:
            break
        u = dzbar(u)
    return u


def euler(u: BiLaurent) -> BiLaurent:
    """Return z*dz(u) + conj(z)*dzbar(u)."""
    return u.map_terms(lambda a, b, c: c * (a + b))


@lru_cache(maxsize=64)
def disk_weight_power(j: int) -> BiLaurent:
    """Return (1 - |z|**2)**j expanded."""
    return BiLaurent({(k, k): (-1) ** k * comb(j, k) for k in range(j + 1)})


def mul_disk_weight(u: BiLaurent, j: int = 1) -> BiLaurent:
    """Return (1 - z*conj(z))**j * u."""
    if j < 0:
        raise BadIndex(f"disk weight power {j} < 0")
    if j == 0:
        return u
    return disk_weight_power(j) * u


def apply_L(u: BiLaurent, theta: Fraction | int) -> BiLaurent:
    """Return (1-|z|^2) lap(u) + 4 theta euler(u) - 4 theta^2 u."""
    theta = Fraction(theta)
    return (
        mul_disk_weight(laplacian(u), 1)
        + euler(u).scale(4 * theta)
        - u.scale(4 * theta * theta)
    )


def is_n_harmonic(u: BiLaurent, n: int) -> bool:
    """Return True when the n-fold laplacian of u vanishes."""
    if n < 1:
        raise BadIndex(f"harmonicity order {n} < 1")
    return laplacian_power(u, n).is_zero()


def is_harmonic(u: BiLaurent) -> bool:
    return is_n_harmonic(u, 1)


def is_n_analytic(f: BiLaurent, n: int) -> bool:
    """Return True when the n-fold conj(z)-derivative of f vanishes."""
    if n < 1:
        raise BadIndex(f"polyanalyticity order {n} < 1")
    return dzbar_power(f, n).is_zero()

