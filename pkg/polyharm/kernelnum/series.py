"""Certified series for the weighted integrals I(a, b) and circle averages.

I(a, b) is the integral over the disk of (1-|z|^2)^a |1-z|^(-2b), equal to
pi * sum_j (b)_j^2 / (j! (a+1)_(j+1)). The terms satisfy
(j+1)(j+a+2) t_(j+1) = (b+j)^2 t_j, which telescopes: with s = a+3-2b and
g_j = (j+kappa) t_j for a suitable kappa,

    g_j - g_(j+1) = (s-1) t_j + eps * t_j / ((j+1)(j+a+2)).

Summing from n gives the tail as g_n/(s-1) up to a relative error
|eps| / ((s-1)(n+1)(n+a+2)), which is the certified bound reported.
"""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from ..const import (
    ANGULAR_SERIES_MAX_R2,
    DEFAULT_TERM_CAP,
    DEFAULT_TOL,
    ENV_TERM_CAP,
    MIN_TERM_CAP,
    SERIES_CHUNK,
)
from ..errors import BadIndex, InvalidConfig, NonIntegrable, ToleranceNotReached

_LOGGER = logging.getLogger(__name__)

type Real = float | Fraction | int


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    tail_bound: float
    converged: bool


@dataclass(frozen=True)
class Divergent:
    """Marker for an infinite integral."""

    reason: str


def default_term_cap() -> int:
    """Series term cap, honouring the environment override."""
    raw = os.environ.get(ENV_TERM_CAP)
    if raw is None:
        return DEFAULT_TERM_CAP
    try:
        cap = int(raw)
    except ValueError as err:
        raise InvalidConfig(f"{ENV_TERM_CAP}={raw!r} is not an integer") from err
    if cap < MIN_TERM_CAP:
        raise InvalidConfig(f"{ENV_TERM_CAP}={cap} below {MIN_TERM_CAP}")
    return cap


def I_divergence_reason(a: Real, b: Real) -> str | None:
    """Exact finiteness test; None when I(a, b) converges."""
    if b < 0:
        raise BadIndex(f"b={b} must be nonnegative")
    if a <= -1:
        return f"a={a} <= -1"
    if b > 0 and a <= 2 * (b - 1):
        return f"a={a} <= 2(b-1)={2 * (b - 1)}"
    return None


def I_series(
    a: Real, b: Real, tol: float = DEFAULT_TOL, term_cap: int | None = None
) -> SeriesResult | Divergent:
    """Sum the series for I(a, b) with a certified tail enclosure."""
    reason = I_divergence_reason(a, b)
    if reason is not None:
        _LOGGER.debug(f"I_series: divergent ({reason})")
        return Divergent(reason)
    cap = term_cap or default_term_cap()
    a, b = float(a), float(b)
    if b == 0:
        return SeriesResult(math.pi / (a + 1), 1, 0.0, True)

    s = a + 3 - 2 * b
    kappa = ((s - 1) * (a + 3) - (a + 2) + b * b + 2 * b) / s
    eps = kappa * (a + 2) - (1 + kappa) * b * b - (s - 1) * (a + 2)
    term = math.pi / (a + 1)
    total = 0.0
    start = 0
    best = (0.0, math.inf)
    while start < cap:
        j = np.arange(start, min(start + SERIES_CHUNK, cap), dtype=float)
        ratios = (b + j) ** 2 / ((j + 1) * (a + j + 2))
        factors = np.cumprod(ratios)
        terms = term * np.concatenate(([1.0], factors[:-1]))
        following = term * factors
        sums = total + np.cumsum(terms)
        n = j + 1
        tail = (n + kappa) * following / (s - 1)
        delta = abs(eps) / ((s - 1) * (n + 1) * (n + a + 2))
        with np.errstate(divide="ignore", invalid="ignore"):
            bound = np.where((n + kappa > 0) & (delta < 1), tail * delta / (1 - delta), np.inf)
        values = sums + np.where(n + kappa > 0, tail, 0.0)
        ok = bound <= tol * np.abs(values)
        if ok.any():
            k = int(np.argmax(ok))
            _LOGGER.debug(f"I_series: a={a} b={b} converged after {int(n[k])} terms")
            return SeriesResult(float(values[k]), int(n[k]), float(bound[k]), True)
        best = (float(values[-1]), float(bound[-1]))
        total = float(sums[-1])
        term = float(following[-1])
        start += j.size
    _LOGGER.debug(f"I_series (WARNING): term cap {cap} hit for a={a} b={b}")
    raise ToleranceNotReached(
        f"I({a}, {b}) not certified to {tol} within {cap} terms",
        value=best[0],
        estimate=best[1],
    )


def I_closed_form(a: Real, b: Real) -> float:
    """pi Gamma(a+1) Gamma(a+2-2b) / Gamma(a+2-b)^2 for convergent (a, b)."""
    reason = I_divergence_reason(a, b)
    if reason is not None:
        raise NonIntegrable(reason)
    a, b = mpmath.mpf(float(a)), mpmath.mpf(float(b))
    log_value = (
        mpmath.loggamma(a + 1) + mpmath.loggamma(a + 2 - 2 * b) - 2 * mpmath.loggamma(a + 2 - b)
    )
    return float(mpmath.pi * mpmath.exp(log_value))


def circle_average(
    b: Real, r: float, tol: float = DEFAULT_TOL, term_cap: int | None = None
) -> SeriesResult:
    """Mean of |1 - r xi|^(-2b) over the unit circle, sum [(b)_k/k!]^2 r^(2k)."""
    if b < 0:
        raise BadIndex(f"b={b} must be nonnegative")
    if not 0 <= r < 1:
        raise BadIndex(f"r={r} must lie in [0, 1)")
    cap = term_cap or default_term_cap()
    b, r2 = float(b), float(r) ** 2
    if b == 0 or r2 == 0:
        return SeriesResult(1.0, 1, 0.0, True)
    term, total, start = 1.0, 0.0, 0
    last_bound = math.inf
    while start < cap:
        k = np.arange(start, min(start + SERIES_CHUNK, cap), dtype=float)
        ratios = ((b + k) / (k + 1)) ** 2 * r2
        factors = np.cumprod(ratios)
        terms = term * np.concatenate(([1.0], factors[:-1]))
        following = term * factors
        sums = total + np.cumsum(terms)
        # ratios decrease in k when b >= 1 and stay below r^2 otherwise
        q = np.concatenate((ratios[1:], [((b + k[-1] + 1) / (k[-1] + 2)) ** 2 * r2]))
        q = q if b >= 1 else np.full_like(q, r2)
        with np.errstate(divide="ignore"):
            bound = np.where(q < 1, following / (1 - q), np.inf)
        ok = bound <= tol * sums
        if ok.any():
            i = int(np.argmax(ok))
            return SeriesResult(float(sums[i]), int(k[i]) + 1, float(bound[i]), True)
        total, term = float(sums[-1]), float(following[-1])
        last_bound = float(bound[-1])
        start += k.size
    _LOGGER.debug(f"circle_average (WARNING): cap {cap} hit for b={b} r={r}")
    raise ToleranceNotReached(
        f"circle average b={b} r={r} not certified; shrink r", value=total, estimate=last_bound
    )


def _angular_mean_near_circle(b: float, d2: float) -> float:
    """2F1(b, b; 1; 1-d2) via the Pfaff transformation, accurate for tiny d2."""
    w = 1 - 1 / mpmath.mpf(d2)
    return float(mpmath.mpf(d2) ** (-b) * mpmath.hyp2f1(b, 1 - b, 1, w))


def angular_mean(b: float, r: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Vectorised circle average of |1 - r xi|^(-2b); d = 1 - r."""
    r = np.asarray(r, dtype=float)
    d = np.asarray(d, dtype=float)
    out = np.ones_like(r)
    if b == 0:
        return out
    d2 = d * (2 - d)
    near = d2 < 1 - ANGULAR_SERIES_MAX_R2
    if near.any():
        out[near] = [_angular_mean_near_circle(b, x) for x in d2[near]]
    far = ~near
    if far.any():
        r2 = r[far] ** 2
        term = np.ones_like(r2)
        total = np.ones_like(r2)
        k = 0
        while True:
            term = term * ((b + k) / (k + 1)) ** 2 * r2
            total = total + term
            k += 1
            if k > 2 * b and np.all(term <= 1e-17 * total):
                break
        out[far] = total
    return out


def olofsson_constant(theta: Real) -> float:
    """Gamma(1+theta)^2 / Gamma(1+2 theta)."""
    t = mpmath.mpf(float(theta))
    return float(mpmath.gamma(1 + t) ** 2 / mpmath.gamma(1 + 2 * t))
