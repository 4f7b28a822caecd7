"""Seeded property suites over the exact and numerical modules.

Each property runs a number of randomized trials and stops at the first
counterexample, which is serialized into the report.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .cellgeom import (
    a_curve,
    b_curve,
    beta_curve,
    classify,
    enumerate_cells,
    local_critical_alpha,
    polyanalytic_beta,
)
from .cellgeom.cells import CellPoint
from .config import RunConfig
from .errors import InvalidConfig, PolyharmError
from .kernelnum import (
    I_divergence_reason,
    I_series,
    Divergent,
    KernelSpec,
    circle_average,
    kernel_eval,
    kernel_norm,
    kernel_truncated_trace,
)
from .randgen import (
    make_rng,
    random_almansi,
    random_bilaurent,
    random_fraction,
    random_harmonic,
    random_n_harmonic,
    random_p,
    random_point,
)
from .symcalc import (
    BiLaurent,
    CellularForm,
    almansi_decompose,
    almansi_recompose,
    almansi_to_alternative,
    alternative_recompose,
    alternative_to_almansi,
    apply_L,
    cellular_decompose,
    cellular_recompose,
    dz,
    dzbar,
    entangled_v1_from_v0,
    extension,
    extension_restrict,
    is_harmonic,
    is_n_harmonic,
    kernel_laurent_at_one,
    laplacian,
    laplacian_power,
    mul_disk_weight,
    uniform_potential_polynomial,
)

_LOGGER = logging.getLogger(__name__)

SUITES = ("identities", "decomposition", "kernels", "curves")
KERNEL_P_GRID = tuple(Fraction(x) for x in ("1/8", "1/4", "1/3", "1/2", "1", "2"))
KERNEL_OFFSET = Fraction(1, 10)
KERNEL_MAX_N = 4
NUMERIC_SAMPLES = 3

type Counterexample = dict[str, Any] | None
type Trial = Callable[[np.random.Generator], Counterexample]


@dataclass
class PropertyResult:
    name: str
    trials: int
    passed: bool
    counterexample: Counterexample = None

    def to_json(self) -> dict[str, Any]:
        return {
            "counterexample": self.counterexample,
            "name": self.name,
            "passed": self.passed,
            "trials": self.trials,
        }


@dataclass
class SuiteReport:
    suite: str
    seed: int
    trials: int
    properties: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def to_json(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "properties": [p.to_json() for p in self.properties],
            "seed": self.seed,
            "suite": self.suite,
            "trials": self.trials,
        }


def _run_property(name: str, trials: int, rng: np.random.Generator, trial: Trial) -> PropertyResult:
    for i in range(trials):
        try:
            found = trial(rng)
        except PolyharmError as err:
            found = {"error": type(err).__name__, "message": str(err)}
        if found is not None:
            _LOGGER.debug(f"{name} (WARNING): counterexample at trial {i}: {found}")
            return PropertyResult(name, i + 1, False, found)
    return PropertyResult(name, trials, True)


def _poly(u: BiLaurent) -> dict[str, Any]:
    return u.to_json()


# identities


def _random_theta(rng: np.random.Generator) -> Fraction:
    return random_fraction(rng, 12)


def _derivatives_commute(rng: np.random.Generator) -> Counterexample:
    u = random_bilaurent(rng, laurent=True)
    if dz(dzbar(u)) != dzbar(dz(u)) or laplacian(u) != dz(dzbar(u)).scale(4):
        return {"u": _poly(u)}
    return None


def _laplacian_intertwines_L(rng: np.random.Generator) -> Counterexample:
    u, theta = random_bilaurent(rng, laurent=True), _random_theta(rng)
    if laplacian(apply_L(u, theta)) != apply_L(laplacian(u), theta - 1):
        return {"theta": str(theta), "u": _poly(u)}
    return None


def _L_after_weight(rng: np.random.Generator) -> Counterexample:
    u, theta = random_bilaurent(rng, laurent=True), _random_theta(rng)
    lhs = apply_L(mul_disk_weight(u), theta)
    rhs = mul_disk_weight(apply_L(u, theta - 1)) - u.scale(8 * theta)
    if lhs != rhs:
        return {"theta": str(theta), "u": _poly(u)}
    return None


def _L_after_weight_power(rng: np.random.Generator) -> Counterexample:
    u, theta = random_bilaurent(rng, laurent=True), _random_theta(rng)
    j = int(rng.integers(1, 7))
    lhs = apply_L(mul_disk_weight(u, j), theta)
    rhs = mul_disk_weight(apply_L(u, theta - j), j) + mul_disk_weight(u, j - 1).scale(
        4 * j * (j - 1 - 2 * theta)
    )
    if lhs != rhs:
        return {"j": j, "theta": str(theta), "u": _poly(u)}
    return None


def _L_chain_factorization(rng: np.random.Generator) -> Counterexample:
    u = random_bilaurent(rng, max_terms=6, laurent=True)
    n = int(rng.integers(1, 5))
    lhs = u
    for theta in reversed(range(n)):
        lhs = apply_L(lhs, theta)
    if lhs != mul_disk_weight(laplacian_power(u, n), n):
        return {"n": n, "u": _poly(u)}
    return None


def _annihilated_is_polyharmonic(rng: np.random.Generator) -> Counterexample:
    theta = int(rng.integers(0, 7))
    w = uniform_potential_polynomial(theta)
    if not apply_L(w, theta).is_zero() or not is_n_harmonic(w, theta + 1):
        return {"theta": theta}
    return None


IDENTITY_PROPERTIES: dict[str, Trial] = {
    "derivatives_commute": _derivatives_commute,
    "laplacian_intertwines_L": _laplacian_intertwines_L,
    "L_after_weight": _L_after_weight,
    "L_after_weight_power": _L_after_weight_power,
    "L_chain_factorization": _L_chain_factorization,
    "annihilated_is_polyharmonic": _annihilated_is_polyharmonic,
}


# decomposition


def _random_order(rng: np.random.Generator) -> int:
    return int(rng.integers(1, 6))


def _almansi_round_trip(rng: np.random.Generator) -> Counterexample:
    n = _random_order(rng)
    f = random_almansi(rng, n)
    u = almansi_recompose(f)
    if almansi_decompose(u, n) != f or almansi_recompose(almansi_decompose(u, n)) != u:
        return {"almansi": f.to_json()}
    return None


def _alternative_round_trip(rng: np.random.Generator) -> Counterexample:
    f = random_almansi(rng, _random_order(rng))
    g = almansi_to_alternative(f)
    if alternative_to_almansi(g) != f or alternative_recompose(g) != almansi_recompose(f):
        return {"almansi": f.to_json()}
    return None


def _extension_restricts(rng: np.random.Generator) -> Counterexample:
    f = random_almansi(rng, _random_order(rng))
    e = extension(f)
    if extension_restrict(e) != almansi_recompose(f) or not all(map(is_harmonic, e.coeffs)):
        return {"almansi": f.to_json()}
    return None


def _cellular_postconditions(rng: np.random.Generator) -> Counterexample:
    n = _random_order(rng)
    u = random_n_harmonic(rng, n)
    form = cellular_decompose(u, n)
    if cellular_recompose(form) != u or not form.is_valid():
        return {"n": n, "u": _poly(u)}
    for j, term in enumerate(form.terms()):
        again = cellular_decompose(term, n).terms()
        if any(t != (term if i == j else BiLaurent.zero()) for i, t in enumerate(again)):
            return {"n": n, "projection": j, "u": _poly(u)}
    return None


def _cellular_uniqueness(rng: np.random.Generator) -> Counterexample:
    n = _random_order(rng)
    form = cellular_decompose(random_n_harmonic(rng, n), n)
    scales = [random_fraction(rng, 9) for _ in range(n)]
    scaled = CellularForm(n, tuple(w.scale(c) for w, c in zip(form.pieces, scales, strict=True)))
    if cellular_decompose(cellular_recompose(scaled), n) != scaled:
        return {"form": scaled.to_json()}
    return None


def _entanglement_relation(rng: np.random.Generator) -> Counterexample:
    v0 = random_harmonic(rng)
    v1 = entangled_v1_from_v0(v0)
    if not apply_L(v0 + mul_disk_weight(v1), 1).is_zero():
        return {"v0": _poly(v0)}
    return None


def _kernel_expansions_polyharmonic(rng: np.random.Generator) -> Counterexample:
    for n in range(1, KERNEL_MAX_N + 1):
        for j in range(n + 1):
            if not laplacian_power(kernel_laurent_at_one(j, n), n).is_zero():
                return {"N": n, "j": j}
    return None


DECOMPOSITION_PROPERTIES: dict[str, Trial] = {
    "almansi_round_trip": _almansi_round_trip,
    "alternative_round_trip": _alternative_round_trip,
    "extension_restricts": _extension_restricts,
    "cellular_postconditions": _cellular_postconditions,
    "cellular_uniqueness": _cellular_uniqueness,
    "entanglement_relation": _entanglement_relation,
}
FIXED_DECOMPOSITION_PROPERTIES: dict[str, Trial] = {
    "kernel_expansions_polyharmonic": _kernel_expansions_polyharmonic,
}


# kernels


def _kernel_grid() -> list[tuple[KernelSpec, Fraction, Fraction, bool]]:
    grid = []
    for n in range(1, KERNEL_MAX_N + 1):
        for j in range(n + 1):
            k = KernelSpec(j, n)
            for p in KERNEL_P_GRID:
                edge = b_curve(j, n)(p)
                grid.append((k, p, edge + KERNEL_OFFSET, True))
                grid.append((k, p, edge - KERNEL_OFFSET, False))
    return grid


def _series_verdicts_match(rng: np.random.Generator) -> Counterexample:
    for k, p, alpha, finite in _kernel_grid():
        a, b = k.exponents(p, alpha)
        if (I_divergence_reason(a, b) is None) != finite:
            return {"N": k.N, "alpha": str(alpha), "j": k.j, "p": str(p)}
    return None


def _series_straddles_boundary(rng: np.random.Generator) -> Counterexample:
    b = Fraction(int(rng.integers(0, 17)), int(rng.integers(1, 5)))
    edge = max(Fraction(-1), 2 * (b - 1)) if b > 0 else Fraction(-1)
    a = edge + random_fraction(rng, 20)
    expected = a > edge
    try:
        got = not isinstance(I_series(a, b, 1e-6), Divergent)
    except PolyharmError:
        got = True
    if got != expected:
        return {"a": str(a), "b": str(b)}
    return None


def _kernel_relation(rng: np.random.Generator) -> Counterexample:
    n = int(rng.integers(1, KERNEL_MAX_N + 1))
    j = int(rng.integers(1, n + 1))
    z = random_point(rng, 0.99)
    lhs = kernel_eval(KernelSpec(j, n), z)
    rhs = (1 - abs(z) ** 2) ** (n - j) * kernel_eval(KernelSpec(j, j), z)
    if not math.isclose(lhs, rhs, rel_tol=1e-12):
        return {"N": n, "j": j, "z": [z.real, z.imag]}
    return None


def _circle_average_monotone(rng: np.random.Generator) -> Counterexample:
    b = float(rng.integers(0, 13)) / 4
    radii = np.linspace(0.0, 0.9, 10)
    values = [circle_average(b, float(r)).value for r in radii]
    if any(x > y for x, y in zip(values, values[1:], strict=False)):
        return {"b": b}
    return None


def _norms_cross_check(rng: np.random.Generator) -> Counterexample:
    finite = [g for g in _kernel_grid() if g[3] and g[0].N <= 3]
    k, p, alpha, _ = finite[int(rng.integers(len(finite)))]
    verdict = kernel_norm(k, p, alpha)
    if not verdict.finite or not verdict.agrees:
        return {"N": k.N, "alpha": str(alpha), "j": k.j, "p": str(p), "verdict": verdict.to_json()}
    return None


def _divergence_witnessed(rng: np.random.Generator) -> Counterexample:
    divergent = [g for g in _kernel_grid() if not g[3] and g[0].N <= 3]
    k, p, alpha, _ = divergent[int(rng.integers(len(divergent)))]
    trace = kernel_truncated_trace(k, p, alpha)
    values = [v for _, v in trace.rows]
    if any(x >= y for x, y in zip(values, values[1:], strict=False)) or not trace.witnessed:
        return {"N": k.N, "alpha": str(alpha), "j": k.j, "p": str(p)}
    return None


KERNEL_PROPERTIES: dict[str, Trial] = {
    "series_straddles_boundary": _series_straddles_boundary,
    "kernel_relation": _kernel_relation,
    "circle_average_monotone": _circle_average_monotone,
}
FIXED_KERNEL_PROPERTIES: dict[str, Trial] = {
    "series_verdicts_match": _series_verdicts_match,
}
NUMERIC_KERNEL_PROPERTIES: dict[str, Trial] = {
    "norms_cross_check": _norms_cross_check,
    "divergence_witnessed": _divergence_witnessed,
}


# curves


def _beta_one_closed_form(rng: np.random.Generator) -> Counterexample:
    p = random_p(rng)
    if p <= Fraction(1, 2):
        expected = -1 - p
    elif p <= 1:
        expected = p - 2
    else:
        expected = Fraction(-1)
    if beta_curve(1)(p) != expected:
        return {"p": str(p)}
    return None


def _curve_shift_in_order(rng: np.random.Generator) -> Counterexample:
    n, p = int(rng.integers(1, 5)), random_p(rng)
    for j in range(n + 1):
        if b_curve(j, n + 1)(p) + p != b_curve(j, n)(p):
            return {"N": n, "curve": f"b_{j}", "p": str(p)}
    for j in range(1, n + 1):
        if a_curve(j, n + 1)(p) + p != a_curve(j, n)(p):
            return {"N": n, "curve": f"a_{j}", "p": str(p)}
    return None


def _beta_is_attained_minimum(rng: np.random.Generator) -> Counterexample:
    n, p = int(rng.integers(1, 6)), random_p(rng)
    values = [b_curve(j, n)(p) for j in range(n + 1)]
    beta = beta_curve(n)(p)
    if beta != min(values) or min(
        a_curve(j, n)(p) for j in range(1, n + 1)
    ) != beta:
        return {"N": n, "p": str(p)}
    if polyanalytic_beta(n, p) < beta:
        return {"N": n, "p": str(p), "check": "polyanalytic"}
    if p <= Fraction(1, 2 * n) and local_critical_alpha(n, p) != beta:
        return {"N": n, "p": str(p), "check": "local"}
    return None


def _classify_consistent(rng: np.random.Generator) -> Counterexample:
    n, p = int(rng.integers(1, 6)), random_p(rng)
    alpha = -random_p(rng, p_max=5)
    desc = classify(n, CellPoint(p, alpha))
    if bool(desc.j_set) != desc.admissible or (desc.entangled and not desc.admissible):
        return {"N": n, "alpha": str(alpha), "p": str(p)}
    if desc.principal and (desc.entangled or not desc.admissible):
        return {"N": n, "alpha": str(alpha), "p": str(p)}
    return None


def _beta_structure(rng: np.random.Generator) -> Counterexample:
    beta2 = beta_curve(2)
    if beta2.breakpoints != tuple(Fraction(x) for x in ("1/4", "1/3", "1/2", "1")):
        return {"N": 2, "breakpoints": [str(b) for b in beta2.breakpoints]}
    if [beta2(b) for b in beta2.breakpoints] != [Fraction(x) for x in ("-7/4", "-5/3", "-2", "-2")]:
        return {"N": 2, "check": "values"}
    if beta2.slopes != (-3, 1, -2, 0, -1):
        return {"N": 2, "slopes": [str(s) for s in beta2.slopes]}
    if beta_curve(3).breakpoints[:2] != (Fraction(1, 6), Fraction(1, 5)):
        return {"N": 3, "breakpoints": [str(b) for b in beta_curve(3).breakpoints]}
    return None


def _cells_are_level_sets(rng: np.random.Generator) -> Counterexample:
    for n in (1, 2, 3):
        for cell in enumerate_cells(n, Fraction(3)):
            for piece in cell.pieces:
                s = Fraction(int(rng.integers(1, 100)), 100)
                t = Fraction(int(rng.integers(1, 100)), 100)
                pt = piece.sample(s, t)
                if classify(n, pt).j_set != cell.descriptor.j_set:
                    return {"N": n, "alpha": str(pt.alpha), "cell": cell.cell_id, "p": str(pt.p)}
    return None


CURVE_PROPERTIES: dict[str, Trial] = {
    "beta_one_closed_form": _beta_one_closed_form,
    "curve_shift_in_order": _curve_shift_in_order,
    "beta_is_attained_minimum": _beta_is_attained_minimum,
    "classify_consistent": _classify_consistent,
}
FIXED_CURVE_PROPERTIES: dict[str, Trial] = {
    "beta_structure": _beta_structure,
    "cells_are_level_sets": _cells_are_level_sets,
}

SUITE_TABLES: dict[str, tuple[dict[str, Trial], dict[str, Trial], dict[str, Trial]]] = {
    "identities": (IDENTITY_PROPERTIES, {}, {}),
    "decomposition": (DECOMPOSITION_PROPERTIES, FIXED_DECOMPOSITION_PROPERTIES, {}),
    "kernels": (KERNEL_PROPERTIES, FIXED_KERNEL_PROPERTIES, NUMERIC_KERNEL_PROPERTIES),
    "curves": (CURVE_PROPERTIES, FIXED_CURVE_PROPERTIES, {}),
}


class VerifyRunner:
    """Runs the property suites for one configuration."""

    def __init__(self, config: RunConfig) -> None:
        """Initialize runner."""
        self.config = config
        _LOGGER.debug(f"VerifyRunner: seed={config.seed} trials={config.trials}")

    def run(self, suite: str) -> SuiteReport:
        """Run one suite; properties draw from a generator seeded per suite."""
        if suite not in SUITE_TABLES:
            raise InvalidConfig(f"unknown suite {suite!r}")
        _LOGGER.debug(f"VerifyRunner: suite {suite} started")
        randomized, fixed, numeric = SUITE_TABLES[suite]
        rng = make_rng(self.config.seed)
        report = SuiteReport(suite, self.config.seed, self.config.trials)
        for name, trial in randomized.items():
            report.properties.append(_run_property(name, self.config.trials, rng, trial))
        for name, trial in fixed.items():
            report.properties.append(_run_property(name, 1, rng, trial))
        samples = min(self.config.trials, NUMERIC_SAMPLES)
        for name, trial in numeric.items():
            report.properties.append(_run_property(name, samples, rng, trial))
        _LOGGER.debug(f"VerifyRunner: suite {suite} passed={report.passed}")
        return report
