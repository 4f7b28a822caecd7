"""JSON, CSV and SVG output for curves, cells, verdicts and scans."""

from __future__ import annotations

import csv
import io
import json
import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Any

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .cellgeom import CellRecord, PiecewiseAffine, a_curve, b_curve, beta_curve  # noqa: E402
from .kernelnum import AnnulusScan  # noqa: E402
from .symcalc.gaussrat import fraction_to_str  # noqa: E402

_LOGGER = logging.getLogger(__name__)

SVG_HASH_SALT = "polyharm"
CURVE_CSV_HEADER = ("curve", "p_num", "p_den", "alpha_num", "alpha_den", "slope_num", "slope_den")
SCAN_CSV_HEADER = ("k", "r", "integral", "log_one_minus_r", "log_integral")


def dumps_json(doc: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def named_curves(n: int, p_max: Fraction) -> list[tuple[str, PiecewiseAffine]]:
    """beta(N, .) followed by every b_{j,N} and a_{j,N}, restricted to (0, p_max]."""
    curves = [("beta", beta_curve(n, p_max))]
    curves += [(f"b_{j}", b_curve(j, n, p_max)) for j in range(n + 1)]
    curves += [(f"a_{j}", a_curve(j, n, p_max)) for j in range(1, n + 1)]
    return curves


def _curve_rows(name: str, curve: PiecewiseAffine) -> list[tuple[Any, ...]]:
    points = [(Fraction(0), curve.value_at(0)), *curve.vertices()]
    rows = []
    for p, alpha in points:
        slope = curve.segment_right_of(p)[0] if p != curve.p_max else curve.segments[-1][0]
        rows.append(
            (
                name,
                p.numerator,
                p.denominator,
                alpha.numerator,
                alpha.denominator,
                slope.numerator,
                slope.denominator,
            )
        )
    return rows


def curve_document(n: int, p_max: Fraction) -> dict[str, Any]:
    """Exact breakpoints and segments of all curves of order N."""

    def one(curve: PiecewiseAffine) -> dict[str, Any]:
        return {
            "breakpoints": [fraction_to_str(b) for b in curve.breakpoints],
            "segments": [
                {"intercept": fraction_to_str(c), "slope": fraction_to_str(s)}
                for s, c in curve.segments
            ],
            "values": [fraction_to_str(curve.value_at(b)) for b in curve.breakpoints],
        }

    return {
        "N": n,
        "curves": {name: one(curve) for name, curve in named_curves(n, p_max)},
        "p_max": fraction_to_str(p_max),
    }


def _write_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def curve_csv(n: int, p_max: Fraction) -> str:
    """One row per curve vertex with the slope of the segment to its right."""
    rows = [row for name, curve in named_curves(n, p_max) for row in _curve_rows(name, curve)]
    return _write_csv(CURVE_CSV_HEADER, rows)


def cells_document(n: int, p_max: Fraction, cells: Sequence[CellRecord]) -> dict[str, Any]:
    return {
        "N": n,
        "cells": [c.to_json() for c in cells],
        "p_max": fraction_to_str(p_max),
    }


def scan_csv(scan: AnnulusScan) -> str:
    """Scan rows plus comment lines with the fitted and predicted exponents."""
    rows = [[k, *(repr(float(x)) for x in rest)] for k, *rest in scan.rows]
    text = _write_csv(SCAN_CSV_HEADER, rows)
    return (
        text
        + f"# fitted_slope,{scan.fitted_slope!r}\n"
        + f"# predicted_exponent,{scan.predicted!r}\n"
        + f"# log_factor,{str(scan.log_factor).lower()}\n"
    )


def render_svg(n: int, p_max: Fraction, cells: Sequence[CellRecord] = ()) -> str:
    """Static figure: sawtooth thick, cell boundaries thin, cell labels."""
    matplotlib.rcParams["svg.hashsalt"] = SVG_HASH_SALT
    fig, ax = plt.subplots(figsize=(7, 4.5))
    try:
        for name, curve in named_curves(n, p_max):
            if name == "beta":
                continue
            pts = [(Fraction(0), curve.value_at(0)), *curve.vertices()]
            ax.plot(
                [float(p) for p, _ in pts],
                [float(a) for _, a in pts],
                color="0.6",
                linewidth=0.6,
                linestyle="--" if name.startswith("b_") else "-",
            )
        beta = beta_curve(n, p_max)
        pts = [(Fraction(0), beta.value_at(0)), *beta.vertices()]
        ax.plot([float(p) for p, _ in pts], [float(a) for _, a in pts], color="k", linewidth=2.2)
        for cell in cells:
            loop = [*cell.boundary, cell.boundary[0]]
            ax.plot([float(x) for x, _ in loop], [float(y) for _, y in loop], color="C0", linewidth=0.8)
            rep = max(cell.pieces, key=lambda t: t.area())
            at = rep.sample(Fraction(1, 2), Fraction(1, 2))
            ax.annotate(cell.cell_id, (float(at.p), float(at.alpha)), fontsize=7, ha="center")
        ax.set_xlim(0, float(p_max))
        ax.set_xlabel("p")
        ax.set_ylabel("alpha")
        ax.set_title(f"beta({n}, p)")
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
    _LOGGER.debug(f"render_svg: N={n} p_max={p_max} cells={len(cells)}")
    return buffer.getvalue()
