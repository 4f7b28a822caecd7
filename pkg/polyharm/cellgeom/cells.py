"""Classification of (p, alpha) points and the cell tiling of the admissible strip."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any

from ..const import ALPHA_MAX, ENTANGLEMENT_P, MIN_CELL_P_MAX
from ..errors import BadIndex
from ..symcalc.gaussrat import fraction_to_str
from .curves import a_curve, beta_curve
from .piecewise import Line, PiecewiseAffine, line_crossing, line_value

_LOGGER = logging.getLogger(__name__)

type Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class CellPoint:
    """A point (p, alpha) of the parameter plane."""

    p: Fraction
    alpha: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.p <= 0:
            raise BadIndex(f"p={self.p} must be positive")


def cell_label(j_set: tuple[int, ...]) -> str:
    """Canonical cell id, e.g. J{0,1}."""
    return "J{" + ",".join(str(j) for j in sorted(j_set)) + "}"


@dataclass(frozen=True)
class CellDescriptor:
    admissible: bool
    j_set: tuple[int, ...]
    entangled: bool
    principal: bool

    @property
    def cell_id(self) -> str:
        return cell_label(self.j_set)

    def to_json(self) -> dict[str, Any]:
        return {
            "admissible": self.admissible,
            "cell_id": self.cell_id,
            "entangled": self.entangled,
            "j_set": list(self.j_set),
            "principal": self.principal,
        }


def classify(n: int, pt: CellPoint) -> CellDescriptor:
    """Admissibility, index set J(p, alpha) and region tags of a point."""
    p, alpha = pt.p, pt.alpha
    admissible = alpha > beta_curve(n)(p)
    j_set = tuple(j for j in range(n) if alpha > a_curve(n - j, n)(p))
    entangled = admissible and p < ENTANGLEMENT_P and alpha <= -1 - n * p
    principal = (
        admissible
        and p > ENTANGLEMENT_P
        and alpha <= min(-2 + (3 - n) * p, -1 + (2 - n) * p)
    )
    return CellDescriptor(admissible, j_set, entangled, principal)


@dataclass(frozen=True)
class Trapezoid:
    """Strip piece between two lines over [x0, x1]."""

    x0: Fraction
    x1: Fraction
    lower: Line
    upper: Line

    def vertices(self) -> list[Point]:
        """Counter-clockwise vertices (repeated points kept)."""
        return [
            (self.x0, line_value(self.lower, self.x0)),
            (self.x1, line_value(self.lower, self.x1)),
            (self.x1, line_value(self.upper, self.x1)),
            (self.x0, line_value(self.upper, self.x0)),
        ]

    def sample(self, s: Fraction, t: Fraction) -> CellPoint:
        """Interior point for s, t in (0, 1)."""
        p = self.x0 + Fraction(s) * (self.x1 - self.x0)
        lo, hi = line_value(self.lower, p), line_value(self.upper, p)
        return CellPoint(p, lo + Fraction(t) * (hi - lo))

    def area(self) -> Fraction:
        h0 = line_value(self.upper, self.x0) - line_value(self.lower, self.x0)
        h1 = line_value(self.upper, self.x1) - line_value(self.lower, self.x1)
        return (h0 + h1) * (self.x1 - self.x0) / 2


@dataclass(frozen=True)
class CellRecord:
    descriptor: CellDescriptor
    boundary: list[Point]
    components: list[list[Point]] = field(default_factory=list)
    pieces: tuple[Trapezoid, ...] = ()

    @property
    def cell_id(self) -> str:
        return self.descriptor.cell_id

    def to_json(self) -> dict[str, Any]:
        def pts(loop: list[Point]) -> list[list[str]]:
            return [[fraction_to_str(x), fraction_to_str(y)] for x, y in loop]

        doc = {
            "boundary": pts(self.boundary),
            "cell_id": self.cell_id,
            "entangled": self.descriptor.entangled,
            "j_set": list(self.descriptor.j_set),
            "principal": self.descriptor.principal,
        }
        if self.components:
            doc["components"] = [pts(c) for c in self.components]
        return doc


def _strip_curves(n: int, p_max: Fraction) -> list[PiecewiseAffine]:
    curves = [a_curve(j, n, p_max) for j in range(1, n + 1)]
    curves.append(beta_curve(n, p_max))
    curves.append(PiecewiseAffine.affine(0, ALPHA_MAX, p_max))
    return curves


def _elementary_cuts(curves: list[PiecewiseAffine], p_max: Fraction) -> list[Fraction]:
    cuts = {Fraction(0), p_max}
    cuts |= {b for c in curves for b in c.breakpoints if b < p_max}
    base = sorted(cuts)
    for lo, hi in zip(base, base[1:], strict=False):
        mid = (lo + hi) / 2
        lines = {c.segment_at(mid) for c in curves}
        for l1, l2 in combinations(lines, 2):
            x = line_crossing(l1, l2)
            if x is not None and lo < x < hi:
                cuts.add(x)
    return sorted(cuts)


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _loop_area(loop: list[Point]) -> Fraction:
    return sum(
        (x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(loop, loop[1:] + loop[:1], strict=True)),
        Fraction(0),
    ) / 2


def _simplify(loop: list[Point]) -> list[Point]:
    changed = True
    while changed and len(loop) > 3:
        changed = False
        for i in range(len(loop)):
            prev, cur, nxt = loop[i - 1], loop[i], loop[(i + 1) % len(loop)]
            if cur == prev or _cross(prev, cur, nxt) == 0:
                del loop[i]
                changed = True
                break
    return loop


def _boundary_loops(pieces: list[Trapezoid], levels: dict[Fraction, list[Fraction]]) -> list[list[Point]]:
    """Union outline of trapezoids sharing exact edges."""
    edges: dict[tuple[Point, Point], int] = defaultdict(int)
    for piece in pieces:
        verts = piece.vertices()
        for a, b in zip(verts, verts[1:] + verts[:1], strict=True):
            if a == b:
                continue
            if a[0] == b[0]:
                lo, hi = sorted((a[1], b[1]))
                cuts = [lo, *(y for y in levels[a[0]] if lo < y < hi), hi]
                if a[1] > b[1]:
                    cuts.reverse()
                for y0, y1 in zip(cuts, cuts[1:], strict=False):
                    edges[((a[0], y0), (a[0], y1))] += 1
            else:
                edges[(a, b)] += 1
    for (a, b), count in list(edges.items()):
        back = edges.get((b, a), 0)
        if count and back:
            cancel = min(count, back)
            edges[(a, b)] -= cancel
            edges[(b, a)] -= cancel
    outgoing: dict[Point, list[Point]] = defaultdict(list)
    for (a, b), count in sorted(edges.items()):
        outgoing[a].extend([b] * count)
    loops = []
    while any(outgoing.values()):
        start = min(a for a, ends in outgoing.items() if ends)
        loop = [start]
        cur = outgoing[start].pop(0)
        while cur != start:
            loop.append(cur)
            cur = outgoing[cur].pop(0)
        loops.append(_simplify(loop))
    return loops


def enumerate_cells(n: int, p_max: Fraction) -> list[CellRecord]:
    """Tile (0, p_max] x (beta(N,p), 0] into level sets of J(p, alpha)."""
    p_max = Fraction(p_max)
    if n < 1:
        raise BadIndex(f"order N={n} < 1")
    if p_max < MIN_CELL_P_MAX:
        raise BadIndex(f"p_max={p_max} below {MIN_CELL_P_MAX}")
    curves = _strip_curves(n, p_max)
    cuts = _elementary_cuts(curves, p_max)
    levels = {x: sorted({c.value_at(x) for c in curves}) for x in cuts}
    by_cell: dict[tuple[int, ...], list[Trapezoid]] = defaultdict(list)
    for x0, x1 in zip(cuts, cuts[1:], strict=False):
        mid = (x0 + x1) / 2
        lines = sorted(
            {c.segment_at(mid) for c in curves},
            key=lambda ln, m=mid: line_value(ln, m),
        )
        for lower, upper in zip(lines, lines[1:], strict=False):
            if line_value(lower, mid) == line_value(upper, mid):
                continue
            piece = Trapezoid(x0, x1, lower, upper)
            desc = classify(n, piece.sample(Fraction(1, 2), Fraction(1, 2)))
            by_cell[desc.j_set].append(piece)
    records = []
    for j_set in sorted(by_cell, key=lambda js: (len(js), js)):
        pieces = by_cell[j_set]
        rep = max(pieces, key=lambda t: t.area())
        loops = sorted(_boundary_loops(pieces, levels), key=lambda lp: -abs(_loop_area(lp)))
        records.append(
            CellRecord(
                descriptor=classify(n, rep.sample(Fraction(1, 2), Fraction(1, 2))),
                boundary=loops[0],
                components=loops[1:],
                pieces=tuple(pieces),
            )
        )
    _LOGGER.debug(f"enumerate_cells: N={n} p_max={p_max} cells={[r.cell_id for r in records]}")
    return records
