"""Exact piecewise-affine functions of p with rational breakpoints."""

from __future__ import annotations

import logging
from bisect import bisect_left
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..errors import BadIndex

_LOGGER = logging.getLogger(__name__)

type Line = tuple[Fraction, Fraction]


def line_value(line: Line, p: Fraction) -> Fraction:
    slope, intercept = line
    return slope * p + intercept


def line_crossing(l1: Line, l2: Line) -> Fraction | None:
    """Abscissa where two lines meet, None when parallel."""
    if l1[0] == l2[0]:
        return None
    return (l2[1] - l1[1]) / (l1[0] - l2[0])


@dataclass(frozen=True)
class PiecewiseAffine:
    """Continuous piecewise-affine function on (0, p_max].

    segments[i] = (slope, intercept) is used between breakpoints[i-1] and
    breakpoints[i]; the last segment runs to p_max (or to infinity).
    """

    breakpoints: tuple[Fraction, ...]
    segments: tuple[Line, ...]
    p_max: Fraction | None = None

    def __post_init__(self) -> None:
        bps = tuple(Fraction(b) for b in self.breakpoints)
        segs = tuple((Fraction(s), Fraction(c)) for s, c in self.segments)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "segments", segs)
        if self.p_max is not None:
            object.__setattr__(self, "p_max", Fraction(self.p_max))
        if len(segs) != len(bps) + 1:
            raise ValueError("need exactly one more segment than breakpoints")
        if any(b <= 0 for b in bps) or any(
            b1 >= b2 for b1, b2 in zip(bps, bps[1:], strict=False)
        ):
            raise ValueError(f"breakpoints must be increasing and positive: {bps}")
        if self.p_max is not None and bps and bps[-1] > self.p_max:
            raise ValueError("breakpoint beyond p_max")
        for i, b in enumerate(bps):
            if line_value(segs[i], b) != line_value(segs[i + 1], b):
                raise ValueError(f"discontinuity at p={b}")

    @classmethod
    def affine(
        cls, slope: Fraction | int, intercept: Fraction | int, p_max: Fraction | None = None
    ) -> PiecewiseAffine:
        return cls((), ((Fraction(slope), Fraction(intercept)),), p_max)

    def _check_domain(self, p: Fraction) -> None:
        if p <= 0 or (self.p_max is not None and p > self.p_max):
            raise BadIndex(f"p={p} outside (0, {self.p_max}]")

    def segment_at(self, p: Fraction) -> Line:
        """Segment used at p (the left one at a breakpoint)."""
        return self.segments[bisect_left(self.breakpoints, Fraction(p))]

    def segment_right_of(self, p: Fraction) -> Line:
        """Segment used just to the right of p."""
        idx = bisect_left(self.breakpoints, Fraction(p))
        if idx < len(self.breakpoints) and self.breakpoints[idx] == p:
            idx += 1
        return self.segments[idx]

    def __call__(self, p: Fraction | int) -> Fraction:
        p = Fraction(p)
        self._check_domain(p)
        return line_value(self.segment_at(p), p)

    def value_at(self, p: Fraction) -> Fraction:
        """Evaluate without the domain check (p = 0 gives the limit)."""
        return line_value(self.segment_at(Fraction(p)), Fraction(p))

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(s for s, _ in self.segments)

    def restrict(self, p_max: Fraction) -> PiecewiseAffine:
        p_max = Fraction(p_max)
        keep = [b for b in self.breakpoints if b < p_max]
        return PiecewiseAffine(tuple(keep), self.segments[: len(keep) + 1], p_max)

    def shift(self, slope: Fraction | int, intercept: Fraction | int) -> PiecewiseAffine:
        """Add the affine function slope*p + intercept."""
        s, c = Fraction(slope), Fraction(intercept)
        return PiecewiseAffine(
            self.breakpoints, tuple((a + s, b + c) for a, b in self.segments), self.p_max
        )

    def vertices(self) -> list[tuple[Fraction, Fraction]]:
        """Breakpoints with values, plus the right end when bounded."""
        pts = [(b, self.value_at(b)) for b in self.breakpoints]
        if self.p_max is not None and (not pts or pts[-1][0] != self.p_max):
            pts.append((self.p_max, self.value_at(self.p_max)))
        return pts

    @classmethod
    def from_segments(
        cls, breakpoints: Sequence[Fraction], segments: Sequence[Line], p_max: Fraction | None
    ) -> PiecewiseAffine:
        """Build while merging adjacent collinear segments."""
        bps: list[Fraction] = []
        segs: list[Line] = [segments[0]]
        for b, seg in zip(breakpoints, segments[1:], strict=True):
            if seg == segs[-1]:
                continue
            bps.append(b)
            segs.append(seg)
        return cls(tuple(bps), tuple(segs), p_max)


def _common_p_max(funcs: Sequence[PiecewiseAffine]) -> Fraction | None:
    bounds = [f.p_max for f in funcs if f.p_max is not None]
    return min(bounds) if bounds else None


def _envelope(funcs: Sequence[PiecewiseAffine], lower: bool) -> PiecewiseAffine:
    p_max = _common_p_max(funcs)
    cuts = sorted(
        {b for f in funcs for b in f.breakpoints if p_max is None or b < p_max}
    )
    edges: list[Fraction | None] = [Fraction(0), *cuts, p_max]
    out_bps: list[Fraction] = []
    out_segs: list[Line] = []
    for lo, hi in zip(edges, edges[1:], strict=False):
        sample = lo + 1 if hi is None else (lo + hi) / 2
        lines = {f.segment_at(sample) for f in funcs}
        xs = {lo}
        for l1, l2 in combinations(lines, 2):
            x = line_crossing(l1, l2)
            if x is not None and x > lo and (hi is None or x < hi):
                xs.add(x)
        sub = sorted(xs)
        sub_edges: list[Fraction | None] = [*sub, hi]
        for a, b in zip(sub_edges, sub_edges[1:], strict=False):
            mid = a + 1 if b is None else (a + b) / 2
            pick = min if lower else max
            best = pick(lines, key=lambda ln, m=mid: (line_value(ln, m), ln[0]))
            if out_segs:
                out_bps.append(a)
            out_segs.append(best)
    return PiecewiseAffine.from_segments(out_bps, out_segs, p_max)


def pointwise_min(funcs: Sequence[PiecewiseAffine]) -> PiecewiseAffine:
    """Exact lower envelope by segment-intersection sweep."""
    if not funcs:
        raise ValueError("pointwise_min of no functions")
    return _envelope(funcs, lower=True)


def pointwise_max(funcs: Sequence[PiecewiseAffine]) -> PiecewiseAffine:
    """Exact upper envelope by segment-intersection sweep."""
    if not funcs:
        raise ValueError("pointwise_max of no functions")
    return _envelope(funcs, lower=False)
