"""Exact geometry of the (p, alpha) parameter plane."""

from .cells import (
    CellDescriptor,
    CellPoint,
    CellRecord,
    Trapezoid,
    cell_label,
    classify,
    enumerate_cells,
)
from .curves import (
    a_curve,
    b_curve,
    beta_curve,
    extremal_indices,
    local_critical_alpha,
    polyanalytic_beta,
)
from .piecewise import PiecewiseAffine, pointwise_max, pointwise_min

__all__ = [
    "CellDescriptor",
    "CellPoint",
    "CellRecord",
    "PiecewiseAffine",
    "Trapezoid",
    "a_curve",
    "b_curve",
    "beta_curve",
    "cell_label",
    "classify",
    "enumerate_cells",
    "extremal_indices",
    "local_critical_alpha",
    "pointwise_max",
    "pointwise_min",
    "polyanalytic_beta",
]
