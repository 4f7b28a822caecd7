"""Exact symbolic calculus for polyharmonic functions on the disk."""

from .almansi import (
    AlmansiForm,
    AltAlmansiForm,
    ExtensionPoly,
    almansi_decompose,
    almansi_recompose,
    almansi_to_alternative,
    alternative_recompose,
    alternative_to_almansi,
    divide_by_disk_weight,
    extension,
    extension_evaluate,
    extension_poisson,
    extension_restrict,
)
from .bilaurent import BiLaurent
from .cellular import (
    CellularForm,
    cellular_decompose,
    cellular_project,
    cellular_recompose,
    entangled_v1_from_v0,
    uniform_potential_polynomial,
)
from .gaussrat import GaussRational, fraction_to_str, parse_fraction
from .kernels import kernel_laurent_at_one
from .lagrange import LagrangeFrame, LagrangePolys, lagrange_polys, lagrange_reconstruct
from .operators import (
    apply_L,
    dz,
    dzbar,
    euler,
    is_harmonic,
    is_n_analytic,
    is_n_harmonic,
    laplacian,
    laplacian_power,
    mul_disk_weight,
)

__all__ = [
    "AlmansiForm",
    "AltAlmansiForm",
    "BiLaurent",
    "CellularForm",
    "ExtensionPoly",
    "GaussRational",
    "LagrangeFrame",
    "LagrangePolys",
    "almansi_decompose",
    "almansi_recompose",
    "almansi_to_alternative",
    "alternative_recompose",
    "alternative_to_almansi",
    "apply_L",
    "cellular_decompose",
    "cellular_project",
    "cellular_recompose",
    "divide_by_disk_weight",
    "dz",
    "dzbar",
    "entangled_v1_from_v0",
    "euler",
    "extension",
    "extension_evaluate",
    "extension_poisson",
    "extension_restrict",
    "fraction_to_str",
    "is_harmonic",
    "is_n_analytic",
    "is_n_harmonic",
    "kernel_laurent_at_one",
    "lagrange_polys",
    "lagrange_reconstruct",
    "laplacian",
    "laplacian_power",
    "mul_disk_weight",
    "parse_fraction",
    "uniform_potential_polynomial",
]
