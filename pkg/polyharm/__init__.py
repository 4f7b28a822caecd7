"""Polyharmonic integrability toolkit.

Exact calculus on polyharmonic polynomials of the unit disk, the exact
geometry of the (p, alpha) parameter plane and numerical integrability
checks for the polyharmonic kernels.
"""

from .const import VERSION

__version__ = VERSION
