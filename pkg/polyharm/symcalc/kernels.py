"""Laurent expansions of the extremal kernels at the boundary point 1."""

import logging

from ..errors import BadIndex
from .bilaurent import BiLaurent

_LOGGER = logging.getLogger(__name__)


def kernel_laurent_at_one(j: int, n: int) -> BiLaurent:
    """Expand U_{j,N}(1 - zeta) in zeta, conj(zeta).

    With z = 1 - zeta, 1 - |z|^2 = zeta + conj(zeta) - |zeta|^2 and
    |1 - z|^2 = |zeta|^2, so the kernel becomes
    (zeta + conj(zeta) - |zeta|^2)^(N+j-1) * |zeta|^(-2j).
    """
    if n < 1 or not 0 <= j <= n:
        raise BadIndex(f"kernel index j={j} outside [0, {n}]")
    base = BiLaurent({(1, 0): 1, (0, 1): 1, (1, 1): -1})
    expansion = base ** (n + j - 1) * BiLaurent.monomial(-j, -j)
    _LOGGER.debug(f"kernel_laurent_at_one: j={j} N={n} terms={len(expansion)}")
    return expansion
