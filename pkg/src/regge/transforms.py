"""
Regge Transforms Module
Compact cyclic forms of the Regge transformations, applicability per parity
and the forms they leave invariant
"""
import logging
from typing import FrozenSet, Optional, Tuple, Union

from ..errors import DomainError
from ..evaluation.superspins import Parity, parity_of_doubled
from ..spins.models import Doubled, Mode, SixJSymbol, triangle_sums
from ..validation.symbol_validator import require_valid
from .matrices import KAPPAS, ReggeRejection

logger = logging.getLogger(__name__)

# (l, m, n) cyclic on 1..3, zero-based
_CYCLES = {1: (0, 1, 2), 2: (1, 2, 0), 3: (2, 0, 1)}


def regge_doubled(kappa: int, doubled: Doubled) -> Optional[Doubled]:
    """Image of a doubled tuple, or None when a needed quadrangle is half-integer

    A spin q/2 - J becomes Q/2 - X in doubled units, so every Q used must be even.
    """
    X, Y = doubled[:3], doubled[3:]
    _, Q = triangle_sums(doubled)

    if kappa in _CYCLES:
        l, m, n = _CYCLES[kappa]
        if Q[l] % 2:
            return None
        h = Q[l] // 2
        return (X[l], h - X[m], h - X[n], Y[l], h - Y[m], h - Y[n])

    if any(x % 2 for x in Q):
        return None
    h1, h2, h3 = (x // 2 for x in Q)
    if kappa == 4:
        return (h1 - Y[2], h2 - Y[0], h3 - Y[1], h1 - X[2], h2 - X[0], h3 - X[1])
    if kappa == 5:
        return (h1 - Y[1], h2 - Y[2], h3 - Y[0], h1 - X[1], h2 - X[2], h3 - X[0])
    raise DomainError(f"Regge index must be in 1..5, got {kappa}")


def apply_regge(kappa: int, symbol: SixJSymbol) -> Union[SixJSymbol, ReggeRejection]:
    """Regge image of a super-valid symbol"""
    if kappa not in KAPPAS:
        raise DomainError(f"Regge index must be in 1..5, got {kappa}")
    require_valid(symbol, Mode.SUPER)

    image = regge_doubled(kappa, symbol.doubled)
    if image is None:
        logger.debug(f"R{kappa} rejected for {symbol}: half-integer quadrangle")
        return ReggeRejection(kappa, symbol, "half-integer quadrangle gives quarter-integer spins")
    return SixJSymbol.from_doubled(image)


def applicable_kappas(doubled: Doubled, mode: Mode) -> Tuple[int, ...]:
    if mode is Mode.STANDARD:
        return KAPPAS
    p, q = triangle_sums(doubled)
    if parity_of_doubled(p) is Parity.BETA:
        return tuple(k for k in (1, 2, 3) if q[k - 1] % 2 == 0)
    return KAPPAS


def applicable_set(symbol: SixJSymbol, mode: Mode) -> FrozenSet[int]:
    """Transformations that map the symbol to a valid symbol of equal value"""
    return frozenset(applicable_kappas(symbol.doubled, mode))


def bilinear_form(symbol: SixJSymbol) -> int:
    """4 * sum(J_k j_k)"""
    return sum(x * y for x, y in zip(symbol.doubled[:3], symbol.doubled[3:]))


def linear_form(symbol: SixJSymbol) -> int:
    """2 * sum(J_k + j_k), equal to the sum of the quadrangles"""
    return sum(symbol.doubled)


def alternative_forms(symbol: SixJSymbol, l: int) -> Tuple[Tuple[int, int, int, int], ...]:
    """Four chains of equal expressions for cyclic (l, m, n), all scaled by 4"""
    if l not in _CYCLES:
        raise DomainError(f"Index l must be in 1..3, got {l}")
    a, b, c = _CYCLES[l]
    X, Y = symbol.doubled[:3], symbol.doubled[3:]
    P, Q = triangle_sums(symbol.doubled)
    Xl, Xm, Yl, Ym = X[a], X[b], Y[a], Y[b]
    Pl, Pm, Pn, P4 = P[a], P[b], P[c], P[3]
    Ql, Qm = Q[a], Q[b]

    return (
        (Xl + Xm + Yl - Ym, 2 * Xl + (Pm - Pl), 2 * Yl + (P4 - Pn), 2 * Xm + (Qm - Ql)),
        (Yl + Ym + Xl - Xm, 2 * Yl + (Pl - Pm), 2 * Xl - (P4 - Pn), 2 * Ym + (Qm - Ql)),
        (Xm + Xl + Ym - Yl, 2 * Xm + (Pl - Pm), 2 * Ym + (P4 - Pn), 2 * Xl + (Ql - Qm)),
        (Ym + Yl + Xm - Xl, 2 * Ym + (Pm - Pl), 2 * Xm - (P4 - Pn), 2 * Yl + (Ql - Qm)),
    )
