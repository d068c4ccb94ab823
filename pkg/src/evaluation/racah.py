"""
Racah Evaluation Module
Exact standard 6-j symbols from the single z-sum over triangles and quadrangles
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Sequence, Tuple

from ..arithmetic.primes import factorial_exponent_sum
from ..arithmetic.rotenberg import RotenbergLine, canonical_line
from ..arithmetic.values import SqrtRationalValue
from ..errors import ConsistencyError
from ..spins.models import Mode, SixJSymbol, triangle_sums
from ..validation.symbol_validator import require_valid

logger = logging.getLogger(__name__)


def alternating_numerator(lower: Sequence[int], upper: Sequence[int],
                          weight: Callable[[int], int]) -> Tuple[int, Tuple[int, ...]]:
    """Numerator of the z-sum over its common denominator, and that denominator's factorial args

    The sum runs over z in [max lower, min upper] of
    (-1)^z weight(z) / (prod (z-a)! prod (b-z)!). Every term is brought onto
    prod (zmax-a)! prod (b-zmin)!, stepping the quotient from one z to the next.
    """
    zmin, zmax = max(lower), min(upper)
    if zmin > zmax:
        raise ConsistencyError(f"Empty summation range [{zmin}, {zmax}]")

    common_args = tuple(zmax - a for a in lower) + tuple(b - zmin for b in upper)
    quotient = prod(factorial(zmax - a) // factorial(zmin - a) for a in lower)
    numerator = 0
    for z in range(zmin, zmax + 1):
        term = weight(z) * quotient
        numerator += -term if z % 2 else term
        if z == zmax:
            break
        quotient, remainder = divmod(quotient * prod(b - z for b in upper),
                                     prod(z + 1 - a for a in lower))
        if remainder:
            raise ConsistencyError(f"Term denominator at z={z + 1} does not divide the common denominator")

    return numerator, common_args


def alternating_sum(lower: Sequence[int], upper: Sequence[int],
                    weight: Callable[[int], int]) -> Fraction:
    """Sum over z in [max lower, min upper] of (-1)^z weight(z) / (prod (z-a)! prod (b-z)!)"""
    numerator, common_args = alternating_numerator(lower, upper, weight)
    return Fraction(numerator, prod(factorial(k) for k in common_args))


@lru_cache(maxsize=200_000)
def standard_line(p: Tuple[int, ...], q: Tuple[int, ...]) -> RotenbergLine:
    """Encoded value for sorted triangle sums p and quadrangle sums q"""
    numerator, common_args = alternating_numerator(p, q, lambda z: factorial(z + 1))
    radicand = factorial_exponent_sum(
        (1, (qk - pi for qk in q for pi in p)),
        (-1, (pi + 1 for pi in p)),
        (-2, common_args),
    )
    return canonical_line(numerator, radicand)


def standard_key(doubled: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    p2, q2 = triangle_sums(doubled)
    # the value only depends on the multisets of p and q
    return tuple(sorted(x // 2 for x in p2)), tuple(sorted(x // 2 for x in q2))


def eval_6j(symbol: SixJSymbol) -> SqrtRationalValue:
    """Exact value of a standard 6-j symbol"""
    require_valid(symbol, Mode.STANDARD)
    value = standard_line(*standard_key(symbol.doubled)).decode()
    logger.debug(f"6j {symbol} = {value}")
    return value
