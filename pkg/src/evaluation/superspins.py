"""
Super 6-j Evaluation Module
Parity classification and exact evaluation of osp(1|2) super 6-j symbols
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import factorial
from typing import Sequence, Tuple

from ..arithmetic.primes import factorial_exponent_sum
from ..arithmetic.rotenberg import RotenbergLine, canonical_line
from ..arithmetic.values import SqrtRationalValue
from ..errors import ConsistencyError, DomainError
from ..spins.models import HalfInt, Mode, SixJSymbol, triangle_sums
from ..validation.symbol_validator import require_valid
from .racah import alternating_numerator, eval_6j, standard_key, standard_line

logger = logging.getLogger(__name__)


class Parity(Enum):
    """Count of half-integer triangles: 0, 2 or 4"""
    ALPHA = 'a'
    BETA = 'b'
    GAMMA = 'g'

    @property
    def marker(self) -> str:
        return f"<{self.value}>"

    @classmethod
    def from_marker(cls, text: str) -> 'Parity':
        for parity in cls:
            if parity.marker == text:
                return parity
        raise DomainError(f"Unknown parity marker {text!r}")


@dataclass(frozen=True)
class BetaLabels:
    """Integer triangles p, p'; half-integer triangles pbar, pbar'; quadrangles"""
    p: HalfInt
    p_prime: HalfInt
    pbar: HalfInt
    pbar_prime: HalfInt
    q_int: HalfInt
    l_star: int
    qbar: HalfInt
    qbar_prime: HalfInt


def parity_of_doubled(p: Sequence[int]) -> Parity:
    half_integer = sum(1 for x in p if x % 2)
    if half_integer == 0:
        return Parity.ALPHA
    if half_integer == 2:
        return Parity.BETA
    if half_integer == 4:
        return Parity.GAMMA
    raise ConsistencyError(f"{half_integer} half-integer triangles among {tuple(p)}")


def parity_of(symbol: SixJSymbol) -> Parity:
    p, _ = triangle_sums(symbol.doubled)
    return parity_of_doubled(p)


def _beta_split(p: Sequence[int], q: Sequence[int]):
    integer_p = [x for x in p if x % 2 == 0]
    half_p = [x for x in p if x % 2]
    integer_q = [k for k, x in enumerate(q, start=1) if x % 2 == 0]
    half_q = [x for x in q if x % 2]
    if len(integer_p) != 2 or len(integer_q) != 1:
        raise ConsistencyError(f"Not a beta pattern: p={tuple(p)}, q={tuple(q)}")
    return integer_p, half_p, integer_q[0], half_q


def beta_decomposition(symbol: SixJSymbol) -> BetaLabels:
    """Labels of a beta symbol, triangles kept in index order"""
    p, q = triangle_sums(symbol.doubled)
    if parity_of_doubled(p) is not Parity.BETA:
        raise DomainError(f"{symbol} does not have parity beta")

    integer_p, half_p, l_star, half_q = _beta_split(p, q)
    return BetaLabels(
        p=HalfInt(integer_p[0]),
        p_prime=HalfInt(integer_p[1]),
        pbar=HalfInt(half_p[0]),
        pbar_prime=HalfInt(half_p[1]),
        q_int=HalfInt(q[l_star - 1]),
        l_star=l_star,
        qbar=HalfInt(half_q[0]),
        qbar_prime=HalfInt(half_q[1]),
    )


def phase_of_doubled(doubled: Sequence[int]) -> int:
    """4 * sum(J_k j_k), the sum of (2J_k)(2j_k)"""
    return sum(x * y for x, y in zip(doubled[:3], doubled[3:]))


def phase_exponent(symbol: SixJSymbol) -> int:
    return phase_of_doubled(symbol.doubled)


def _beta_coefficients(p: Sequence[int], q: Sequence[int]) -> Tuple[int, int]:
    """(slope, constant) with Pi_beta(z) = -slope*z + constant"""
    integer_p, _, _, half_q = _beta_split(p, q)
    (pp, pp_prime), (qb, qb_prime) = integer_p, half_q

    slope2 = qb + qb_prime - pp - pp_prime + 2
    constant4 = (qb + 1) * (qb_prime + 1) - pp * pp_prime
    if slope2 % 2 or constant4 % 4:
        raise ConsistencyError(f"Non-integer Pi_beta coefficients for p={tuple(p)}, q={tuple(q)}")
    return slope2 // 2, constant4 // 4


def _monomial(parity: Parity, p: Sequence[int], q: Sequence[int], bilinear: int, z: int) -> int:
    if parity is Parity.ALPHA:
        return 1
    if parity is Parity.BETA:
        slope, constant = _beta_coefficients(p, q)
        return -slope * z + constant

    # sum of doubled spins is half of sum(q) in doubled units
    twice = -2 * z + bilinear + sum(q) // 2 + 1
    if twice % 2:
        raise ConsistencyError(f"Pi_gamma({z}) is not an integer for p={tuple(p)}, q={tuple(q)}")
    return twice // 2


def monomial(parity: Parity, symbol: SixJSymbol, z: int) -> int:
    """Parity monomial Pi(z) of the super z-sum"""
    p, q = triangle_sums(symbol.doubled)
    return _monomial(parity, p, q, phase_exponent(symbol), z)


@lru_cache(maxsize=200_000)
def super_line(p: Tuple[int, ...], q: Tuple[int, ...], bilinear: int) -> RotenbergLine:
    """Encoded value for sorted doubled p and q and the phase exponent"""
    parity = parity_of_doubled(p)
    lower = [(x + 1) // 2 for x in p]
    upper = [(x + 1) // 2 for x in q]

    numerator, common_args = alternating_numerator(
        lower, upper,
        lambda z: factorial(z) * _monomial(parity, p, q, bilinear, z),
    )
    if bilinear % 2:
        numerator = -numerator
    radicand = factorial_exponent_sum(
        (1, ((qk - pi) // 2 for qk in q for pi in p)),
        (-1, lower),
        (-2, common_args),
    )
    return canonical_line(numerator, radicand)


def eval_super_6j(symbol: SixJSymbol) -> SqrtRationalValue:
    """Exact value of a super 6-j symbol"""
    require_valid(symbol, Mode.SUPER)
    p, q = triangle_sums(symbol.doubled)
    value = super_line(tuple(sorted(p)), tuple(sorted(q)), phase_exponent(symbol)).decode()
    logger.debug(f"6jS {symbol} = {value}")
    return value


def evaluate(symbol: SixJSymbol, mode: Mode) -> SqrtRationalValue:
    if mode is Mode.STANDARD:
        return eval_6j(symbol)
    return eval_super_6j(symbol)


def evaluate_line(doubled: Sequence[int], mode: Mode) -> RotenbergLine:
    """Table encoding of a doubled tuple the caller has already validated"""
    if mode is Mode.STANDARD:
        return standard_line(*standard_key(doubled))
    p, q = triangle_sums(doubled)
    return super_line(tuple(sorted(p)), tuple(sorted(q)), phase_of_doubled(doubled))
