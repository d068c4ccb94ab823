"""
Rotenberg Encoding Module
Exponent-vector text form of exact values: 16 exponents for primes 2..53,
an ampersand multiplier and optional overflow primes
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from sympy import factorint, isprime

from ..errors import DomainError
from .primes import BASE_PRIMES, PrimeExponents
from .values import SqrtRationalValue, canonical_sqrt


@dataclass(frozen=True)
class RotenbergLine:
    """multiplier * sqrt(prod p^e)"""
    sign_multiplier: int
    base_exps: Tuple[int, ...]
    overflow: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if len(self.base_exps) != len(BASE_PRIMES):
            raise DomainError(
                f"Expected {len(BASE_PRIMES)} base exponents, got {len(self.base_exps)}"
            )

    def exponents(self) -> PrimeExponents:
        exps = dict(zip(BASE_PRIMES, self.base_exps))
        exps.update(self.overflow)
        return PrimeExponents(exps)

    def is_zero(self) -> bool:
        return self.sign_multiplier == 0

    def decode(self) -> SqrtRationalValue:
        return canonical_sqrt(self.exponents(), Fraction(self.sign_multiplier))

    def render(self) -> str:
        tokens = [str(e) for e in self.base_exps]
        tokens.append(f"&{self.sign_multiplier}")
        tokens.extend(f"{p}^{e}" for p, e in self.overflow)
        return ' '.join(tokens)

    @classmethod
    def parse(cls, text: str) -> 'RotenbergLine':
        tokens = text.split()
        count = len(BASE_PRIMES)
        if len(tokens) < count + 1:
            raise DomainError(f"Rotenberg field too short: {text!r}")

        try:
            base = tuple(int(t) for t in tokens[:count])
        except ValueError:
            raise DomainError(f"Non-integer exponent in {text!r}")

        marker = tokens[count]
        if not marker.startswith('&'):
            raise DomainError(f"Missing '&' multiplier in {text!r}")
        try:
            multiplier = int(marker[1:])
        except ValueError:
            raise DomainError(f"Invalid multiplier {marker!r}")

        overflow = []
        for token in tokens[count + 1:]:
            prime, sep, exp = token.partition('^')
            try:
                pair = (int(prime), int(exp))
            except ValueError:
                raise DomainError(f"Invalid overflow factor {token!r}")
            if not sep or pair[0] <= BASE_PRIMES[-1] or not isprime(pair[0]) or pair[1] == 0:
                raise DomainError(f"Invalid overflow factor {token!r}")
            if overflow and pair[0] <= overflow[-1][0]:
                raise DomainError(f"Overflow primes out of order in {text!r}")
            overflow.append(pair)

        return cls(multiplier, base, tuple(overflow))


_ZEROS = (0,) * len(BASE_PRIMES)


def _split_exponents(exps: Dict[int, int]) -> Tuple[Tuple[int, ...], Tuple[Tuple[int, int], ...]]:
    base = tuple(exps.get(p, 0) for p in BASE_PRIMES)
    overflow = tuple(sorted((p, e) for p, e in exps.items() if p > BASE_PRIMES[-1] and e))
    return base, overflow


@lru_cache(maxsize=100_000)
def to_rotenberg(value: SqrtRationalValue) -> RotenbergLine:
    """Fold r's denominator into even exponents and s into +-1 exponents"""
    if value.is_zero():
        return RotenbergLine(0, _ZEROS)

    exps = PrimeExponents.of_fraction(value.s)
    exps = exps / PrimeExponents({p: 2 * e for p, e in factorint(value.r.denominator).items()})
    base, overflow = _split_exponents(exps.exps)
    return RotenbergLine(value.r.numerator, base, overflow)


def canonical_line(numerator: int, radicand: Dict[int, int]) -> RotenbergLine:
    """Line of numerator * sqrt(prod p^e), factoring nothing

    Only the radicand primes are divided out of the numerator; every other
    prime of the numerator stays in the multiplier with its full power.
    """
    if numerator == 0:
        return RotenbergLine(0, _ZEROS)

    multiplier = numerator
    exps: Dict[int, int] = {}
    for p, e in radicand.items():
        if not e:
            continue
        v = 0
        while multiplier % p == 0:
            multiplier //= p
            v += 1
        total = 2 * v + e
        if total < 0:
            exps[p] = total
            continue
        multiplier *= p ** (total // 2)
        if total % 2:
            exps[p] = 1

    base, overflow = _split_exponents(exps)
    return RotenbergLine(multiplier, base, overflow)
