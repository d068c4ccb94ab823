"""
Exact Values Module
Canonical sign x sqrt(rational) values produced by the 6-j evaluators
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .primes import PrimeExponents, valuation


@dataclass(frozen=True)
class SqrtRationalValue:
    """r * sqrt(s), with s a positive squarefree rational and r carrying the sign"""
    r: Fraction
    s: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, 'r', Fraction(self.r))
        object.__setattr__(self, 's', Fraction(self.s))
        if self.s <= 0:
            raise ValueError(f"Radicand must be positive, got {self.s}")
        if self.r == 0 and self.s != 1:
            object.__setattr__(self, 's', Fraction(1))

    @classmethod
    def zero(cls) -> 'SqrtRationalValue':
        return cls(Fraction(0))

    @classmethod
    def one(cls) -> 'SqrtRationalValue':
        return cls(Fraction(1))

    def is_zero(self) -> bool:
        return self.r == 0

    @property
    def sign(self) -> int:
        if self.r > 0:
            return 1
        if self.r < 0:
            return -1
        return 0

    def squared(self) -> Fraction:
        return self.r * self.r * self.s

    def __neg__(self) -> 'SqrtRationalValue':
        return SqrtRationalValue(-self.r, self.s)

    def __float__(self) -> float:
        # debug display only
        return float(self.r) * float(self.s) ** 0.5

    def __str__(self) -> str:
        if self.s == 1:
            return str(self.r)
        return f"{self.r}·√({self.s})"


def canonical_sqrt(prefactor: PrimeExponents, total: Union[int, Fraction]) -> SqrtRationalValue:
    """total * sqrt(prefactor) in canonical r * sqrt(s) form

    For each prime of odd exponent the radicand keeps p or 1/p, whichever
    matches the sign of the exponent of p in the squared value.
    """
    total = Fraction(total)
    if total == 0:
        return SqrtRationalValue.zero()

    num, den = total.numerator, total.denominator
    r_num, r_den = num, den
    s_num, s_den = 1, 1
    for p, e in prefactor:
        step = 0
        if e % 2:
            v = 2 * (valuation(num, p) - valuation(den, p)) + e
            step = 1 if v > 0 else -1
            if step > 0:
                s_num *= p
            else:
                s_den *= p
        half = (e - step) // 2
        if half > 0:
            r_num *= p ** half
        elif half < 0:
            r_den *= p ** -half

    return SqrtRationalValue(Fraction(r_num, r_den), Fraction(s_num, s_den))
