"""
Prime Exponents Module
Prime-factored rationals and factorials through Legendre's formula
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Tuple

from sympy import factorint, primerange

# Primes carried as fixed table columns
BASE_PRIMES: Tuple[int, ...] = tuple(primerange(2, 54))


@dataclass(frozen=True)
class PrimeExponents:
    """A positive rational as prime -> exponent, zero exponents never stored"""
    exps: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {p: e for p, e in self.exps.items() if e}
        object.__setattr__(self, 'exps', dict(sorted(cleaned.items())))

    def __hash__(self):
        return hash(tuple(self.exps.items()))

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.exps.items())

    def __getitem__(self, prime: int) -> int:
        return self.exps.get(prime, 0)

    def __mul__(self, other: 'PrimeExponents') -> 'PrimeExponents':
        merged = dict(self.exps)
        for p, e in other.exps.items():
            merged[p] = merged.get(p, 0) + e
        return PrimeExponents(merged)

    def __truediv__(self, other: 'PrimeExponents') -> 'PrimeExponents':
        return self * other.inverse()

    def inverse(self) -> 'PrimeExponents':
        return PrimeExponents({p: -e for p, e in self.exps.items()})

    def is_one(self) -> bool:
        return not self.exps

    def to_fraction(self) -> Fraction:
        num, den = 1, 1
        for p, e in self.exps.items():
            if e > 0:
                num *= p ** e
            else:
                den *= p ** -e
        return Fraction(num, den)

    @classmethod
    def of_int(cls, n: int) -> 'PrimeExponents':
        if n <= 0:
            raise ValueError(f"Cannot factor non-positive integer {n}")
        return cls(dict(factorint(n)))

    @classmethod
    def of_fraction(cls, value: Fraction) -> 'PrimeExponents':
        return cls.of_int(value.numerator) / cls.of_int(value.denominator)

    @classmethod
    def product(cls, items: Iterable['PrimeExponents']) -> 'PrimeExponents':
        total = cls()
        for item in items:
            total = total * item
        return total


def legendre_exponent(n: int, p: int) -> int:
    exp = 0
    pk = p
    while pk <= n:
        exp += n // pk
        pk *= p
    return exp


@lru_cache(maxsize=None)
def factor_factorial(n: int) -> PrimeExponents:
    """n! as prime exponents"""
    if n < 0:
        raise ValueError(f"Factorial of negative integer {n}")
    return PrimeExponents({p: legendre_exponent(n, p) for p in primerange(2, n + 1)})


def factorial_exponent_sum(*groups: Tuple[int, Iterable[int]]) -> Dict[int, int]:
    """Sum of weight * exponents(n!) over (weight, args) groups, zeros kept"""
    exps: Dict[int, int] = {}
    for weight, args in groups:
        for n in args:
            for p, e in factor_factorial(n):
                exps[p] = exps.get(p, 0) + weight * e
    return exps


def factorial_ratio(numerators: Iterable[int], denominators: Iterable[int]) -> PrimeExponents:
    """prod(a!) / prod(b!) as prime exponents"""
    return PrimeExponents(factorial_exponent_sum((1, numerators), (-1, denominators)))


def valuation(n: int, p: int) -> int:
    """Exponent of p in a nonzero integer"""
    if n == 0:
        raise ValueError("Valuation of zero is undefined")
    n = abs(n)
    count = 0
    while n % p == 0:
        n //= p
        count += 1
    return count
