"""Arithmetic package: prime exponents, exact values and table encoding"""
from .primes import (
    BASE_PRIMES,
    PrimeExponents,
    factor_factorial,
    factorial_exponent_sum,
    factorial_ratio,
    legendre_exponent,
    valuation,
)
from .rotenberg import RotenbergLine, canonical_line, to_rotenberg
from .values import SqrtRationalValue, canonical_sqrt

__all__ = [
    'BASE_PRIMES',
    'PrimeExponents',
    'RotenbergLine',
    'SqrtRationalValue',
    'canonical_line',
    'canonical_sqrt',
    'factor_factorial',
    'factorial_exponent_sum',
    'factorial_ratio',
    'legendre_exponent',
    'to_rotenberg',
    'valuation'
]
