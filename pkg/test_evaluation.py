#!/usr/bin/env python3
"""
Tests for exact standard and super 6-j evaluation
"""
import sys
import os
from fractions import Fraction
from math import factorial, prod

# Add project root to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import sympy
from sympy.physics.wigner import wigner_6j

from src.arithmetic import SqrtRationalValue, canonical_sqrt, factorial_ratio, to_rotenberg
from src.errors import ConsistencyError, DomainError
from src.evaluation import (
    Parity,
    alternating_sum,
    beta_decomposition,
    eval_6j,
    eval_super_6j,
    evaluate_line,
    monomial,
    parity_of,
    standard_line,
)
from src.evaluation.racah import standard_key
from src.orbits import aspects_doubled, enumerate_canonical
from src.spins import HalfInt, Mode, SixJSymbol, make_symbol, triangle_sums

EXAMPLE = make_symbol(18, 16, 12, 3, 9, 13)
GAMMA_HALF = make_symbol(1, 1, 1, 1, 1, 1)
BETA_EXAMPLE = make_symbol(1, 1, 2, 1, 2, 1)


def oracle_standard(doubled):
    """Squared value and sign, term by term in exact rationals"""
    P, Q = triangle_sums(doubled)
    p = [x // 2 for x in P]
    q = [x // 2 for x in Q]
    prefactor = Fraction(prod(factorial(qk - pi) for qk in q for pi in p),
                         prod(factorial(pi + 1) for pi in p))
    total = sum(
        Fraction((-1) ** z * factorial(z + 1),
                 prod(factorial(z - pi) for pi in p) * prod(factorial(qk - z) for qk in q))
        for z in range(max(p), min(q) + 1)
    )
    return total * total * prefactor, (total > 0) - (total < 0)


def oracle_super(doubled):
    """Squared value and sign of the super formula, with real-valued monomials"""
    P, Q = triangle_sums(doubled)
    p = [Fraction(x, 2) for x in P]
    q = [Fraction(x, 2) for x in Q]
    spins = [Fraction(x, 2) for x in doubled]
    J, j = spins[:3], spins[3:]
    bilinear = sum(a * b for a, b in zip(J, j))
    half = Fraction(1, 2)

    half_count = sum(1 for x in p if x.denominator == 2)
    if half_count == 0:
        pi_of = lambda z: 1
    elif half_count == 2:
        pp, pp_prime = [x for x in p if x.denominator == 1]
        qb, qb_prime = [x for x in q if x.denominator == 2]
        pi_of = lambda z: -z * (qb + qb_prime - pp - pp_prime + 1) + (qb + half) * (qb_prime + half) - pp * pp_prime
    else:
        pi_of = lambda z: -z + 2 * bilinear + sum(spins) + half

    floor = lambda x: x.numerator // x.denominator
    lower = [floor(x + half) for x in p]
    upper = [floor(x + half) for x in q]
    prefactor = Fraction(prod(factorial(floor(qk - pi)) for qk in q for pi in p),
                         prod(factorial(a) for a in lower))
    total = sum(
        Fraction((-1) ** z * factorial(z), 1) * pi_of(z)
        / (prod(factorial(z - a) for a in lower) * prod(factorial(b - z) for b in upper))
        for z in range(max(lower), min(upper) + 1)
    )
    phase = -1 if (4 * bilinear) % 2 else 1
    total *= phase
    return total * total * prefactor, (total > 0) - (total < 0)


def test_eval_6j_examples():
    """Test standard values from the worked examples"""
    print("🔬 Testing eval_6j...")

    assert eval_6j(make_symbol(0, 0, 0, 0, 0, 0)) == SqrtRationalValue.one()
    assert eval_6j(EXAMPLE) == SqrtRationalValue(Fraction(-1, 2), Fraction(23, 5 * 7 * 13 * 17))
    assert eval_6j(make_symbol(2, 2, 2, 2, 2, 2)) == SqrtRationalValue(Fraction(1, 6))

    for partner in [(20, 16, 10, 5, 9, 11), (20, 14, 12, 5, 7, 13)]:
        assert eval_6j(make_symbol(*partner)) == eval_6j(EXAMPLE)

    try:
        eval_6j(BETA_EXAMPLE)
        assert False, "Half-integer triangles accepted in standard mode"
    except DomainError:
        pass
    print("✅ eval_6j passed")


def test_eval_6j_against_oracles():
    """Test standard values against exact term sums and sympy"""
    print("🔬 Testing eval_6j against oracles...")

    for doubled in enumerate_canonical(6, Mode.STANDARD):
        value = eval_6j(SixJSymbol.from_doubled(doubled))
        squared, sign = oracle_standard(doubled)
        assert value.squared() == squared, doubled
        assert value.sign == sign, doubled

    for doubled in list(enumerate_canonical(4, Mode.STANDARD)) + [EXAMPLE.doubled]:
        value = eval_6j(SixJSymbol.from_doubled(doubled))
        expr = wigner_6j(*(sympy.Rational(x, 2) for x in doubled))
        assert sympy.simplify(expr ** 2) == sympy.Rational(value.squared().numerator,
                                                           value.squared().denominator), doubled
        if value.is_zero():
            assert expr == 0
        else:
            assert bool(expr.is_negative) == (value.sign < 0), doubled
    print("✅ Oracle comparison passed")


def test_eval_6j_unitarity_and_symmetry():
    """Test |value| <= 1 and invariance under the 24 rearrangements"""
    for doubled in enumerate_canonical(8, Mode.STANDARD):
        value = eval_6j(SixJSymbol.from_doubled(doubled))
        assert value.squared() <= 1, doubled

    for doubled in enumerate_canonical(4, Mode.STANDARD):
        reference = oracle_standard(doubled)
        for aspect in aspects_doubled(doubled):
            assert oracle_standard(aspect) == reference
            assert eval_6j(SixJSymbol.from_doubled(aspect)) == eval_6j(SixJSymbol.from_doubled(doubled))


def test_alternating_sum_is_exact():
    # {1 1 1; 1 1 1}: -4!/1 + 5!/1 over the common denominator
    total = alternating_sum([3, 3, 3, 3], [4, 4, 4], lambda z: factorial(z + 1))
    assert total == 96

    try:
        alternating_sum([3], [2], lambda z: 1)
        assert False, "Empty range accepted"
    except ConsistencyError:
        pass


def test_parity():
    """Test parity classification and beta labels"""
    print("🔬 Testing parity...")

    assert parity_of(EXAMPLE) is Parity.ALPHA
    assert parity_of(GAMMA_HALF) is Parity.GAMMA
    assert parity_of(BETA_EXAMPLE) is Parity.BETA
    assert Parity.BETA.marker == "<b>" and Parity.from_marker("<g>") is Parity.GAMMA

    labels = beta_decomposition(BETA_EXAMPLE)
    assert labels.p == HalfInt(4) and labels.p_prime == HalfInt(4)
    assert labels.pbar == HalfInt(3) and labels.pbar_prime == HalfInt(5)
    assert labels.q_int == HalfInt(6) and labels.l_star == 1
    assert labels.qbar == HalfInt(5) and labels.qbar_prime == HalfInt(5)

    assert beta_decomposition(make_symbol(4, 4, 4, 4, 3, 2)).l_star == 2

    try:
        beta_decomposition(EXAMPLE)
        assert False, "Alpha symbol decomposed as beta"
    except DomainError:
        pass
    print("✅ Parity passed")


def test_monomials():
    """Test the parity monomials"""
    assert monomial(Parity.ALPHA, EXAMPLE, 23) == 1
    assert monomial(Parity.BETA, BETA_EXAMPLE, 3) == -1
    assert monomial(Parity.GAMMA, GAMMA_HALF, 2) == 3


def test_eval_super_examples():
    """Test super values from the worked examples"""
    print("🔬 Testing eval_super_6j...")

    assert eval_super_6j(make_symbol(0, 0, 0, 0, 0, 0)) == SqrtRationalValue.one()
    assert eval_super_6j(GAMMA_HALF) == SqrtRationalValue(Fraction(-3, 2))
    assert eval_super_6j(BETA_EXAMPLE) == SqrtRationalValue(Fraction(-1, 2), Fraction(3))

    for symbol in [GAMMA_HALF, BETA_EXAMPLE]:
        squared, sign = oracle_super(symbol.doubled)
        value = eval_super_6j(symbol)
        assert value.squared() == squared and value.sign == sign

    try:
        eval_super_6j(make_symbol(1, 1, 4, 0, 0, 0))
        assert False, "Violated triangle accepted"
    except DomainError:
        pass
    print("✅ eval_super_6j passed")


def test_eval_super_against_oracle():
    """Test every super symbol up to spin 7/2, in all 24 aspects"""
    print("🔬 Testing eval_super_6j against oracle...")

    seen = set()
    for doubled in enumerate_canonical(7, Mode.SUPER):
        value = eval_super_6j(SixJSymbol.from_doubled(doubled))
        squared, sign = oracle_super(doubled)
        assert value.squared() == squared, doubled
        assert value.sign == sign, doubled
        seen.add(parity_of(SixJSymbol.from_doubled(doubled)))

        for aspect in aspects_doubled(doubled):
            assert oracle_super(aspect) == (squared, sign), aspect
            assert eval_super_6j(SixJSymbol.from_doubled(aspect)) == value, aspect
            assert parity_of(SixJSymbol.from_doubled(aspect)) is parity_of(SixJSymbol.from_doubled(doubled))

    assert seen == {Parity.ALPHA, Parity.BETA, Parity.GAMMA}
    print("✅ Super oracle comparison passed")


def test_encoded_values_match_fraction_path():
    """Table encodings built from exponents equal the r*sqrt(s) route"""
    for doubled in enumerate_canonical(8, Mode.STANDARD):
        p, q = standard_key(doubled)
        prefactor = factorial_ratio((qk - pi for qk in q for pi in p), (pi + 1 for pi in p))
        total = alternating_sum(p, q, lambda z: factorial(z + 1))
        expected = to_rotenberg(canonical_sqrt(prefactor, total))
        assert standard_line(p, q) == expected, doubled
        assert evaluate_line(doubled, Mode.STANDARD) == expected, doubled

    for doubled in enumerate_canonical(6, Mode.SUPER):
        encoded = evaluate_line(doubled, Mode.SUPER)
        squared, sign = oracle_super(doubled)
        assert encoded.decode().squared() == squared, doubled
        assert encoded.decode().sign == sign, doubled
        assert encoded == to_rotenberg(encoded.decode()), doubled
        assert encoded.is_zero() == (sign == 0)


def test_alpha_symbols_have_both_values():
    """Alpha symbols are standard symbols; both evaluations exist"""
    for doubled in enumerate_canonical(6, Mode.SUPER):
        symbol = SixJSymbol.from_doubled(doubled)
        if parity_of(symbol) is Parity.ALPHA:
            eval_6j(symbol)
            eval_super_6j(symbol)


if __name__ == "__main__":
    print("🧪 Running Evaluation Tests\n")

    try:
        test_eval_6j_examples()
        test_eval_6j_against_oracles()
        test_eval_6j_unitarity_and_symmetry()
        test_alternating_sum_is_exact()
        test_parity()
        test_monomials()
        test_eval_super_examples()
        test_eval_super_against_oracle()
        test_encoded_values_match_fraction_path()
        test_alpha_symbols_have_both_values()

        print("\n🎉 All tests passed successfully!")

    except Exception as e:
        print(f"\n❌ Test failed: {e}")
        sys.exit(1)
