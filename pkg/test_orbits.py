#!/usr/bin/env python3
"""
Tests for S4 canonical forms, Regge closures and partition classes
"""
import sys
import os

# Add project root to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.errors import ConsistencyError, DomainError
from src.evaluation import Parity, eval_6j, eval_super_6j
from src.orbits import (
    PartitionClass,
    aspects_doubled,
    canonical_form,
    canonical_tuple,
    classify,
    classify_oracle,
    closure_doubled,
    enumerate_canonical,
    is_canonical,
    regge_star,
    s4_rearrangements,
    scan_partitions,
)
from src.spins import HalfInt, Mode, SixJSymbol, make_symbol
from src.validation import is_valid_doubled

EXAMPLE = make_symbol(18, 16, 12, 3, 9, 13)
BETA_S0 = make_symbol(1, 1, 2, 1, 2, 1)
BETA_S1 = make_symbol(4, 4, 4, 3, 4, 2)


def test_s4_rearrangements():
    """Test the 24 aspects and the canonical form"""
    print("🔬 Testing S4 rearrangements...")

    aspects = s4_rearrangements(EXAMPLE)
    assert len(aspects) == 24
    assert len(set(aspects)) == 24
    assert EXAMPLE in aspects
    assert make_symbol(3, 9, 12, 18, 16, 13) in aspects

    assert canonical_tuple(EXAMPLE.doubled) == (3, 9, 12, 18, 16, 13)
    assert canonical_form(EXAMPLE) == make_symbol(3, 9, 12, 18, 16, 13)
    assert is_canonical((3, 9, 12, 18, 16, 13))
    assert not is_canonical(EXAMPLE.doubled)

    assert set(aspects_doubled((2, 2, 2, 2, 2, 2))) == {(2, 2, 2, 2, 2, 2)}
    for aspect in aspects_doubled(EXAMPLE.doubled):
        assert canonical_tuple(aspect) == canonical_tuple(EXAMPLE.doubled)
    print("✅ S4 rearrangements passed")


def test_enumeration():
    """Test canonical enumeration against a brute-force scan"""
    print("🔬 Testing enumeration...")

    assert list(enumerate_canonical(0, Mode.STANDARD)) == [(0, 0, 0, 0, 0, 0)]
    assert (1, 1, 1, 1, 1, 1) in list(enumerate_canonical(1, Mode.SUPER))
    assert (1, 1, 1, 1, 1, 1) not in list(enumerate_canonical(1, Mode.STANDARD))

    for mode in Mode:
        listed = list(enumerate_canonical(3, mode))
        assert listed == sorted(listed)
        brute = {
            canonical_tuple(t)
            for t in _all_tuples(3)
            if is_valid_doubled(t, mode)
        }
        assert set(listed) == brute, mode
    print("✅ Enumeration passed")


def _all_tuples(max_twice):
    r = range(max_twice + 1)
    return ((a, b, c, d, e, f) for a in r for b in r for c in r for d in r for e in r for f in r)


def test_regge_star_example():
    """The worked example has three canonical representatives"""
    print("🔬 Testing regge_star...")

    report = regge_star(EXAMPLE, Mode.STANDARD)
    assert report.count == 3
    assert report.closure_size == 72
    assert report.partition_class is PartitionClass.S2
    assert report.parity is None
    assert report.representatives[0] == canonical_form(EXAMPLE)

    partners = {canonical_form(make_symbol(20, 16, 10, 5, 9, 11)),
                canonical_form(make_symbol(20, 14, 12, 5, 7, 13))}
    assert set(report.representatives[1:]) == partners

    value = eval_6j(EXAMPLE)
    for representative in report.representatives:
        assert eval_6j(representative) == value

    as_dict = report.to_dict()
    assert as_dict['class'] == 'S2' and len(as_dict['representatives']) == 3

    super_report = regge_star(EXAMPLE, Mode.SUPER)
    assert super_report.parity is Parity.ALPHA
    assert super_report.count == 3

    try:
        regge_star(make_symbol(1, 1, 2, 1, 2, 1), Mode.STANDARD)
        assert False, "Beta symbol accepted in standard mode"
    except DomainError:
        pass
    print("✅ regge_star passed")


def test_classify_examples():
    """Test predicate and oracle classes for known symbols"""
    print("🔬 Testing classify...")

    cases = [
        (make_symbol(0, 0, 0, 0, 0, 0), Mode.STANDARD, PartitionClass.S0),
        (make_symbol(2, 2, 2, 2, 2, 2), Mode.STANDARD, PartitionClass.S0),
        (EXAMPLE, Mode.STANDARD, PartitionClass.S2),
        (make_symbol(6, 6, 6, 6, 4, 2), Mode.STANDARD, PartitionClass.S5),
        (make_symbol(12, 10, 6, 2, 8, 10), Mode.STANDARD, PartitionClass.S5),
        (make_symbol(7, 7, 7, 7, 5, 3), Mode.SUPER, PartitionClass.S5),
        (BETA_S0, Mode.SUPER, PartitionClass.S0),
        (BETA_S1, Mode.SUPER, PartitionClass.S1),
        (make_symbol(4, 4, 4, 4, 3, 2), Mode.SUPER, PartitionClass.S1),
    ]
    for symbol, mode, expected in cases:
        assert classify(symbol, mode) is expected, f"{symbol} predicate"
        assert classify_oracle(symbol, mode) is expected, f"{symbol} oracle"

    assert regge_star(BETA_S1, Mode.SUPER).closure_size == 48
    assert regge_star(make_symbol(6, 6, 6, 6, 4, 2), Mode.STANDARD).closure_size == 144
    print("✅ classify passed")


def test_partition_class_counts():
    assert PartitionClass.from_representatives(1) is PartitionClass.S0
    assert PartitionClass.from_representatives(6) is PartitionClass.S5
    for impossible in [4, 5, 7]:
        try:
            PartitionClass.from_representatives(impossible)
            assert False, f"{impossible} representatives accepted"
        except ConsistencyError:
            pass


def test_closure_values_and_canonical_members():
    """Every closure member is canonical, valid and of equal value"""
    for doubled in enumerate_canonical(7, Mode.SUPER):
        members = closure_doubled(doubled, Mode.SUPER)
        assert members[0] == doubled
        assert members[1:] == sorted(members[1:])
        symbol = SixJSymbol.from_doubled(doubled)
        value = eval_super_6j(symbol)
        expected = classify(symbol, Mode.SUPER)
        for member in members:
            assert is_canonical(member)
            assert is_valid_doubled(member, Mode.SUPER)
            assert eval_super_6j(SixJSymbol.from_doubled(member)) == value
            assert classify(SixJSymbol.from_doubled(member), Mode.SUPER) is expected

        # closures are equivalence classes
        for member in members[1:]:
            assert set(closure_doubled(member, Mode.SUPER)) == set(members)


def test_scan_standard():
    """Predicate and closure agree on every standard symbol up to spin 9/2"""
    print("🔬 Scanning standard partitions...")

    summary = scan_partitions(HalfInt.parse("9/2"), Mode.STANDARD)
    assert summary['agreement'], summary['mismatches'][:5]
    assert summary['symbols'] > 0
    assert set(summary['counts']) == {'-'}
    assert set(summary['closure_sizes']['-']) <= {24, 48, 72, 144}
    assert set(summary['counts']['-']) == {'S0', 'S1', 'S2', 'S5'}
    assert sum(summary['counts']['-'].values()) == summary['symbols']
    print("✅ Standard scan passed")


def test_scan_super():
    """Predicate and closure agree on every super symbol up to spin 7/2"""
    print("🔬 Scanning super partitions...")

    summary = scan_partitions(HalfInt.parse("7/2"), Mode.SUPER)
    assert summary['agreement'], summary['mismatches'][:5]
    assert set(summary['counts']) == {'<a>', '<b>', '<g>'}
    assert summary['closure_sizes']['<b>'] == [24, 48]
    assert set(summary['counts']['<b>']) == {'S0', 'S1'}
    for parity in ('<a>', '<g>'):
        assert set(summary['closure_sizes'][parity]) <= {24, 48, 72, 144}
    print("✅ Super scan passed")


if __name__ == "__main__":
    print("🧪 Running Orbit Tests\n")

    try:
        test_s4_rearrangements()
        test_enumeration()
        test_regge_star_example()
        test_classify_examples()
        test_partition_class_counts()
        test_closure_values_and_canonical_members()
        test_scan_standard()
        test_scan_super()

        print("\n🎉 All tests passed successfully!")

    except Exception as e:
        print(f"\n❌ Test failed: {e}")
        sys.exit(1)
