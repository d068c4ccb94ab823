"""
Symbol Enumeration Module
Canonical valid symbols up to a spin bound, in lexicographic order
"""
from typing import Iterator, Optional, Tuple

from ..spins.models import Doubled, Mode
from ..validation.symbol_validator import is_valid_doubled
from .symmetry import is_canonical


def _triangle(x: int, y: int, z: int, mode: Mode) -> bool:
    if abs(x - y) > z or z > x + y:
        return False
    return mode is Mode.SUPER or (x + y + z) % 2 == 0


def prefixes(max_twice: int) -> Iterator[Tuple[int, int]]:
    """(2J1, 2J2) pairs a canonical tuple can start with"""
    for a in range(max_twice + 1):
        for b in range(a, max_twice + 1):
            yield a, b


def enumerate_canonical(max_twice: int, mode: Mode,
                        prefix: Optional[Tuple[int, int]] = None) -> Iterator[Doubled]:
    """Valid self-canonical doubled tuples with every spin <= max_twice / 2

    A canonical tuple has J1 minimal among all six spins and J1 <= J2 <= J3,
    which bounds every loop from below by a.
    """
    heads = [prefix] if prefix is not None else prefixes(max_twice)
    top = max_twice + 1

    for a, b in heads:
        for c in range(b, min(a + b, max_twice) + 1):
            if not _triangle(a, b, c, mode):
                continue
            for d in range(a, top):
                for e in range(a, top):
                    if not _triangle(d, e, c, mode):
                        continue
                    for f in range(a, top):
                        if not _triangle(a, e, f, mode) or not _triangle(d, b, f, mode):
                            continue
                        t = (a, b, c, d, e, f)
                        if is_valid_doubled(t, mode) and is_canonical(t):
                            yield t
