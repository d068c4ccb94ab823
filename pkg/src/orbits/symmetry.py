"""
Tetrahedral Symmetry Module
The 24 S4 aspects of a 6-j symbol and its lexicographic canonical form
"""
from itertools import permutations
from typing import List

from ..spins.models import Doubled, SixJSymbol

_COLUMN_ORDERS = tuple(permutations(range(3)))


def _flips(t: Doubled):
    a, b, c, d, e, f = t
    yield t
    yield (a, e, f, d, b, c)
    yield (d, b, f, a, e, c)
    yield (d, e, c, a, b, f)


def aspects_doubled(doubled: Doubled) -> List[Doubled]:
    """24 rearrangements of a doubled tuple, duplicates kept"""
    result = []
    for t in _flips(tuple(doubled)):
        for i, j, k in _COLUMN_ORDERS:
            result.append((t[i], t[j], t[k], t[i + 3], t[j + 3], t[k + 3]))
    return result


def canonical_tuple(doubled: Doubled) -> Doubled:
    return min(aspects_doubled(doubled))


def is_canonical(doubled: Doubled) -> bool:
    return tuple(doubled) == canonical_tuple(doubled)


def s4_rearrangements(symbol: SixJSymbol) -> List[SixJSymbol]:
    return [SixJSymbol.from_doubled(t) for t in aspects_doubled(symbol.doubled)]


def canonical_form(symbol: SixJSymbol) -> SixJSymbol:
    """Lexicographically smallest aspect"""
    return SixJSymbol.from_doubled(canonical_tuple(symbol.doubled))
