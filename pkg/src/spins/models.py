"""
Spin Models Module
Defines half-integer spins, 6-j symbols and their triangle/quadrangle parameters
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from ..errors import DomainError

# Doubled spins, in order 2J1 2J2 2J3 2j1 2j2 2j3
Doubled = Tuple[int, int, int, int, int, int]


class Mode(Enum):
    """Evaluation mode of a table or a classification"""
    STANDARD = 'standard'
    SUPER = 'super'


@dataclass(frozen=True, order=True)
class HalfInt:
    """A spin stored as its doubled integer value"""
    twice: int

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    def integer_part(self) -> int:
        """[x] for x >= 0"""
        return self.twice // 2

    def __add__(self, other: 'HalfInt') -> 'HalfInt':
        return HalfInt(self.twice + other.twice)

    def __sub__(self, other: 'HalfInt') -> 'HalfInt':
        return HalfInt(self.twice - other.twice)

    def __str__(self) -> str:
        if self.is_integer():
            return str(self.twice // 2)
        return f"{self.twice}/2"

    @classmethod
    def parse(cls, text: str) -> 'HalfInt':
        """Parse '10', '21/2' or '3.5'"""
        raw = str(text).strip()
        try:
            if '/' in raw:
                num, den = raw.split('/', 1)
                value = Fraction(int(num), int(den))
            else:
                value = Fraction(raw)
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"Invalid spin value: {text!r}")

        doubled = value * 2
        if doubled.denominator != 1:
            raise DomainError(f"Spin {text!r} is neither integer nor half-integer")
        return cls(int(doubled))


@dataclass(frozen=True)
class TriangleQuad:
    """Triangles p1..p4 and quadrangles q1..q3 of a symbol"""
    p1: HalfInt
    p2: HalfInt
    p3: HalfInt
    p4: HalfInt
    q1: HalfInt
    q2: HalfInt
    q3: HalfInt

    @property
    def p(self) -> Tuple[HalfInt, HalfInt, HalfInt, HalfInt]:
        return (self.p1, self.p2, self.p3, self.p4)

    @property
    def q(self) -> Tuple[HalfInt, HalfInt, HalfInt]:
        return (self.q1, self.q2, self.q3)

    def doubled_p(self) -> Tuple[int, ...]:
        return tuple(x.twice for x in self.p)

    def doubled_q(self) -> Tuple[int, ...]:
        return tuple(x.twice for x in self.q)

    def differences(self) -> Dict[Tuple[int, int], HalfInt]:
        """q_k - p_i keyed by 1-based (k, i)"""
        return {
            (k, i): self.q[k - 1] - self.p[i - 1]
            for k in range(1, 4)
            for i in range(1, 5)
        }


@dataclass(frozen=True, order=True)
class SixJSymbol:
    """{J1 J2 J3; j1 j2 j3} with spins as HalfInt"""
    J1: HalfInt
    J2: HalfInt
    J3: HalfInt
    j1: HalfInt
    j2: HalfInt
    j3: HalfInt

    @classmethod
    def from_doubled(cls, values: Sequence[int]) -> 'SixJSymbol':
        """Build without validation (callers already hold a checked tuple)"""
        a, b, c, d, e, f = values
        return cls(HalfInt(a), HalfInt(b), HalfInt(c), HalfInt(d), HalfInt(e), HalfInt(f))

    @property
    def doubled(self) -> Doubled:
        return (self.J1.twice, self.J2.twice, self.J3.twice,
                self.j1.twice, self.j2.twice, self.j3.twice)

    @property
    def upper(self) -> Tuple[HalfInt, HalfInt, HalfInt]:
        return (self.J1, self.J2, self.J3)

    @property
    def lower(self) -> Tuple[HalfInt, HalfInt, HalfInt]:
        return (self.j1, self.j2, self.j3)

    def to_line(self) -> str:
        return ' '.join(str(x) for x in self.doubled)

    @classmethod
    def from_line(cls, text: str) -> 'SixJSymbol':
        fields = text.split()
        if len(fields) != 6:
            raise DomainError(f"Expected 6 doubled spins, got {len(fields)}: {text!r}")
        try:
            values = [int(x) for x in fields]
        except ValueError:
            raise DomainError(f"Doubled spins must be integers: {text!r}")
        return make_symbol(*values)

    def to_dict(self) -> Dict[str, str]:
        """Convert to dictionary of printable spins"""
        return {
            'J1': str(self.J1), 'J2': str(self.J2), 'J3': str(self.J3),
            'j1': str(self.j1), 'j2': str(self.j2), 'j3': str(self.j3),
        }

    def __str__(self) -> str:
        top = ' '.join(str(x) for x in self.upper)
        bottom = ' '.join(str(x) for x in self.lower)
        return f"{{{top}; {bottom}}}"


def make_symbol(*twice: int) -> SixJSymbol:
    """Build a symbol from six doubled integers; triangle validity is not checked"""
    if len(twice) != 6:
        raise DomainError(f"A 6-j symbol needs 6 spins, got {len(twice)}")
    for index, value in enumerate(twice):
        if not isinstance(value, int) or isinstance(value, bool):
            raise DomainError(f"Spin #{index + 1} must be a doubled integer, got {value!r}")
        if value < 0:
            raise DomainError(f"Spin #{index + 1} is negative ({value}/2)")
    return SixJSymbol.from_doubled(twice)


def triangle_sums(doubled: Sequence[int]) -> Tuple[Tuple[int, int, int, int], Tuple[int, int, int]]:
    """Doubled (p1..p4) and (q1..q3) of a doubled spin tuple"""
    J1, J2, J3, j1, j2, j3 = doubled
    p = (J1 + j2 + j3, j1 + J2 + j3, j1 + j2 + J3, J1 + J2 + J3)
    q = (J2 + j2 + J3 + j3, J1 + j1 + J3 + j3, J1 + j1 + J2 + j2)
    return p, q


def triangles(symbol: SixJSymbol) -> TriangleQuad:
    """Triangles and quadrangles of a symbol"""
    p, q = triangle_sums(symbol.doubled)
    return TriangleQuad(*(HalfInt(x) for x in p), *(HalfInt(x) for x in q))
