"""
Regge Matrices Module
The five Regge transformations as exact 6x6 half-integer matrices
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

from sympy import Matrix, PurePoly, Symbol, expand, eye

from ..errors import DomainError
from ..spins.models import Doubled, SixJSymbol

logger = logging.getLogger(__name__)

# Entries doubled so that every stored value is an integer
_DOUBLED_ENTRIES: Dict[int, Tuple[Tuple[int, ...], ...]] = {
    1: (
        (2, 0, 0, 0, 0, 0),
        (0, 1, 1, 0, 1, -1),
        (0, 1, 1, 0, -1, 1),
        (0, 0, 0, 2, 0, 0),
        (0, 1, -1, 0, 1, 1),
        (0, -1, 1, 0, 1, 1),
    ),
    2: (
        (1, 0, 1, 1, 0, -1),
        (0, 2, 0, 0, 0, 0),
        (1, 0, 1, -1, 0, 1),
        (1, 0, -1, 1, 0, 1),
        (0, 0, 0, 0, 2, 0),
        (-1, 0, 1, 1, 0, 1),
    ),
    3: (
        (1, 1, 0, 1, -1, 0),
        (1, 1, 0, -1, 1, 0),
        (0, 0, 2, 0, 0, 0),
        (1, -1, 0, 1, 1, 0),
        (-1, 1, 0, 1, 1, 0),
        (0, 0, 0, 0, 0, 2),
    ),
    4: (
        (0, 1, 1, 0, 1, -1),
        (1, 0, 1, -1, 0, 1),
        (1, 1, 0, 1, -1, 0),
        (0, 1, -1, 0, 1, 1),
        (-1, 0, 1, 1, 0, 1),
        (1, -1, 0, 1, 1, 0),
    ),
    5: (
        (0, 1, 1, 0, -1, 1),
        (1, 0, 1, 1, 0, -1),
        (1, 1, 0, -1, 1, 0),
        (0, -1, 1, 0, 1, 1),
        (1, 0, -1, 1, 0, 1),
        (-1, 1, 0, 1, 1, 0),
    ),
}

KAPPAS = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class ReggeMatrix:
    """R_kappa with entries stored doubled"""
    kappa: int
    entries: Tuple[Tuple[int, ...], ...]

    def as_sympy(self) -> Matrix:
        """Exact rational matrix"""
        return Matrix(self.entries) / 2

    def times_doubled(self, doubled: Doubled) -> Tuple[int, ...]:
        """2 * R * x for an integer vector x"""
        return tuple(sum(a * x for a, x in zip(row, doubled)) for row in self.entries)


@dataclass(frozen=True)
class ReggeRejection:
    """Outcome of a transformation that would produce quarter-integer spins"""
    kappa: int
    symbol: SixJSymbol
    reason: str


def regge_matrix(kappa: int) -> ReggeMatrix:
    if kappa not in _DOUBLED_ENTRIES:
        raise DomainError(f"Regge index must be in 1..5, got {kappa}")
    return ReggeMatrix(kappa, _DOUBLED_ENTRIES[kappa])


def apply_matrix(kappa: int, symbol: SixJSymbol) -> Union[SixJSymbol, ReggeRejection]:
    """Literal product R_kappa * J in doubled arithmetic"""
    twice_image = regge_matrix(kappa).times_doubled(symbol.doubled)
    if any(x % 2 for x in twice_image):
        return ReggeRejection(kappa, symbol, "quarter-integer spin in matrix image")
    return SixJSymbol.from_doubled(tuple(x // 2 for x in twice_image))


def determinant(kappa: int):
    return regge_matrix(kappa).as_sympy().det()


def characteristic_polynomial(kappa: int, x: Optional[Symbol] = None) -> PurePoly:
    x = x or Symbol('x')
    return regge_matrix(kappa).as_sympy().charpoly(x)


def _same_polynomial(poly: PurePoly, expected) -> bool:
    return expand(poly.as_expr() - expected) == 0


def check_matrix_identities() -> Dict[str, bool]:
    """Every algebraic relation between R1..R5, evaluated exactly"""
    R = {k: regge_matrix(k).as_sympy() for k in KAPPAS}
    identity = eye(6)
    x = Symbol('x')

    checks = {}
    for k in (1, 2, 3):
        checks[f"R{k}^2 = I"] = R[k] * R[k] == identity
        checks[f"det R{k} = -1"] = determinant(k) == -1
        checks[f"charpoly R{k} = (x-1)^5 (x+1)"] = (
            _same_polynomial(characteristic_polynomial(k, x), (x - 1) ** 5 * (x + 1))
        )
    checks["R1R2 = R2R3 = R3R1"] = R[1] * R[2] == R[2] * R[3] == R[3] * R[1]
    checks["R2R1 = R3R2 = R1R3"] = R[2] * R[1] == R[3] * R[2] == R[1] * R[3]
    checks["R4R5 = I"] = R[4] * R[5] == identity
    checks["R5R4 = I"] = R[5] * R[4] == identity
    checks["R5 = R4^T"] = R[5] == R[4].T

    for k in (4, 5):
        checks[f"det R{k} = 1"] = determinant(k) == 1
        checks[f"charpoly R{k} = (x-1)^2 (x^2+x+1)^2"] = (
            _same_polynomial(characteristic_polynomial(k, x), (x - 1) ** 2 * (x ** 2 + x + 1) ** 2)
        )
        rows = set(_DOUBLED_ENTRIES[k])
        checks[f"R{k} has two rows of each of R1, R2, R3"] = all(
            len(rows & set(_DOUBLED_ENTRIES[i])) == 2 for i in (1, 2, 3)
        )

    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        logger.error(f"Regge matrix identities failed: {failed}")
    return checks
