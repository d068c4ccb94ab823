"""
Symbol Validator Module
Triangle and parity checks for standard and super 6-j symbols
"""
from typing import Any, Dict, List

from ..errors import DomainError
from ..spins.models import Mode, SixJSymbol, triangle_sums


class SymbolValidator:
    """Validity rules of the p/q parameterization"""

    def validate_triangles(self, symbol: SixJSymbol) -> List[str]:
        """One message per (k, i) pair with q_k - p_i < 0"""
        errors = []
        p, q = triangle_sums(symbol.doubled)

        for k, qk in enumerate(q, start=1):
            for i, pi in enumerate(p, start=1):
                if qk < pi:
                    errors.append(
                        f"Triangle violated at (k={k}, i={i}): q{k} - p{i} = {(qk - pi) / 2:g}"
                    )

        return errors

    def validate_integer_triangles(self, symbol: SixJSymbol) -> List[str]:
        """Standard symbols need every p_i integer"""
        errors = []
        p, _ = triangle_sums(symbol.doubled)

        for i, pi in enumerate(p, start=1):
            if pi % 2:
                errors.append(f"Triangle p{i} = {pi}/2 is not an integer")

        return errors

    def validate_symbol_data(self, symbol: SixJSymbol, mode: Mode = Mode.STANDARD) -> Dict[str, Any]:
        """Comprehensive symbol validation"""
        result = {
            'is_valid': True,
            'errors': [],
            'warnings': [],
            'field_errors': {}
        }

        validations = [('triangles', self.validate_triangles)]
        if mode is Mode.STANDARD:
            validations.append(('parity', self.validate_integer_triangles))

        for field_name, validator in validations:
            field_errors = validator(symbol)
            if field_errors:
                result['field_errors'][field_name] = field_errors
                result['errors'].extend(field_errors)

        if mode is Mode.SUPER and not result['errors']:
            p, _ = triangle_sums(symbol.doubled)
            half_integer = sum(1 for x in p if x % 2)
            if half_integer == 2:
                result['warnings'].append("Parity beta: a single Regge transformation applies")

        result['is_valid'] = len(result['errors']) == 0

        return result

    def is_valid(self, symbol: SixJSymbol, mode: Mode) -> bool:
        if self.validate_triangles(symbol):
            return False
        if mode is Mode.STANDARD and self.validate_integer_triangles(symbol):
            return False
        return True

    def require_valid(self, symbol: SixJSymbol, mode: Mode) -> None:
        """Raise DomainError carrying the first violated rule"""
        report = self.validate_symbol_data(symbol, mode)
        if not report['is_valid']:
            raise DomainError(f"{symbol}: {report['errors'][0]}")


_validator = SymbolValidator()


def is_standard_valid(symbol: SixJSymbol) -> bool:
    return _validator.is_valid(symbol, Mode.STANDARD)


def is_super_valid(symbol: SixJSymbol) -> bool:
    return _validator.is_valid(symbol, Mode.SUPER)


def is_valid_doubled(doubled, mode: Mode) -> bool:
    """Fast path on a raw doubled tuple, used by enumeration"""
    p, q = triangle_sums(doubled)
    if min(q) < max(p):
        return False
    if mode is Mode.STANDARD and any(x % 2 for x in p):
        return False
    return True


def require_valid(symbol: SixJSymbol, mode: Mode) -> None:
    _validator.require_valid(symbol, mode)
