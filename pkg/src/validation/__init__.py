"""Validation package: triangle and parity rules of 6-j symbols"""
from .symbol_validator import (
    SymbolValidator,
    is_standard_valid,
    is_super_valid,
    is_valid_doubled,
    require_valid,
)

__all__ = [
    'SymbolValidator',
    'is_standard_valid',
    'is_super_valid',
    'is_valid_doubled',
    'require_valid'
]
