"""Spin package: half-integer spins and 6-j symbols"""
from .models import (
    Doubled,
    HalfInt,
    Mode,
    SixJSymbol,
    TriangleQuad,
    make_symbol,
    triangle_sums,
    triangles,
)

__all__ = [
    'Doubled',
    'HalfInt',
    'Mode',
    'SixJSymbol',
    'TriangleQuad',
    'make_symbol',
    'triangle_sums',
    'triangles'
]
