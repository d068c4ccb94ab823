"""Regge package: transformation matrices, compact forms and invariants"""
from .matrices import (
    KAPPAS,
    ReggeMatrix,
    ReggeRejection,
    apply_matrix,
    characteristic_polynomial,
    check_matrix_identities,
    determinant,
    regge_matrix,
)
from .transforms import (
    alternative_forms,
    applicable_kappas,
    applicable_set,
    apply_regge,
    bilinear_form,
    linear_form,
    regge_doubled,
)

__all__ = [
    'KAPPAS',
    'ReggeMatrix',
    'ReggeRejection',
    'alternative_forms',
    'applicable_kappas',
    'applicable_set',
    'apply_matrix',
    'apply_regge',
    'bilinear_form',
    'characteristic_polynomial',
    'check_matrix_identities',
    'determinant',
    'linear_form',
    'regge_doubled',
    'regge_matrix'
]
