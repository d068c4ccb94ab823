"""Evaluation package: exact standard and super 6-j values"""
from .racah import alternating_numerator, alternating_sum, eval_6j, standard_line
from .superspins import (
    BetaLabels,
    Parity,
    beta_decomposition,
    eval_super_6j,
    evaluate,
    evaluate_line,
    monomial,
    parity_of,
    parity_of_doubled,
    phase_exponent,
    phase_of_doubled,
    super_line,
)

__all__ = [
    'BetaLabels',
    'Parity',
    'alternating_numerator',
    'alternating_sum',
    'beta_decomposition',
    'eval_6j',
    'eval_super_6j',
    'evaluate',
    'evaluate_line',
    'monomial',
    'parity_of',
    'parity_of_doubled',
    'phase_exponent',
    'phase_of_doubled',
    'standard_line',
    'super_line'
]
