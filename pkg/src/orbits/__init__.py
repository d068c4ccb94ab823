"""Orbits package: S4 aspects, canonical forms and Regge partition classes"""
from .enumeration import enumerate_canonical, prefixes
from .partition import (
    OrbitReport,
    PartitionClass,
    classify,
    classify_oracle,
    closure_doubled,
    regge_star,
    scan_partitions,
)
from .symmetry import (
    aspects_doubled,
    canonical_form,
    canonical_tuple,
    is_canonical,
    s4_rearrangements,
)

__all__ = [
    'OrbitReport',
    'PartitionClass',
    'aspects_doubled',
    'canonical_form',
    'canonical_tuple',
    'classify',
    'classify_oracle',
    'closure_doubled',
    'enumerate_canonical',
    'is_canonical',
    'prefixes',
    'regge_star',
    's4_rearrangements',
    'scan_partitions'
]
