"""
Regge Partition Module
Closure of a symbol under Regge transformations modulo S4, partition classes
from the equality pattern of triangles and quadrangles, and exhaustive scans
"""
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from ..errors import ConsistencyError
from ..evaluation.superspins import Parity, beta_decomposition, parity_of_doubled
from ..regge.transforms import applicable_kappas, regge_doubled
from ..spins.models import Doubled, HalfInt, Mode, SixJSymbol, triangle_sums
from ..validation.symbol_validator import require_valid
from .enumeration import enumerate_canonical
from .symmetry import canonical_tuple

logger = logging.getLogger(__name__)


class PartitionClass(Enum):
    """Regge-partition set, named by its index"""
    S0 = 0
    S1 = 1
    S2 = 2
    S5 = 5

    @property
    def tag(self) -> str:
        return self.name

    @classmethod
    def from_representatives(cls, count: int) -> 'PartitionClass':
        classes = {1: cls.S0, 2: cls.S1, 3: cls.S2, 6: cls.S5}
        if count not in classes:
            raise ConsistencyError(f"Closure of {count} S4 classes ({24 * count} symbols) is impossible")
        return classes[count]


@dataclass(frozen=True)
class OrbitReport:
    """Canonical representatives of one Regge closure, query symbol first"""
    representatives: Tuple[SixJSymbol, ...]
    closure_size: int
    partition_class: PartitionClass
    parity: Optional[Parity] = None

    @property
    def count(self) -> int:
        return len(self.representatives)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'representatives': [s.to_line() for s in self.representatives],
            'closure_size': self.closure_size,
            'class': self.partition_class.tag,
            'parity': self.parity.marker if self.parity else None,
        }


def closure_doubled(doubled: Doubled, mode: Mode) -> List[Doubled]:
    """Canonical tuples reachable through applicable transformations, start first"""
    start = canonical_tuple(doubled)
    seen = {start}
    pending = [start]
    while pending:
        current = pending.pop()
        for kappa in applicable_kappas(current, mode):
            image = regge_doubled(kappa, current)
            if image is None:
                raise ConsistencyError(f"R{kappa} listed as applicable but rejected {current}")
            canonical = canonical_tuple(image)
            if canonical not in seen:
                seen.add(canonical)
                pending.append(canonical)

    others = sorted(seen - {start})
    return [start] + others


def regge_star(symbol: SixJSymbol, mode: Mode) -> OrbitReport:
    """S4-filtered transitive Regge closure"""
    require_valid(symbol, mode)
    members = closure_doubled(symbol.doubled, mode)
    p, _ = triangle_sums(symbol.doubled)
    return OrbitReport(
        representatives=tuple(SixJSymbol.from_doubled(t) for t in members),
        closure_size=24 * len(members),
        partition_class=PartitionClass.from_representatives(len(members)),
        parity=parity_of_doubled(p) if mode is Mode.SUPER else None,
    )


def _stabilizer_order(values) -> int:
    """Order of the S3 image of the stabilizer of a triangle or quadrangle tuple"""
    pattern = sorted(Counter(values).values())
    if max(pattern) >= 3:
        return 6
    if max(pattern) == 2:
        return 2
    return 1


def _classify_doubled(doubled: Doubled, mode: Mode) -> PartitionClass:
    p, q = triangle_sums(doubled)

    if mode is Mode.SUPER and parity_of_doubled(p) is Parity.BETA:
        labels = beta_decomposition(SixJSymbol.from_doubled(doubled))
        if (labels.qbar == labels.qbar_prime or labels.p == labels.p_prime
                or labels.pbar == labels.pbar_prime):
            return PartitionClass.S0
        return PartitionClass.S1

    h = _stabilizer_order(p)
    k = _stabilizer_order(q)
    if h == 6 or k == 6:
        return PartitionClass.S0
    if h == k == 2:
        return PartitionClass.S1
    if h == k == 1:
        return PartitionClass.S5
    return PartitionClass.S2


def classify(symbol: SixJSymbol, mode: Mode) -> PartitionClass:
    """Partition class read from the equality pattern of p and q"""
    require_valid(symbol, mode)
    return _classify_doubled(symbol.doubled, mode)


def classify_oracle(symbol: SixJSymbol, mode: Mode) -> PartitionClass:
    """Partition class read from the brute-force closure size"""
    return regge_star(symbol, mode).partition_class


def scan_partitions(max_spin: HalfInt, mode: Mode) -> Dict[str, Any]:
    """Classify every canonical symbol up to max_spin both ways and tally the results"""
    counts: Dict[str, Dict[str, int]] = {}
    closure_sizes: Dict[str, set] = {}
    mismatches = []
    total = 0

    for doubled in enumerate_canonical(max_spin.twice, mode):
        total += 1
        members = closure_doubled(doubled, mode)
        oracle = PartitionClass.from_representatives(len(members))
        predicted = _classify_doubled(doubled, mode)
        if predicted is not oracle:
            mismatches.append((doubled, predicted.tag, oracle.tag))

        p, _ = triangle_sums(doubled)
        parity = parity_of_doubled(p).marker if mode is Mode.SUPER else '-'
        parities_seen = {parity_of_doubled(triangle_sums(t)[0]) for t in members}
        if len(parities_seen) != 1:
            raise ConsistencyError(f"Parity changes inside the closure of {doubled}")

        by_class = counts.setdefault(parity, {})
        by_class[oracle.tag] = by_class.get(oracle.tag, 0) + 1
        closure_sizes.setdefault(parity, set()).add(24 * len(members))

    if mismatches:
        logger.error(f"{len(mismatches)} predicate/oracle mismatches, first: {mismatches[0]}")
    logger.info(f"Scanned {total} {mode.value} symbols up to spin {max_spin}")

    return {
        'mode': mode.value,
        'max_spin': str(max_spin),
        'symbols': total,
        'counts': counts,
        'closure_sizes': {k: sorted(v) for k, v in closure_sizes.items()},
        'mismatches': mismatches,
        'agreement': not mismatches,
    }
