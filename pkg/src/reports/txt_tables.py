"""
Text Tables Module
Line format and file writers for Rotenberg-style 6-j tables
"""
import logging
import os
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..arithmetic.rotenberg import RotenbergLine, to_rotenberg
from ..arithmetic.values import SqrtRationalValue
from ..errors import DomainError
from ..evaluation.superspins import Parity, parity_of
from ..orbits.partition import OrbitReport, PartitionClass
from ..spins.models import Mode, SixJSymbol, make_symbol

logger = logging.getLogger(__name__)

# Class files written per parity; beta closures only reach S0 and S1
CLASS_ROSTER: Dict[Parity, Tuple[PartitionClass, ...]] = {
    Parity.ALPHA: (PartitionClass.S0, PartitionClass.S1, PartitionClass.S2, PartitionClass.S5),
    Parity.BETA: (PartitionClass.S0, PartitionClass.S1),
    Parity.GAMMA: (PartitionClass.S0, PartitionClass.S1, PartitionClass.S2, PartitionClass.S5),
}


def format_line(doubled: Sequence[int], encoded: RotenbergLine, parity: Optional[Parity] = None) -> str:
    """Doubled spins, parity marker when given, then the Rotenberg field"""
    tokens = [' '.join(str(x) for x in doubled)]
    if parity is not None:
        tokens.append(parity.marker)
    tokens.append(encoded.render())
    return ' '.join(tokens)


def render_line(symbol: SixJSymbol, value: SqrtRationalValue, parity: Optional[Parity] = None) -> str:
    return format_line(symbol.doubled, to_rotenberg(value), parity)


def parse_line(text: str, mode: Mode) -> Tuple[SixJSymbol, Optional[Parity], SqrtRationalValue]:
    """Inverse of render_line"""
    tokens = text.split()
    if len(tokens) < 7:
        raise DomainError(f"Table line too short: {text!r}")

    try:
        symbol = make_symbol(*(int(t) for t in tokens[:6]))
    except ValueError:
        raise DomainError(f"Doubled spins must be integers: {text!r}")

    rest = tokens[6:]
    parity = None
    if mode is Mode.SUPER:
        parity = Parity.from_marker(rest[0])
        if parity is not parity_of(symbol):
            raise DomainError(f"Parity marker {rest[0]} does not match {symbol}")
        rest = rest[1:]

    value = RotenbergLine.parse(' '.join(rest)).decode()
    return symbol, parity, value


def render_class_line(symbol: SixJSymbol, report: OrbitReport) -> str:
    tokens = [symbol.to_line()]
    if report.parity is not None:
        tokens.append(report.parity.marker)
    tokens.extend([report.partition_class.tag, str(report.closure_size), str(report.count)])
    return ' '.join(tokens)


def table_filename(mode: Mode) -> str:
    return f"{mode.value}table.txt"


def class_filename(mode: Mode, parity: Parity, partition_class: PartitionClass) -> str:
    return f"{mode.value}{parity.value}{partition_class.value}.txt"


def zero_filename(mode: Mode, parity: Parity) -> str:
    return f"{mode.value}zero{parity.value}.txt"


def roster(mode: Mode) -> Dict[Parity, Tuple[PartitionClass, ...]]:
    """Standard tables only carry alpha symbols"""
    if mode is Mode.STANDARD:
        return {Parity.ALPHA: CLASS_ROSTER[Parity.ALPHA]}
    return CLASS_ROSTER


class TxtTableWriter:
    """Writes table, class and zero files into one output directory"""

    def __init__(self, output_dir: str):
        self.output_dir = output_dir
        os.makedirs(output_dir, exist_ok=True)

    def write_table(self, mode: Mode, lines: Iterable[str]) -> str:
        return self._save_lines(table_filename(mode), lines)

    def write_class_files(self, mode: Mode,
                          grouped: Dict[Tuple[Parity, PartitionClass], List[str]]) -> List[str]:
        files = []
        for parity, classes in roster(mode).items():
            for partition_class in classes:
                lines = grouped.get((parity, partition_class), [])
                files.append(self._save_lines(class_filename(mode, parity, partition_class), lines))

        unexpected = set(grouped) - {(p, c) for p, cs in roster(mode).items() for c in cs}
        if unexpected:
            raise DomainError(f"Lines outside the class file roster: {sorted(str(k) for k in unexpected)}")
        return files

    def write_zero_files(self, mode: Mode, grouped: Dict[Parity, List[str]]) -> List[str]:
        return [
            self._save_lines(zero_filename(mode, parity), grouped.get(parity, []))
            for parity in roster(mode)
        ]

    def _save_lines(self, filename: str, lines: Iterable[str]) -> str:
        """Save lines to file, newline terminated

        Lines go to a temporary name first; the final name only appears once
        every line has been written.
        """
        filepath = os.path.join(self.output_dir, filename)
        partial = filepath + '.tmp'

        try:
            with open(partial, 'w', encoding='utf-8', newline='\n') as f:
                for line in lines:
                    f.write(line)
                    f.write('\n')
            os.replace(partial, filepath)
        except BaseException:
            if os.path.exists(partial):
                os.remove(partial)
            raise

        logger.info(f"Text table saved: {filepath}")
        return filepath
