"""
Table Generator Module
Enumerates, evaluates and classifies symbols and coordinates the table writers
"""
import logging
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Tuple

from ..errors import ConfigurationError, ConsistencyError, DomainError
from ..evaluation.superspins import Parity, evaluate_line, parity_of_doubled
from ..orbits.enumeration import enumerate_canonical, prefixes
from ..orbits.partition import PartitionClass, classify, regge_star
from ..spins.models import HalfInt, Mode, SixJSymbol, triangle_sums
from .excel_summary import ExcelSummaryGenerator
from .txt_tables import TxtTableWriter, format_line, render_class_line

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONSISTENCY = 1
EXIT_IO = 2


@dataclass
class TableConfig:
    """Table generation configuration"""
    max_spin: HalfInt
    mode: Mode = Mode.SUPER
    classify: bool = False
    output_dir: str = 'output'
    workers: int = 1
    excel: bool = False
    chunk_size: int = 1

    def __post_init__(self):
        if self.max_spin.twice < 0:
            raise DomainError(f"max_spin must be >= 0, got {self.max_spin}")
        if self.workers < 1:
            raise DomainError(f"workers must be >= 1, got {self.workers}")
        if self.chunk_size < 1:
            raise DomainError(f"chunk_size must be >= 1, got {self.chunk_size}")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            'max_spin': str(self.max_spin),
            'mode': self.mode.value,
            'classify': self.classify,
            'output_dir': self.output_dir,
            'workers': self.workers,
            'excel': self.excel,
            'chunk_size': self.chunk_size
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'TableConfig':
        try:
            mode = Mode(data.get('mode', Mode.SUPER.value))
        except ValueError:
            raise ConfigurationError(f"mode must be 'standard' or 'super', got {data.get('mode')!r}")
        return cls(
            max_spin=HalfInt.parse(data['max_spin']),
            mode=mode,
            classify=bool(data.get('classify', False)),
            output_dir=data.get('output_dir', 'output'),
            workers=int(data.get('workers', 1)),
            excel=bool(data.get('excel', False)),
            chunk_size=int(data.get('chunk_size', 1))
        )


class TableRow(NamedTuple):
    line: str
    parity: Parity
    partition_class: Optional[PartitionClass]
    class_line: Optional[str]
    is_zero: bool


def enumerate_symbols(config: TableConfig) -> Iterator[SixJSymbol]:
    """Canonical valid symbols up to max_spin in lexicographic order"""
    for doubled in enumerate_canonical(config.max_spin.twice, config.mode):
        yield SixJSymbol.from_doubled(doubled)


def evaluate_prefix(task: Tuple[int, Mode, bool, Tuple[int, int]]) -> List[TableRow]:
    """Rows for every canonical symbol starting with the given (2J1, 2J2)"""
    max_twice, mode, with_classes, prefix = task
    rows = []

    for doubled in enumerate_canonical(max_twice, mode, prefix):
        encoded = evaluate_line(doubled, mode)
        parity = parity_of_doubled(triangle_sums(doubled)[0])
        line = format_line(doubled, encoded, parity if mode is Mode.SUPER else None)

        partition_class, class_line = None, None
        if with_classes:
            symbol = SixJSymbol.from_doubled(doubled)
            report = regge_star(symbol, mode)
            predicted = classify(symbol, mode)
            if predicted is not report.partition_class:
                raise ConsistencyError(
                    f"{symbol}: predicate gives {predicted.tag}, closure gives {report.partition_class.tag}"
                )
            partition_class = report.partition_class
            class_line = render_class_line(symbol, report)

        rows.append(TableRow(line, parity, partition_class, class_line, encoded.is_zero()))

    return rows


class TableGenerator:
    """Main table generator that coordinates workers and writers"""

    def __init__(self, config: TableConfig):
        self.config = config
        self.txt_writer = TxtTableWriter(config.output_dir)

    def _tasks(self) -> List[Tuple[int, Mode, bool, Tuple[int, int]]]:
        cfg = self.config
        return [(cfg.max_spin.twice, cfg.mode, cfg.classify, prefix)
                for prefix in prefixes(cfg.max_spin.twice)]

    def iter_rows(self) -> Iterator[TableRow]:
        """Rows in enumeration order whatever the worker count"""
        tasks = self._tasks()
        if self.config.workers == 1:
            for task in tasks:
                yield from evaluate_prefix(task)
            return

        with Pool(processes=self.config.workers) as pool:
            for rows in pool.imap(evaluate_prefix, tasks, chunksize=self.config.chunk_size):
                yield from rows

    def generate(self) -> Dict[str, Any]:
        """Write every file of the configured run"""
        cfg = self.config
        class_lines: Dict[Tuple[Parity, PartitionClass], List[str]] = {}
        zero_lines: Dict[Parity, List[str]] = {}
        counts: Dict[Tuple[str, str], int] = {}
        totals = {'lines': 0}

        def table_lines() -> Iterator[str]:
            for row in self.iter_rows():
                totals['lines'] += 1
                if row.is_zero:
                    zero_lines.setdefault(row.parity, []).append(row.line)
                if row.class_line is not None:
                    class_lines.setdefault((row.parity, row.partition_class), []).append(row.class_line)
                    key = (row.parity.marker, row.partition_class.tag)
                    counts[key] = counts.get(key, 0) + 1
                yield row.line

        try:
            logger.info(f"Generating {cfg.mode.value} table up to spin {cfg.max_spin} "
                        f"with {cfg.workers} worker(s)")
            files = [self.txt_writer.write_table(cfg.mode, table_lines())]
            files.extend(self.txt_writer.write_zero_files(cfg.mode, zero_lines))
            if cfg.classify:
                files.extend(self.txt_writer.write_class_files(cfg.mode, class_lines))

            result = {
                'success': True,
                'files': files,
                'lines': totals['lines'],
                'zeros': {p.marker: len(v) for p, v in zero_lines.items()},
                'counts': counts,
                'exit_code': EXIT_OK,
            }

            if cfg.excel:
                excel = ExcelSummaryGenerator(cfg.output_dir).generate_summary(cfg, result)
                if excel['success']:
                    files.append(excel['filepath'])
                else:
                    logger.warning(f"Excel summary skipped: {excel['error']}")

            logger.info(f"Table finished: {totals['lines']} lines, {len(files)} files")
            return result

        except ConsistencyError as e:
            logger.error(f"Consistency check failed: {e}")
            return {'success': False, 'error': str(e), 'exit_code': EXIT_CONSISTENCY}
        except (OSError, DomainError) as e:
            logger.error(f"Error generating table: {e}")
            return {'success': False, 'error': str(e), 'exit_code': EXIT_IO}


def run(config: TableConfig) -> int:
    """Generate the configured tables and return the exit status"""
    try:
        generator = TableGenerator(config)
    except OSError as e:
        logger.error(f"Cannot create output directory {config.output_dir}: {e}")
        return EXIT_IO
    return generator.generate()['exit_code']
