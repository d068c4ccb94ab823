"""Reports package: 6-j table generation and writers"""
from .excel_summary import ExcelSummaryGenerator
from .table_generator import TableConfig, TableGenerator, enumerate_symbols, evaluate_prefix, run
from .txt_tables import TxtTableWriter, format_line, parse_line, render_class_line, render_line

__all__ = [
    'ExcelSummaryGenerator',
    'TableConfig',
    'TableGenerator',
    'TxtTableWriter',
    'enumerate_symbols',
    'evaluate_prefix',
    'format_line',
    'parse_line',
    'render_class_line',
    'render_line',
    'run'
]
