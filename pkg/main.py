#!/usr/bin/env python3
"""
6-j Table Generator
Exact Rotenberg-style tables of standard and super 6-j symbols
"""
import argparse
import logging
import os
import sys

# Add project root to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.config import TableConfigManager
from src.errors import ConfigurationError, DomainError
from src.reports.table_generator import EXIT_IO, TableConfig, run

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Generate exact tables of 6-j and super 6-j symbols"
    )
    parser.add_argument('--max-spin', help='largest spin, e.g. 10 or 21/2')
    parser.add_argument('--mode', choices=['standard', 'super'])
    parser.add_argument('--classify', action='store_true', default=None,
                        help='also write one file per parity and partition class')
    parser.add_argument('--out', dest='output_dir', help='output directory')
    parser.add_argument('--workers', type=int, help='number of worker processes')
    parser.add_argument('--chunk-size', type=int, help='tasks handed to a worker at a time')
    parser.add_argument('--excel', action='store_true', default=None,
                        help='write an Excel summary (requires openpyxl)')
    parser.add_argument('--config', help='YAML configuration file')
    parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    return parser


def load_settings(args: argparse.Namespace) -> dict:
    """Configuration file values overridden by command-line flags"""
    if args.config:
        if not os.path.exists(args.config):
            raise ConfigurationError(f"Configuration file not found: {args.config}")
        manager = TableConfigManager(config_path=args.config)
    else:
        manager = TableConfigManager()
    settings = manager.load_config()

    overrides = {
        'max_spin': args.max_spin,
        'mode': args.mode,
        'classify': args.classify,
        'output_dir': args.output_dir,
        'workers': args.workers,
        'chunk_size': args.chunk_size,
        'excel': args.excel,
        'log_level': args.log_level,
    }
    settings.update({k: v for k, v in overrides.items() if v is not None})
    return settings


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    try:
        settings = load_settings(args)
    except ConfigurationError as e:
        logging.basicConfig(level=logging.INFO)
        logger.error(f"Invalid configuration: {e}")
        return EXIT_IO

    logging.basicConfig(
        level=getattr(logging, settings['log_level'], logging.INFO),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s'
    )

    try:
        config = TableConfig.from_dict(settings)
    except (ConfigurationError, DomainError) as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_IO

    return run(config)


if __name__ == "__main__":
    sys.exit(main())
