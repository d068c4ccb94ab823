#!/usr/bin/env python3
# scripts/benchmark_table.py - Tempo de geração de uma tabela completa
"""
Generates one table into a temporary directory and fails when it takes longer
than the time limit (default: super table up to spin 10 within 60 seconds)
"""
import argparse
import logging
import os
import sys
import tempfile
import time

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.reports import TableConfig, TableGenerator
from src.spins import HalfInt, Mode


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Time a full table run")
    parser.add_argument('--max-spin', default='10')
    parser.add_argument('--mode', choices=['standard', 'super'], default='super')
    parser.add_argument('--workers', type=int, default=1)
    parser.add_argument('--limit', type=float, default=60.0, help='seconds')
    parser.add_argument('--log-level', default='WARNING')
    args = parser.parse_args(argv)

    logging.basicConfig(level=getattr(logging, args.log_level.upper(), logging.WARNING))

    with tempfile.TemporaryDirectory() as tmpdir:
        config = TableConfig(max_spin=HalfInt.parse(args.max_spin), mode=Mode(args.mode),
                             output_dir=tmpdir, workers=args.workers)
        start = time.perf_counter()
        result = TableGenerator(config).generate()
        elapsed = time.perf_counter() - start

    if not result['success']:
        print(f"❌ Falha na geração: {result['error']}")
        return 1

    print(f"⏱️ {result['lines']} linhas {args.mode} até spin {args.max_spin} "
          f"em {elapsed:.1f}s com {args.workers} processo(s)")
    if elapsed > args.limit:
        print(f"❌ Acima do limite de {args.limit:.0f}s")
        return 1

    print(f"✅ Dentro do limite de {args.limit:.0f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
