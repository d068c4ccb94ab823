#!/usr/bin/env python3
# scripts/scan_partitions.py - Varredura exaustiva das classes de partição
"""
Classifies every canonical symbol up to a spin bound by the triangle/quadrangle
predicates and by brute-force Regge closure, and reports counts per class
"""
import argparse
import logging
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.orbits import scan_partitions
from src.regge import check_matrix_identities
from src.spins import HalfInt, Mode


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Exhaustive Regge partition scan")
    parser.add_argument('--max-spin', default='9/2')
    parser.add_argument('--mode', choices=['standard', 'super'], default='standard')
    parser.add_argument('--log-level', default='WARNING')
    args = parser.parse_args(argv)

    logging.basicConfig(level=getattr(logging, args.log_level.upper(), logging.WARNING))

    identities = check_matrix_identities()
    failed = [name for name, ok in identities.items() if not ok]
    print(f"🔢 Identidades das matrizes: {len(identities) - len(failed)}/{len(identities)}")

    summary = scan_partitions(HalfInt.parse(args.max_spin), Mode(args.mode))
    print(f"🔍 {summary['symbols']} símbolos {summary['mode']} até spin {summary['max_spin']}")
    for parity, classes in sorted(summary['counts'].items()):
        sizes = ', '.join(str(s) for s in summary['closure_sizes'][parity])
        detail = ', '.join(f"{tag}: {n}" for tag, n in sorted(classes.items()))
        print(f"   {parity} {detail} (fechos: {sizes})")

    if summary['agreement'] and not failed:
        print("✅ Predicados e fechos concordam em todos os símbolos")
        return 0

    print(f"❌ {len(summary['mismatches'])} divergências, {len(failed)} identidades falharam")
    return 1


if __name__ == "__main__":
    sys.exit(main())
