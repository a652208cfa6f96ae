#!/usr/bin/env python3
"""Run every experiment preset and collect the CSV/JSON outputs.

Usage:
    python scripts/reproduce_figures.py [outdir] [--horizon T]

Writes distribution snapshots (fig3*, fig4*, fig5*) and running-average
series with their limit sidecars (fig6*) into `outdir` (default: results/).
"""

import argparse
import sys
from pathlib import Path

from dihedral_walk.cli import PRESETS, run_presets


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", nargs="?", default="results")
    parser.add_argument("--horizon", type=int, default=None,
                        help="override the averaging horizon of the fig6 presets")
    args = parser.parse_args()
    written = run_presets(sorted(PRESETS), Path(args.outdir), args.horizon)
    for path in written:
        print(f"wrote {path}")
    print(f"{len(written)} files in {args.outdir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
