#!/usr/bin/env python3
"""Render every result CSV in a directory, plus overlay figures per group.

Usage:
    python scripts/render_all.py RESULTS_DIR [IMAGES_DIR]

Each CSV becomes one PNG+SVG pair.  Files sharing a prefix before the last
underscore (fig5a_pair/fig5a_single, fig6a_*, fig6b_*) additionally get a
combined overlay figure under the shared prefix.
"""

import sys
from collections import defaultdict
from pathlib import Path

from walk_figures.render import FigureSpec, kind_of, render


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__, file=sys.stderr)
        return 2
    results = Path(sys.argv[1])
    images = Path(sys.argv[2]) if len(sys.argv) > 2 else results / "images"
    csvs = sorted(results.glob("*.csv"))
    if not csvs:
        print(f"error: no CSV files in {results}", file=sys.stderr)
        return 2

    groups = defaultdict(list)
    for path in csvs:
        render(FigureSpec(inputs=(path,), kind=kind_of(path), output=images / path.stem))
        if "_" in path.stem:
            groups[path.stem.rsplit("_", 1)[0]].append(path)

    for prefix, members in sorted(groups.items()):
        if len(members) < 2:
            continue
        kinds = {kind_of(p) for p in members}
        if len(kinds) != 1:
            continue
        render(
            FigureSpec(
                inputs=tuple(members),
                kind=kinds.pop(),
                output=images / prefix,
                labels=tuple(p.stem.rsplit("_", 1)[1] for p in members),
            )
        )
    print(f"rendered {len(csvs)} CSVs into {images}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
