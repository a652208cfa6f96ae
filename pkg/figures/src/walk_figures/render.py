"""Render walk result CSVs into static images.

Input files are the CSVs written by the `dihedral-walk` CLI and are taken as
the single source of numerical truth: nothing here recomputes physics.  Two
figure kinds are supported, matching the two CSV schemas:

- distribution-bars: header `vertex_index,s,x,probability`; bars over the
  vertex axis 0 .. 2N-1, probability on y.
- time-series: header `t,running_average`; one line per input file.

Schema checking is strict: a missing, extra, or reordered column aborts with
the offending column named, and an empty file aborts naming the file.

Rendering is pinned for byte-stable output: Agg/SVG backends, fixed figure
geometry, fixed font, no timestamps in the metadata.  Each render emits both
a PNG and an SVG next to the requested output path.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

__all__ = ["FigureSpec", "SchemaError", "render", "main"]

DISTRIBUTION_HEADER = ["vertex_index", "s", "x", "probability"]
SERIES_HEADER = ["t", "running_average"]

_FIGSIZE = (8.0, 4.5)
_DPI = 110

matplotlib.rcParams.update(
    {
        "svg.hashsalt": "walk-figures",
        "font.family": "DejaVu Sans",
        "figure.figsize": _FIGSIZE,
        "figure.dpi": _DPI,
        "savefig.dpi": _DPI,
    }
)

_PNG_METADATA = {"Software": "walk-figures"}
_SVG_METADATA = {"Date": None, "Creator": "walk-figures"}


class SchemaError(ValueError):
    """Input file does not match the expected CSV schema."""


@dataclass(frozen=True)
class FigureSpec:
    """One figure: input CSV path(s), kind, per-input labels, output path."""

    inputs: tuple[Path, ...]
    kind: str  # "distribution-bars" | "time-series"
    output: Path
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in ("distribution-bars", "time-series"):
            raise SchemaError(f"unknown figure kind {self.kind!r}")
        if not self.inputs:
            raise SchemaError("at least one input CSV is required")
        if self.labels and len(self.labels) != len(self.inputs):
            raise SchemaError(
                f"got {len(self.labels)} labels for {len(self.inputs)} inputs"
            )


def _check_header(header: list[str], expected: list[str], path: Path) -> None:
    for name in header:
        if name not in expected:
            raise SchemaError(f"unknown column {name!r} in {path}")
    for name in expected:
        if name not in header:
            raise SchemaError(f"missing column {name!r} in {path}")
    if header != expected:
        raise SchemaError(f"column order must be {expected} in {path}, got {header}")


def _read_csv(path: Path, expected: list[str]) -> list[list[str]]:
    try:
        with open(path, newline="") as handle:
            rows = list(csv.reader(handle))
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise SchemaError(f"empty CSV: {path}")
    _check_header(rows[0], expected, path)
    body = [r for r in rows[1:] if r]
    if not body:
        raise SchemaError(f"no data rows in {path}")
    for r in body:
        if len(r) != len(expected):
            raise SchemaError(f"row with {len(r)} fields (expected {len(expected)}) in {path}")
    return body


def _load_distribution(path: Path) -> np.ndarray:
    body = _read_csv(path, DISTRIBUTION_HEADER)
    try:
        vertices = np.array([int(r[0]) for r in body])
        probs = np.array([float(r[3]) for r in body])
    except ValueError as exc:
        raise SchemaError(f"non-numeric field in {path}: {exc}") from exc
    if sorted(vertices.tolist()) != list(range(len(body))):
        raise SchemaError(f"vertex_index must cover 0..{len(body) - 1} in {path}")
    ordered = np.empty(len(body))
    ordered[vertices] = probs
    return ordered


def _load_series(path: Path) -> tuple[np.ndarray, np.ndarray]:
    body = _read_csv(path, SERIES_HEADER)
    try:
        ts = np.array([int(r[0]) for r in body])
        values = np.array([float(r[1]) for r in body])
    except ValueError as exc:
        raise SchemaError(f"non-numeric field in {path}: {exc}") from exc
    return ts, values


def _default_labels(spec: FigureSpec) -> tuple[str, ...]:
    return spec.labels or tuple(p.stem for p in spec.inputs)


def _title_for(spec: FigureSpec) -> str:
    # derived from the data files, so identical inputs render identically
    # regardless of where the image is written
    if len(spec.inputs) == 1:
        return spec.inputs[0].stem
    stems = [p.stem for p in spec.inputs]
    prefix = stems[0].rsplit("_", 1)[0]
    if all(s.startswith(prefix) for s in stems):
        return prefix
    return stems[0]


def render(spec: FigureSpec) -> tuple[Path, Path]:
    """Render one figure; writes `<output stem>.png` and `.svg`.

    Returns the two written paths.  Inputs are opened read-only and never
    modified.
    """
    labels = _default_labels(spec)
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    try:
        if spec.kind == "distribution-bars":
            width = 0.8 / len(spec.inputs)
            num_vertices = None
            for i, (path, label) in enumerate(zip(spec.inputs, labels)):
                probs = _load_distribution(path)
                if num_vertices is None:
                    num_vertices = len(probs)
                elif len(probs) != num_vertices:
                    raise SchemaError(
                        f"{path} has {len(probs)} vertices, expected {num_vertices}"
                    )
                offsets = np.arange(num_vertices) + (i - (len(spec.inputs) - 1) / 2) * width
                ax.bar(offsets, probs, width=width, label=label)
            ax.set_xlabel("vertex index")
            ax.set_ylabel("probability")
            ax.set_xlim(-0.5, num_vertices - 0.5)
            ax.set_ylim(bottom=0.0)
        else:
            for path, label in zip(spec.inputs, labels):
                ts, values = _load_series(path)
                ax.plot(ts, values, label=label, linewidth=1.2)
            ax.set_xlabel("t")
            ax.set_ylabel("running average")
        if len(spec.inputs) > 1:
            ax.legend(fontsize=8)
        ax.set_title(_title_for(spec))

        spec.output.parent.mkdir(parents=True, exist_ok=True)
        png_path = spec.output.with_suffix(".png")
        svg_path = spec.output.with_suffix(".svg")
        fig.savefig(png_path, format="png", metadata=_PNG_METADATA)
        fig.savefig(svg_path, format="svg", metadata=_SVG_METADATA)
    finally:
        plt.close(fig)
    return png_path, svg_path


def kind_of(path: Path) -> str:
    """Figure kind implied by a CSV's header."""
    try:
        with open(path, newline="") as handle:
            header = next(csv.reader(handle), None)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    if header == DISTRIBUTION_HEADER:
        return "distribution-bars"
    if header == SERIES_HEADER:
        return "time-series"
    raise SchemaError(f"unrecognized header in {path}: {header}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="walk-figures", description="Render walk result CSVs to PNG+SVG"
    )
    parser.add_argument("inputs", nargs="+", help="input CSV file(s)")
    parser.add_argument("--kind", choices=["distribution-bars", "time-series"],
                        help="default: inferred from the CSV header")
    parser.add_argument("--label", action="append", help="one label per input")
    parser.add_argument("--out", required=True, help="output image path (stem is reused for .png/.svg)")
    args = parser.parse_args(argv)
    inputs = tuple(Path(p) for p in args.inputs)
    try:
        kind = args.kind or kind_of(inputs[0])
        spec = FigureSpec(
            inputs=inputs,
            kind=kind,
            output=Path(args.out),
            labels=tuple(args.label) if args.label else (),
        )
        for path in render(spec):
            print(f"wrote {path}")
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
