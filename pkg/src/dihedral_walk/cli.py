"""Reproducible experiment runner.

Subcommands
-----------
distribution   vertex probabilities after a fixed number of steps
time-average   running time average at one vertex, plus both limit values
spectrum       per-momentum eigenvalues (numeric, and closed-form when available)
verify         run the cross-validation property suites
preset         canned experiment configurations (fig3a..fig6b)

Configuration is read from an optional flat key=value file (--config) and
overridden by command-line flags; flags win.  Complex amplitudes are written
as re+imi pairs, e.g. 0.5-0.25i.  All numeric CSV fields are serialized as
shortest round-trip decimals, so identical configs produce byte-identical
files.

Exit codes: 0 success, 2 configuration error, 3 verification failure.

Examples
--------
  dihedral-walk distribution --n 50 --coin grover --initial-coin 1,0,0 \
      --position 1,0:1 --steps 200 --out dist.csv
  dihedral-walk time-average --n 50 --horizon 2000 --position 1,0:1 \
      --vertex 50 --out series.csv
  dihedral-walk spectrum --n 12 --coin grover --out spectrum.csv
  dihedral-walk preset fig3a --outdir results/
  dihedral-walk verify --scale quick
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import sys
import time
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
from scipy.optimize import linear_sum_assignment

from . import spectral, verify, walk
from .dihedral import DihedralParams, GroupElement, encode_vertex
from .oracle import MAX_DENSE_N, oracle_evolve

try:  # installed package metadata, if available
    from importlib.metadata import version as _pkg_version

    VERSION = _pkg_version("dihedral-walk")
except Exception:  # pragma: no cover
    VERSION = "0.1.0"

__all__ = ["main", "RunConfig", "ConfigError", "PRESETS", "preset_runs"]


class ConfigError(ValueError):
    """Invalid run configuration; maps to exit code 2."""


# ---------- value formatting ----------

def fmt_float(x: float) -> str:
    """Shortest decimal that round-trips the double exactly."""
    return repr(float(x))


def fmt_complex(z: complex) -> str:
    z = complex(z)
    sign = "+" if z.imag >= 0 or z.imag != z.imag else "-"
    return f"{fmt_float(z.real)}{sign}{fmt_float(abs(z.imag))}i"


def parse_complex(text: str) -> complex:
    s = text.strip()
    if not s:
        raise ConfigError("empty complex amplitude")
    if s.endswith(("i", "I")):
        s = s[:-1] + "j"
    try:
        return complex(s)
    except ValueError as exc:
        raise ConfigError(f"cannot parse complex amplitude {text!r} (expected re+imi)") from exc


def _parse_complex_list(text: str, expected: int, what: str) -> tuple[complex, ...]:
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != expected:
        raise ConfigError(f"{what} needs {expected} comma-separated values, got {len(parts)}")
    return tuple(parse_complex(p) for p in parts)


def _parse_position(text: str) -> tuple[int, int, complex]:
    """One weighted start vertex, written s,t or s,t:amplitude."""
    body, _, amp = text.partition(":")
    try:
        s_str, t_str = body.split(",")
        s, t = int(s_str), int(t_str)
    except ValueError as exc:
        raise ConfigError(f"cannot parse position {text!r} (expected s,t[:amp])") from exc
    weight = parse_complex(amp) if amp else 1.0 + 0j
    return s, t, weight


def _positions_to_text(positions) -> str:
    return ";".join(f"{s},{t}:{fmt_complex(w)}" for s, t, w in positions)


# ---------- run configuration ----------

@dataclass(frozen=True)
class RunConfig:
    n: int = 3
    coin: str = "grover"
    coin_matrix: tuple[complex, ...] | None = None
    initial_coin: tuple[complex, complex, complex] = (1.0 + 0j, 0j, 0j)
    positions: tuple[tuple[int, int, complex], ...] = ((0, 0, 1.0 + 0j),)
    steps: int = 0
    horizon: int = 1
    vertex: int | None = None
    backend: str = "direct"
    out: str | None = None
    out_format: str = "csv"

    def params(self) -> DihedralParams:
        try:
            return DihedralParams(self.n)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def echo(self) -> dict[str, str]:
        data = {
            "n": str(self.n),
            "coin": self.coin,
            "initial_coin": ",".join(fmt_complex(z) for z in self.initial_coin),
            "positions": _positions_to_text(self.positions),
            "steps": str(self.steps),
            "horizon": str(self.horizon),
            "backend": self.backend,
            "format": self.out_format,
        }
        if self.coin_matrix is not None:
            data["coin_matrix"] = ",".join(fmt_complex(z) for z in self.coin_matrix)
        if self.vertex is not None:
            data["vertex"] = str(self.vertex)
        if self.out is not None:
            data["out"] = self.out
        return data


def _coin_operator(cfg: RunConfig) -> walk.CoinOperator:
    if cfg.coin == "grover":
        return walk.grover_coin()
    if cfg.coin == "dft":
        return walk.dft_coin()
    if cfg.coin == "custom":
        if cfg.coin_matrix is None:
            raise ConfigError("coin=custom requires coin_matrix with 9 entries")
        try:
            return walk.CoinOperator(np.array(cfg.coin_matrix, dtype=complex).reshape(3, 3))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    raise ConfigError(f"unknown coin {cfg.coin!r} (choose grover, dft, or custom)")


def _initial_state(cfg: RunConfig) -> walk.WalkerState:
    p = cfg.params()
    try:
        coin0 = walk.InitialCoinState(*cfg.initial_coin)
        positions = [(GroupElement(s, t), w) for s, t, w in cfg.positions]
        return walk.superposition_state(coin0, positions, p)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _validate_common(cfg: RunConfig) -> None:
    cfg.params()
    if cfg.backend not in ("direct", "fourier", "oracle"):
        raise ConfigError(f"unknown backend {cfg.backend!r}")
    if cfg.backend == "oracle" and cfg.n > MAX_DENSE_N:
        raise ConfigError(f"backend=oracle requires N <= {MAX_DENSE_N}, got N={cfg.n}")
    if cfg.steps < 0:
        raise ConfigError(f"steps must be >= 0, got {cfg.steps}")
    if cfg.horizon < 1:
        raise ConfigError(f"horizon must be >= 1, got {cfg.horizon}")
    if cfg.out_format not in ("csv", "json"):
        raise ConfigError(f"unknown output format {cfg.out_format!r}")
    if cfg.vertex is not None and not 0 <= cfg.vertex < 2 * cfg.n:
        raise ConfigError(f"vertex {cfg.vertex} out of range [0, {2 * cfg.n})")


def _default_vertex(cfg: RunConfig) -> int:
    if cfg.vertex is not None:
        return cfg.vertex
    s, t, _ = cfg.positions[0]
    return encode_vertex(GroupElement(s, t), cfg.params())


# ---------- run records and file output ----------

@dataclass
class RunRecord:
    config: dict[str, str]
    version: str
    wall_time_s: float
    results: dict
    csv_rows: list[str] = field(default_factory=list)
    header: str = ""
    sidecars: dict[str, dict] = field(default_factory=dict)

    def write(self, out_path: Path) -> list[Path]:
        written = []
        if self.header:
            out_path.parent.mkdir(parents=True, exist_ok=True)
            out_path.write_text("\n".join([self.header, *self.csv_rows]) + "\n")
            written.append(out_path)
        for suffix, payload in self.sidecars.items():
            side = out_path.with_name(out_path.stem + suffix)
            side.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
            written.append(side)
        record = {
            "version": self.version,
            "config": self.config,
            "wall_time_s": self.wall_time_s,
            "results": self.results,
        }
        rec_path = out_path.with_name(out_path.stem + ".run.json")
        rec_path.write_text(json.dumps(record, indent=2, sort_keys=True) + "\n")
        written.append(rec_path)
        return written


# ---------- commands ----------

def cmd_distribution(cfg: RunConfig) -> RunRecord:
    _validate_common(cfg)
    started = time.perf_counter()
    state = _initial_state(cfg)
    coin = _coin_operator(cfg)
    if cfg.backend == "direct":
        final = walk.evolve(state, coin, cfg.steps)
    elif cfg.backend == "fourier":
        final = spectral.evolve_fourier(state, coin, cfg.steps)
    else:
        final = oracle_evolve(state, coin, cfg.steps)
    dist = walk.position_distribution(final)
    n = cfg.n
    rows = [
        f"{v},{v // n},{v % n},{fmt_float(dist.probs[v])}" for v in range(2 * n)
    ]
    return RunRecord(
        config=cfg.echo(),
        version=VERSION,
        wall_time_s=time.perf_counter() - started,
        results={"probabilities": [fmt_float(x) for x in dist.probs]},
        csv_rows=rows,
        header="vertex_index,s,x,probability",
    )


def cmd_time_average(cfg: RunConfig) -> RunRecord:
    _validate_common(cfg)
    if cfg.backend == "fourier":
        raise ConfigError("time-average supports backends direct and oracle only")
    started = time.perf_counter()
    state = _initial_state(cfg)
    coin = _coin_operator(cfg)
    vertex = _default_vertex(cfg)
    if cfg.backend == "oracle":
        from .oracle import build_dense_unitary

        u = build_dense_unitary(coin, cfg.params()).matrix
        vec = state.amplitudes.reshape(-1).copy()
        n = cfg.n
        s, x = divmod(vertex, n)
        series = np.empty(cfg.horizon)
        acc = 0.0
        for t in range(cfg.horizon):
            acc += float((np.abs(vec.reshape(3, 2, n)[:, s, x]) ** 2).sum())
            series[t] = acc / (t + 1)
            if t + 1 < cfg.horizon:
                vec = u @ vec
    else:
        series = walk.running_average_series(state, coin, cfg.horizon, vertex)

    p = cfg.params()
    degenerate = spectral.limiting_profile(state, coin)[vertex]
    system = spectral.numeric_eigensystem(spectral.momentum_blocks(coin, p))
    coeffs = spectral._projection_coefficients(system, spectral.dtft_forward(state))
    theorem1 = float((np.abs(coeffs) ** 2).sum() / p.n**2)
    limits = {
        "theorem1_limit": theorem1,
        "degenerate_limit": degenerate,
        "gap": theorem1 - degenerate,
    }
    rows = [f"{t + 1},{fmt_float(series[t])}" for t in range(cfg.horizon)]
    return RunRecord(
        config=cfg.echo(),
        version=VERSION,
        wall_time_s=time.perf_counter() - started,
        results={"vertex": vertex, "final_running_average": fmt_float(series[-1]), "limits": limits},
        csv_rows=rows,
        header="t,running_average",
        sidecars={".limits.json": limits},
    )


def cmd_spectrum(cfg: RunConfig) -> RunRecord:
    _validate_common(cfg)
    started = time.perf_counter()
    coin = _coin_operator(cfg)
    p = cfg.params()
    system = spectral.numeric_eigensystem(spectral.momentum_blocks(coin, p))
    analytic_available = spectral.is_grover(coin)
    rows = []
    max_err = 0.0
    for k in range(p.n):
        numeric = system.eigenvalues[k]
        if analytic_available:
            reference = spectral.analytic_eigenvalues(k, p).values
            cost = np.abs(numeric[:, None] - reference[None, :])
            ordering, targets = linear_sum_assignment(cost)
            ordered = np.empty(6, dtype=complex)
            errs = np.empty(6)
            for src, dst in zip(ordering, targets):
                ordered[dst] = numeric[src]
                errs[dst] = cost[src, dst]
            max_err = max(max_err, float(errs.max()))
            for j in range(6):
                rows.append(
                    f"{k},{j + 1},{fmt_float(ordered[j].real)},{fmt_float(ordered[j].imag)},"
                    f"numeric,{fmt_float(errs[j])}"
                )
            for j in range(6):
                source = "analytic-flat" if j < 4 else "analytic"
                rows.append(
                    f"{k},{j + 1},{fmt_float(reference[j].real)},{fmt_float(reference[j].imag)},"
                    f"{source},"
                )
        else:
            ordered = numeric[np.argsort(np.angle(numeric) % (2 * np.pi))]
            for j in range(6):
                rows.append(
                    f"{k},{j + 1},{fmt_float(ordered[j].real)},{fmt_float(ordered[j].imag)},numeric,"
                )
    results = {"n": p.n, "coin": cfg.coin, "rows": len(rows)}
    if analytic_available:
        results["max_abs_err"] = fmt_float(max_err)
    return RunRecord(
        config=cfg.echo(),
        version=VERSION,
        wall_time_s=time.perf_counter() - started,
        results=results,
        csv_rows=rows,
        header="k,j,re,im,source,abs_err",
    )


# ---------- presets ----------

_SQRT3 = 1.0 / np.sqrt(3.0)
_SQRT6 = 1.0 / np.sqrt(6.0)
_HALF = 1.0 / np.sqrt(2.0)

_COIN_STATES = {
    "coin0": (1.0 + 0j, 0j, 0j),
    "coin1": (0j, 1.0 + 0j, 0j),
    "coin2": (0j, 0j, 1.0 + 0j),
    "uniform": (_SQRT3 + 0j, _SQRT3 + 0j, _SQRT3 + 0j),
    "ortho": (_SQRT6 + 0j, -2 * _SQRT6 + 0j, _SQRT6 + 0j),
}


@dataclass(frozen=True)
class PresetRun:
    stem: str
    kind: str  # distribution | time-average
    config: RunConfig


def _dist_run(stem, n, coin, coin_state, positions, steps=200) -> PresetRun:
    return PresetRun(
        stem,
        "distribution",
        RunConfig(
            n=n, coin=coin, initial_coin=_COIN_STATES[coin_state], positions=positions, steps=steps
        ),
    )


def _avg_run(stem, n, coin_state, horizon, vertex) -> PresetRun:
    return PresetRun(
        stem,
        "time-average",
        RunConfig(
            n=n,
            coin="grover",
            initial_coin=_COIN_STATES[coin_state],
            positions=((1, 0, 1.0 + 0j),),
            horizon=horizon,
            vertex=vertex,
        ),
    )


_START = ((1, 0, 1.0 + 0j),)
_PAIR = ((0, 0, _HALF + 0j), (1, 0, _HALF + 0j))

PRESETS: dict[str, str] = {
    "fig3a": "N=50 diffusion coin, coin state coin0, start (1,0), 200 steps",
    "fig3b": "N=50 diffusion coin, coin state coin1, start (1,0), 200 steps",
    "fig3c": "N=50 diffusion coin, coin state coin2, start (1,0), 200 steps",
    "fig3d": "N=50 diffusion coin, uniform coin state, start (1,0), 200 steps",
    "fig4a": "N=50 Fourier coin, coin state coin0, start (1,0), 200 steps",
    "fig4b": "N=50 Fourier coin, coin state coin1, start (1,0), 200 steps",
    "fig4c": "N=50 Fourier coin, coin state coin2, start (1,0), 200 steps",
    "fig4d": "N=50 Fourier coin, uniform coin state, start (1,0), 200 steps",
    "fig5a": "N=5 uniform coin state, symmetric pair start vs single start",
    "fig5b": "N=8 uniform coin state, symmetric pair start vs single start",
    "fig5c": "N=20 uniform coin state, symmetric pair start vs single start",
    "fig5d": "N=30 uniform coin state, symmetric pair start vs single start",
    "fig6a": "N=50 running averages at the start vertex, five coin states",
    "fig6b": "running averages at the start vertex, coin0, N in {5,10,35,100}",
}


def preset_runs(name: str, horizon: int | None = None) -> list[PresetRun]:
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r}; available: {', '.join(sorted(PRESETS))}")
    t_avg = horizon if horizon is not None else 2000
    fig3 = dict(zip("abcd", ("coin0", "coin1", "coin2", "uniform")))
    fig5 = dict(zip("abcd", (5, 8, 20, 30)))
    if name.startswith("fig3"):
        return [_dist_run(name, 50, "grover", fig3[name[-1]], _START)]
    if name.startswith("fig4"):
        return [_dist_run(name, 50, "dft", fig3[name[-1]], _START)]
    if name.startswith("fig5"):
        n = fig5[name[-1]]
        return [
            _dist_run(f"{name}_pair", n, "grover", "uniform", _PAIR),
            _dist_run(f"{name}_single", n, "grover", "uniform", _START),
        ]
    if name == "fig6a":
        return [
            _avg_run(f"fig6a_{cs}", 50, cs, t_avg, 50)
            for cs in ("coin0", "coin1", "coin2", "uniform", "ortho")
        ]
    if name == "fig6b":
        return [_avg_run(f"fig6b_n{n}", n, "coin0", t_avg, n) for n in (5, 10, 35, 100)]
    raise AssertionError(name)


def run_presets(names: list[str], outdir: Path, horizon: int | None = None) -> list[Path]:
    runs: list[tuple[str, PresetRun]] = []
    for name in names:
        runs.extend((name, r) for r in preset_runs(name, horizon))
    runs.sort(key=lambda item: (item[0], item[1].stem))

    def compute(item):
        _, run = item
        if run.kind == "distribution":
            return cmd_distribution(run.config)
        return cmd_time_average(run.config)

    with concurrent.futures.ThreadPoolExecutor(max_workers=4) as pool:
        records = list(pool.map(compute, runs))

    written: list[Path] = []
    outdir.mkdir(parents=True, exist_ok=True)
    for (_, run), record in zip(runs, records):
        written.extend(record.write(outdir / f"{run.stem}.csv"))
    return written


# ---------- argument plumbing ----------

_CONFIG_KEYS = {
    "n": int,
    "coin": str,
    "coin_matrix": str,
    "initial_coin": str,
    "positions": str,
    "steps": int,
    "horizon": int,
    "vertex": int,
    "backend": str,
    "out": str,
    "format": str,
}


def _read_config_file(path: str) -> dict[str, str]:
    data = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = body.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        data[key] = value.strip()
    return data


def _build_config(args: argparse.Namespace) -> RunConfig:
    values: dict[str, str] = {}
    if getattr(args, "config", None):
        values.update(_read_config_file(args.config))
    flag_map = {
        "n": args.n,
        "coin": args.coin,
        "coin_matrix": getattr(args, "coin_matrix", None),
        "initial_coin": getattr(args, "initial_coin", None),
        "positions": ";".join(args.position) if getattr(args, "position", None) else None,
        "steps": getattr(args, "steps", None),
        "horizon": getattr(args, "horizon", None),
        "vertex": getattr(args, "vertex", None),
        "backend": getattr(args, "backend", None),
        "out": getattr(args, "out", None),
        "format": getattr(args, "format", None),
    }
    for key, value in flag_map.items():
        if value is not None:
            values[key] = str(value)

    cfg = RunConfig()
    if "n" in values:
        try:
            cfg = replace(cfg, n=int(values["n"]))
        except ValueError as exc:
            raise ConfigError(f"n must be an integer, got {values['n']!r}") from exc
    if "coin" in values:
        cfg = replace(cfg, coin=values["coin"])
    if "coin_matrix" in values:
        cfg = replace(cfg, coin_matrix=_parse_complex_list(values["coin_matrix"], 9, "coin_matrix"))
    if "initial_coin" in values:
        cfg = replace(
            cfg, initial_coin=_parse_complex_list(values["initial_coin"], 3, "initial_coin")
        )
    if "positions" in values:
        entries = [p for p in values["positions"].split(";") if p.strip()]
        if not entries:
            raise ConfigError("positions must name at least one start vertex")
        cfg = replace(cfg, positions=tuple(_parse_position(e) for e in entries))
    for key, attr in (("steps", "steps"), ("horizon", "horizon"), ("vertex", "vertex")):
        if key in values:
            try:
                cfg = replace(cfg, **{attr: int(values[key])})
            except ValueError as exc:
                raise ConfigError(f"{key} must be an integer, got {values[key]!r}") from exc
    if "backend" in values:
        cfg = replace(cfg, backend=values["backend"])
    if "out" in values:
        cfg = replace(cfg, out=values["out"])
    if "format" in values:
        cfg = replace(cfg, out_format=values["format"])
    return cfg


def _add_common_flags(sub: argparse.ArgumentParser, *, steps=False, horizon=False) -> None:
    sub.add_argument("--config", help="flat key=value config file; flags win")
    sub.add_argument("--n", type=int, help="polygon order N (>= 3)")
    sub.add_argument("--coin", choices=["grover", "dft", "custom"])
    sub.add_argument("--coin-matrix", dest="coin_matrix", help="9 complex entries, row-major")
    sub.add_argument("--initial-coin", dest="initial_coin", help="3 complex amplitudes a,b,c")
    sub.add_argument(
        "--position",
        action="append",
        help="weighted start vertex s,t[:amp]; repeat for superpositions",
    )
    if steps:
        sub.add_argument("--steps", type=int, help="number of walk steps")
    if horizon:
        sub.add_argument("--horizon", type=int, help="number of averaged time points")
        sub.add_argument("--vertex", type=int, help="vertex index to track (default: start)")
    sub.add_argument("--backend", choices=["direct", "fourier", "oracle"])
    sub.add_argument("--out", help="output CSV path")
    sub.add_argument("--format", choices=["csv", "json"], help="output format (default csv)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dihedral-walk",
        description="Three-state quantum walk on the dihedral-group Cayley graph",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    subs = parser.add_subparsers(dest="command", required=True)

    p_dist = subs.add_parser("distribution", help="vertex probabilities after t steps")
    _add_common_flags(p_dist, steps=True)

    p_avg = subs.add_parser("time-average", help="running time average at one vertex")
    _add_common_flags(p_avg, horizon=True)

    p_spec = subs.add_parser("spectrum", help="per-momentum eigenvalues")
    _add_common_flags(p_spec)

    p_verify = subs.add_parser("verify", help="run the property suites")
    p_verify.add_argument("--scale", choices=["quick", "full"], default="quick")

    p_preset = subs.add_parser("preset", help="run canned experiment configurations")
    p_preset.add_argument("names", nargs="*", help="preset names, or 'all'")
    p_preset.add_argument("--outdir", help="output directory")
    p_preset.add_argument("--horizon", type=int, help="override averaging horizon")
    p_preset.add_argument("--list", action="store_true", help="list available presets")
    return parser


def _emit(record: RunRecord, cfg: RunConfig) -> None:
    if cfg.out is None:
        raise ConfigError("missing output path (--out)")
    out_path = Path(cfg.out)
    if cfg.out_format == "json":
        payload = {
            "version": record.version,
            "config": record.config,
            "wall_time_s": record.wall_time_s,
            "results": record.results,
            "header": record.header,
            "rows": record.csv_rows,
        }
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        print(f"wrote {out_path}")
        return
    for path in record.write(out_path):
        print(f"wrote {path}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "distribution":
            cfg = _build_config(args)
            _emit(cmd_distribution(cfg), cfg)
            return 0
        if args.command == "time-average":
            cfg = _build_config(args)
            _emit(cmd_time_average(cfg), cfg)
            return 0
        if args.command == "spectrum":
            cfg = _build_config(args)
            _emit(cmd_spectrum(cfg), cfg)
            return 0
        if args.command == "verify":
            ok, results = verify.run_verification(args.scale)
            print(verify.format_report(results))
            return 0 if ok else 3
        if args.command == "preset":
            if args.list:
                for name in sorted(PRESETS):
                    print(f"{name}: {PRESETS[name]}")
                return 0
            if not args.names:
                raise ConfigError("name at least one preset, or use --list")
            names = sorted(PRESETS) if args.names == ["all"] else args.names
            if args.outdir is None:
                raise ConfigError("missing output directory (--outdir)")
            for path in run_presets(names, Path(args.outdir), args.horizon):
                print(f"wrote {path}")
            return 0
        raise AssertionError(args.command)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
