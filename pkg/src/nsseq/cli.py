"""Command-line entry point: verification, the worked example, Reynolds sweeps, figure data."""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import logging
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import reference as R
from . import verification as V
from .operators import residual_field, evaluate_probes
from .sequence import ProbeGrid, plateau_metric, run_sequences
from .spacetime import SpacetimeField, evaluate_grid

COMMANDS = ("verify", "run-example", "sweep-re", "emit-figures")
FIGURE_RE = (0.06, 1, 2, 3, 6, 8, 10, 15, 20, 30, 40, 50)
CSV_HEADER = ("log10_t", "v1_s1", "v1_s2", "v1_s3", "g1_s1", "g1_s2", "g1_s3")
FORMAT_VERSION = "nsseq-output 1"

# residual probes for sweeps: the 27-point lattice at 8 times
SWEEP_RESIDUAL_TIMES = tuple(np.geomspace(1e-3, 1.0, 8))


@dataclass
class RunConfig:
    command: str
    re_list: list = field(default_factory=lambda: list(FIGURE_RE))
    l_max: int = 3
    tol: float = 1e-12
    probe_point: tuple = R.EXAMPLE_PROBE
    t_min: float = 1e-10
    t_max: float = 10.0
    t_count: int = 200
    output_path: str | None = None
    format: str = "json"
    gradient: str = "projected"
    full: bool = False

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.command in ("sweep-re", "emit-figures") and not self.re_list:
            raise ValueError("at least one Reynolds number is required")
        if any(not (r > 0 and math.isfinite(r)) for r in self.re_list):
            raise ValueError("Reynolds numbers must be positive")
        if not self.t_min > 0 or not self.t_max > self.t_min:
            raise ValueError("time grid needs 0 < tmin < tmax")
        if self.t_count < 2:
            raise ValueError("time grid needs at least 2 points")
        if self.l_max < 1:
            raise ValueError("lmax must be at least 1")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if len(self.probe_point) != 3:
            raise ValueError("probe point needs 3 coordinates")
        if self.format not in ("csv", "json"):
            raise ValueError("format must be csv or json")
        if self.gradient not in ("projected", "frozen"):
            raise ValueError("gradient must be projected or frozen")

    @property
    def times(self) -> np.ndarray:
        return np.geomspace(self.t_min, self.t_max, self.t_count)


def _floats(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nsseq", description=__doc__)
    p.add_argument("--command", choices=COMMANDS)
    p.add_argument("--config", help="JSON file with RunConfig fields; flags override it")
    p.add_argument("--re", type=_floats, help="comma-separated Reynolds numbers")
    p.add_argument("--lmax", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--point", type=_floats, help="probe point x1,x2,x3")
    p.add_argument("--tmin", type=float)
    p.add_argument("--tmax", type=float)
    p.add_argument("--tcount", type=int)
    p.add_argument("--out", help="output file (directory for emit-figures)")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--gradient", choices=("projected", "frozen"),
                   help="frozen keeps the first gradient part, reproducing the hand-derived grouping")
    p.add_argument("--full", action="store_true", help="run-example: include the exact fields")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


_FLAG_TO_FIELD = {"re": "re_list", "lmax": "l_max", "tol": "tol", "point": "probe_point",
                  "tmin": "t_min", "tmax": "t_max", "tcount": "t_count", "out": "output_path",
                  "format": "format", "gradient": "gradient"}


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    data = {}
    if ns.config:
        data = json.loads(Path(ns.config).read_text())
        known = {f.name for f in dataclasses.fields(RunConfig)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
    for flag, name in _FLAG_TO_FIELD.items():
        val = getattr(ns, flag)
        if val is not None:
            data[name] = val
    if ns.command:
        data["command"] = ns.command
    if ns.full:
        data["full"] = True
    if "command" not in data:
        raise ValueError("--command is required")
    if "probe_point" in data:
        data["probe_point"] = tuple(float(x) for x in data["probe_point"])
    cfg = RunConfig(**data)
    if ns.format is None and "format" not in data and cfg.command == "emit-figures":
        cfg.format = "csv"
    cfg.validate()
    return cfg


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def example_run(l_max: int, gradient: str = "projected", tol: float = 1e-300, kappa: float = 1.0):
    return run_sequences(R.example_v0(), kappa, l_max, tol, freeze_gradient=gradient == "frozen")


def verify(cfg: RunConfig) -> tuple[dict, int]:
    sections = {
        "taylor": V.check_taylor(),
        "abc": V.check_abc(),
        "abc(2,3,5)": V.check_abc(2, 3, 5),
        "example": V.check_example_r3(),
    }
    defects = [(name, r.item) for name, reps in sections.items() for r in reps if r.engine_defect]
    findings = [(name, r.item) for name, reps in sections.items() for r in reps if not r.match and not r.engine_defect]
    out = {
        "version": FORMAT_VERSION,
        "sections": {name: [r.to_json() for r in reps] for name, reps in sections.items()},
        "engine_defects": [f"{a}: {b}" for a, b in defects],
        "reference_findings": [f"{a}: {b}" for a, b in findings],
    }
    return out, 0 if not defects else 1


def _verify_text(out: dict, sections) -> str:
    lines = []
    for name, reps in sections.items():
        ok = sum(r.match for r in reps)
        lines.append(f"[{name}] {ok}/{len(reps)} matched")
        lines.append(V.format_table(reps))
    lines.append(f"engine defects: {len(out['engine_defects'])}")
    lines.append(f"reference findings (arbitrated against the reference): {len(out['reference_findings'])}")
    return "\n".join(lines)


def run_example(cfg: RunConfig) -> dict:
    run = example_run(cfg.l_max, cfg.gradient, cfg.tol)
    records = [r.to_json() if cfg.full else r.summary() for r in run]
    return {"version": FORMAT_VERSION, "gradient": cfg.gradient, "stopped": run.stopped,
            "diagnostic": run.diagnostic, "records": records}


def sweep_re(cfg: RunConfig) -> dict:
    """Correction size per sequence and momentum residual of the last sequence per Re."""
    run = example_run(cfg.l_max, cfg.gradient)
    grid = ProbeGrid.lattice(3)
    last = run[len(run) - 1]
    resid = residual_field(last.v, last.pressure, last.g)
    probes = [(tuple(x), t) for t in SWEEP_RESIDUAL_TIMES for x in grid.points]
    rows = []
    for re in cfg.re_list:
        kappa = 1.0 / re
        sup = [plateau_metric(r.o_correction, grid, kappa) for r in run]
        norms = np.linalg.norm(evaluate_probes(resid, probes, kappa), axis=1)
        rows.append({"re": re, "sup_correction": sup, "plateau_metric": sup[-1],
                     "residual_max": float(norms.max()), "residual_mean": float(norms.mean())})
    return {"version": FORMAT_VERSION, "sequences": len(run), "rows": rows}


def figure_table(run, re: float, point, times) -> np.ndarray:
    """Columns ``log10 t, v1 and g1 of sequences 1-3`` at one point, kappa = 1/Re."""
    kappa = 1.0 / re
    X = np.asarray([point], dtype=float)
    cols = [np.log10(times)]
    for which in ("v", "g"):
        for r in run.records[:3]:
            f = SpacetimeField.scalar(getattr(r, which)[0], 3)
            cols.append(evaluate_grid(f, X, times, kappa)[0, 0])
    return np.column_stack(cols)


def emit_figures(cfg: RunConfig) -> list[Path]:
    if cfg.output_path is None:
        raise ValueError("emit-figures needs --out DIR")
    out = Path(cfg.output_path)
    out.mkdir(parents=True, exist_ok=True)
    run = example_run(3, cfg.gradient)
    times = cfg.times
    paths = []
    for re in cfg.re_list:
        table = figure_table(run, re, cfg.probe_point, times)
        path = out / f"re_{re:g}.{cfg.format}"
        if cfg.format == "csv":
            with path.open("w", newline="") as fh:
                w = csv.writer(fh, lineterminator="\n")
                w.writerow(CSV_HEADER)
                w.writerows([[repr(float(x)) for x in row] for row in table])
        else:
            path.write_text(json.dumps({"version": FORMAT_VERSION, "re": re, "columns": CSV_HEADER,
                                        "rows": table.tolist()}, indent=1) + "\n")
        paths.append(path)
    return paths


def separation(table: np.ndarray) -> float:
    """``max |v1_s3 - v1_s1| / max |v1_s1|`` over the time grid."""
    return float(np.abs(table[:, 3] - table[:, 1]).max() / np.abs(table[:, 1]).max())


def _write(cfg: RunConfig, payload: dict, text: str | None = None) -> None:
    body = json.dumps(payload, indent=1, sort_keys=True) + "\n" if cfg.format == "json" or text is None else text + "\n"
    if cfg.output_path:
        Path(cfg.output_path).write_text(body)
    else:
        sys.stdout.write(body)


def _sweep_csv(payload: dict) -> str:
    n = payload["sequences"]
    head = ["re"] + [f"sup_O{l}" for l in range(1, n + 1)] + ["residual_max", "residual_mean"]
    lines = [",".join(head)]
    for row in payload["rows"]:
        vals = [row["re"], *row["sup_correction"], row["residual_max"], row["residual_mean"]]
        lines.append(",".join(repr(float(v)) for v in vals))
    return "\n".join(lines)


def run_command(cfg: RunConfig) -> int:
    if cfg.command == "verify":
        payload, status = verify(cfg)
        if cfg.format == "json":
            _write(cfg, payload)
        else:
            secs = {k: [V.DiscrepancyReport(**d) for d in v] for k, v in payload["sections"].items()}
            _write(cfg, payload, _verify_text(payload, secs))
        for item in payload["reference_findings"]:
            logging.warning("reference disagrees with engine (oracle sides with engine): %s", item)
        return status
    if cfg.command == "run-example":
        _write(cfg, run_example(cfg))
        return 0
    if cfg.command == "sweep-re":
        payload = sweep_re(cfg)
        _write(cfg, payload, _sweep_csv(payload) if cfg.format == "csv" else None)
        return 0
    for path in emit_figures(cfg):
        print(path)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = config_from_args(ns)
    except (ValueError, TypeError, OSError, json.JSONDecodeError) as exc:
        parser.print_usage(sys.stderr)
        print(f"nsseq: error: {exc}", file=sys.stderr)
        return 2
    try:
        return run_command(cfg)
    except OSError as exc:
        print(f"nsseq: cannot write output: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"nsseq: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
