"""Command-line surface: batch runs, CSV/JSON serialization, SVG plots.

Commands
  area      certified / estimated graph area over a list of radii (CSV)
  packets   packet construction + certification ledger (CSV)
  growth    growth-model fit and witness constants (JSON)
  schedule  induction parameter table (CSV) or diagnostics (JSON)
  plot      SVG line chart from a CSV produced by the other commands

Output contracts: CSV uses UTF-8, "\n" line endings, "." decimals, and
fixed column orders; JSON is a single object per invocation with stable
keys; every numeric value is printed with 17 significant digits so that
identical invocations are byte-identical.  The only environment knob is
GRAPHGROWTH_THREADS (worker count for packet certification); results do
not depend on it, only wall time does.

Exit codes: 0 success, 2 usage or input error, 3 guarded-resource
refusal (radius beyond the family cap without --allow-large-r).
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .families import GraphFamily
from .growth import (
    GrowthModel,
    GrowthSample,
    NoWitnessError,
    SampleSource,
    classify_growth,
    fit_growth,
    witness_constants,
)
from .packets import (
    CertifyMethod,
    certify_packet,
    make_packet,
    packet_growth_lower_bound,
    verify_disjoint,
)
from .quadrature import (
    QuadConfig,
    QuadMode,
    RadiusCapError,
    SublevelDomain,
    graph_area,
)
from .schedule import (
    InsufficientRowsError,
    RadiiVariant,
    ScheduleConfig,
    build_schedule,
    completeness_trend,
    diagnostics,
)
from .svgplot import AXES_MODES, render_line_chart

__all__ = ["RunConfig", "main"]

_FORMATS_BY_COMMAND = {
    "area": ("csv",),
    "packets": ("csv",),
    "growth": ("json",),
    "schedule": ("csv", "json"),
    "plot": ("svg",),
}


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation: command, selectors, output routing."""

    command: str
    output_path: str = "-"
    format: str = ""
    family: GraphFamily | None = None
    variant: RadiiVariant | None = None
    options: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        allowed = _FORMATS_BY_COMMAND.get(self.command)
        if allowed is None:
            raise ValueError(f"unknown command {self.command!r}")
        if self.format not in allowed:
            raise ValueError(
                f"format {self.format!r} not supported by {self.command} "
                f"(allowed: {', '.join(allowed)})"
            )


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _json_dump(value) -> str:
    """Deterministic JSON with 17-significant-digit floats."""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, str):
        out = value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{out}"'
    if isinstance(value, dict):
        inner = ", ".join(f"{_json_dump(str(k))}: {_json_dump(v)}" for k, v in value.items())
        return "{" + inner + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_json_dump(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value)!r}")


def _write_output(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _thread_count() -> int:
    raw = os.environ.get("GRAPHGROWTH_THREADS", "1")
    try:
        count = int(raw)
    except ValueError as exc:
        raise ValueError(f"GRAPHGROWTH_THREADS must be an integer, got {raw!r}") from exc
    if count < 1:
        raise ValueError("GRAPHGROWTH_THREADS must be >= 1")
    return count


def _map_ordered(fn, items):
    """Order-preserving map; worker count affects wall time only."""
    items = list(items)
    threads = _thread_count()
    if threads == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _parse_reals(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"bad real list {text!r}") from exc
    if not values:
        raise ValueError("empty real list")
    return values


def _parse_range(text: str) -> tuple[int, int]:
    """Inclusive integer range 'lo..hi' (or a single integer)."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
    else:
        lo_text = hi_text = text
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError as exc:
        raise ValueError(f"bad integer range {text!r}") from exc
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


# ---------------------------------------------------------------- area

def _cmd_area(args: argparse.Namespace) -> int:
    family = GraphFamily.parse(args.family)
    RunConfig(command="area", output_path=args.output, format=args.format, family=family)
    radii = _parse_reals(args.r)
    mode = QuadMode.LOWER_BOUND if args.mode == "lower" else QuadMode.ESTIMATE
    cfg = QuadConfig(
        mode=mode,
        max_depth=args.max_depth,
        tol_rel=args.tol_rel,
        seed_box_pad=args.pad,
        samples_per_cell=args.samples_per_cell,
    )
    rows = []
    for r in radii:
        result = graph_area(SublevelDomain(family, r), cfg, allow_large_r=args.allow_large_r)
        rows.append([
            _fmt(r),
            _fmt(result.lower),
            _fmt(result.estimate) if result.estimate is not None else "",
            SampleSource.QUADRATURE.value,
            str(result.cells_inside),
            str(result.cells_boundary),
            str(result.depth_reached),
        ])
    header = ["r", "area_lower", "area_estimate", "source",
              "cells_inside", "cells_boundary", "depth_reached"]
    _write_output(args.output, _csv_text(header, rows))
    return 0


# ------------------------------------------------------------- packets

def _cmd_packets(args: argparse.Namespace) -> int:
    family = GraphFamily.parse(args.family)
    RunConfig(command="packets", output_path=args.output, format=args.format, family=family)
    n_lo, n_hi = _parse_range(args.n)
    method = (CertifyMethod.INTERVAL_PROOF if args.method == "interval"
              else CertifyMethod.DENSE_SAMPLING)
    packets = [make_packet(family, n, args.delta) for n in range(n_lo, n_hi + 1)]

    # aggregate disjointness check also validates layout monotonicity
    verify_disjoint(family, n_lo, n_hi, args.delta)
    centers = [p.center for p in packets]
    radii = [p.radius for p in packets]
    gaps = [centers[i + 1] - centers[i] - radii[i + 1] - radii[i]
            for i in range(len(packets) - 1)]

    certified = _map_ordered(
        lambda p: certify_packet(p, method, samples=args.samples), packets
    )
    rows = []
    for i, packet in enumerate(certified):
        cert = packet.certificate
        assert cert is not None
        row_disjoint = all(
            gap > 0 for gap in (
                ([gaps[i - 1]] if i > 0 else []) + ([gaps[i]] if i < len(gaps) else [])
            )
        )
        rows.append([
            str(packet.n),
            _fmt(packet.center),
            _fmt(packet.radius),
            _fmt(cert.max_abs_f),
            _fmt(cert.min_abs_fprime),
            _fmt_bool(cert.f_bound_ok),
            _fmt_bool(cert.fprime_bound_ok),
            _fmt_bool(row_disjoint),
        ])
    header = ["n", "center", "radius", "max_abs_f", "min_abs_fprime",
              "f_bound_ok", "fprime_bound_ok", "disjoint_ok"]
    _write_output(args.output, _csv_text(header, rows))
    return 0


# -------------------------------------------------------------- growth

def _read_samples_csv(path: str) -> list[GrowthSample]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or "r" not in reader.fieldnames \
                or "area_lower" not in reader.fieldnames:
            raise ValueError("input CSV needs columns r and area_lower")
        samples = []
        for record in reader:
            estimate_text = (record.get("area_estimate") or "").strip()
            source_text = (record.get("source") or "Quadrature").strip()
            samples.append(GrowthSample(
                r=float(record["r"]),
                area_lower=float(record["area_lower"]),
                area_estimate=float(estimate_text) if estimate_text else None,
                source=SampleSource(source_text),
            ))
    if not samples:
        raise ValueError("input CSV has no sample rows")
    return samples


def _generate_samples(args: argparse.Namespace) -> list[GrowthSample]:
    family = GraphFamily.parse(args.family)
    radii = _parse_reals(args.r)
    if family is GraphFamily.EXP:
        cfg = QuadConfig(mode=QuadMode.ESTIMATE, max_depth=args.max_depth)
        samples = []
        for r in radii:
            result = graph_area(SublevelDomain(family, r), cfg,
                                allow_large_r=args.allow_large_r)
            samples.append(GrowthSample(
                r=r,
                area_lower=result.lower,
                area_estimate=result.estimate,
                source=SampleSource.QUADRATURE,
            ))
        return samples
    return [
        GrowthSample(
            r=r,
            area_lower=packet_growth_lower_bound(family, r, args.delta),
            area_estimate=None,
            source=SampleSource.PACKETS,
        )
        for r in radii
    ]


def _cmd_growth(args: argparse.Namespace) -> int:
    RunConfig(command="growth", output_path=args.output, format=args.format)
    if args.input is not None:
        samples = _read_samples_csv(args.input)
    elif args.family is not None and args.r is not None:
        samples = _generate_samples(args)
    else:
        raise ValueError("growth needs --input CSV or --family with --r")

    if args.model is not None:
        model = GrowthModel(args.model.capitalize())
        fit = fit_growth(samples, model)
    else:
        fit = classify_growth(samples)

    try:
        c_witness, r0_witness = witness_constants(samples, fit.model)
    except (NoWitnessError, ValueError):
        c_witness, r0_witness = None, None

    payload = {
        "model": fit.model.value.lower(),
        "rate": fit.rate,
        "log_intercept": fit.log_intercept,
        "residual_rms": fit.residual_rms,
        "c_witness": c_witness,
        "r0_witness": r0_witness,
    }
    _write_output(args.output, _json_dump(payload) + "\n")
    return 0


# ------------------------------------------------------------ schedule

def _cmd_schedule(args: argparse.Namespace) -> int:
    variant = RadiiVariant.parse(args.variant)
    RunConfig(command="schedule", output_path=args.output, format=args.format,
              variant=variant)
    cfg = ScheduleConfig(
        variant=variant,
        N=args.N,
        n0=args.n0,
        d=args.d,
        theta=args.theta,
        a0=args.a0,
    )
    rows = build_schedule(cfg)

    if args.format == "csv":
        header = ["n", "r_n", "mu_n", "a_n", "b_n", "eps_n",
                  "sigma_n", "eta_n", "hyp2_ok", "sigma_feasible"]
        table = [[
            str(row.n),
            _fmt(row.r_n),
            _fmt(row.mu_n),
            _fmt(row.a_n),
            _fmt(row.b_n),
            _fmt(row.eps_n),
            _fmt(row.sigma_n) if row.sigma_n is not None else "",
            _fmt(row.eta_n),
            _fmt_bool(row.hyp2_ok),
            _fmt_bool(row.sigma_feasible),
        ] for row in rows]
        _write_output(args.output, _csv_text(header, table))
        return 0

    queries = _parse_reals(args.query_R) if args.query_R else None
    diag = diagnostics(rows, cfg, queries)
    try:
        exponent, diverging = completeness_trend(rows, cfg)
        trend = {"exponent": exponent, "diverging": diverging}
    except InsufficientRowsError:
        trend = None
    payload = {
        "all_hyp2_ok": diag.all_hyp2_ok,
        "all_sigma_feasible": diag.all_sigma_feasible,
        "eta_max_tail": diag.eta_max_tail,
        "N_of_R": {_fmt(k): v for k, v in diag.N_of_R.items()},
        "area_lower_of_R": {_fmt(k): v for k, v in diag.area_lower_of_R.items()},
        "sigma_partial_sums": list(diag.sigma_partial_sums),
        "completeness_trend": trend,
    }
    _write_output(args.output, _json_dump(payload) + "\n")
    return 0


# ---------------------------------------------------------------- plot

def _read_plot_columns(path: str) -> tuple[list[float], list[float]]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ValueError("empty CSV input")
        records = list(reader)
    if not records:
        raise ValueError("CSV has no data rows")
    names = reader.fieldnames
    if "r" in names and "area_lower" in names:
        x_name = "r"
        estimates = [(record.get("area_estimate") or "").strip() for record in records]
        y_name = "area_estimate" if all(estimates) else "area_lower"
    elif len(names) >= 2:
        x_name, y_name = names[0], names[1]
    else:
        raise ValueError("CSV needs at least two columns")
    xs = [float(record[x_name]) for record in records]
    ys = [float(record[y_name]) for record in records]
    return xs, ys


def _cmd_plot(args: argparse.Namespace) -> int:
    RunConfig(command="plot", output_path=args.output, format=args.format)
    xs, ys = _read_plot_columns(args.input)
    svg = render_line_chart(xs, ys, args.mode, label=args.label)
    _write_output(args.output, svg)
    return 0


# ---------------------------------------------------------------- main

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphgrowth",
        description="Certified area-growth laboratory for minimal graphs "
                    "of holomorphic functions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_area = sub.add_parser("area", help="graph area over radii")
    p_area.add_argument("--family", required=True)
    p_area.add_argument("--r", required=True, help="comma-separated radii")
    p_area.add_argument("--mode", choices=("lower", "estimate"), default="estimate")
    p_area.add_argument("--max-depth", type=int, default=12)
    p_area.add_argument("--tol-rel", type=float, default=1e-3)
    p_area.add_argument("--pad", type=float, default=0.5)
    p_area.add_argument("--samples-per-cell", type=int, default=4)
    p_area.add_argument("--allow-large-r", action="store_true")
    p_area.add_argument("--output", default="-")
    p_area.add_argument("--format", default="csv")
    p_area.set_defaults(func=_cmd_area)

    p_pack = sub.add_parser("packets", help="packet certification ledger")
    p_pack.add_argument("--family", required=True)
    p_pack.add_argument("--n", required=True, help="inclusive range lo..hi")
    p_pack.add_argument("--method", choices=("interval", "sampling"), default="interval")
    p_pack.add_argument("--samples", type=int, default=10000)
    p_pack.add_argument("--delta", type=float, default=None)
    p_pack.add_argument("--output", default="-")
    p_pack.add_argument("--format", default="csv")
    p_pack.set_defaults(func=_cmd_packets)

    p_growth = sub.add_parser("growth", help="fit growth models")
    p_growth.add_argument("--input", default=None, help="CSV of samples")
    p_growth.add_argument("--family", default=None)
    p_growth.add_argument("--r", default=None, help="comma-separated radii")
    p_growth.add_argument("--delta", type=float, default=None)
    p_growth.add_argument("--max-depth", type=int, default=12)
    p_growth.add_argument("--allow-large-r", action="store_true")
    p_growth.add_argument("--model",
                          choices=("polynomial", "exponential", "gaussian"),
                          default=None)
    p_growth.add_argument("--output", default="-")
    p_growth.add_argument("--format", default="json")
    p_growth.set_defaults(func=_cmd_growth)

    p_sched = sub.add_parser("schedule", help="induction parameter tables")
    p_sched.add_argument("--variant", required=True)
    p_sched.add_argument("--n0", type=int, default=1)
    p_sched.add_argument("--N", type=int, default=100)
    p_sched.add_argument("--d", type=float, default=1.0)
    p_sched.add_argument("--theta", type=float, default=1.0)
    p_sched.add_argument("--a0", type=float, default=math.pi / 4096.0)
    p_sched.add_argument("--query-R", dest="query_R", default=None)
    p_sched.add_argument("--output", default="-")
    p_sched.add_argument("--format", default="csv")
    p_sched.set_defaults(func=_cmd_schedule)

    p_plot = sub.add_parser("plot", help="SVG chart from CSV")
    p_plot.add_argument("--input", required=True)
    p_plot.add_argument("--mode", choices=AXES_MODES, default="linear")
    p_plot.add_argument("--label", default="growth curve")
    p_plot.add_argument("--output", default="-")
    p_plot.add_argument("--format", default="svg")
    p_plot.set_defaults(func=_cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code in (0, None):
            return 0
        return 2
    try:
        return args.func(args)
    except RadiusCapError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
