"""``phasecov`` command line.

Exit codes: 0 success, 2 channel not CP, 3 oracle audit failed, 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import dynamics
from .channel import ChannelParams, invariant_state, non_unitality, sample_cp_params, validate_cp
from .entanglement import (
    concurrence_closed,
    concurrence_spectral,
    concurrence_spectrum_closed,
    entanglement_of_formation,
    evolve_one_sided,
)
from .errors import DegenerateFixedPoint
from .measures import measure_report
from .oracle import AUDIT_KEYS, GridSpec, audit_channel

EXIT_OK, EXIT_NOT_CP, EXIT_AUDIT, EXIT_USAGE = 0, 2, 3, 64
AUDIT_TOL = 1e-6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x) -> str:
    if isinstance(x, str):
        return x
    return "%.17g" % x


def parse_t_grid(spec: str) -> np.ndarray:
    try:
        start, stop, count = spec.split(":")
        start, stop, count = float(start), float(stop), int(count)
    except ValueError:
        raise UsageError(f"bad time grid {spec!r}; expected start:stop:count") from None
    if count < 1 or start < 0 or stop < start or not (math.isfinite(start) and math.isfinite(stop)):
        raise UsageError(f"bad time grid {spec!r}")
    return np.linspace(start, stop, count)


def parse_p_list(spec: str) -> list[float]:
    try:
        ps = [float(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad p list {spec!r}") from None
    if not ps or any(not 0.0 <= p <= 1.0 for p in ps):
        raise UsageError(f"p values must lie in [0, 1]: {spec!r}")
    return ps


def parse_grid(spec: str | None) -> GridSpec:
    if spec is None:
        return GridSpec()
    try:
        n_polar, n_azimuth, refinement = (int(x) for x in spec.split(","))
        return GridSpec(n_polar, n_azimuth, refinement)
    except ValueError:
        raise UsageError(f"bad grid {spec!r}; expected nPolar,nAzimuth,refinement") from None


def worker_count() -> int:
    raw = os.environ.get("PHASECOV_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"PHASECOV_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise UsageError("PHASECOV_THREADS must be >= 0")
    return n or (os.cpu_count() or 1)


def render(records: list[dict], fields, fmt_name: str) -> str:
    if fmt_name == "json":
        return json.dumps(records, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for rec in records:
        writer.writerow([fmt(rec[f]) for f in fields])
    return buf.getvalue()


def emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _params(args) -> ChannelParams:
    return ChannelParams(args.lambda1, args.lambda3, args.lambda_star)


def cmd_validate(args) -> int:
    params = _params(args)
    report = validate_cp(params)
    print(f"valid: {str(report.valid).lower()}")
    print(f"slack_a: {fmt(report.slack_a)}")
    print(f"slack_b: {fmt(report.slack_b)}")
    if not report.valid:
        failed = [n for n, s in (("A", report.slack_a), ("B", report.slack_b)) if s < 0]
        print(f"violated: {','.join(failed)}")
        return EXIT_NOT_CP
    print(f"non_unitality: {fmt(non_unitality(params))}")
    try:
        print(f"invariant_z: {fmt(invariant_state(params).bloch[2])}")
    except DegenerateFixedPoint:
        print("invariant_z: degenerate")
    return EXIT_OK


MEASURE_FIELDS = (
    "lambda1", "lambda3", "lambda_star",
    "f_min", "f_max", "nu2_squared", "nu_inf_paper", "nu_inf_bloch", "concurrence", "eof",
    "f_min_x3", "f_max_x3", "nu_x3", "f_min_branch", "f_max_branch", "nu_branch",
)


def measure_record(params: ChannelParams) -> dict:
    rep = measure_report(params)
    c = concurrence_closed(params)
    return {
        "lambda1": params.lambda1,
        "lambda3": params.lambda3,
        "lambda_star": params.lambda_star,
        "f_min": rep.f_min,
        "f_max": rep.f_max,
        "nu2_squared": rep.nu2_squared,
        "nu_inf_paper": rep.nu_inf_paper,
        "nu_inf_bloch": rep.nu_inf_bloch,
        "concurrence": c,
        "eof": entanglement_of_formation(c),
        "f_min_x3": rep.f_min_family.x3,
        "f_max_x3": rep.f_max_family.x3,
        "nu_x3": rep.nu_family.x3,
        "f_min_branch": rep.f_min_family.branch,
        "f_max_branch": rep.f_max_family.branch,
        "nu_branch": rep.nu_family.branch,
    }


def _require_valid(params: ChannelParams) -> bool:
    if validate_cp(params).valid:
        return True
    print(f"error: {params} is not completely positive", file=sys.stderr)
    return False


def cmd_measure(args) -> int:
    params = _params(args)
    if not _require_valid(params):
        return EXIT_NOT_CP
    emit(render([measure_record(params)], MEASURE_FIELDS, args.format), args.out)
    return EXIT_OK


ENTANGLEMENT_FIELDS = (
    "lambda1", "lambda3", "lambda_star", "r1", "r2", "r3", "r4",
    "concurrence_closed", "concurrence_spectral", "eof",
)


def cmd_entanglement(args) -> int:
    params = _params(args)
    if not _require_valid(params):
        return EXIT_NOT_CP
    spec = concurrence_spectrum_closed(params)
    c = concurrence_closed(params)
    rec = {
        "lambda1": params.lambda1,
        "lambda3": params.lambda3,
        "lambda_star": params.lambda_star,
        **{f"r{i + 1}": r for i, r in enumerate(spec.r)},
        "concurrence_closed": c,
        "concurrence_spectral": concurrence_spectral(evolve_one_sided(params)),
        "eof": entanglement_of_formation(c),
    }
    emit(render([rec], ENTANGLEMENT_FIELDS, args.format), args.out)
    return EXIT_OK


def cmd_trajectory(args) -> int:
    ps = parse_p_list(args.p) if args.p else list(dynamics.DEFAULT_P)
    t_grid = parse_t_grid(args.t) if args.t else dynamics.default_t_grid(args.family)
    records = []
    for p in ps:
        family = dynamics.TrajectoryFamily(args.family, p, args.sign)
        records.extend(s.as_row() for s in dynamics.run_trajectory(family, t_grid))
    emit(render(records, dynamics.CSV_FIELDS, args.format), args.out)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    if args.n_samples < 1:
        raise UsageError("nSamples must be >= 1")
    grid = parse_grid(args.grid)
    # numpy PCG64 seeded with --seed
    samples = sample_cp_params(args.n_samples, np.random.default_rng(args.seed))
    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            gaps = list(pool.map(lambda p: audit_channel(p, grid), samples))
    else:
        gaps = [audit_channel(p, grid) for p in samples]
    worst = {k: max(g[k] for g in gaps) for k in AUDIT_KEYS}
    axis_regime = [
        g["nu_inf_paper"]
        for p, g in zip(samples, gaps)
        if abs(p.lambda3) >= abs(p.lambda1) or p.lambda_star == 0
    ]
    checked = [k for k in AUDIT_KEYS if k != "nu_inf_paper"]
    failed = [k for k in checked if not worst[k] < AUDIT_TOL]
    arg_worst = max(range(len(samples)), key=lambda i: gaps[i]["nu_inf_paper"])
    lines = [f"samples: {args.n_samples}", f"seed: {args.seed}",
             f"grid: {grid.n_polar},{grid.n_azimuth},{grid.refinement}"]
    lines += [f"max_gap {k}: {fmt(worst[k])}" for k in checked]
    lines.append(f"diagnostic max_gap nu_inf_paper: {fmt(worst['nu_inf_paper'])} "
                 f"at {samples[arg_worst].as_tuple()}")
    lines.append(f"diagnostic max_gap nu_inf_paper (|l3|>=|l1| or ls=0, "
                 f"{len(axis_regime)} samples): {fmt(max(axis_regime, default=0.0))}")
    lines.append("status: " + ("FAIL " + ",".join(failed) if failed else "PASS"))
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.out:
        emit(text, args.out)
    return EXIT_AUDIT if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="phasecov", description="Phase-covariant qubit channel measures.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def channel_args(p, with_output=True):
        p.add_argument("lambda1", type=float)
        p.add_argument("lambda3", type=float)
        p.add_argument("lambda_star", type=float)
        if with_output:
            output_args(p)

    def output_args(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", metavar="PATH")

    channel_args(sub.add_parser("validate", help="check complete positivity"), with_output=False)
    channel_args(sub.add_parser("measure", help="closed-form measures of one channel"))
    channel_args(sub.add_parser("entanglement", help="concurrence of the evolved Bell state"))

    traj = sub.add_parser("trajectory", help="measures along a mixed dynamical map")
    traj.add_argument("family", choices=(dynamics.EXP, dynamics.OSC))
    traj.add_argument("--p", help="comma-separated mixing weights")
    traj.add_argument("--t", help="time grid start:stop:count")
    traj.add_argument("--sign", choices=("+", "-"), default="+")
    output_args(traj)

    orc = sub.add_parser("oracle-check", help="audit closed forms against brute force")
    orc.add_argument("n_samples", type=int)
    orc.add_argument("--seed", type=int, default=0, help="seed for numpy default_rng (PCG64)")
    orc.add_argument("--grid", help="nPolar,nAzimuth,refinement")
    orc.add_argument("--out", metavar="PATH")
    return parser


COMMANDS = {
    "validate": cmd_validate,
    "measure": cmd_measure,
    "entanglement": cmd_entanglement,
    "trajectory": cmd_trajectory,
    "oracle-check": cmd_oracle_check,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "sign", None) is not None:
        args.sign = 1 if args.sign == "+" else -1
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"phasecov: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
