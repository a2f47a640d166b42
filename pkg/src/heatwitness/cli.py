"""Command-line front end.

Subcommands: thermo, sepbound, analytic, witness, region, eigencheck, repro.
CSV output uses a header row, comma separator and 12-significant-digit floats,
so identical invocations produce byte-identical files.  JSON reports carry a
schema_version field.  Exit codes: 0 success, 2 invalid arguments, 3 numerical
failure; failures also emit a machine-readable JSON object on stderr.

Unit handling: the math core works in J = k = 1.  The --unit-J / --unit-k
flags rescale values at the I/O layer only: temperatures by J/k, energies by
J, heat capacities by k, variances by J^2.

The HEATWITNESS_THREADS environment variable sets the worker count for field
sweeps (region, sepbound ranges); output order does not depend on it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import analytic, witness
from .eigencheck import eigencheck_ising
from .errors import NumericalError
from .models import Model, ModelSpec, build_hamiltonian
from .sepbound import minimize_variance
from .thermo import spectrum_of, thermo_from_spectrum
from .witness import CurveSource, ThermoCurve

SCHEMA_VERSION = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(self.format_usage(), end="", file=sys.stderr)
        _emit_error("invalid-arguments", message)
        raise SystemExit(2)


def _emit_error(kind, message):
    print(json.dumps({"error": {"type": kind, "message": str(message)}}),
          file=sys.stderr)


def _fmt(x) -> str:
    if isinstance(x, str):
        return x
    if x is None or (isinstance(x, float) and np.isnan(x)):
        return "nan"
    return format(float(x), ".12g")


def _write_text(path, text):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _csv(header, rows, seed=None) -> str:
    lines = []
    if seed is not None:
        lines.append(f"# seed={seed}")
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(x) for x in row))
    return "\n".join(lines) + "\n"


def _json_doc(payload, seed=None) -> str:
    doc = {"schema_version": SCHEMA_VERSION}
    if seed is not None:
        doc["seed"] = seed
    doc.update(payload)
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _thread_map():
    workers = int(os.environ.get("HEATWITNESS_THREADS", "1"))
    if workers <= 1:
        return map, None
    pool = ThreadPoolExecutor(max_workers=workers)
    return pool.map, pool


def _parse_model(name) -> Model:
    try:
        return Model(name)
    except ValueError:
        raise ValueError(f"unknown model {name!r}; choose from ising, xxx, xx")


def _parse_range(text):
    """START:STOP:COUNT -> inclusive linspace."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"expected START:STOP:COUNT, got {text!r}")
    lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count < 1:
        raise ValueError("range count must be >= 1")
    return np.linspace(lo, hi, count)


def validate_report(doc: dict) -> None:
    """Schema check for witness/eigencheck JSON reports; raises ValueError."""
    if not isinstance(doc, dict):
        raise ValueError("report must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError("missing or unsupported schema_version")
    if "bound" in doc:
        bound = doc["bound"]
        for key in ("kind", "constant", "exponent", "inputs"):
            if key not in bound:
                raise ValueError(f"bound is missing {key!r}")
        if "T_c" not in doc or "region" not in doc or "validity" not in doc:
            raise ValueError("witness report is missing T_c/region/validity")
        if not all(isinstance(p, list) and len(p) == 2 for p in doc["region"]):
            raise ValueError("region must be a list of [T, margin] pairs")
    elif "levels" in doc:
        for key in ("n_sites", "B", "verdict"):
            if key not in doc:
                raise ValueError(f"eigencheck report is missing {key!r}")
    else:
        raise ValueError("unrecognized report payload")


# ---------------------------------------------------------------- subcommands

def _cmd_thermo(args) -> int:
    spec = ModelSpec(_parse_model(args.model), args.n, J=args.J, B=args.B,
                     spin=args.spin)
    if args.dump_hamiltonian:
        H = build_hamiltonian(spec)
        rows = [[v for v in row] for row in H]
        _write_text(args.dump_hamiltonian,
                    "\n".join(",".join(_fmt(v) for v in row) for row in rows) + "\n")
    ts = np.geomspace(args.tmin, args.tmax, args.points)
    curve = thermo_from_spectrum(spectrum_of(spec), ts)
    tj, k = args.unit_J, args.unit_k
    rows = zip(curve.temperatures * tj / k, curve.u_per_site * tj,
               curve.c_per_site * k, curve.log_z_per_site)
    _write_text(args.output,
                _csv(["T", "U_per_site", "C_per_site", "logZ_per_site"], rows,
                     seed=args.seed))
    return 0


def _cmd_sepbound(args) -> int:
    model = _parse_model(args.model)
    if model is not Model.TRANSVERSE_ISING:
        raise ValueError("sepbound sweeps the transverse Ising variance bound")
    if args.B is not None:
        fields = [args.B]
    elif args.B_range is not None:
        lo, hi = (float(x) for x in args.B_range.split(":"))
        fields = list(np.linspace(lo, hi, args.B_points))
    else:
        raise ValueError("provide --B or --B-range")

    def solve(B):
        spec = ModelSpec(model, n_sites=2 * args.period, B=float(B))
        bound = minimize_variance(spec, period=args.period, restarts=args.restarts)
        return (B, bound.value_per_site) + tuple(bound.arg_angles.thetas)

    map_fn, pool = _thread_map()
    try:
        results = list(map_fn(solve, fields))
    finally:
        if pool:
            pool.shutdown()
    tj = args.unit_J
    header = ["B", "min_variance_per_site"] + [f"theta{i+1}" for i in range(args.period)]
    rows = [(b * tj, v * tj * tj) + tuple(rest) for (b, v, *rest) in results]
    _write_text(args.output, _csv(header, rows, seed=args.seed))
    return 0


def _cmd_analytic(args) -> int:
    ts = np.geomspace(args.tmin, args.tmax, args.points)
    tj, k = args.unit_J, args.unit_k
    sub = args.max_subdivisions
    if args.which == "katsura":
        vals = [(t * tj / k,
                 analytic.katsura_heat_capacity(args.B, t, max_subdivisions=sub) * k)
                for t in ts]
    else:
        vals = [(t * tj / k, analytic.xx_internal_energy(t, max_subdivisions=sub) * tj)
                for t in ts]
    _write_text(args.output, _csv(["T", "value"], vals, seed=args.seed))
    return 0


def _load_curve_csv(path) -> np.ndarray:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or line[0].isalpha():
                continue
            rows.append([float(x) for x in line.split(",")])
    if not rows:
        raise ValueError(f"no data rows in {path}")
    return np.asarray(rows, dtype=float)


def _cmd_witness(args) -> int:
    if args.bound == "variance":
        if args.curve.startswith("file=") and args.bound_value is None:
            raise ValueError("--bound-value is required for a variance bound on file data")
    else:
        if args.E0 is None or args.EB is None:
            raise ValueError("--E0 and --EB are required for energy-based bounds")
        if args.bound == "gapped" and args.gap is None:
            raise ValueError("--gap is required for the gapped bound")
    if args.curve.startswith("file="):
        data = _load_curve_csv(args.curve[5:])
        if args.bound == "variance":
            bound = witness.variance_bound(args.bound_value)
        elif args.bound == "gapless":
            bound = witness.gapless_bound(args.E0, args.EB, args.gamma)
        else:
            bound = witness.gapped_bound(args.E0, args.EB, args.gap)
        window = args.valid_below if args.bound != "variance" else None
        report = witness.witness_from_measurements(data, bound, valid_below=window)
        curve_ts, curve_cs = data[:, 0], data[:, 1]
    else:
        ts = np.geomspace(args.tmin, args.tmax, args.points)
        if args.curve == "ed":
            spec = ModelSpec(_parse_model(args.model), args.n, J=args.J, B=args.B,
                             spin=args.spin)
            curve = thermo_from_spectrum(spectrum_of(spec), ts)
            source = CurveSource.EXACT_DIAG
        elif args.curve == "katsura":
            cs = np.array([analytic.katsura_heat_capacity(args.B, t) for t in ts])
            curve = ThermoCurve(ts, np.full_like(ts, np.nan), cs,
                                np.full_like(ts, np.nan))
            source = CurveSource.INFINITE_CHAIN
        else:
            raise ValueError("curve must be ed, katsura or file=PATH")
        if args.bound == "variance":
            if args.bound_value is None:
                spec = ModelSpec(Model.TRANSVERSE_ISING, n_sites=4, B=args.B)
                args.bound_value = minimize_variance(spec).value_per_site
            report = witness.variance_witness(args.bound_value, curve, source=source)
        elif args.bound == "gapless":
            report = witness.gapless_witness(args.E0, args.EB, args.gamma, curve,
                                             valid_below=args.valid_below,
                                             source=source)
        else:
            report = witness.gapped_witness(args.E0, args.EB, args.gap, curve,
                                            valid_below=args.valid_below,
                                            source=source)
        curve_ts, curve_cs = ts, curve.c_per_site
    _write_text(args.output, _json_doc(report.to_dict(), seed=args.seed))
    if args.margins_output:
        bound_vals = report.bound.value_at(curve_ts)
        rows = zip(curve_ts, curve_cs, bound_vals, bound_vals - curve_cs)
        _write_text(args.margins_output, _csv(["T", "C", "bound", "margin"], rows))
    return 0


def _cmd_region(args) -> int:
    fields = _parse_range(args.B)
    t_grid = np.geomspace(args.tmin, args.tmax, args.points)
    map_fn, pool = _thread_map()
    try:
        pairs = witness.critical_temperature_curve(
            fields, t_grid=t_grid, period=args.period, restarts=args.restarts,
            map_fn=map_fn)
    finally:
        if pool:
            pool.shutdown()
    tj, k = args.unit_J, args.unit_k
    rows = [(b * tj, tc * tj / k) for b, tc in pairs]
    _write_text(args.output, _csv(["B", "T_c"], rows, seed=args.seed))
    return 0


def _cmd_eigencheck(args) -> int:
    report = eigencheck_ising(args.n, args.B, restarts=args.restarts)
    _write_text(args.output, _json_doc(report.to_dict(), seed=args.seed))
    return 0


def _cmd_repro(args) -> int:
    if args.target == "variance-bound":
        args.model, args.B, args.B_range, args.B_points = "ising", None, "0:4:81", 81
        args.period, args.restarts = 2, 8
        return _cmd_sepbound(args)
    if args.target == "region-line":
        args.B = "0.25:3:12"
        args.tmin, args.tmax, args.points = 0.02, 20.0, 300
        args.period, args.restarts = 2, 8
        return _cmd_region(args)
    # capacity-vs-bound: the infinite-chain curve at B = 2 with its bound
    B = 2.0
    spec = ModelSpec(Model.TRANSVERSE_ISING, n_sites=4, B=B)
    a = minimize_variance(spec).value_per_site
    ts = np.geomspace(0.05, 10.0, 200)
    rows = [(t, analytic.katsura_heat_capacity(B, t), a / t ** 2) for t in ts]
    _write_text(args.output, _csv(["T", "C_per_site", "bound"], rows, seed=args.seed))
    return 0


# -------------------------------------------------------------------- parser

def _add_common(p):
    p.add_argument("--output", default=None, help="write here instead of stdout")
    p.add_argument("--seed", type=int, default=None,
                   help="recorded in outputs; defaults are already deterministic")
    p.add_argument("--unit-J", type=float, default=1.0, dest="unit_J")
    p.add_argument("--unit-k", type=float, default=1.0, dest="unit_k")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="heatwitness",
                     description="spin-chain thermodynamics and heat-capacity "
                                 "entanglement witnesses")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("thermo", help="U/C/logZ per site from exact diagonalization")
    p.add_argument("--model", required=True, choices=["ising", "xxx", "xx"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--J", type=float, default=1.0)
    p.add_argument("--B", type=float, default=0.0)
    p.add_argument("--spin", type=float, default=0.5)
    p.add_argument("--tmin", type=float, required=True)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--dump-hamiltonian", default=None,
                   help="also write the dense Hamiltonian as row-major CSV")
    _add_common(p)
    p.set_defaults(func=_cmd_thermo)

    p = sub.add_parser("sepbound", help="minimal product-state variance per site")
    p.add_argument("--model", default="ising")
    p.add_argument("--B", type=float, default=None)
    p.add_argument("--B-range", dest="B_range", default=None, metavar="LO:HI")
    p.add_argument("--B-points", dest="B_points", type=int, default=41)
    p.add_argument("--period", type=int, default=2, choices=[2, 4])
    p.add_argument("--restarts", type=int, default=8)
    _add_common(p)
    p.set_defaults(func=_cmd_sepbound)

    p = sub.add_parser("analytic", help="infinite-chain closed forms")
    p.add_argument("--which", required=True, choices=["katsura", "xx"])
    p.add_argument("--B", type=float, default=0.0)
    p.add_argument("--tmin", type=float, required=True)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--max-subdivisions", dest="max_subdivisions", type=int,
                   default=analytic.MAX_SUBDIVISIONS)
    _add_common(p)
    p.set_defaults(func=_cmd_analytic)

    p = sub.add_parser("witness", help="bound vs curve, crossing and region report")
    p.add_argument("--bound", required=True, choices=["variance", "gapless", "gapped"])
    p.add_argument("--bound-value", dest="bound_value", type=float, default=None,
                   help="variance bound constant; minimized on the fly if omitted")
    p.add_argument("--E0", type=float, default=None)
    p.add_argument("--EB", type=float, default=None)
    p.add_argument("--gamma", type=float, default=2.0)
    p.add_argument("--gap", type=float, default=None)
    p.add_argument("--valid-below", dest="valid_below", type=float,
                   default=witness.DEFAULT_VALID_BELOW)
    p.add_argument("--curve", required=True,
                   help="ed | katsura | file=PATH (CSV rows T,C[,sigma_C])")
    p.add_argument("--model", default="ising")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--J", type=float, default=1.0)
    p.add_argument("--B", type=float, default=0.0)
    p.add_argument("--spin", type=float, default=0.5)
    p.add_argument("--tmin", type=float, default=0.05)
    p.add_argument("--tmax", type=float, default=10.0)
    p.add_argument("--points", type=int, default=300)
    p.add_argument("--margins-output", dest="margins_output", default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("region", help="critical-temperature line T_c(B)")
    p.add_argument("--B", required=True, metavar="LO:HI:COUNT")
    p.add_argument("--tmin", type=float, default=0.02)
    p.add_argument("--tmax", type=float, default=20.0)
    p.add_argument("--points", type=int, default=300)
    p.add_argument("--period", type=int, default=2, choices=[2, 4])
    p.add_argument("--restarts", type=int, default=8)
    _add_common(p)
    p.set_defaults(func=_cmd_region)

    p = sub.add_parser("eigencheck", help="product overlap of every Ising eigenspace")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--B", type=float, required=True)
    p.add_argument("--restarts", type=int, default=64)
    _add_common(p)
    p.set_defaults(func=_cmd_eigencheck)

    p = sub.add_parser("repro", help="one-shot datasets behind the standard figures")
    p.add_argument("target",
                   choices=["variance-bound", "region-line", "capacity-vs-bound"])
    _add_common(p)
    p.set_defaults(func=_cmd_repro)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except NumericalError as exc:
        _emit_error("numerical-failure", exc)
        return 3
    except ValueError as exc:
        _emit_error("invalid-arguments", exc)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
