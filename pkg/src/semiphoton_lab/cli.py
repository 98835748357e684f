"""Command-line front end.

Exit codes: 0 success, 1 verification or audit failure, 2 usage or
constants-load error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from semiphoton_lab import __version__, electron_model, fields, ring, verify
from semiphoton_lab.constants import UNITS, ConstantsError, load_constants, resolve_path

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

FORMATS = ("csv", "json", "table")
DEFAULT_PRECISION = 12

NEUTRAL_THRESHOLD = 1e-9


class UsageError(Exception):
    pass


class Output:
    """Formats numbers and writes the rendered text to stdout or ``--out``."""

    def __init__(self, args):
        self.precision = args.precision
        self.explicit_precision = args.precision_given
        self.path = args.out

    def num(self, x, for_csv=False):
        if x is None:
            return "n/a"
        if isinstance(x, str):
            return x
        if isinstance(x, (int,)) and not isinstance(x, bool):
            return str(x)
        x = float(x) + 0.0  # no "-0"
        if for_csv and not self.explicit_precision:
            return repr(x)
        return f"{x:.{self.precision}g}"

    def table(self, header, rows):
        cells = [list(header)] + [[self.num(v) for v in row] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
        lines.insert(1, "  ".join("-" * w for w in widths))
        return "\n".join(lines) + "\n"

    def csv(self, header, rows):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([self.num(v, for_csv=True) for v in row])
        return buf.getvalue()

    def json(self, obj):
        return json.dumps(obj, indent=2, allow_nan=False) + "\n"

    def render(self, fmt, header, rows, json_obj):
        if fmt == "json":
            return self.json(json_obj)
        if fmt == "csv":
            return self.csv(header, rows)
        return self.table(header, rows)

    def write(self, text):
        if self.path:
            with open(self.path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _constants(args):
    k = load_constants(args.constants, use_env=True)
    path = resolve_path(args.constants)
    return k, (str(path) if path else "default (CODATA 2018)")


# -- commands -------------------------------------------------------------------


def cmd_constants(args, out):
    k, source = _constants(args)
    values = k.to_dict()
    rows = [(name, value, UNITS[name]) for name, value in values.items()]
    fmt = args.format or "table"
    if fmt == "table":
        text = f"source: {source}\n" + out.table(("name", "value", "unit"), rows)
    else:
        text = out.render(fmt, ("name", "value", "unit"), rows, {"source": source, "constants": values})
    out.write(text)
    return EXIT_OK


def cmd_model_params(args, out):
    k, _ = _constants(args)
    m = electron_model.model_point(k)
    fq = electron_model.flux_quantum(k)
    rows = [
        ("lambda_p", m.lambda_p, "m"),
        ("r_s", m.r_s, "m"),
        ("r_c", m.r_c, "m"),
        ("zeta", m.zeta, "1"),
        ("omega_p", m.omega_p, "rad/s"),
        ("omega_s", m.omega_s, "rad/s"),
        ("phi0", fq.phi0, "Wb"),
        ("phi0_over_h_over_e", fq.ratio_to_h_over_e, "1"),
        ("alpha_q", m.alpha_q, "1"),
        ("q", m.q, "model"),
        ("E0", m.E0, "model"),
        ("m_s", m.m_s, "kg"),
    ]
    obj = {name: value for name, value, _ in rows}
    out.write(out.render(args.format or "table", ("name", "value", "unit"), rows, obj))
    return EXIT_OK


def cmd_verify(args, out):
    k, _ = _constants(args)
    checks = verify.run(args.suite, k)
    rows = [(c.status, c.suite, c.name, c.value, c.tolerance) for c in checks]
    header = ("status", "suite", "check", "value", "tolerance")
    fmt = args.format or "table"
    text = out.render(fmt, header, rows, [c.to_json() for c in checks])
    failed = [c for c in checks if not c.ok]
    if fmt == "table":
        text += f"\n{len(checks) - len(failed)}/{len(checks)} checks ok"
        text += f" ({sum(c.status == verify.EXPECTED for c in checks)} expected discrepancies)\n"
    out.write(text)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_fields(args, out):
    k, _ = _constants(args)
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    if not (args.a0 >= 0 and args.omega > 0):
        raise UsageError("--a0 must be >= 0 and --omega > 0")
    params = fields.TrigSolutionParams.from_omega(args.a0, args.omega, args.system, c=k.c)
    rows = fields.field_rows(params, args.samples)
    header = fields.CSV_COLUMNS
    obj = [dict(zip(header, map(float, r))) for r in rows]
    out.write(out.render(args.format or "csv", header, rows.tolist(), obj))
    return EXIT_OK


def _ring_config(args, k, polarization):
    radius = args.radius if args.radius is not None else electron_model.geometry_from_constants(k).r_s
    if not (radius > 0 and args.cross_section > 0):
        raise UsageError("--radius and --cross-section must be positive")
    return ring.RingWaveConfig.from_radius(
        radius, E0=args.e0, polarization=polarization, cross_section=args.cross_section, c=k.c, hbar=k.hbar
    )


def cmd_ring_charge(args, out):
    k, _ = _constants(args)
    if args.steps < ring.MIN_STEPS:
        raise UsageError(f"--steps must be >= {ring.MIN_STEPS}")
    cfg = _ring_config(args, k, args.polarization)
    q = ring.net_ring_charge(cfg, args.steps)
    reference = abs(ring.plane_charge_closed_form(cfg.replace(polarization="plane")))
    neutral = abs(q) <= NEUTRAL_THRESHOLD * reference if reference > 0 else q == 0
    result = {
        "polarization": args.polarization,
        "steps": args.steps + (args.steps % 2),
        "charge": q,
        "flag": "neutral" if neutral else "charged",
    }
    if args.polarization == "plane":
        closed = ring.plane_charge_closed_form(cfg)
        stated = ring.stated_plane_charge(cfg)
        result["closed_form"] = closed
        result["relative_difference"] = abs(q - closed) / abs(closed) if closed else 0.0
        result["stated_simplification"] = stated
        result["ratio_to_stated"] = q / stated if stated else None
    else:
        result["zero_threshold"] = NEUTRAL_THRESHOLD * reference
    rows = list(result.items())
    out.write(out.render(args.format or "table", ("quantity", "value"), rows, result))
    return EXIT_OK


def cmd_ring_currents(args, out):
    k, _ = _constants(args)
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    cfg = _ring_config(args, k, args.polarization)
    rows = ring.current_profile(cfg, args.samples)
    header = ring.CSV_COLUMNS
    obj = [dict(zip(header, map(float, r))) for r in rows]
    out.write(out.render(args.format or "csv", header, rows.tolist(), obj))
    return EXIT_OK


def cmd_audit(args, out):
    k, _ = _constants(args)
    report = electron_model.audit_consistency(k)
    fmt = args.format or "table"
    header = ("id", "lhs", "rhs", "residual", "status")
    if fmt == "table":
        rows = [(e.id, e.lhs, e.rhs, e.residual, e.status, e.note) for e in report.entries]
        text = out.table(header + ("note",), rows)
    else:
        rows = [(e.id, e.lhs, e.rhs, e.residual, e.status) for e in report.entries]
        text = out.render(fmt, header, rows, report.to_json())
    out.write(text)
    return EXIT_OK if report.ok else EXIT_FAIL


# -- parser -----------------------------------------------------------------------


def _precision(text):
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 6 <= p <= 17:
        raise argparse.ArgumentTypeError("precision must lie in [6, 17]")
    return p


def _global_options(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--constants", metavar="PATH", default=default(None),
                        help="JSON constants file (overrides $SEMIPHOTON_CONSTANTS)")
    parser.add_argument("--format", choices=FORMATS, default=default(None),
                        help="output format (default depends on the command)")
    parser.add_argument("--out", metavar="PATH", default=default(None), help="write output to PATH")
    parser.add_argument("--precision", type=_precision, default=default(None),
                        help=f"significant digits, 6-17 (default {DEFAULT_PRECISION})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semiphoton-lab",
        description="Verify the electromagnetic lepton model: Dirac algebra, field solutions, ring currents, torus electron.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        _global_options(p, suppress=True)
        p.set_defaults(func=func)
        return p

    add("constants", cmd_constants, "show the loaded physical constants")
    add("model-params", cmd_model_params, "torus electron model parameters")

    p = add("verify", cmd_verify, "run invariant suites")
    p.add_argument("suite", choices=("all",) + verify.SUITES)

    p = add("fields", cmd_fields, "sample a trigonometric field solution over one period (y = 0)")
    p.add_argument("--system", choices=fields.SYSTEMS, required=True)
    p.add_argument("--a0", type=float, required=True)
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--samples", type=int, default=16)

    for name, func, help_text in (
        ("ring-charge", cmd_ring_charge, "net charge of a spun wave by Simpson quadrature"),
        ("ring-currents", cmd_ring_currents, "displacement-current profile along the ring"),
    ):
        p = add(name, func, help_text)
        p.add_argument("--polarization", choices=("plane", "circular"), required=True)
        if name == "ring-charge":
            p.add_argument("--steps", type=int, default=ring.DEFAULT_STEPS)
        else:
            p.add_argument("--samples", type=int, default=64)
        p.add_argument("--radius", type=float, default=None, help="ring radius in m (default r_s)")
        p.add_argument("--e0", type=float, default=1.0)
        p.add_argument("--cross-section", type=float, default=1.0)

    add("audit", cmd_audit, "consistency audit of the torus-model formula chain")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.precision_given = args.precision is not None
    if args.precision is None:
        args.precision = DEFAULT_PRECISION
    out = Output(args)
    try:
        return args.func(args, out)
    except ConstantsError as exc:
        print(f"semiphoton-lab: error loading constants: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        parser.error(str(exc))
    except OSError as exc:
        print(f"semiphoton-lab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
