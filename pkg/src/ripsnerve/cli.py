"""Command-line front end.

Exit codes: 0 when every embedded check passes, 1 when a check fails,
2 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import math
import sys
import warnings
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import Sequence

import numpy as np

from . import io
from .complex import SimplicialComplex, TruncatedComplexError, euler_characteristic, f_vector
from .covers import nerve, vietoris
from .demos import DEMOS
from .graphs import cech_scan, reconstruction_scan, shortest_loop_length
from .homology import NotASubcomplexError, PrimeField, betti_numbers
from .metric import FiniteMetric, MetricError, cech_ambient, rips
from .nested import extract, select_nested_samples
from .relations import BinaryRelation, check_dowker_betti
from .report import RunReport, betti_str


class UsageError(ValueError):
    pass


# --- helpers ------------------------------------------------------------

def _field(args) -> PrimeField:
    try:
        return PrimeField(args.prime)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _max_dim(args, max_degree: int) -> int:
    return args.max_dim if args.max_dim is not None else max_degree + 1


def _detect_format(path: str) -> str:
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower().startswith("dist"):
            return "dist"
        if "," in line or "." in line:
            return "points"
        return "complex"
    return "complex"


def _load_metric(args, report: RunReport) -> FiniteMetric:
    report.digest(args.input)
    return io.read_metric(args.input)


def _complex_tables(report: RunReport, c: SimplicialComplex, list_simplices: bool) -> None:
    t = report.table("f_vector", "dim", "count")
    for k, n in enumerate(f_vector(c)):
        t.add(k, n)
    report.note("truncation_dim", "none" if c.truncation_dim is None else c.truncation_dim)
    if list_simplices:
        t = report.table("facets", "simplex")
        for s in c.facets():
            t.add(" ".join(map(str, s)))


def _betti_table(report: RunReport, name: str, c: SimplicialComplex, max_degree: int, F: PrimeField) -> None:
    b = betti_numbers(c, max_degree, F)
    t = report.table(name, "degree", "betti", "field")
    for k, v in enumerate(b.betti):
        t.add(k, v, F.p)
    if not c.is_truncated:
        report.note("euler_characteristic", euler_characteristic(c))


def _write_complex(args, c: SimplicialComplex) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(io.format_complex(c))


def _parse_scales(args) -> list[float]:
    if args.scales and args.range:
        raise UsageError("give either --scales or --range, not both")
    try:
        if args.scales:
            return [float(s) for s in args.scales.split(",") if s.strip()]
        if args.range:
            start, stop, step = (Decimal(x) for x in args.range.split(":"))
            if step <= 0:
                raise UsageError("range step must be positive")
            out, k = [], 0
            while start + k * step <= stop:
                out.append(float(start + k * step))
                k += 1
            return out
    except (ValueError, InvalidOperation):
        raise UsageError(f"cannot parse scales {args.scales or args.range!r}") from None
    raise UsageError("graph-scan needs --scales or --range")


# --- commands -----------------------------------------------------------

def cmd_betti(args, report: RunReport) -> None:
    F = _field(args)
    fmt = args.format if args.format != "auto" else _detect_format(args.input)
    if fmt == "complex":
        report.digest(args.input)
        c = io.read_complex(args.input)
    else:
        if args.scale is None:
            raise UsageError("--scale is required for point or distance input")
        X = _load_metric(args, report)
        c = rips(X, args.scale, args.mode, _max_dim(args, args.max_degree))
        report.note("scale", args.scale)
        report.note("mode", args.mode)
    _betti_table(report, "betti", c, args.max_degree, F)


def cmd_rips(args, report: RunReport) -> None:
    X = _load_metric(args, report)
    c = rips(X, args.scale, args.mode, _max_dim(args, args.max_degree))
    _complex_tables(report, c, args.list)
    if args.betti:
        _betti_table(report, "betti", c, args.max_degree, _field(args))
    _write_complex(args, c)


def cmd_cech(args, report: RunReport) -> None:
    X = _load_metric(args, report)
    landmarks = None
    if args.landmarks:
        landmarks = [int(x) for x in args.landmarks.split(",")]
        if any(not 0 <= a < X.n for a in landmarks):
            raise UsageError("landmark index out of range")
    c = cech_ambient(X, landmarks, args.scale, args.mode, _max_dim(args, args.max_degree))
    _complex_tables(report, c, args.list)
    if args.betti:
        _betti_table(report, "betti", c, args.max_degree, _field(args))
    _write_complex(args, c)


def _cover_cmd(build):
    def run(args, report: RunReport) -> None:
        report.digest(args.input)
        U = io.read_cover(args.input)
        c = build(U, _max_dim(args, args.max_degree))
        _complex_tables(report, c, args.list)
        if args.betti:
            _betti_table(report, "betti", c, args.max_degree, _field(args))
        _write_complex(args, c)
    return run


def cmd_dowker(args, report: RunReport) -> None:
    F = _field(args)
    if args.random:
        try:
            n_rows, n_cols = (int(x) for x in args.random.lower().split("x"))
        except ValueError:
            raise UsageError("--random expects ROWSxCOLS") from None
        R = BinaryRelation.random(n_rows, n_cols, args.density, np.random.default_rng(args.seed))
        report.note("random", f"{n_rows}x{n_cols} density={args.density} seed={args.seed}")
    elif args.input:
        report.digest(args.input)
        R = io.read_relation(args.input)
    else:
        raise UsageError("dowker needs a relation file or --random")
    cols, rows, equal = check_dowker_betti(R, args.max_degree, F)
    t = report.table("dowker", "degree", "column_betti", "row_betti", "field")
    for k in range(args.max_degree + 1):
        t.add(k, cols[k], rows[k], F.p)
    report.note("column_complex", betti_str(cols.betti))
    report.note("row_complex", betti_str(rows.betti))
    report.note("verdict", "EQUAL" if equal else "UNEQUAL")
    report.check("Betti tables of column and row complexes agree", equal)


def cmd_graph_scan(args, report: RunReport) -> None:
    F = _field(args)
    report.digest(args.input)
    G = io.read_graph(args.input)
    scales = _parse_scales(args)
    ell = shortest_loop_length(G)
    divisor = 4 if args.complex == "cech" else 3
    report.note("ell", "inf" if math.isinf(ell) else ell)
    report.note("threshold", "inf" if math.isinf(ell) else ell / divisor)
    report.note("complex", args.complex)
    report.note("mode", args.mode)
    report.note("delta", args.delta)
    report.note("expected_betti", betti_str(G.expected_betti(args.max_degree)))
    scan = cech_scan if args.complex == "cech" else reconstruction_scan
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rows = scan(G, args.delta, scales, args.mode, F, args.max_degree)
    for w in caught:
        report.warnings.append(str(w.message))
        print(f"warning: {w.message}", file=sys.stderr)
    header = ["scale"] + [f"b_{k}" for k in range(args.max_degree + 1)] + ["matches", "predicted"]
    t = report.table("scan", *header)
    for row in rows:
        bound = ell / divisor
        predicted = row.scale <= bound if args.mode == "open" else row.scale < bound
        t.add(row.scale, *row.betti.betti, row.matches, predicted)
        if args.check:
            report.check(f"scale {row.scale} matches prediction", row.matches == predicted)


def cmd_imrank(args, report: RunReport) -> None:
    F = _field(args)
    X = _load_metric(args, report)
    try:
        pair = select_nested_samples(X, args.scale, args.eps1, args.eps2, args.mode, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = extract(pair, args.degree, F, args.max_dim)
    report.headline = str(result.rank)
    for key, value in result.provenance(pair).items():
        if value is None:
            value = "none"
        report.note(key, tuple(value) if isinstance(value, list) else value)


def cmd_demo(args, report: RunReport) -> None:
    DEMOS[args.name](report, _field(args))


# --- argument parsing ---------------------------------------------------

def _common(max_degree: int = 2) -> argparse.ArgumentParser:
    # a fresh parent per subcommand: argparse shares action objects with parents
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=2, help="field characteristic (default 2)")
    common.add_argument("--max-degree", type=int, default=max_degree, help="highest homology degree")
    common.add_argument("--max-dim", type=int, default=None, help="simplex dimension cap (default max-degree+1)")
    common.add_argument("--mode", choices=("open", "closed"), default="open")
    common.add_argument("--json", action="store_true", help="emit JSON instead of TSV")
    common.add_argument("--seed", type=int, default=0)
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ripsnerve", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", parents=[_common()], help="Betti numbers of a complex or a Rips complex")
    p.add_argument("input")
    p.add_argument("--format", choices=("auto", "complex", "points", "dist"), default="auto")
    p.add_argument("--scale", type=float)
    p.set_defaults(func=cmd_betti)

    for name, func, helptext in [("rips", cmd_rips, "Rips complex of points"),
                                 ("cech", cmd_cech, "ambient Cech complex of points")]:
        p = sub.add_parser(name, parents=[_common()], help=helptext)
        p.add_argument("input")
        p.add_argument("--scale", type=float, required=True)
        p.add_argument("--list", action="store_true", help="list facets")
        p.add_argument("--betti", action="store_true", help="also print Betti numbers")
        p.add_argument("-o", "--output", help="write facets in complex format")
        if name == "cech":
            p.add_argument("--landmarks", help="comma-separated point indices (default: all)")
        p.set_defaults(func=func)

    for name, build in [("nerve", nerve), ("vietoris", vietoris)]:
        p = sub.add_parser(name, parents=[_common()], help=f"{name} complex of a JSON cover")
        p.add_argument("input")
        p.add_argument("--list", action="store_true")
        p.add_argument("--betti", action="store_true")
        p.add_argument("-o", "--output")
        p.set_defaults(func=_cover_cmd(build))

    p = sub.add_parser("dowker", parents=[_common()], help="compare column and row complex homology")
    p.add_argument("input", nargs="?")
    p.add_argument("--random", metavar="ROWSxCOLS", help="use a seeded random relation instead of a file")
    p.add_argument("--density", type=float, default=0.35)
    p.set_defaults(func=cmd_dowker)

    p = sub.add_parser("graph-scan", parents=[_common(max_degree=1)], help="reconstruction scan of a metric graph")
    p.add_argument("input")
    p.add_argument("--delta", type=float, default=0.05, help="sampling spacing")
    p.add_argument("--scales", help="comma-separated scales")
    p.add_argument("--range", help="start:stop:step (inclusive)")
    p.add_argument("--complex", choices=("rips", "cech"), default="rips")
    p.add_argument("--check", action="store_true", help="fail unless every row matches the threshold prediction")
    p.set_defaults(func=cmd_graph_scan)

    p = sub.add_parser("imrank", parents=[_common()], help="image rank between nested samples")
    p.add_argument("--points", dest="input", required=True)
    p.add_argument("--scale", type=float, required=True)
    p.add_argument("--eps1", type=float, required=True)
    p.add_argument("--eps2", type=float, required=True)
    p.add_argument("--degree", type=int, default=1)
    p.set_defaults(func=cmd_imrank)

    p = sub.add_parser("demo", parents=[_common()], help="canned scenarios")
    p.add_argument("name", choices=sorted(DEMOS))
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    report = RunReport("ripsnerve " + " ".join(argv))
    try:
        args.func(args, report)
    except (io.ParseError, MetricError, UsageError, TruncatedComplexError,
            NotASubcomplexError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    sys.stdout.write(report.to_json() if args.json else report.to_tsv())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
