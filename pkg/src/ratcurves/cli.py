"""Command-line entry point.

Exit codes: 0 success, 2 usage or parse error, 3 unsupported number of points,
4 orbit cap exceeded.  Payloads go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Any, Sequence

from .classifier import enumerate_by_self_intersection, report
from .errors import ClassParseError, OrbitOverflowError, UnsupportedRangeError
from .lattice import Surface, anticanonical_degree, dim_mor, format_class, parse_class, self_intersection
from .table import TABLE_POINTS, generate_table, instantiated_rows
from .weyl import DEFAULT_ORBIT_CAP, enumerate_minus_one_classes, orbit

SCHEMA_VERSION = "1"
ORBIT_LISTING_LIMIT = 1000

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RANGE = 3
EXIT_CAP = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def record(kind: str, r: int, payload: Any) -> dict:
    return {"schema_version": SCHEMA_VERSION, "surface_r": r, "kind": kind, "payload": payload}


def dump_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _surface(r: int) -> Surface:
    try:
        return Surface(r)
    except UnsupportedRangeError as exc:
        raise CliError(str(exc), EXIT_RANGE) from exc


def _parse(text: str, s: Surface):
    try:
        return parse_class(text, s)
    except ClassParseError as exc:
        raise CliError(f"cannot parse class: {exc} (token {exc.token!r})", EXIT_USAGE) from exc


def _class_entry(s: Surface, beta, allow_unvalidated: bool = False) -> dict:
    return {
        "beta": format_class(beta),
        "self_int": self_intersection(s, beta),
        "anticanonical_degree": anticanonical_degree(s, beta),
        "dim_mor": dim_mor(s, beta, allow_unvalidated=allow_unvalidated),
    }


# -- commands ------------------------------------------------------------------

def cmd_info(args) -> str:
    s = _surface(args.r)
    beta = _parse(args.beta, s)
    try:
        rep = report(s, beta, allow_unvalidated=args.allow_unvalidated)
    except UnsupportedRangeError as exc:
        raise CliError(str(exc), EXIT_RANGE) from exc
    if args.format == "text":
        fields = rep.to_dict()
        width = max(len(k) for k in fields)
        lines = []
        for key, value in fields.items():
            if value is None:
                value = "n/a"
            elif isinstance(value, bool):
                value = str(value).lower()
            lines.append(f"{key:<{width}}  {value}")
        return "\n".join(lines) + "\n"
    return dump_json(record("class_report", s.r, rep.to_dict()))


def cmd_lines(args) -> str:
    s = _surface(args.r)
    classes = enumerate_minus_one_classes(s)
    payload = {"count": len(classes), "classes": [format_class(c) for c in classes]}
    return dump_json(record("class_list", s.r, payload))


def cmd_enumerate(args) -> str:
    s = _surface(args.r)
    try:
        classes = enumerate_by_self_intersection(s, args.self_int, allow_unvalidated=args.allow_unvalidated)
    except UnsupportedRangeError as exc:
        raise CliError(str(exc), EXIT_RANGE) from exc
    entries = [_class_entry(s, c, args.allow_unvalidated) for c in classes]
    payload = {"self_int": args.self_int, "count": len(entries), "classes": entries}
    return dump_json(record("class_list", s.r, payload))


def cmd_orbit(args) -> str:
    s = _surface(args.r)
    beta = _parse(args.beta, s)
    if args.cap <= 0:
        raise CliError("--cap must be positive", EXIT_USAGE)
    try:
        res = orbit(s, beta, cap=args.cap)
    except OrbitOverflowError as exc:
        raise CliError(f"{exc}; partial count {exc.partial_count}", EXIT_CAP) from exc
    payload: dict[str, Any] = {"seed": format_class(beta), "size": res.size, "generator_count": res.generator_count}
    if res.size <= ORBIT_LISTING_LIMIT:
        payload["members"] = [format_class(c) for c in res.representatives]
    return dump_json(record("orbit", s.r, payload))


CSV_HEADER = ["self_int", "degree", *(f"m{i}" for i in range(1, TABLE_POINTS + 1)), "dim_mor"]


def render_csv(t_max: int) -> str:
    s = Surface(TABLE_POINTS)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for _, _, beta in instantiated_rows(generate_table(s, t_max), t_max):
        writer.writerow([self_intersection(s, beta), beta.d, *beta.m, dim_mor(s, beta)])
    return buf.getvalue()


def render_markdown(t_max: int) -> str:
    rows = generate_table(Surface(TABLE_POINTS), t_max)
    out = ["| β² | d | (m1,…,m6) | dim M_β |", "|---|---|---|---|"]
    for row in rows:
        mult = "(" + ",".join(f.render() for f in row.multiplicity_family) + ")"
        out.append(
            f"| {row.self_int_family.render()} | {row.degree_family.render()} | {mult} | {row.dim_family.render()} |"
        )
    return "\n".join(out) + "\n"


def render_table_json(t_max: int) -> str:
    s = Surface(TABLE_POINTS)
    rows = generate_table(s, t_max)
    entries = []
    for index, row in enumerate(rows):
        for t, beta in row.instances(t_max):
            entries.append(
                {
                    "row": index,
                    "group": row.group,
                    "t": t if row.is_family else None,
                    "self_int": self_intersection(s, beta),
                    "degree": beta.d,
                    "m": list(beta.m),
                    "dim_mor": dim_mor(s, beta),
                }
            )
    return dump_json(record("table", s.r, {"t_max": t_max, "rows": entries}))


def cmd_table(args) -> str:
    if args.t_max < 1:
        raise CliError("--t-max must be at least 1", EXIT_USAGE)
    if args.format == "csv":
        return render_csv(args.t_max)
    if args.format == "markdown":
        return render_markdown(args.t_max)
    return render_table_json(args.t_max)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratcurves",
        description="Smooth rational curve classes on blow-ups of the plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    # let "-3;-1,..." through as a positional instead of an unknown option
    class_like = re.compile(r"^-\d+(;|$)")

    def add_r(p):
        p.add_argument("-r", type=int, default=TABLE_POINTS, help="number of blown-up points (default 6)")

    def add_unvalidated(p):
        p.add_argument(
            "--allow-unvalidated", action="store_true", help="permit the classifier on r=8"
        )

    p = sub.add_parser("info", help="invariants and verdict for one class")
    add_r(p)
    add_unvalidated(p)
    p.add_argument("beta", help='class as "d;m1,...,mr"')
    p.add_argument("--format", choices=("json", "text"), default="json")
    p._negative_number_matcher = class_like
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("lines", help="list all (-1)-classes")
    add_r(p)
    p.set_defaults(func=cmd_lines)

    p = sub.add_parser("table", help="regenerate the cubic surface table")
    p.add_argument("--t-max", type=int, default=5)
    p.add_argument("--format", choices=("json", "csv", "markdown"), default="json")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="smooth rational classes of given square")
    add_r(p)
    add_unvalidated(p)
    p.add_argument("--self-int", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("orbit", help="Weyl orbit of a class")
    add_r(p)
    p.add_argument("beta", help='class as "d;m1,...,mr"')
    p.add_argument("--cap", type=int, default=DEFAULT_ORBIT_CAP)
    p._negative_number_matcher = class_like
    p.set_defaults(func=cmd_orbit)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except CliError as exc:
        print(f"ratcurves: error: {exc}", file=sys.stderr)
        return exc.code
    sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
