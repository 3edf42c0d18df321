"""Command-line front end: ``hflcalc <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import catalog
from .errors import HflError, SchemaError, TruncationTooSmall, UnknownName
from .geometry import Polygon
from .hflhat import SyntheticGrid, e2_state, resolve_hat
from .hflminus import GradedDim, hfl_minus_d
from .hfunc import HFunction, lattice_point, link_h
from .laurent import HalfInt
from .linkdata import LinkData, parse_link, validate
from .oracle import build_hat_model, graded_homology, minimum_truncation, minus_homology, spectral_page
from .polytope import (
    dual_thurston_polytope,
    floer_polytope,
    hat_table,
    newton_compare,
    thurston_x,
)

EXIT_OK, EXIT_SCHEMA, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2, 3


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _pt(d1: int, d2: int) -> list[str]:
    return [str(HalfInt(d1)), str(HalfInt(d2))]


# loading

def read_document(source: str) -> dict:
    """Read a JSON document from a path, ``-`` for stdin or ``catalog:NAME``."""
    if source.startswith("catalog:"):
        return catalog.document(source[len("catalog:"):])
    try:
        text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"cannot read {source}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {source}: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    return doc


def parse_grid(doc: dict) -> SyntheticGrid:
    rows = doc.get("rows")
    if (
        not isinstance(rows, list)
        or len(rows) != 3
        or any(not isinstance(r, list) or len(r) != 3 for r in rows)
        or any(isinstance(v, bool) or not isinstance(v, int) for r in rows for v in r)
    ):
        raise SchemaError("'rows' must be a 3x3 array of integers")
    lk = doc.get("linking_number", 0)
    center = doc.get("center", [5, 5])
    if isinstance(lk, bool) or not isinstance(lk, int):
        raise SchemaError("'linking_number' must be an integer")
    if not isinstance(center, list) or len(center) != 2:
        raise SchemaError("'center' must be a pair")
    try:
        return SyntheticGrid(rows, center=tuple(center), lk=lk)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def load(source: str) -> LinkData | SyntheticGrid:
    doc = read_document(source)
    if doc.get("kind") == "grid":
        return parse_grid(doc)
    return parse_link(doc)


# rendering helpers

def ascii_table(cells: dict[tuple[int, int], str], xs: Sequence[int], ys: Sequence[int]) -> str:
    """s1 grows to the right and s2 grows upward, as in the usual pictures."""
    labels_y = [str(HalfInt(y)) for y in ys]
    labels_x = [str(HalfInt(x)) for x in xs]
    width = max([len(v) for v in cells.values()] + [len(s) for s in labels_x] + [1])
    lw = max(len(s) for s in labels_y + ["s2"])
    lines = []
    for y, label in sorted(zip(ys, labels_y), reverse=True):
        row = " ".join(cells.get((x, y), ".").rjust(width) for x in xs)
        lines.append(f"{label.rjust(lw)} | {row}")
    lines.append(" " * lw + " +-" + "-" * ((width + 1) * len(xs) - 1))
    lines.append(" " * lw + "   " + " ".join(s.rjust(width) for s in labels_x) + "  s1")
    return "\n".join(lines)


def polygon_ascii(poly: Polygon) -> str:
    return "\n".join(f"({x}, {y})" for x, y in poly.as_strings()) if len(poly) else "(empty)"


def polygon_tikz(poly: Polygon) -> str:
    # TikZ evaluates "1/2" inside coordinates, so exact fractions survive
    pts = [f"({x}, {y})" for x, y in poly.as_strings()]
    if len(pts) >= 3:
        pts.append("cycle")
    return "\\draw " + " -- ".join(pts) + ";"


# commands

def cmd_validate(args) -> int:
    obj = load(args.file)
    if isinstance(obj, SyntheticGrid):
        center = obj.center
        try:
            resolve_hat(obj, *center)
        except HflError as exc:
            print(f"error h_function: {exc}")
            return EXIT_INVALID
        print("ok")
        return EXIT_OK
    report = validate(obj)
    if args.format == "structured":
        print(_dump(report.as_dict()))
    else:
        for issue in report.errors:
            print(f"error {issue.code}: {issue.message}")
        for issue in report.warnings:
            print(f"warning {issue.code}: {issue.message}")
        print("ok" if report.ok else "invalid")
    return EXIT_OK if report.ok else EXIT_INVALID


def _window(h: HFunction, bound: str | None) -> list[int]:
    cs = h.coords()
    if bound is None:
        return cs
    b = HalfInt.of(bound).doubled
    return [c for c in range(-b, b + 1) if (c - h.lk) % 2 == 0]


def cmd_h_table(args) -> int:
    obj = load(args.file)
    if isinstance(obj, SyntheticGrid):
        values = {p: obj.hd(*p) for p in obj.points()}
        c1, c2 = obj.center
        xs, ys = [c1 - 2, c1, c1 + 2], [c2 - 2, c2, c2 + 2]
    else:
        h = link_h(obj)
        xs = ys = _window(h, args.window)
        values = {(x, y): h.hd(x, y) for x in xs for y in ys}
    if args.format == "structured":
        recs = [{"point": _pt(x, y), "h": values[(x, y)]} for y in sorted(ys, reverse=True) for x in xs]
        print(_dump(recs))
    else:
        print(ascii_table({k: str(v) for k, v in values.items()}, xs, ys))
    return EXIT_OK


def _record(d1: int, d2: int, g: GradedDim) -> dict:
    return {"point": _pt(d1, d2), "gradings": g.as_dict(), "rank": g.rank, "euler": g.euler}


def _group(obj, h, d1: int, d2: int, flavor: str) -> GradedDim:
    if flavor == "minus":
        return hfl_minus_d(h, d1, d2)
    return resolve_hat(h, d1, d2).group


def cmd_hfl(args) -> int:
    obj = load(args.file)
    h = obj if isinstance(obj, SyntheticGrid) else link_h(obj)
    if args.point is not None:
        try:
            d1, d2 = (HalfInt.of(v).doubled for v in args.point)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
        lattice_point((HalfInt(d1), HalfInt(d2)), h.lk)
        g = _group(obj, h, d1, d2, args.flavor)
        if args.format == "structured":
            print(_dump(_record(d1, d2, g)))
        else:
            print(str(g))
            if args.euler:
                print(f"euler {g.euler}")
        return EXIT_OK

    if isinstance(obj, SyntheticGrid):
        pts = [obj.center]
    elif args.flavor == "hat":
        h, table = hat_table(obj)
        pts = sorted(table, key=lambda p: (-p[1], p[0]))
    else:
        cs = h.coords()
        pts = [(x, y) for y in reversed(cs) for x in cs]
    groups = {p: _group(obj, h, *p, args.flavor) for p in pts}
    if args.format == "structured":
        print(_dump([_record(*p, g) for p, g in groups.items()]))
        return EXIT_OK
    cells = {p: str(g.euler if args.euler else g.rank) for p, g in groups.items()}
    xs = sorted({p[0] for p in pts})
    ys = sorted({p[1] for p in pts})
    print(ascii_table(cells, xs, ys))
    return EXIT_OK


def cmd_polytope(args) -> int:
    obj = load(args.file)
    if isinstance(obj, SyntheticGrid):
        raise SchemaError("polytopes need a link document")
    if args.newton_compare:
        cmp = newton_compare(obj)
        if args.format == "structured":
            print(_dump(cmp.as_dict()))
        else:
            print(cmp.relation)
            print(f"floer hull equals euler hull: {'yes' if cmp.hull_equals_euler_hull else 'no'}")
        return EXIT_OK
    if args.floer:
        poly = floer_polytope(obj)
        norms = None
    else:
        poly = dual_thurston_polytope(obj, scale=args.scale)
        norms = [thurston_x(obj, u) for u in ((1, 0), (0, 1))]
    if args.format == "structured":
        out: dict[str, Any] = {"vertices": poly.as_strings()}
        if norms:
            out["norms"] = [n.as_dict() for n in norms]
        print(_dump(out))
    elif args.format == "tikz":
        print(polygon_tikz(poly))
    else:
        print(polygon_ascii(poly))
        for n in norms or []:
            d = n.as_dict()
            print(f"x({d['direction'][0]}, {d['direction'][1]}) = {d['x']}")
    return EXIT_OK


def _oracle_points(obj, h) -> list[tuple[int, int]]:
    if isinstance(obj, SyntheticGrid):
        return [obj.center]
    cs = h.coords()
    return [(x, y) for y in reversed(cs) for x in cs]


def cmd_oracle_check(args) -> int:
    obj = load(args.file)
    h = obj if isinstance(obj, SyntheticGrid) else link_h(obj)
    failures = flagged = 0
    pts = _oracle_points(obj, h)
    for d1, d2 in pts:
        p = (HalfInt(d1), HalfInt(d2))
        n_minus = args.truncation or minimum_truncation(h, p)
        n_hat = args.truncation or minimum_truncation(h, p, hat=True)
        minus_ok = all(
            minus_homology(h, p, n) == hfl_minus_d(h, d1, d2) for n in (n_minus, n_minus + 3)
        )
        state = e2_state(h, d1, d2)
        final = resolve_hat(h, d1, d2)
        hat_ok = True
        for n in (n_hat, n_hat + 3):
            model = build_hat_model(h, p, n)
            page = spectral_page(model, 2)
            hat_ok &= all(page[c] == state.e2_by_cube[c] for c in (-2, -1, 0))
            hat_ok &= graded_homology(model) == final.group
        ok = minus_ok and hat_ok
        failures += not ok
        note = ""
        if state.has_pairs:
            flagged += 1
            note = (
                f"  d2: E2 {state.e2} -> {final.group}"
                f" ({final.removed_pairs} pair{'s' if final.removed_pairs != 1 else ''} cancelled)"
            )
        if args.verbose or not ok or note:
            status = "pass" if ok else "FAIL"
            print(
                f"({HalfInt(d1)}, {HalfInt(d2)}) minus:{'pass' if minus_ok else 'FAIL'}"
                f" hat:{'pass' if hat_ok else 'FAIL'} {status}{note}"
            )
    print(f"{len(pts)} points, {failures} mismatches, {flagged} with a possible d2")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def cmd_catalog(args) -> int:
    if args.action == "list" or args.action is None:
        for name in catalog.names():
            print(name)
        return EXIT_OK
    if not args.name:
        raise SchemaError(f"catalog {args.action} needs a name")
    doc = catalog.document(args.name)
    text = _dump(doc) + "\n"
    if args.action == "show":
        sys.stdout.write(text)
        return EXIT_OK
    if not args.output:
        raise SchemaError("catalog export needs an output file")
    Path(args.output).write_text(text, encoding="utf-8")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hflcalc",
        description="Link Floer homology of two-component L-space links from Alexander data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a link document")
    p.add_argument("file")
    p.add_argument("--format", choices=["ascii", "structured"], default="ascii")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("h-table", help="print the h-function")
    p.add_argument("file")
    p.add_argument("--window", help="half-width of the printed box, e.g. 4 or 7/2")
    p.add_argument("--format", choices=["ascii", "structured"], default="ascii")
    p.set_defaults(func=cmd_h_table)

    p = sub.add_parser("hfl", help="HFL^- or hat groups at a point or over the window")
    p.add_argument("file")
    p.add_argument("--flavor", choices=["minus", "hat"], default="hat")
    where = p.add_mutually_exclusive_group()
    where.add_argument("--point", nargs=2, metavar=("S1", "S2"))
    where.add_argument("--table", action="store_true")
    p.add_argument("--euler", action="store_true", help="show Euler characteristics")
    p.add_argument("--format", choices=["ascii", "structured"], default="ascii")
    p.set_defaults(func=cmd_hfl)

    p = sub.add_parser("polytope", help="Floer polytope, dual Thurston polytope, Newton comparison")
    p.add_argument("file")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--dual-thurston", action="store_true")
    which.add_argument("--floer", action="store_true")
    which.add_argument("--newton-compare", action="store_true")
    p.add_argument("--scale", choices=["half", "full"], default="half")
    p.add_argument("--format", choices=["ascii", "structured", "tikz"], default="ascii")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("oracle-check", help="compare against the brute-force cone models")
    p.add_argument("file")
    p.add_argument("--truncation", type=int)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("catalog", help="built-in examples")
    p.add_argument("action", nargs="?", choices=["list", "show", "export"], default="list")
    p.add_argument("name", nargs="?")
    p.add_argument("output", nargs="?")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SchemaError, UnknownName) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except TruncationTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except HflError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
