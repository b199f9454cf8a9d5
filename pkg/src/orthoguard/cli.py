"""Command line interface: ``orthoguard <command> ...``.

Exit codes: 0 success, 1 invalid input or file format, 2 verification
failed, 3 polygon class not supported by the command.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import documents as docs
from .decompose import VARIANTS, MODIFIED, balanced_decompose, pyramid_decompose, vertical_decompose
from .errors import (
    CapExceeded,
    EmptyIntersection,
    GeometryError,
    NoHorizontalSpanner,
    NoSolutionWithinLimit,
    NoVerticalSpanner,
    UnsupportedPolygon,
)
from .geometry import AxisRect, class_flags
from .guard import guard_monotone, hidden_guard_histogram, shadow_intersection
from .oracle import DEFAULT_CAP, bruteforce_guards, build_cells, verify_cover, verify_hidden
from .polygen import FAMILIES, GenSpec, generate
from .svg import render_svg

EXIT_OK, EXIT_INVALID, EXIT_FAILED, EXIT_UNSUPPORTED = 0, 1, 2, 3


class _Failure(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _polygon(path):
    return docs.polygon_from_doc(docs.loads(_read(path)))


def _emit(doc, args):
    text = docs.dumps(doc)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args):
    P = _polygon(args.input)
    _emit({"n": P.n, "area": P.area, "flags": class_flags(P)}, args)


def cmd_decompose(args):
    P = _polygon(args.input)
    if args.mode == "slabs":
        doc = docs.slabs_to_doc(vertical_decompose(P))
    elif args.mode == "balanced":
        doc = docs.pieces_to_doc(balanced_decompose(P, args.variant), args.variant)
    else:
        pyramids = pyramid_decompose(P)
        doc = docs.pyramids_to_doc(pyramids, [shadow_intersection(p) for p in pyramids])
    _emit(doc, args)


def cmd_guard(args):
    _emit(docs.guards_to_doc(guard_monotone(_polygon(args.input), args.variant)), args)


def cmd_hidden(args):
    _emit(docs.guards_to_doc(hidden_guard_histogram(_polygon(args.input))), args)


def cmd_verify(args):
    P = _polygon(args.input)
    points = docs.guard_points_from_doc(docs.loads(_read(args.guards)))
    grid = build_cells(P)
    try:
        cover = verify_cover(points, P, grid)
    except GeometryError as exc:
        raise _Failure(f"verification failed: {exc}", EXIT_FAILED) from None
    result = {"covered": cover.covered,
              "uncovered": [docs.rect_doc(r) for r in cover.uncovered]}
    problems = []
    if not cover.covered:
        problems.append(f"{len(cover.uncovered)} cell(s) unseen")
    if args.hidden:
        hid = verify_hidden(points, P, grid)
        result["hidden"] = hid.hidden
        result["visible_pair"] = list(hid.pair) if hid.pair else None
        if not hid.hidden:
            problems.append(f"guards {hid.pair[0]} and {hid.pair[1]} see each other")
    _emit(result, args)
    if problems:
        raise _Failure("verification failed: " + "; ".join(problems), EXIT_FAILED)


def cmd_oracle(args):
    P = _polygon(args.input)
    try:
        pts = bruteforce_guards(P, hidden=args.hidden, limit=args.limit, cap=args.cap)
    except CapExceeded as exc:
        raise _Failure(str(exc), EXIT_UNSUPPORTED) from None
    except NoSolutionWithinLimit as exc:
        raise _Failure(str(exc), EXIT_FAILED) from None
    _emit({"m": len(pts), "points": [docs.point_doc(p) for p in pts],
           "hidden": args.hidden, "algorithm": "bruteforce"}, args)


def cmd_gen(args):
    spec = GenSpec(args.family, args.slabs, tuple(args.heights) if args.heights else None, args.seed)
    _emit(docs.polygon_to_doc(generate(spec)), args)


def cmd_render(args):
    P = _polygon(args.input)
    regions, points = [], []
    if args.guards:
        gdoc = docs.loads(_read(args.guards))
        points = docs.guard_points_from_doc(gdoc)
        for r in gdoc.get("regions", []):
            try:
                vals = [docs.parse_number(r[k]) for k in ("x_lo", "y_lo", "x_hi", "y_hi")]
            except (KeyError, TypeError):
                raise docs.DocumentError("guard region needs x_lo, y_lo, x_hi, y_hi") from None
            regions.append(AxisRect.from_bounds(*vals))
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(render_svg(P, regions, points))


class _Parser(argparse.ArgumentParser):
    # Usage errors are invalid input (1); argparse would exit with 2.
    def error(self, message):
        _diagnose(message)
        sys.exit(EXIT_INVALID)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="orthoguard", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, input_=True):
        p = sub.add_parser(name, help=help_)
        if input_:
            p.add_argument("--input", required=True, help="polygon document ('-' for stdin)")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "validate a polygon and report its class flags")
    p = add("decompose", cmd_decompose, "slabs, balanced pieces or pyramids")
    p.add_argument("--mode", choices=("slabs", "balanced", "pyramids"), required=True)
    p.add_argument("--variant", choices=VARIANTS, default=MODIFIED)
    p = add("guard", cmd_guard, "guards for an x-monotone polygon")
    p.add_argument("--variant", choices=VARIANTS, default=MODIFIED)
    add("hidden", cmd_hidden, "hidden guards for a histogram")
    p = add("verify", cmd_verify, "check a guard document with the brute-force oracle")
    p.add_argument("--guards", required=True)
    p.add_argument("--hidden", action="store_true", help="also require pairwise invisibility")
    p = add("oracle", cmd_oracle, "exact minimum by exhaustive search")
    p.add_argument("--hidden", action="store_true")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum number of grid cells")
    p = add("gen", cmd_gen, "generate a random polygon", input_=False)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--slabs", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--heights", type=int, nargs=2, metavar=("LO", "HI"))
    p = add("render", cmd_render, "draw an SVG figure")
    p.add_argument("--guards")
    p.add_argument("--output", required=True)
    for name in ("validate", "decompose", "guard", "hidden", "verify", "oracle", "gen"):
        sub.choices[name].add_argument("--output", help="write the document here instead of stdout")
    return ap


def _diagnose(message: str):
    message = " ".join(str(message).split())
    if sys.stderr.isatty() and "NO_COLOR" not in os.environ:
        sys.stderr.write(f"\x1b[31merror:\x1b[0m {message}\n")
    else:
        sys.stderr.write(f"error: {message}\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except _Failure as exc:
        _diagnose(exc)
        return exc.code
    except (UnsupportedPolygon, NoHorizontalSpanner, NoVerticalSpanner,
            EmptyIntersection) as exc:
        _diagnose(f"unsupported polygon: {exc}")
        return EXIT_UNSUPPORTED
    except (GeometryError, OSError) as exc:
        _diagnose(exc)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
