"""JSON documents exchanged by the command line tool.

Coordinates are written as plain numbers.  Exact halves (and quarters) are
binary fractions, so writing them as floats is lossless and reading them back
through ``Fraction`` restores the exact value.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import GeometryError
from .geometry import AxisRect, OrthoPolygon, Point, exact


class DocumentError(GeometryError):
    """A document is malformed or inconsistent."""


def number(v):
    v = exact(v)
    if isinstance(v, int):
        return v
    d = v.denominator
    if d & (d - 1):
        raise DocumentError(f"{v} has no exact decimal form")
    return float(v)


def parse_number(v):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise DocumentError(f"expected a number, got {v!r}")
    return exact(Fraction(v))


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc.msg} at line {exc.lineno}") from None


def rect_doc(r: AxisRect) -> dict:
    return {"x_lo": number(r.lo.x), "y_lo": number(r.lo.y),
            "x_hi": number(r.hi.x), "y_hi": number(r.hi.y)}


def point_doc(p) -> list:
    return [number(p[0]), number(p[1])]


# -- polygons ------------------------------------------------------------


def polygon_to_doc(P: OrthoPolygon) -> dict:
    return {"vertices": [[v.x, v.y] for v in P.vertices]}


def polygon_from_doc(doc) -> OrthoPolygon:
    if not isinstance(doc, dict) or not isinstance(doc.get("vertices"), list):
        raise DocumentError("polygon document needs a 'vertices' list")
    return OrthoPolygon(doc["vertices"])


# -- guards --------------------------------------------------------------


def guards_to_doc(report) -> dict:
    return {
        "m": report.m,
        "regions": [rect_doc(r.shape) for r in report.regions],
        "points": [point_doc(p) for p in report.points],
        "hidden": report.hidden,
        "algorithm": report.algorithm,
        "clamps": report.clamps,
    }


def guard_points_from_doc(doc) -> list:
    """The guard points of a GuardDocument, after checking its counts agree."""
    if not isinstance(doc, dict) or not isinstance(doc.get("points"), list):
        raise DocumentError("guard document needs a 'points' list")
    pts = []
    for i, p in enumerate(doc["points"]):
        if not isinstance(p, list) or len(p) != 2:
            raise DocumentError(f"guard point {i} is not an [x, y] pair")
        pts.append(Point(parse_number(p[0]), parse_number(p[1])))
    if "m" in doc and doc["m"] != len(pts):
        raise DocumentError(f"m = {doc['m']} but there are {len(pts)} points")
    if "regions" in doc and len(doc["regions"]) != len(pts):
        raise DocumentError("regions and points differ in length")
    return pts


# -- decompositions ------------------------------------------------------


def slabs_to_doc(dec) -> dict:
    return {"mode": "slabs", "slabs": [
        {"index": s.index, **rect_doc(s.rect)} for s in dec.slabs]}


def pieces_to_doc(pieces, variant: str) -> dict:
    return {"mode": "balanced", "variant": variant, "pieces": [
        {"slabs": list(p.slab_range), "min_u": p.min_u, "max_l": p.max_l,
         "align_y": number(p.align_y), "cut_slab": p.cut_slab}
        for p in pieces]}


def pyramids_to_doc(pyramids, shadows) -> dict:
    out = []
    for p, si in zip(pyramids, shadows):
        out.append({
            "base": {"x_lo": p.base.left.x, "x_hi": p.base.right.x, "y": p.base.y},
            "apex": {"x_lo": p.apex_tooth.left.x, "x_hi": p.apex_tooth.right.x,
                     "y": p.apex_tooth.y},
            "basis": rect_doc(p.basis_rect),
            "shadow_intersection": rect_doc(si),
            "vertices": polygon_to_doc(p.boundary)["vertices"],
        })
    return {"mode": "pyramids", "pyramids": out}
