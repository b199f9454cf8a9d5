"""Exact orthogonal-polygon primitives.

Coordinates are Python ints on input.  Derived positions (segment midpoints,
guard points) are ``fractions.Fraction`` when they are not integral, so no
floating point is involved anywhere.  Polygons and visibility rectangles are
closed sets: a point on the boundary is inside.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence, Union

import numpy as np

from .errors import (
    NoHorizontalSpanner,
    NonAlternatingEdges,
    NotAnEdge,
    NotOrthoconvex,
    NotXMonotone,
    NoVerticalSpanner,
    OddVertexCount,
    PointOutsidePolygon,
    SelfIntersection,
    ValidationError,
    ZeroLengthEdge,
)

Coord = Union[int, Fraction]

# Keeps every difference and shoelace term inside int64.
_COORD_LIMIT = 2**30


def exact(value) -> Coord:
    """Normalize an int or Fraction so that integral values are plain ints."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    return int(value)


def midpoint(a: Coord, b: Coord) -> Coord:
    s = a + b
    if type(s) is int:
        return s >> 1 if s & 1 == 0 else Fraction(s, 2)
    return exact(Fraction(s) / 2)


class Point(NamedTuple):
    x: Coord
    y: Coord


class Chain(str, Enum):
    UPPER = "upper"
    LOWER = "lower"


class EdgeClass(Enum):
    TOOTH = "tooth"
    DENT = "dent"
    STEP = "step"


@dataclass(frozen=True)
class HorizontalEdge:
    """A horizontal segment, usually an edge of a polygon.

    ``chain`` tells on which side the polygon interior lies: an upper-chain
    edge has the interior below it.  Segments that are not polygon edges
    (align segments, pyramid bases) may leave it as ``None``.
    """

    left: Point
    right: Point
    chain: Optional[Chain] = None
    index: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        if self.left.y != self.right.y:
            raise ValueError("horizontal edge endpoints must share y")
        if not self.left.x < self.right.x:
            raise ValueError("horizontal edge needs left.x < right.x")

    @property
    def y(self) -> Coord:
        return self.left.y

    @property
    def length(self) -> Coord:
        return self.right.x - self.left.x


@dataclass(frozen=True)
class AxisRect:
    """Closed axis-parallel rectangle; zero width or height is allowed."""

    lo: Point
    hi: Point

    def __post_init__(self):
        if self.lo.x > self.hi.x or self.lo.y > self.hi.y:
            raise ValueError(f"invalid rectangle {self.lo} .. {self.hi}")

    @classmethod
    def spanned(cls, p, q) -> "AxisRect":
        return cls(Point(min(p[0], q[0]), min(p[1], q[1])),
                   Point(max(p[0], q[0]), max(p[1], q[1])))

    @classmethod
    def from_bounds(cls, x_lo, y_lo, x_hi, y_hi) -> "AxisRect":
        return cls(Point(x_lo, y_lo), Point(x_hi, y_hi))

    @property
    def width(self) -> Coord:
        return self.hi.x - self.lo.x

    @property
    def height(self) -> Coord:
        return self.hi.y - self.lo.y

    @property
    def area(self) -> Coord:
        return self.width * self.height

    @property
    def center(self) -> Point:
        return Point(midpoint(self.lo.x, self.hi.x), midpoint(self.lo.y, self.hi.y))

    def contains(self, p) -> bool:
        return self.lo.x <= p[0] <= self.hi.x and self.lo.y <= p[1] <= self.hi.y

    def contains_rect(self, other: "AxisRect") -> bool:
        return self.contains(other.lo) and self.contains(other.hi)

    def intersection(self, other: "AxisRect") -> Optional["AxisRect"]:
        x0, x1 = max(self.lo.x, other.lo.x), min(self.hi.x, other.hi.x)
        y0, y1 = max(self.lo.y, other.lo.y), min(self.hi.y, other.hi.y)
        if x0 > x1 or y0 > y1:
            return None
        return AxisRect(Point(x0, y0), Point(x1, y1))

    def interiors_overlap(self, other: "AxisRect") -> bool:
        return (max(self.lo.x, other.lo.x) < min(self.hi.x, other.hi.x)
                and max(self.lo.y, other.lo.y) < min(self.hi.y, other.hi.y))


@dataclass(frozen=True)
class RectilinearRegion:
    """A union of closed columns ordered left to right."""

    columns: tuple

    def contains(self, p) -> bool:
        return any(c.contains(p) for c in self.columns)

    @property
    def x_range(self) -> tuple:
        return self.columns[0].lo.x, self.columns[-1].hi.x

    @property
    def area(self) -> Coord:
        return sum(c.area for c in self.columns)


@dataclass(frozen=True)
class _Profile:
    """Strip table of an x-monotone polygon: strip ``i`` spans
    ``[xs[i], xs[i+1]]`` with cross-section ``[lo[i], hi[i]]``."""

    xs: list
    lo: list
    hi: list
    lower_edge: list
    upper_edge: list


def _is_int(v) -> bool:
    if type(v) is int:
        return True
    return isinstance(v, (int, np.integer)) and not isinstance(v, (bool, np.bool_))


def _as_points(raw) -> list:
    pts = []
    for i, v in enumerate(raw):
        try:
            x, y = v
        except (TypeError, ValueError):
            raise ValidationError(f"vertex {i} is not an (x, y) pair", i) from None
        if not (_is_int(x) and _is_int(y)):
            raise ValidationError(f"vertex {i} has non-integer coordinates {v!r}", i)
        x, y = int(x), int(y)
        if abs(x) >= _COORD_LIMIT or abs(y) >= _COORD_LIMIT:
            raise ValidationError(f"vertex {i} coordinate out of range", i)
        pts.append((x, y))
    return pts


def _first_pairwise_crossing(X, Y) -> Optional[int]:
    """Smallest edge index involved in a forbidden contact, or None.

    Quadratic but vectorized; only used for rings that are not x-monotone.
    """
    n = len(X)
    Xn, Yn = np.roll(X, -1), np.roll(Y, -1)
    idx = np.arange(n)
    horiz = Y == Yn
    h, v = idx[horiz], idx[~horiz]
    hy, hxa, hxb = Y[h], np.minimum(X[h], Xn[h]), np.maximum(X[h], Xn[h])
    vx, vya, vyb = X[v], np.minimum(Y[v], Yn[v]), np.maximum(Y[v], Yn[v])
    worst = None

    def note(i_arr, j_arr):
        nonlocal worst
        if len(i_arr):
            m = int(np.minimum(i_arr, j_arr).min())
            worst = m if worst is None else min(worst, m)

    step = 512
    for s in range(0, len(h), step):
        hi_ = h[s:s + step, None]
        y, a, b = hy[s:s + step, None], hxa[s:s + step, None], hxb[s:s + step, None]
        hit = (a <= vx) & (vx <= b) & (vya <= y) & (y <= vyb)
        adjacent = ((v - hi_) % n == 1) | ((hi_ - v) % n == 1)
        ii, jj = np.nonzero(hit & ~adjacent)
        note(h[s + ii], v[jj])
        hit = (y == hy) & (np.maximum(a, hxa) <= np.minimum(b, hxb)) & (hi_ != h)
        ii, jj = np.nonzero(hit)
        note(h[s + ii], h[jj])
    for s in range(0, len(v), step):
        vi = v[s:s + step, None]
        x, a, b = vx[s:s + step, None], vya[s:s + step, None], vyb[s:s + step, None]
        hit = (x == vx) & (np.maximum(a, vya) <= np.minimum(b, vyb)) & (vi != v)
        ii, jj = np.nonzero(hit)
        note(v[s + ii], v[jj])
    return worst


def _monotone_profile(X, Y):
    """Profile of a CCW ring whose horizontal edges form two direction runs.

    Returns ``(profile, bad_edge)``; ``bad_edge`` is a canonical edge index
    when the ring is not simple.
    """
    Xn, Yn = np.roll(X, -1), np.roll(Y, -1)
    hidx = np.nonzero(Y == Yn)[0]
    sgn = np.sign(Xn[hidx] - X[hidx])
    low, up = hidx[sgn > 0], hidx[sgn < 0]
    low = low[np.argsort(X[low], kind="stable")]
    up = up[np.argsort(Xn[up], kind="stable")]
    lx0, lx1, ly = X[low], Xn[low], Y[low]
    ux0, ux1, uy = Xn[up], X[up], Y[up]
    if lx0[0] != ux0[0] or lx1[-1] != ux1[-1]:
        return None, int(low[0])
    xs = np.union1d(np.append(lx0, lx1[-1]), np.append(ux0, ux1[-1]))
    left = xs[:-1]
    li = np.searchsorted(lx0, left, side="right") - 1
    ui = np.searchsorted(ux0, left, side="right") - 1
    lo, hi = ly[li], uy[ui]
    lower_edge, upper_edge = low[li], up[ui]
    bad = np.nonzero(lo >= hi)[0]
    if len(bad):
        return None, int(lower_edge[bad[0]])
    if len(lo) > 1:
        pinch = np.maximum(lo[:-1], lo[1:]) >= np.minimum(hi[:-1], hi[1:])
        bad = np.nonzero(pinch)[0]
        if len(bad):
            return None, int(lower_edge[bad[0] + 1])
    return _Profile(xs.tolist(), lo.tolist(), hi.tolist(),
                    lower_edge.tolist(), upper_edge.tolist()), None


class OrthoPolygon:
    """A simple orthogonal polygon with integer vertices.

    The constructor validates the ring and stores it counterclockwise,
    starting at the lexicographically smallest vertex.  A clockwise ring is
    reversed and a repeated closing vertex is dropped.  Validation errors
    report indices in the caller's ordering.
    """

    def __init__(self, vertices: Iterable):
        pts = _as_points(vertices)
        if len(pts) > 1 and pts[0] == pts[-1]:
            pts.pop()
        n = len(pts)
        if n == 0:
            raise ValidationError("empty vertex list", 0)
        if n % 2:
            raise OddVertexCount(f"orthogonal polygons have an even vertex count, got {n}", n - 1)
        P = np.array(pts, dtype=np.int64)
        X, Y = P[:, 0], P[:, 1]
        dx, dy = np.roll(X, -1) - X, np.roll(Y, -1) - Y
        zero = np.nonzero((dx == 0) & (dy == 0))[0]
        if len(zero):
            raise ZeroLengthEdge(f"edge {zero[0]} has zero length", int(zero[0]))
        diag = np.nonzero((dx != 0) & (dy != 0))[0]
        if len(diag):
            raise NonAlternatingEdges(f"edge {diag[0]} is not axis-parallel", int(diag[0]))
        horiz = dy == 0
        same = np.nonzero(horiz == np.roll(horiz, -1))[0]
        if len(same):
            i = int(same[0])
            raise NonAlternatingEdges(
                f"edges {i} and {(i + 1) % n} are both {'horizontal' if horiz[i] else 'vertical'}", i)
        area2 = int(np.dot(X, np.roll(Y, -1)) - np.dot(np.roll(X, -1), Y))
        if area2 == 0:
            raise SelfIntersection("ring encloses zero area", 0)
        ccw = area2 > 0
        order = np.arange(n) if ccw else np.concatenate(([0], np.arange(n - 1, 0, -1)))
        start = int(np.lexsort((Y[order], X[order]))[0])
        order = np.roll(order, -start)

        def original_edge(j):
            return int(order[j]) if ccw else int(order[(j + 1) % n])

        X, Y = X[order], Y[order]
        self._X, self._Y = X, Y
        self._area2 = abs(area2)
        self._vertices = tuple(Point(int(a), int(b)) for a, b in zip(X.tolist(), Y.tolist()))

        hsign = np.sign((np.roll(X, -1) - X)[Y == np.roll(Y, -1)])
        runs = int(np.count_nonzero(hsign != np.roll(hsign, 1)))
        self._profile = None
        if runs == 2:
            profile, bad = _monotone_profile(X, Y)
            if bad is not None:
                raise SelfIntersection(f"edge {original_edge(bad)} touches another edge",
                                       original_edge(bad))
            self._profile = profile
        else:
            bad = _first_pairwise_crossing(X, Y)
            if bad is not None:
                raise SelfIntersection(f"edge {original_edge(bad)} touches another edge",
                                       original_edge(bad))

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    def __len__(self):
        return len(self._vertices)

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other):
        return isinstance(other, OrthoPolygon) and self._vertices == other._vertices

    def __hash__(self):
        return hash(self._vertices)

    def __repr__(self):
        return f"OrthoPolygon({[tuple(v) for v in self._vertices]})"

    @property
    def area(self) -> int:
        return self._area2 // 2

    @property
    def bbox(self) -> AxisRect:
        return AxisRect(Point(int(self._X.min()), int(self._Y.min())),
                        Point(int(self._X.max()), int(self._Y.max())))

    @property
    def x_monotone(self) -> bool:
        return self._profile is not None

    @property
    def profile(self) -> _Profile:
        if self._profile is None:
            raise NotXMonotone("polygon is not x-monotone")
        return self._profile

    def edge(self, j: int) -> tuple:
        return self._vertices[j], self._vertices[(j + 1) % self.n]

    @cached_property
    def convex(self) -> tuple:
        """Per vertex: True when the interior angle is pi/2."""
        X, Y = self._X, self._Y
        ax, ay = X - np.roll(X, 1), Y - np.roll(Y, 1)
        bx, by = np.roll(X, -1) - X, np.roll(Y, -1) - Y
        return tuple((np.sign(ax) * np.sign(by) - np.sign(ay) * np.sign(bx) > 0).tolist())

    @cached_property
    def horizontal_edges(self) -> tuple:
        edges = []
        for j in range(self.n):
            a, b = self.edge(j)
            if a.y != b.y:
                continue
            if a.x < b.x:
                edges.append(HorizontalEdge(a, b, Chain.LOWER, j))
            else:
                edges.append(HorizontalEdge(b, a, Chain.UPPER, j))
        return tuple(edges)

    @cached_property
    def _edge_lookup(self) -> dict:
        return {(e.left, e.right): e for e in self.horizontal_edges}

    def find_edge(self, e) -> HorizontalEdge:
        """The polygon's own edge with the endpoints of ``e``."""
        found = self._edge_lookup.get((Point(*e.left), Point(*e.right)))
        if found is None or (e.chain is not None and e.chain != found.chain):
            raise NotAnEdge(f"{e.left}-{e.right} is not a horizontal edge of the polygon")
        return found

    def transposed(self) -> "OrthoPolygon":
        """Mirror across the line y = x."""
        return OrthoPolygon([(v.y, v.x) for v in self._vertices])

    def flipped(self) -> "OrthoPolygon":
        """Mirror across the x axis."""
        return OrthoPolygon([(v.x, -v.y) for v in self._vertices])

    # -- strips and containment -----------------------------------------

    @cached_property
    def _strips(self) -> tuple:
        """(xs, bands): bands[i] lists the closed y-intervals of strip i."""
        if self._profile is not None:
            p = self._profile
            return p.xs, [((a, b),) for a, b in zip(p.lo, p.hi)]
        xs = sorted(set(self._X.tolist()))
        pos = {x: i for i, x in enumerate(xs)}
        crossings = [[] for _ in range(len(xs) - 1)]
        for e in self.horizontal_edges:
            for s in range(pos[e.left.x], pos[e.right.x]):
                crossings[s].append(e.y)
        bands = []
        for ys in crossings:
            ys.sort()
            bands.append(tuple(zip(ys[0::2], ys[1::2])))
        return xs, bands

    def _line_section(self, s: int) -> list:
        """Merged closed cross-section on the vertical line x = xs[s]."""
        xs, bands = self._strips
        ivs = sorted((bands[s - 1] if s > 0 else ()) + (bands[s] if s < len(bands) else ()))
        merged = []
        for a, b in ivs:
            if merged and a <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], b))
            else:
                merged.append((a, b))
        return merged

    def contains_rect(self, rect: AxisRect) -> bool:
        """True iff the closed rectangle lies in the closed polygon."""
        xs, bands = self._strips
        x1, y1, x2, y2 = rect.lo.x, rect.lo.y, rect.hi.x, rect.hi.y
        if x1 < xs[0] or x2 > xs[-1]:
            return False
        if x1 == x2:
            s = bisect.bisect_left(xs, x1)
            if xs[s] == x1:
                section = self._line_section(s)
            else:
                section = bands[s - 1]
            return any(a <= y1 and y2 <= b for a, b in section)
        first = bisect.bisect_right(xs, x1) - 1
        last = bisect.bisect_left(xs, x2) - 1
        for s in range(first, last + 1):
            if not any(a <= y1 and y2 <= b for a, b in bands[s]):
                return False
        return True

    def contains(self, p) -> bool:
        p = Point(*p)
        return self.contains_rect(AxisRect(p, p))


def validate(raw_vertices: Sequence) -> OrthoPolygon:
    """Parse and validate a vertex list; see :class:`OrthoPolygon`."""
    return OrthoPolygon(raw_vertices)


def polygon_from_profile(xs: Sequence[int], lo: Sequence[int], hi: Sequence[int]) -> OrthoPolygon:
    """Build the x-monotone polygon whose strip ``i`` is ``[xs[i], xs[i+1]] x [lo[i], hi[i]]``."""
    k = len(lo)
    verts = [(xs[0], lo[0])]
    for i in range(1, k):
        if lo[i] != lo[i - 1]:
            verts.append((xs[i], lo[i - 1]))
            verts.append((xs[i], lo[i]))
    verts.append((xs[k], lo[k - 1]))
    verts.append((xs[k], hi[k - 1]))
    for i in range(k - 1, 0, -1):
        if hi[i] != hi[i - 1]:
            verts.append((xs[i], hi[i]))
            verts.append((xs[i], hi[i - 1]))
    verts.append((xs[0], hi[0]))
    return OrthoPolygon(verts)


def r_visible(p, q, P: OrthoPolygon) -> bool:
    """Orthogonal visibility: the closed rectangle spanned by p and q lies in P."""
    p, q = Point(*p), Point(*q)
    for pt in (p, q):
        if not P.contains(pt):
            raise PointOutsidePolygon(f"{tuple(pt)} is not in the polygon")
    return P.contains_rect(AxisRect.spanned(p, q))


def classify_edge(e: HorizontalEdge, P: OrthoPolygon) -> EdgeClass:
    """Tooth if both endpoint angles are convex, dent if both reflex."""
    e = P.find_edge(e)
    a, b = P.convex[e.index], P.convex[(e.index + 1) % P.n]
    if a and b:
        return EdgeClass.TOOTH
    if not a and not b:
        return EdgeClass.DENT
    return EdgeClass.STEP


def orthogonal_shadow(e: HorizontalEdge, P: OrthoPolygon) -> RectilinearRegion:
    """Points of P joined to ``e`` by a vertical segment inside P."""
    e = P.find_edge(e)
    xs, bands = P._strips
    s0 = bisect.bisect_left(xs, e.left.x)
    s1 = bisect.bisect_left(xs, e.right.x)
    columns = []
    for s in range(s0, s1):
        if e.chain is Chain.UPPER:
            lo, hi = next(iv for iv in bands[s] if iv[1] == e.y)
        else:
            lo, hi = next(iv for iv in bands[s] if iv[0] == e.y)
        if columns and columns[-1][2:] == [lo, hi]:
            columns[-1][1] = xs[s + 1]
        else:
            columns.append([xs[s], xs[s + 1], lo, hi])
    return RectilinearRegion(tuple(AxisRect.from_bounds(x0, lo, x1, hi)
                                   for x0, x1, lo, hi in columns))


def is_x_monotone(P: OrthoPolygon) -> bool:
    return P.x_monotone


def is_y_monotone(P: OrthoPolygon) -> bool:
    return P.transposed().x_monotone


def is_orthoconvex(P: OrthoPolygon) -> bool:
    return P.x_monotone and is_y_monotone(P)


def histogram_base(P: OrthoPolygon) -> Optional[str]:
    """'bottom' or 'top' when P is a histogram with that base, else None."""
    if not P.x_monotone:
        return None
    prof = P.profile
    if min(prof.lo) == max(prof.lo):
        return "bottom"
    if min(prof.hi) == max(prof.hi):
        return "top"
    return None


def is_histogram(P: OrthoPolygon) -> bool:
    return histogram_base(P) is not None


def is_pyramid(P: OrthoPolygon) -> bool:
    return is_histogram(P) and is_y_monotone(P)


def is_balanced(P: OrthoPolygon) -> bool:
    return P.x_monotone and min(P.profile.hi) >= max(P.profile.lo)


def class_flags(P: OrthoPolygon) -> dict:
    y_mono = is_y_monotone(P)
    hist = is_histogram(P)
    return {
        "monotone": P.x_monotone,
        "balanced": is_balanced(P),
        "histogram": hist,
        "pyramid": hist and y_mono,
        "orthoconvex": P.x_monotone and y_mono,
    }


def orthoconvex_kernel_point(P: OrthoPolygon) -> Point:
    """A point from which all of an orthoconvex polygon is r-visible.

    It is the crossing of a horizontal segment joining the leftmost and
    rightmost vertical edges with a vertical segment joining the bottom and
    top horizontal edges, each taken at the middle of its feasible range.
    """
    T = P.transposed()
    if not (P.x_monotone and T.x_monotone):
        raise NotOrthoconvex("polygon is not orthoconvex")
    max_l, min_u = max(P.profile.lo), min(P.profile.hi)
    if min_u < max_l:
        raise NoHorizontalSpanner("no horizontal segment spans the polygon")
    max_a, min_b = max(T.profile.lo), min(T.profile.hi)
    if min_b < max_a:
        raise NoVerticalSpanner("no vertical segment spans the polygon")
    return Point(midpoint(max_a, min_b), midpoint(max_l, min_u))
