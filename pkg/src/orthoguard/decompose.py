"""Vertical slabs, balanced pieces, and pyramid decomposition of histograms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import NotHistogram, NotXMonotone
from .geometry import (
    AxisRect,
    Chain,
    Coord,
    HorizontalEdge,
    OrthoPolygon,
    Point,
    histogram_base,
    midpoint,
    polygon_from_profile,
)

BASIC = "basic"
MODIFIED = "modified"
VARIANTS = (BASIC, MODIFIED)


@dataclass(frozen=True)
class Slab:
    """One rectangle of the vertical decomposition (1-based ``index``)."""

    index: int
    x_left: int
    x_right: int
    y_low: int
    y_high: int
    owner_upper_edge: int
    owner_lower_edge: int

    @property
    def height(self) -> int:
        return self.y_high - self.y_low

    @property
    def rect(self) -> AxisRect:
        return AxisRect.from_bounds(self.x_left, self.y_low, self.x_right, self.y_high)


@dataclass(frozen=True)
class VerticalDecomposition:
    polygon: OrthoPolygon
    slabs: tuple

    @property
    def source_indices(self) -> tuple:
        return (1, len(self.slabs))

    def __len__(self):
        return len(self.slabs)


def vertical_decompose(P: OrthoPolygon) -> VerticalDecomposition:
    """Cut P by extending the vertical edges at its reflex vertices.

    Vertical edges sharing an x-coordinate produce a single cut, so the slab
    count is (n - 2) / 2 only when all vertical edges have distinct x.
    """
    if not P.x_monotone:
        raise NotXMonotone("vertical decomposition needs an x-monotone polygon")
    p = P.profile
    slabs = tuple(
        Slab(i + 1, p.xs[i], p.xs[i + 1], p.lo[i], p.hi[i], p.upper_edge[i], p.lower_edge[i])
        for i in range(len(p.lo))
    )
    return VerticalDecomposition(P, slabs)


# -- balanced pieces -----------------------------------------------------


@dataclass(frozen=True)
class BalancedPiece:
    """A run of consecutive slabs crossed by one horizontal segment."""

    slabs: tuple
    min_u: int
    max_l: int
    cut_slab: Optional[int]

    @property
    def slab_range(self) -> tuple:
        return (self.slabs[0].index, self.slabs[-1].index)

    @property
    def align_y(self) -> Coord:
        return midpoint(self.max_l, self.min_u)

    @property
    def x_range(self) -> tuple:
        return (self.slabs[0].x_left, self.slabs[-1].x_right)

    @property
    def is_balanced(self) -> bool:
        return self.min_u >= self.max_l

    @cached_property
    def polygon(self) -> OrthoPolygon:
        """The piece as a standalone polygon, closed by vertical cuts."""
        s = self.slabs
        return polygon_from_profile([t.x_left for t in s] + [s[-1].x_right],
                                    [t.y_low for t in s], [t.y_high for t in s])


def _piece_bounds(lo, hi, variant: str) -> list:
    """Half-open slab ranges of the balanced scan (0-based)."""
    k = len(lo)
    ranges = []
    start = 0
    while start < k:
        min_u, max_l = hi[start], lo[start]
        i = start + 1
        while i < k and lo[i] <= min_u and hi[i] >= max_l:
            min_u = min(min_u, hi[i])
            max_l = max(max_l, lo[i])
            i += 1
        end = i
        if i < k and variant == MODIFIED:
            c = i - 1
            # A one-slab piece keeps its slab; deferring it would stall the scan.
            keep = c == start or (hi[c] - lo[c] > hi[i] - lo[i]
                                  and hi[c] - lo[c] > hi[c - 1] - lo[c - 1])
            if not keep:
                end = c
        ranges.append((start, end))
        start = end
    return ranges


def balanced_decompose(P, variant: str = MODIFIED) -> list:
    """Split an x-monotone polygon into balanced pieces, left to right.

    A piece ends just before the first slab whose y-extent misses the
    running window ``[max_l, min_u]``.  With ``variant="modified"`` the last
    slab of a finished piece moves to the next piece unless it is taller than
    both of its neighbours (or is the piece's only slab).
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    dec = P if isinstance(P, VerticalDecomposition) else vertical_decompose(P)
    slabs = dec.slabs
    lo = [s.y_low for s in slabs]
    hi = [s.y_high for s in slabs]
    bounds = _piece_bounds(lo, hi, variant)
    pieces = []
    for n, (a, b) in enumerate(bounds):
        pieces.append(BalancedPiece(
            slabs=slabs[a:b],
            min_u=min(hi[a:b]),
            max_l=max(lo[a:b]),
            cut_slab=slabs[b - 1].index if n < len(bounds) - 1 else None,
        ))
    return pieces


def align_segment(piece: BalancedPiece) -> HorizontalEdge:
    y = piece.align_y
    x0, x1 = piece.x_range
    return HorizontalEdge(Point(x0, y), Point(x1, y))


# -- pyramids ------------------------------------------------------------


@dataclass(frozen=True)
class Pyramid:
    base: HorizontalEdge
    apex_tooth: HorizontalEdge
    basis_rect: AxisRect
    boundary: OrthoPolygon


class _Part:
    """Mutable profile of a pyramid while the sweep builds it."""

    __slots__ = ("level", "xs", "tops")

    def __init__(self, level, x0):
        self.level = level
        self.xs = [x0]
        self.tops = []

    def push(self, x_right, top):
        if self.tops and self.tops[-1] == top:
            self.xs[-1] = x_right
        else:
            self.xs.append(x_right)
            self.tops.append(top)

    def apex(self) -> int:
        return max(range(len(self.tops)), key=self.tops.__getitem__)


def _pyramid_parts(xs, tops, base) -> list:
    """Split a bottom-based histogram profile into pyramid profiles.

    Every dent is extended rightwards until the profile drops to its level;
    the region above each extension, minus nested extensions, is one part.
    Runs in time linear in the number of slabs.  Parts come back sorted by
    their left x.
    """
    k = len(tops)
    stack = [_Part(base, xs[0])]
    done = []
    for j in range(k):
        h, xl, xr = tops[j], xs[j], xs[j + 1]
        while stack[-1].level >= h:
            child = stack.pop()
            done.append(child)
            stack[-1].xs[-1] = xl
        stack[-1].push(xr, h)
        if 0 < j < k - 1 and tops[j - 1] > h < tops[j + 1]:
            stack.append(_Part(h, xr))
    while len(stack) > 1:
        child = stack.pop()
        done.append(child)
        stack[-1].xs[-1] = xs[-1]
    done.append(stack[0])
    done.sort(key=lambda part: part.xs[0])
    return done


def _basis_of(xs, tops, level) -> AxisRect:
    """The tallest rectangle whose bottom edge is the whole base.

    Rectangles standing on only part of the base can have more area (a tall
    apex column over a long low shelf), but their share of the apex shadow
    is then not a kernel of the pyramid.
    """
    return AxisRect.from_bounds(xs[0], level, xs[-1], min(tops))


def _histogram_profile(H: OrthoPolygon):
    if histogram_base(H) != "bottom":
        raise NotHistogram("expected a histogram whose base is its bottom edge")
    p = H.profile
    return p.xs, p.hi, p.lo[0]


def pyramid_decompose(H: OrthoPolygon) -> list:
    """Pyramids of a bottom-based histogram, ordered by left x."""
    xs, tops, base = _histogram_profile(H)
    pyramids = []
    for part in _pyramid_parts(xs, tops, base):
        a = part.apex()
        apex = HorizontalEdge(Point(part.xs[a], part.tops[a]),
                              Point(part.xs[a + 1], part.tops[a]), Chain.UPPER)
        base_edge = HorizontalEdge(Point(part.xs[0], part.level),
                                   Point(part.xs[-1], part.level), Chain.LOWER)
        boundary = polygon_from_profile(part.xs, [part.level] * len(part.tops), part.tops)
        pyramids.append(Pyramid(base_edge, apex, _basis_of(part.xs, part.tops, part.level),
                                boundary))
    return pyramids


def basis_rectangle(p: Pyramid) -> AxisRect:
    """Maximum-area rectangle inside the pyramid whose bottom edge is its base."""
    prof = p.boundary.profile
    return _basis_of(prof.xs, prof.hi, p.base.y)
