"""Guard placement for x-monotone polygons and hidden guards for histograms."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .decompose import (
    MODIFIED,
    BalancedPiece,
    Pyramid,
    _basis_of,
    _pyramid_parts,
    balanced_decompose,
)
from .errors import EmptyIntersection, NotBalanced, NotHistogram, NotXMonotone
from .geometry import (
    AxisRect,
    Chain,
    HorizontalEdge,
    OrthoPolygon,
    Point,
    histogram_base,
    orthogonal_shadow,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GuardRegion:
    shape: AxisRect
    source_teeth: tuple


@dataclass(frozen=True)
class GuardReport:
    regions: tuple
    points: tuple
    hidden: bool = False
    algorithm: str = ""
    clamps: int = 0
    clamp_events: tuple = field(default=(), compare=False)

    @property
    def m(self) -> int:
        return len(self.regions)


def _tooth_runs(values, xs, upper: bool) -> list:
    """Maximal runs of equal values that beat both neighbours (walls count as losing)."""
    runs = []
    k = len(values)
    i = 0
    while i < k:
        j = i
        while j + 1 < k and values[j + 1] == values[i]:
            j += 1
        v = values[i]
        if upper:
            ok = (i == 0 or values[i - 1] < v) and (j == k - 1 or values[j + 1] < v)
        else:
            ok = (i == 0 or values[i - 1] > v) and (j == k - 1 or values[j + 1] > v)
        if ok:
            runs.append((xs[i], xs[j + 1], v))
        i = j + 1
    return runs


def _as_piece(piece) -> BalancedPiece:
    if isinstance(piece, BalancedPiece):
        if not piece.is_balanced:
            raise NotBalanced("piece violates min_u >= max_l")
        return piece
    if not isinstance(piece, OrthoPolygon):
        raise TypeError("expected a BalancedPiece or an OrthoPolygon")
    if not piece.x_monotone:
        raise NotXMonotone("polygon is not x-monotone")
    pieces = balanced_decompose(piece)
    if len(pieces) != 1:
        raise NotBalanced("polygon is not balanced")
    return pieces[0]


def guard_balanced(piece) -> GuardReport:
    """Minimum guards of a balanced piece, all placed on its align segment.

    Each tooth of either chain asks for a guard within its x-range.  After
    sorting the requests by left end, each request overlapping the next one
    is replaced by the intersection of the two.
    """
    piece = _as_piece(piece)
    slabs = piece.slabs
    xs = [s.x_left for s in slabs] + [slabs[-1].x_right]
    y = piece.align_y
    teeth = [(x0, 1, x1, HorizontalEdge(Point(x0, v), Point(x1, v), Chain.UPPER))
             for x0, x1, v in _tooth_runs([s.y_high for s in slabs], xs, True)]
    teeth += [(x0, 0, x1, HorizontalEdge(Point(x0, v), Point(x1, v), Chain.LOWER))
              for x0, x1, v in _tooth_runs([s.y_low for s in slabs], xs, False)]
    teeth.sort(key=lambda t: (t[0], t[1]))

    regions = []
    i = 0
    while i < len(teeth):
        x0, chain, x1, edge = teeth[i]
        if i + 1 < len(teeth):
            nx0, nchain, nx1, nedge = teeth[i + 1]
            if nchain != chain and nx0 <= x1:
                regions.append(GuardRegion(
                    AxisRect.from_bounds(nx0, y, min(x1, nx1), y), (edge, nedge)))
                i += 2
                continue
        regions.append(GuardRegion(AxisRect.from_bounds(x0, y, x1, y), (edge,)))
        i += 1
    points = tuple(r.shape.center for r in regions)
    return GuardReport(tuple(regions), points, algorithm="balanced")


def guard_monotone(P: OrthoPolygon, variant: str = MODIFIED) -> GuardReport:
    """Guard an x-monotone polygon piece by piece over its balanced decomposition."""
    if not P.x_monotone:
        raise NotXMonotone("polygon is not x-monotone")
    regions, points = [], []
    for piece in balanced_decompose(P, variant):
        rep = guard_balanced(piece)
        regions.extend(rep.regions)
        points.extend(rep.points)
    return GuardReport(tuple(regions), tuple(points), algorithm=f"monotone-{variant}")


def shadow_intersection(p: Pyramid) -> AxisRect:
    """Basis rectangle of a pyramid intersected with the shadow of its apex tooth."""
    shadow = orthogonal_shadow(p.apex_tooth, p.boundary)
    hits = [c.intersection(p.basis_rect) for c in shadow.columns]
    hits = [h for h in hits if h is not None and h.area > 0]
    if len(hits) != 1:
        raise EmptyIntersection("apex shadow misses the basis rectangle")
    return hits[0]


def _flip_rect(r: AxisRect) -> AxisRect:
    return AxisRect.from_bounds(r.lo.x, -r.hi.y, r.hi.x, -r.lo.y)


def _flip_edge(e: HorizontalEdge) -> HorizontalEdge:
    chain = {Chain.UPPER: Chain.LOWER, Chain.LOWER: Chain.UPPER}.get(e.chain)
    return HorizontalEdge(Point(e.left.x, -e.y), Point(e.right.x, -e.y), chain)


def hidden_guard_histogram(H: OrthoPolygon) -> GuardReport:
    """Minimum hidden guard set of a histogram, one guard per upper tooth.

    Scanning the upper chain left to right, each dent lifts the working
    floor to its own height, and each tooth gets the strip between the floor
    and the floor plus the shortest vertical edge of the upper chain, limited
    to the tooth's x-range.  That strip is clipped to the tooth's shadow
    intersection; each clip is counted in ``clamps`` and logged.
    """
    side = histogram_base(H)
    if side is None:
        raise NotHistogram("polygon is not a histogram")
    if side == "top":
        rep = hidden_guard_histogram(H.flipped())
        regions = tuple(GuardRegion(_flip_rect(r.shape), tuple(_flip_edge(e) for e in r.source_teeth))
                        for r in rep.regions)
        return GuardReport(regions, tuple(Point(q.x, -q.y) for q in rep.points),
                           hidden=True, algorithm=rep.algorithm, clamps=rep.clamps,
                           clamp_events=tuple((_flip_rect(a), _flip_rect(b))
                                              for a, b in rep.clamp_events))

    prof = H.profile
    xs, tops, base = prof.xs, prof.hi, prof.lo[0]
    k = len(tops)
    eps = min([tops[0] - base, tops[-1] - base]
              + [abs(tops[i + 1] - tops[i]) for i in range(k - 1)])

    kernel = {}
    for part in _pyramid_parts(xs, tops, base):
        a = part.apex()
        basis = _basis_of(part.xs, part.tops, part.level)
        kernel[part.xs[a]] = AxisRect.from_bounds(part.xs[a], part.level,
                                                  part.xs[a + 1], basis.hi.y)

    regions, points, events = [], [], []
    floor = base
    for j in range(k):
        h = tops[j]
        left_lower = j == 0 or tops[j - 1] < h
        right_lower = j == k - 1 or tops[j + 1] < h
        if 0 < j < k - 1 and not left_lower and not right_lower:
            floor = h
        elif left_lower and right_lower:
            strip = AxisRect.from_bounds(xs[j], floor, xs[j + 1], floor + eps)
            region = strip.intersection(kernel[xs[j]])
            if region is None or region.area == 0:
                raise EmptyIntersection(f"strip {strip} misses its pyramid kernel")
            if region != strip:
                events.append((strip, region))
                log.info("hidden guard strip %s clipped to %s", strip, region)
            tooth = HorizontalEdge(Point(xs[j], h), Point(xs[j + 1], h), Chain.UPPER)
            regions.append(GuardRegion(region, (tooth,)))
            points.append(region.center)
    return GuardReport(tuple(regions), tuple(points), hidden=True, algorithm="hidden",
                       clamps=len(events), clamp_events=tuple(events))
