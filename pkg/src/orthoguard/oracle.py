"""Brute-force ground truth on the grid induced by the vertex coordinates.

The lines through all vertex coordinates cut the plane into an arrangement
of open cells, open grid edges and grid vertices ("elements").  Two points
are r-visible exactly when every element met by the rectangle they span is
in the polygon, and which elements that rectangle meets depends only on the
elements containing the two points.  Visibility is therefore a function of
elements, and an exact minimum over arbitrary guard positions can be found
by searching over one representative per element.

Everything here is computed from the raw vertex list with its own
point-in-polygon test; nothing is shared with the slab machinery.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from .errors import CapExceeded, NoSolutionWithinLimit, PointOutsidePolygon
from .geometry import AxisRect, OrthoPolygon, Point, exact

DEFAULT_CAP = 64


@dataclass(frozen=True, eq=False)
class CellGrid:
    xs: tuple
    ys: tuple
    inside: np.ndarray  # (len(xs) - 1, len(ys) - 1) bool

    @property
    def cells(self) -> list:
        return [tuple(c) for c in np.argwhere(self.inside).tolist()]

    @property
    def centers(self) -> list:
        return [self.cell_center(c) for c in self.cells]

    def cell_center(self, cell) -> Point:
        i, j = cell
        return Point(exact(Fraction(self.xs[i] + self.xs[i + 1], 2)),
                     exact(Fraction(self.ys[j] + self.ys[j + 1], 2)))

    def cell_rect(self, cell) -> AxisRect:
        i, j = cell
        return AxisRect.from_bounds(self.xs[i], self.ys[j], self.xs[i + 1], self.ys[j + 1])

    @property
    def n_inside(self) -> int:
        return int(self.inside.sum())


def build_cells(P: OrthoPolygon) -> CellGrid:
    xs = sorted({v.x for v in P.vertices})
    ys = sorted({v.y for v in P.vertices})
    cx = (np.array(xs[:-1], dtype=float) + np.array(xs[1:], dtype=float)) / 2
    cy = (np.array(ys[:-1], dtype=float) + np.array(ys[1:], dtype=float)) / 2
    # Crossing number along +x; centers never sit on a vertex line, and
    # half-integers are exact in binary, so the float compare is exact.
    verts = P.vertices
    n = len(verts)
    vx, vy0, vy1 = [], [], []
    for k in range(n):
        a, b = verts[k], verts[(k + 1) % n]
        if a.x == b.x:
            vx.append(a.x)
            vy0.append(min(a.y, b.y))
            vy1.append(max(a.y, b.y))
    vx, vy0, vy1 = (np.array(v, dtype=float) for v in (vx, vy0, vy1))
    inside = np.zeros((len(cx), len(cy)), dtype=bool)
    for j, y in enumerate(cy):
        spans = (vy0 < y) & (y < vy1)
        right = vx[spans]
        inside[:, j] = (right[None, :] > cx[:, None]).sum(axis=1) % 2 == 1
    return CellGrid(tuple(xs), tuple(ys), inside)


class _Arrangement:
    """Element-level view of a CellGrid.

    Element index ``a`` along x: ``2i`` is the line ``x = xs[i]`` and
    ``2i + 1`` is the open interval ``(xs[i], xs[i+1])``; same along y.
    """

    def __init__(self, grid: CellGrid):
        self.grid = grid
        C = grid.inside
        nx, ny = C.shape
        Cp = np.zeros((nx + 2, ny + 2), dtype=bool)
        Cp[1:-1, 1:-1] = C
        a = np.arange(2 * nx + 1)
        b = np.arange(2 * ny + 1)
        fa, sa = (a + 1) // 2, a // 2 + 1
        fb, sb = (b + 1) // 2, b // 2 + 1
        q = [Cp[np.ix_(u, v)] for u in (fa, sa) for v in (fb, sb)]
        self.in_p = q[0] | q[1] | q[2] | q[3]
        self.interior = q[0] & q[1] & q[2] & q[3]
        out = (~self.in_p).astype(np.int64)
        S = np.zeros((out.shape[0] + 1, out.shape[1] + 1), dtype=np.int64)
        S[1:, 1:] = out.cumsum(0).cumsum(1)
        self._S = S

    def locate(self, p) -> tuple:
        xs, ys = self.grid.xs, self.grid.ys
        out = []
        for v, lines in ((p[0], xs), (p[1], ys)):
            if v < lines[0] or v > lines[-1]:
                raise PointOutsidePolygon(f"{tuple(p)} is not in the polygon")
            i = bisect.bisect_left(lines, v)
            out.append(2 * i if lines[i] == v else 2 * i - 1)
        if not self.in_p[out[0], out[1]]:
            raise PointOutsidePolygon(f"{tuple(p)} is not in the polygon")
        return out[0], out[1]

    def visible(self, A, B) -> np.ndarray:
        """Pairwise visibility between element lists A (k, 2) and B (m, 2)."""
        A, B = np.asarray(A).reshape(-1, 2), np.asarray(B).reshape(-1, 2)
        a0 = np.minimum(A[:, None, 0], B[None, :, 0])
        a1 = np.maximum(A[:, None, 0], B[None, :, 0]) + 1
        b0 = np.minimum(A[:, None, 1], B[None, :, 1])
        b1 = np.maximum(A[:, None, 1], B[None, :, 1]) + 1
        S = self._S
        bad = S[a1, b1] - S[a0, b1] - S[a1, b0] + S[a0, b0]
        return bad == 0

    def targets(self) -> np.ndarray:
        return np.argwhere(self.grid.inside) * 2 + 1

    def element_point(self, e) -> Point:
        def coord(k, lines):
            return lines[k // 2] if k % 2 == 0 else exact(Fraction(lines[k // 2] + lines[k // 2 + 1], 2))
        return Point(coord(int(e[0]), self.grid.xs), coord(int(e[1]), self.grid.ys))


def visibility_matrix(P: OrthoPolygon, grid: Optional[CellGrid] = None) -> np.ndarray:
    """Visibility between inside-cell centers, indexed like ``grid.cells``."""
    arr = _Arrangement(grid or build_cells(P))
    T = arr.targets()
    return arr.visible(T, T)


class CoverCheck(NamedTuple):
    covered: bool
    uncovered: list  # AxisRect of each unseen cell


class HiddenCheck(NamedTuple):
    hidden: bool
    pair: Optional[tuple]  # indices of two mutually visible guards


def verify_cover(points, P: OrthoPolygon, grid: Optional[CellGrid] = None) -> CoverCheck:
    """Does every point of P see at least one of ``points``?"""
    grid = grid or build_cells(P)
    arr = _Arrangement(grid)
    G = [arr.locate(p) for p in points]
    cells = grid.cells
    if not G:
        return CoverCheck(False, [grid.cell_rect(c) for c in cells])
    seen = arr.visible(G, arr.targets()).any(axis=0)
    missing = [grid.cell_rect(c) for c, ok in zip(cells, seen) if not ok]
    return CoverCheck(not missing, missing)


def verify_hidden(points, P: OrthoPolygon, grid: Optional[CellGrid] = None) -> HiddenCheck:
    """Are the points pairwise invisible?"""
    arr = _Arrangement(grid or build_cells(P))
    G = [arr.locate(p) for p in points]
    if len(G) < 2:
        return HiddenCheck(True, None)
    V = arr.visible(G, G)
    np.fill_diagonal(V, False)
    hits = np.argwhere(np.triu(V))
    if len(hits):
        return HiddenCheck(False, (int(hits[0][0]), int(hits[0][1])))
    return HiddenCheck(True, None)


# -- exact search --------------------------------------------------------


def _search(masks, conflicts, n_targets, limit):
    """Smallest list of candidate indices covering every target.

    ``conflicts[c]`` is a bitmask of candidates that may not be chosen
    together with ``c`` (None for plain cover).  Iterative deepening with
    branching on the uncovered target that has the fewest usable candidates.
    """
    full = (1 << n_targets) - 1
    by_target = [[c for c, m in enumerate(masks) if m >> t & 1] for t in range(n_targets)]
    biggest = max(bin(m).count("1") for m in masks)

    # Targets with pairwise disjoint candidate lists each need their own guard.
    lower, used = 0, set()
    for t in sorted(range(n_targets), key=lambda t: len(by_target[t])):
        if used.isdisjoint(by_target[t]):
            used.update(by_target[t])
            lower += 1

    failed = set()

    def dfs(covered, banned, left, chosen):
        if covered == full:
            return list(chosen)
        if left == 0:
            return None
        uncovered = full & ~covered
        if bin(uncovered).count("1") > left * biggest:
            return None
        key = (covered, banned, left)
        if key in failed:
            return None
        best_t, best_opts = None, None
        rest = uncovered
        while rest:
            low = rest & -rest
            t = low.bit_length() - 1
            rest ^= low
            opts = [c for c in by_target[t] if not banned >> c & 1]
            if best_opts is None or len(opts) < len(best_opts):
                best_t, best_opts = t, opts
                if len(opts) <= 1:
                    break
        for c in best_opts:
            nb = banned if conflicts is None else banned | conflicts[c]
            chosen.append(c)
            found = dfs(covered | masks[c], nb, left - 1, chosen)
            chosen.pop()
            if found is not None:
                return found
        failed.add(key)
        return None

    for k in range(max(lower, 1), limit + 1):
        found = dfs(0, 0, k, [])
        if found is not None:
            return found
    return None


def _prune_dominated(masks) -> list:
    """Indices of candidates whose cover set is not contained in another's."""
    order = sorted(range(len(masks)), key=lambda c: -bin(masks[c]).count("1"))
    kept = []
    for c in order:
        if not any(masks[c] & ~masks[d] == 0 for d in kept):
            kept.append(c)
    return sorted(kept)


def bruteforce_guards(P: OrthoPolygon, hidden: bool = False, limit: Optional[int] = None,
                      cap: int = DEFAULT_CAP) -> list:
    """An optimal (hidden) guard set, as one representative point per element.

    Plain guards may sit anywhere in the closed polygon; hidden guards are
    restricted to its interior.
    """
    grid = build_cells(P)
    if grid.n_inside > cap:
        raise CapExceeded(f"{grid.n_inside} cells exceed the cap of {cap}")
    arr = _Arrangement(grid)
    T = arr.targets()
    cand = np.argwhere(arr.interior if hidden else arr.in_p)
    see = arr.visible(cand, T)
    masks = [int(sum(1 << int(t) for t in np.nonzero(row)[0])) for row in see]
    conflicts = None
    if hidden:
        V = arr.visible(cand, cand)
        conflicts = [int(sum(1 << int(d) for d in np.nonzero(row)[0])) for row in V]
    else:
        keep = _prune_dominated(masks)
        cand = cand[keep]
        masks = [masks[c] for c in keep]
    limit = len(T) if limit is None else limit
    found = _search(masks, conflicts, len(T), limit)
    if found is None:
        kind = "hidden guard set" if hidden else "guard set"
        raise NoSolutionWithinLimit(f"no {kind} of size <= {limit}")
    return [arr.element_point(cand[c]) for c in sorted(found)]


def min_guards_bruteforce(P: OrthoPolygon, limit: Optional[int] = None,
                          cap: int = DEFAULT_CAP) -> int:
    return len(bruteforce_guards(P, False, limit, cap))


def min_hidden_guards_bruteforce(P: OrthoPolygon, limit: Optional[int] = None,
                                 cap: int = DEFAULT_CAP) -> int:
    return len(bruteforce_guards(P, True, limit, cap))
