"""Seeded generation of test polygons.

Randomness comes from SplitMix64 so that any implementation can reproduce
the same instances from a seed::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output z ^ (z >> 31)

``below(n)`` is ``output mod n``.  Strip ``i`` always spans ``[i, i + 1]``.
Monotone walks pick the side to move with ``below(2)`` (0 moves the top)
and draw the new value uniformly from the allowed interval minus the current
value, falling back to the other side when that interval is empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvalidSpec
from .geometry import OrthoPolygon, polygon_from_profile

FAMILIES = ("monotone", "balanced", "histogram", "pyramid")
_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next() % n

    def choice(self, seq):
        return seq[self.below(len(seq))]


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    ``height_range`` is ``(lo, hi)``.  Histograms and pyramids draw column
    heights from it over a base at y = 0.  Monotone and balanced polygons
    keep every y in ``[0, hi]`` and every slab at least ``lo`` tall.  When
    omitted it defaults to ``(1, max(8, slab_count))``.
    """

    family: str
    slab_count: int
    height_range: Optional[tuple] = None
    seed: int = 0

    @property
    def heights(self) -> tuple:
        if self.height_range is None:
            return (1, max(8, self.slab_count))
        return tuple(self.height_range)


def _check(spec: GenSpec):
    if spec.family not in FAMILIES:
        raise InvalidSpec(f"unknown family {spec.family!r}")
    if spec.slab_count < 1:
        raise InvalidSpec("slab_count must be at least 1")
    lo, hi = spec.heights
    if lo < 1 or hi < lo:
        raise InvalidSpec(f"bad height range {spec.heights}")
    if spec.slab_count > 1 and hi == lo:
        raise InvalidSpec("height range needs at least two values")
    if spec.family == "pyramid" and hi - lo + 1 < spec.slab_count:
        raise InvalidSpec("height range too small for a pyramid of that many slabs")
    if not 0 <= spec.seed <= _MASK:
        raise InvalidSpec("seed must be an unsigned 64-bit integer")


def _histogram(rng, k, lo, hi):
    tops = [lo + rng.below(hi - lo + 1)]
    for _ in range(k - 1):
        v = lo + rng.below(hi - lo)
        if v >= tops[-1]:
            v += 1
        tops.append(v)
    return [0] * k, tops


def _sample_sorted(rng, values, count):
    pool = list(values)
    for i in range(count):
        j = i + rng.below(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return sorted(pool[:count])


def _pyramid(rng, k, lo, hi):
    peak_at = rng.below(k)
    need = max(peak_at, k - 1 - peak_at)
    peak = lo + need + rng.below(hi - lo - need + 1)
    left = _sample_sorted(rng, range(lo, peak), peak_at)
    right = _sample_sorted(rng, range(lo, peak), k - 1 - peak_at)[::-1]
    return [0] * k, left + [peak] + right


def _draw_except(rng, a, b, skip):
    """Uniform draw from [a, b] minus ``skip`` (which lies in [a, b]), or None."""
    if b - a < 1:
        return None
    v = a + rng.below(b - a)
    return v + 1 if v >= skip else v


def _walk(rng, k, lo, hi, balanced):
    low = rng.below(hi - lo + 1)
    up = low + lo + rng.below(hi - low - lo + 1)
    lows, ups = [low], [up]
    min_u, max_l = up, low
    for _ in range(k - 1):
        u_floor = max(low + lo, max_l) if balanced else low + lo
        l_ceil = min(up - lo, min_u) if balanced else up - lo
        move_up = rng.below(2) == 0
        for side in ((True, False) if move_up else (False, True)):
            v = (_draw_except(rng, u_floor, hi, up) if side
                 else _draw_except(rng, 0, l_ceil, low))
            if v is not None:
                break
        else:
            raise InvalidSpec("generator ran out of moves; widen the height range")
        if side:
            up = v
        else:
            low = v
        lows.append(low)
        ups.append(up)
        min_u, max_l = min(min_u, up), max(max_l, low)
    return lows, ups


def generate(spec: GenSpec) -> OrthoPolygon:
    """A polygon of the requested family; identical output for identical specs."""
    _check(spec)
    rng = SplitMix64(spec.seed)
    k = spec.slab_count
    lo, hi = spec.heights
    if spec.family == "histogram":
        lows, ups = _histogram(rng, k, lo, hi)
    elif spec.family == "pyramid":
        lows, ups = _pyramid(rng, k, lo, hi)
    else:
        lows, ups = _walk(rng, k, lo, hi, spec.family == "balanced")
    return polygon_from_profile(list(range(k + 1)), lows, ups)
