"""
Why guard strips are clipped
============================

The hidden-guard strips are as tall as the shortest vertical edge of the
upper chain.  On combs with deep dents a strip can rise above the low
corridor that joins the teeth, and its center then misses the corridor.
Clipping each strip to its pyramid's kernel fixes that.
"""

# %%
from fractions import Fraction

from orthoguard import (
    Point,
    hidden_guard_histogram,
    min_hidden_guards_bruteforce,
    polygon_from_profile,
    pyramid_decompose,
    shadow_intersection,
    verify_cover,
)

P = polygon_from_profile(range(6), [0] * 5, [4, 1, 4, 1, 4])
rep = hidden_guard_histogram(P)
for strip, clipped in rep.clamp_events:
    print(f"strip {strip} clipped to {clipped}")

unclipped = [Point(Fraction(1, 2), Fraction(3, 2))] + list(rep.points[1:])
print("clipped guards cover:", verify_cover(rep.points, P).covered)
print("unclipped guards cover:", verify_cover(unclipped, P).covered)

# %%
# The kernel is the apex column cut at the lowest top of the pyramid.  A
# rectangle that stands on only part of the base can be larger (here the
# apex column alone, area 6 against 5), but guards in it miss the shelf.

Q = polygon_from_profile(range(6), [0] * 5, [6, 1, 7, 4, 8])
base = pyramid_decompose(Q)[0]
print("base pyramid tops:", base.boundary.profile.hi)
print("kernel:", shadow_intersection(base))
rep = hidden_guard_histogram(Q)
print(f"{rep.m} hidden guards, oracle says {min_hidden_guards_bruteforce(Q)};",
      "cover:", verify_cover(rep.points, Q).covered)
