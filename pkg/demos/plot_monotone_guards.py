"""
Guarding an x-monotone polygon
==============================

The polygon is cut into balanced pieces, each crossed left to right by a
horizontal align segment.  Every tooth of a piece needs a guard inside its
own x-range, so the guards go on the align segment, and ranges from the two
chains that overlap share one guard.
"""

# %%
from pathlib import Path

from orthoguard import (
    GenSpec,
    balanced_decompose,
    bruteforce_guards,
    generate,
    guard_monotone,
    polygon_from_profile,
    verify_cover,
)
from orthoguard.svg import render_svg

P = generate(GenSpec("monotone", 9, (1, 6), seed=3))
prof = P.profile
print("lower", prof.lo)
print("upper", prof.hi)

# %%
# Pieces and their align segments.

for piece in balanced_decompose(P):
    print(f"slabs {piece.slab_range}  window [{piece.max_l}, {piece.min_u}]  align y = {piece.align_y}")

rep = guard_monotone(P)
print(f"{rep.m} guards:", [(str(q.x), str(q.y)) for q in rep.points])
print("covers:", verify_cover(rep.points, P).covered)
print("oracle minimum:", len(bruteforce_guards(P)))

# %%
# Summing the pieces is not always optimal.  In this polygon the cut falls
# where a single guard could serve teeth on both sides of it, so the pieces
# ask for three guards while two suffice.

Q = polygon_from_profile(range(8), [2, 0, 3, 2, 0, 1, 1], [4, 4, 4, 4, 4, 4, 2])
per_piece = guard_monotone(Q)
best = bruteforce_guards(Q)
print(f"pieces: {per_piece.m} guards, oracle: {len(best)} at",
      [(str(q.x), str(q.y)) for q in best])

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)
(out / "monotone.svg").write_text(render_svg(P, [r.shape for r in rep.regions], rep.points))
(out / "monotone_gap.svg").write_text(render_svg(Q, (), best))
print("wrote", out / "monotone.svg", "and", out / "monotone_gap.svg")
