"""Exact guard placement in orthogonal polygons under rectangular visibility.

Two points see each other when the axis-parallel rectangle they span lies in
the polygon.  The package computes minimum guard sets for x-monotone
orthogonal polygons, minimum hidden guard sets for histograms, and checks
both against an exhaustive search on small inputs.
"""

from .decompose import (
    BalancedPiece,
    Pyramid,
    Slab,
    VerticalDecomposition,
    align_segment,
    balanced_decompose,
    basis_rectangle,
    pyramid_decompose,
    vertical_decompose,
)
from .errors import *  # noqa: F401,F403
from .geometry import (
    AxisRect,
    Chain,
    EdgeClass,
    HorizontalEdge,
    OrthoPolygon,
    Point,
    RectilinearRegion,
    class_flags,
    classify_edge,
    histogram_base,
    is_balanced,
    is_histogram,
    is_orthoconvex,
    is_pyramid,
    is_x_monotone,
    is_y_monotone,
    orthoconvex_kernel_point,
    orthogonal_shadow,
    polygon_from_profile,
    r_visible,
    validate,
)
from .guard import (
    GuardRegion,
    GuardReport,
    guard_balanced,
    guard_monotone,
    hidden_guard_histogram,
    shadow_intersection,
)
from .oracle import (
    CellGrid,
    bruteforce_guards,
    build_cells,
    min_guards_bruteforce,
    min_hidden_guards_bruteforce,
    verify_cover,
    verify_hidden,
    visibility_matrix,
)
from .polygen import GenSpec, SplitMix64, generate

__version__ = "0.1.0"
