from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthoguard import (
    AxisRect,
    EdgeClass,
    GenSpec,
    Point,
    align_segment,
    balanced_decompose,
    basis_rectangle,
    classify_edge,
    generate,
    is_pyramid,
    polygon_from_profile,
    pyramid_decompose,
    r_visible,
    vertical_decompose,
)
from orthoguard.decompose import BASIC, MODIFIED
from orthoguard.errors import NotHistogram, NotXMonotone

from conftest import comb_polygon


def test_slab_counts(rectangle, lshape, hstar):
    assert len(vertical_decompose(rectangle)) == 1
    assert len(vertical_decompose(lshape)) == 2
    dec = vertical_decompose(hstar)
    assert len(dec) == (hstar.n - 2) // 2 == 5
    assert [s.x_left for s in dec.slabs] + [dec.slabs[-1].x_right] == [0, 2, 4, 6, 8, 10]
    assert [s.index for s in dec.slabs] == [1, 2, 3, 4, 5]
    assert dec.source_indices == (1, 5)


def test_slab_owner_edges(hstar):
    dec = vertical_decompose(hstar)
    for s in dec.slabs:
        a, b = hstar.edge(s.owner_upper_edge)
        assert a.y == b.y == s.y_high
        a, b = hstar.edge(s.owner_lower_edge)
        assert a.y == b.y == s.y_low


def test_coincident_vertical_edges_merge_cuts():
    # Two vertical edges at x = 2 (one per chain) give a single cut.
    P = polygon_from_profile([0, 2, 4], [0, 1], [3, 4])
    assert P.n == 8
    assert len(vertical_decompose(P)) == 2 < (P.n - 2) // 2


def test_vertical_decompose_rejects_non_monotone():
    from orthoguard import validate
    C = validate([(0, 0), (6, 0), (6, 2), (2, 2), (2, 4), (6, 4), (6, 6), (0, 6)])
    with pytest.raises(NotXMonotone):
        vertical_decompose(C)


def test_histogram_is_one_piece(hstar):
    for variant in (BASIC, MODIFIED):
        pieces = balanced_decompose(hstar, variant)
        assert len(pieces) == 1
        assert pieces[0].slab_range == (1, 5)
        assert pieces[0].cut_slab is None


def test_z_polygon_cuts_before_slab_3(zpoly):
    for variant in (BASIC, MODIFIED):
        pieces = balanced_decompose(zpoly, variant)
        assert [p.slab_range for p in pieces] == [(1, 2), (3, 3)]
        assert pieces[0].cut_slab == 2
        for p in pieces:
            seg = align_segment(p)
            assert p.polygon.contains_rect(AxisRect(seg.left, seg.right))


def test_local_maximum_cut_slab_stays():
    # h = (2, 5, 1): slab 2 is taller than both neighbours, so both variants agree.
    P = polygon_from_profile([0, 1, 2, 3], [0, 0, 3], [2, 5, 4])
    assert [p.slab_range for p in balanced_decompose(P, BASIC)] == [(1, 2), (3, 3)]
    assert [p.slab_range for p in balanced_decompose(P, MODIFIED)] == [(1, 2), (3, 3)]


def test_modified_defers_cut_slab_by_one():
    # h = (4, 6, 7): slab 2 is not a local maximum and moves to the next piece.
    P = polygon_from_profile([0, 1, 2, 3], [0, 0, 5], [4, 6, 12])
    basic = [p.slab_range for p in balanced_decompose(P, BASIC)]
    modified = [p.slab_range for p in balanced_decompose(P, MODIFIED)]
    assert basic == [(1, 2), (3, 3)]
    assert modified == [(1, 1), (2, 3)]


def test_unknown_variant(hstar):
    with pytest.raises(ValueError):
        balanced_decompose(hstar, "fancy")


def test_align_segments(rectangle, hstar):
    seg = align_segment(balanced_decompose(rectangle)[0])
    assert (seg.left, seg.right) == (Point(0, Fraction(3, 2)), Point(4, Fraction(3, 2)))
    seg = align_segment(balanced_decompose(hstar)[0])
    assert (seg.left, seg.right) == (Point(0, 1), Point(10, 1))


def test_degenerate_window_align_segment():
    P = polygon_from_profile([0, 1, 2, 3], [0, 0, 2], [2, 4, 4])
    (piece,) = balanced_decompose(P)
    assert piece.min_u == piece.max_l == 2
    assert align_segment(piece).y == 2


@settings(max_examples=120, deadline=None)
@given(st.sampled_from(["monotone", "balanced"]), st.integers(1, 30),
       st.integers(0, 2**64 - 1), st.sampled_from([BASIC, MODIFIED]))
def test_pieces_partition_slabs_and_are_balanced(family, k, seed, variant):
    P = generate(GenSpec(family, k, seed=seed))
    pieces = balanced_decompose(P, variant)
    flat = [s.index for p in pieces for s in p.slabs]
    assert flat == list(range(1, k + 1))
    for p in pieces:
        assert p.is_balanced
        assert p.max_l <= p.align_y <= p.min_u
        assert p.polygon.area == sum(s.rect.area for s in p.slabs)
    if family == "balanced":
        assert len(pieces) == 1


# -- pyramids ------------------------------------------------------------


def test_rectangle_is_one_pyramid(rectangle):
    (p,) = pyramid_decompose(rectangle)
    assert p.boundary == rectangle
    assert basis_rectangle(p) == AxisRect.from_bounds(0, 0, 4, 3)


def test_hstar_pyramids(hstar):
    pyr = pyramid_decompose(hstar)
    assert [(p.base.y, p.base.left.x, p.base.right.x) for p in pyr] == [
        (0, 0, 10), (2, 4, 6), (2, 8, 10)]
    assert [p.apex_tooth.y for p in pyr] == [6, 5, 4]
    assert pyr[1].basis_rect == AxisRect.from_bounds(4, 2, 6, 5)
    assert pyr[0].basis_rect == AxisRect.from_bounds(0, 0, 10, 2)
    assert all(is_pyramid(p.boundary) for p in pyr)


def test_comb_pyramid_count():
    for k in range(1, 7):
        assert len(pyramid_decompose(comb_polygon(k))) == k


def test_basis_rectangle_of_step_pyramid():
    step = polygon_from_profile([0, 2, 4, 6], [0, 0, 0], [1, 3, 1])
    (p,) = pyramid_decompose(step)
    # [2,4]x[0,3] has the same area but does not span the base.
    assert basis_rectangle(p) == AxisRect.from_bounds(0, 0, 6, 1)


def test_basis_rectangle_spans_the_whole_base():
    # [2,5]x[0,5] has more area, but its apex-shadow part is no kernel:
    # (3, 4) cannot see (0.5, 0.5).
    P = polygon_from_profile([0, 1, 2, 5, 6], [0] * 4, [1, 2, 5, 1])
    (p,) = pyramid_decompose(P)
    assert basis_rectangle(p) == AxisRect.from_bounds(0, 0, 6, 1)
    assert not r_visible((3, 4), (Fraction(1, 2), Fraction(1, 2)), P)


def test_pyramid_requires_bottom_histogram(zpoly, hstar):
    with pytest.raises(NotHistogram):
        pyramid_decompose(zpoly)
    with pytest.raises(NotHistogram):
        pyramid_decompose(hstar.flipped())


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 30), st.integers(0, 2**64 - 1))
def test_pyramids_tile_histogram(k, seed):
    H = generate(GenSpec("histogram", k, seed=seed))
    dents = sum(classify_edge(e, H) is EdgeClass.DENT for e in H.horizontal_edges)
    pyr = pyramid_decompose(H)
    assert len(pyr) == dents + 1
    assert sum(p.boundary.area for p in pyr) == H.area
    for p in pyr:
        assert is_pyramid(p.boundary)
        assert p.base.left.x <= p.apex_tooth.left.x < p.apex_tooth.right.x <= p.base.right.x
        assert p.boundary.contains_rect(p.basis_rect)
        assert p.basis_rect.lo.y == p.base.y
