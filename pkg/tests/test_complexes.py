"""Complex validation, orange recognition, exact geometry predicates."""

from __future__ import annotations

from fractions import Fraction

import pytest

from orangesplines.complexes import (
    EmptyMedialFaceError,
    InvalidComplexError,
    NotPureError,
    SimplicialComplex,
    adjacent_pairs,
    affine_image,
    barycentric_coordinates,
    detect_orange,
)
from orangesplines.catalog import CATALOG, get


def test_catalog_entries_validate_with_expected_profiles():
    for entry in CATALOG:
        entry.complex.validate()
        profile = detect_orange(entry.complex)
        assert profile == entry.profile, entry.name


def test_vertex_arity_checked():
    cx = SimplicialComplex(2, [[0, 0], [1]], [[0, 1]])
    with pytest.raises(InvalidComplexError, match="arity"):
        cx.validate()


def test_face_index_range_checked():
    cx = SimplicialComplex(1, [[0], [1]], [[0, 2]])
    with pytest.raises(InvalidComplexError, match="missing vertex"):
        cx.validate()


def test_duplicate_and_nested_faces_rejected():
    dup = SimplicialComplex(2, [[0, 0], [1, 0], [0, 1]], [[0, 1, 2], [2, 1, 0]])
    with pytest.raises(InvalidComplexError, match="nested"):
        dup.validate()
    nested = SimplicialComplex(2, [[0, 0], [1, 0], [0, 1]], [[0, 1, 2], [0, 1]])
    with pytest.raises(InvalidComplexError, match="nested"):
        nested.validate()


def test_degenerate_face_rejected():
    flat = SimplicialComplex(2, [[0, 0], [1, 1], [2, 2]], [[0, 1, 2]])
    with pytest.raises(InvalidComplexError, match="degenerate"):
        flat.validate()


def test_overlapping_triangles_rejected():
    # both triangles sit on the shared edge, the second apex inside the first
    cx = SimplicialComplex(
        2,
        [[0, 0], [2, 0], [0, 2], [1, Fraction(1, 2)]],
        [[0, 1, 2], [0, 1, 3]],
    )
    with pytest.raises(InvalidComplexError, match="overlap"):
        cx.validate()


def test_crossing_segments_rejected():
    cx = SimplicialComplex(
        2,
        [[0, 0], [2, 2], [0, 2], [2, 0]],
        [[0, 1], [2, 3]],
    )
    with pytest.raises(InvalidComplexError, match="overlap"):
        cx.validate()


def test_touching_interiors_rejected():
    # segments meet at (1, 1), which is a vertex of only one of them
    cx = SimplicialComplex(
        2,
        [[0, 0], [1, 1], [0, 2], [2, 0]],
        [[0, 1], [2, 3]],
    )
    with pytest.raises(InvalidComplexError, match="overlap"):
        cx.validate()


def test_disjoint_faces_are_fine():
    cx = SimplicialComplex(1, [[0], [1], [5], [7]], [[0, 1], [2, 3]])
    cx.validate()
    with pytest.raises(EmptyMedialFaceError):
        detect_orange(cx)


def test_impure_complex_rejected_by_detection():
    cx = SimplicialComplex(2, [[0, 0], [1, 0], [0, 1], [2, 0]], [[0, 1, 2], [1, 3]])
    cx.validate()
    with pytest.raises(NotPureError):
        detect_orange(cx)


def test_adjacent_pairs():
    two = SimplicialComplex(
        2, [[0, 0], [0, 1], [-1, 0], [1, 0]], [[0, 1, 2], [0, 1, 3]]
    )
    assert adjacent_pairs(two) == [(0, 1)]
    fan = get("tetrahedral-fan").complex  # a closed cycle of four segments
    assert len(adjacent_pairs(fan)) == 4


def test_barycentric_coordinates():
    verts = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    bc = barycentric_coordinates((Fraction(1, 3), Fraction(1, 3)), verts)
    assert bc == [Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)]
    off = barycentric_coordinates((Fraction(2), Fraction(2)), verts)
    assert off is not None and any(c < 0 for c in off)
    outside_hull = barycentric_coordinates(
        (Fraction(1), Fraction(1)), [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0))]
    )
    assert outside_hull is None


def test_affine_image_preserves_structure():
    entry = get("two-triangle")
    m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    t = [Fraction(3), Fraction(-2)]
    img = affine_image(entry.complex, m, t)
    img.validate()
    assert img.maximal_faces == entry.complex.maximal_faces
    assert detect_orange(img).i == entry.profile.i


def test_normalization_sorts_faces_and_vertices_in_faces():
    cx = SimplicialComplex(1, [[0], [1], [2]], [[2, 1], [1, 0]])
    assert cx.maximal_faces == ((0, 1), (1, 2))
    assert cx.dim == 1
    assert cx.is_pure
