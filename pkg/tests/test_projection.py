"""Adapted frames, projection onto the star, standard models."""

from __future__ import annotations

from fractions import Fraction

import pytest

from orangesplines.catalog import CATALOG, get
from orangesplines.complexes import SimplicialComplex, detect_orange
from orangesplines.projection import (
    adapt_coordinates,
    project_face,
    project_orange,
    standard_form,
    standard_orange,
)


def test_adapted_frame_normalizes_the_medial_face():
    for name in ("two-triangle", "two-triangle-skew", "two-tetrahedron", "fan-4d"):
        cx = get(name).complex
        profile = detect_orange(cx)
        frame = adapt_coordinates(cx, profile)
        k, i = profile.k, profile.i
        base = frame.apply_point(cx.vertices[profile.medial[0]])
        assert base == (Fraction(0),) * k
        for pos, m in enumerate(profile.medial[1:]):
            img = frame.apply_point(cx.vertices[m])
            expected = [Fraction(0)] * k
            expected[i + pos] = Fraction(1)
            assert img == tuple(expected), name


def test_projection_produces_a_star_with_center_zero():
    for entry in CATALOG:
        projected = project_orange(entry.complex)
        star = projected.complex
        assert star.ambient_dim == entry.profile.i
        assert projected.central_vertex == 0
        for f in star.maximal_faces:
            assert 0 in f
        # face bijection
        assert sorted(projected.face_map) == list(range(len(star.maximal_faces)))
        assert len(projected.face_map) == len(entry.complex.maximal_faces)


def test_two_triangle_projects_to_two_intervals(two_triangle):
    projected = project_orange(two_triangle)
    star = projected.complex
    assert star.ambient_dim == 1
    assert star.maximal_faces == ((0, 1), (0, 2))
    coords = sorted(v[0] for v in star.vertices)
    assert coords == [Fraction(-1), Fraction(0), Fraction(1)]


def test_single_simplex_projects_to_a_point():
    projected = project_orange(get("tetrahedron").complex)
    assert projected.complex.ambient_dim == 0
    assert projected.complex.maximal_faces == ((0,),)
    assert projected.face_map == (0,)


def test_standard_orange_join():
    star = SimplicialComplex(1, [[0], [-1], [1]], [[0, 1], [0, 2]])
    standard = standard_orange(star, 2)
    assert standard.ambient_dim == 3
    assert len(standard.vertices) == 5
    standard.validate()
    profile = detect_orange(standard)
    assert (profile.k, profile.i) == (3, 1)
    # every maximal face contains the center and both joined vertices
    for f in standard.maximal_faces:
        assert {0, 3, 4} <= set(f)


def test_standard_form_round_trip():
    for entry in CATALOG:
        sf = standard_form(entry.complex)
        assert (sf.profile.k, sf.profile.i) == (entry.profile.k, entry.profile.i)
        sf.standard.validate()
        std_profile = detect_orange(sf.standard)
        assert (std_profile.k, std_profile.i) == (entry.profile.k, entry.profile.i)
        # re-projecting the standard model gives the same star
        again = project_orange(sf.standard)
        assert again.complex == sf.projected.complex


def test_image_dimension_rule():
    for entry in CATALOG:
        cx = entry.complex
        profile = detect_orange(cx)
        frame = adapt_coordinates(cx, profile) if profile.i else None
        tau = set(profile.medial)
        for face in sorted(cx.faces):
            image = project_face(cx, face, profile, frame)
            common = tau & set(face)
            # collapsing the part inside the medial face keeps one vertex
            expected = len(face) - len(common) + 1 if common else len(face)
            assert len(image) == expected, (entry.name, face)
            assert len(set(image)) == len(image)


def test_skew_orange_has_skew_frame_but_clean_star():
    skew = get("two-triangle-skew").complex
    projected = project_orange(skew)
    star = projected.complex
    star.validate()
    assert star.ambient_dim == 1
    assert len(star.maximal_faces) == 2
    assert projected.central_vertex == 0
