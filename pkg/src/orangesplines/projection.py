"""Adapted coordinates and the projection of an orange onto R^i.

An adapted frame moves a designated medial vertex to the origin and the
medial face into the span of the last k - i coordinates.  Forgetting those
coordinates then maps the orange onto a star-shaped complex around the
origin in R^i (one central vertex, every maximal face containing it), which
is where the dimension reduction happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .complexes import OrangeProfile, Point, SimplicialComplex, detect_orange
from .exact import RationalMatrix, invert_matrix

__all__ = [
    "AdaptedFrame",
    "adapt_coordinates",
    "ProjectedOrange",
    "project_orange",
    "project_face",
    "standard_orange",
    "StandardForm",
    "standard_form",
]


@dataclass(frozen=True)
class AdaptedFrame:
    """Invertible affine map x -> M (x - v0) in R^k.

    ``matrix`` is M stored as dense rows; ``base_point`` is v0, the medial
    vertex sent to the origin.
    """

    matrix: tuple[tuple[Fraction, ...], ...]
    base_point: Point

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def apply_point(self, point: Sequence[Fraction]) -> Point:
        k = self.dim
        shifted = [Fraction(point[c]) - self.base_point[c] for c in range(k)]
        return tuple(
            sum((self.matrix[r][c] * shifted[c] for c in range(k)), Fraction(0))
            for r in range(k)
        )

    def apply(self, complex_: SimplicialComplex) -> SimplicialComplex:
        return SimplicialComplex(
            complex_.ambient_dim,
            [self.apply_point(v) for v in complex_.vertices],
            complex_.maximal_faces,
        )


def adapt_coordinates(
    complex_: SimplicialComplex, profile: OrangeProfile | None = None
) -> AdaptedFrame:
    """Build an adapted frame for an orange.

    The lowest-index medial vertex becomes the origin.  The remaining medial
    vertices span the last k - i coordinate directions; the first i
    directions come from a greedy completion by standard basis vectors
    (lowest index first), so the construction is deterministic.
    """
    if profile is None:
        profile = detect_orange(complex_)
    k = complex_.ambient_dim
    v0 = complex_.vertices[profile.medial[0]]
    medial_edges = [
        tuple(complex_.vertices[m][c] - v0[c] for c in range(k))
        for m in profile.medial[1:]
    ]
    # columns of B: completion vectors first (they become coordinates
    # 1..i after inversion), then the medial edge vectors
    completion: list[tuple[Fraction, ...]] = []
    probe = RationalMatrix.from_rows([list(e) for e in medial_edges]) if medial_edges else None
    base_rank = probe.rank() if probe is not None else 0
    if base_rank != len(medial_edges):
        raise ValueError("medial face is geometrically degenerate")
    current_rows = [list(e) for e in medial_edges]
    for j in range(k):
        if len(completion) == k - len(medial_edges):
            break
        cand = [Fraction(1 if c == j else 0) for c in range(k)]
        trial = current_rows + [cand]
        if RationalMatrix.from_rows(trial).rank() == len(trial):
            completion.append(tuple(cand))
            current_rows = trial
    if len(completion) + len(medial_edges) != k:
        raise ValueError("failed to complete a basis")  # unreachable for valid input
    cols = completion + medial_edges
    b = [[cols[j][r] for j in range(k)] for r in range(k)]
    m = invert_matrix(b)
    return AdaptedFrame(
        matrix=tuple(tuple(row) for row in m),
        base_point=v0,
    )


@dataclass(frozen=True)
class ProjectedOrange:
    """Result of projecting an orange: the star C in R^i plus bookkeeping.

    ``face_map`` sends each maximal-face index of the original orange to the
    corresponding maximal-face index of ``complex`` (a bijection).
    ``central_vertex`` is the index of the origin vertex in ``complex``.
    """

    complex: SimplicialComplex
    central_vertex: int
    face_map: tuple[int, ...]


def project_orange(
    complex_: SimplicialComplex, profile: OrangeProfile | None = None
) -> ProjectedOrange:
    """Project an orange onto R^i through an adapted frame.

    Vertices that land on the same point are identified (the medial face
    collapses to the origin).  The result is validated: it must be a
    geometric star of the origin, and segments must map bijectively.
    """
    if profile is None:
        profile = detect_orange(complex_)
    k, i = profile.k, profile.i
    if i == 0:
        # the whole orange is a single simplex around its medial face;
        # the projection is the one-point complex in R^0
        star = SimplicialComplex(0, [()], [[0]])
        return ProjectedOrange(complex=star, central_vertex=0, face_map=(0,))
    frame = adapt_coordinates(complex_, profile)
    adapted = frame.apply(complex_)

    image_of: dict[int, Point] = {}
    for vid in sorted({v for f in complex_.maximal_faces for v in f}):
        image_of[vid] = adapted.vertices[vid][:i]

    # the central vertex gets id 0; remaining images keep scan order
    origin = (Fraction(0),) * i
    if not any(p == origin for p in image_of.values()):
        raise ValueError("medial face does not project to the origin")
    new_ids: dict[Point, int] = {origin: 0}
    new_points: list[Point] = [origin]
    for vid in sorted(image_of):
        p = image_of[vid]
        if p not in new_ids:
            new_ids[p] = len(new_points)
            new_points.append(p)

    new_faces = []
    for f in complex_.maximal_faces:
        nf = tuple(sorted({new_ids[image_of[v]] for v in f}))
        if len(nf) != i + 1:
            raise ValueError(f"face {f} degenerates under projection")
        new_faces.append(nf)
    if len(set(new_faces)) != len(new_faces):
        raise ValueError("projection identifies two segments")

    star = SimplicialComplex(i, new_points, new_faces)
    center = new_ids[origin]
    for nf in star.maximal_faces:
        if center not in nf:
            raise ValueError("projected segment misses the central vertex")
    star.validate()

    face_map = tuple(star.maximal_faces.index(nf) for nf in new_faces)
    return ProjectedOrange(complex=star, central_vertex=center, face_map=face_map)


def project_face(
    complex_: SimplicialComplex,
    face: Sequence[int],
    profile: OrangeProfile | None = None,
    frame: AdaptedFrame | None = None,
) -> tuple[Point, ...]:
    """Distinct image points of one face under the orange's projection.

    Works for any face (not just maximal ones); the image simplex's
    dimension is one less than the number of returned points.
    """
    if profile is None:
        profile = detect_orange(complex_)
    i = profile.i
    if i == 0:
        return ((),)
    if frame is None:
        frame = adapt_coordinates(complex_, profile)
    images = {frame.apply_point(complex_.vertices[v])[:i] for v in face}
    return tuple(sorted(images))


def standard_orange(
    star: SimplicialComplex, fiber_dim: int
) -> SimplicialComplex:
    """Join the star C in R^i with a standard simplex spanning the last
    ``fiber_dim`` coordinates: the canonical orange with projection C.

    Vertices of C are embedded as (x, 0); the joined medial vertices are the
    origin's partners e_{i+1}, ..., e_k.  The origin of C itself serves as
    the remaining medial vertex.
    """
    i = star.ambient_dim
    k = i + fiber_dim
    zeros = (Fraction(0),) * fiber_dim
    vertices = [tuple(v) + zeros for v in star.vertices]
    tail_ids = []
    for t in range(fiber_dim):
        e = [Fraction(0)] * k
        e[i + t] = Fraction(1)
        tail_ids.append(len(vertices))
        vertices.append(tuple(e))
    faces = [tuple(f) + tuple(tail_ids) for f in star.maximal_faces]
    return SimplicialComplex(k, vertices, faces)


@dataclass(frozen=True)
class StandardForm:
    """An orange together with its adapted projection data."""

    profile: OrangeProfile
    frame: AdaptedFrame | None
    projected: ProjectedOrange
    standard: SimplicialComplex


def standard_form(complex_: SimplicialComplex) -> StandardForm:
    """Detect, adapt, project, and rebuild the standard orange in one pass."""
    profile = detect_orange(complex_)
    frame = adapt_coordinates(complex_, profile) if profile.i > 0 else None
    projected = project_orange(complex_, profile)
    if profile.i == 0:
        # C is a point; the standard orange is the simplex on the medial face
        std = standard_orange(
            SimplicialComplex(0, [()], [[0]]), profile.k
        )
    else:
        std = standard_orange(projected.complex, profile.k - profile.i)
    return StandardForm(profile=profile, frame=frame, projected=projected, standard=std)
