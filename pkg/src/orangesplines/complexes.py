"""Simplicial complexes with exact rational geometry.

A complex is stored by its maximal faces over a shared vertex list.  The
validator checks the geometric realization, not just the combinatorics:
any two maximal simplices must intersect exactly in the convex hull of
their common vertices.  All of that runs in exact arithmetic, so skew or
crossing geometries are detected reliably.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .exact import solve_linear

__all__ = [
    "Point",
    "Simplex",
    "SimplicialComplex",
    "OrangeProfile",
    "InvalidComplexError",
    "NotPureError",
    "EmptyMedialFaceError",
    "detect_orange",
    "adjacent_pairs",
    "affine_image",
]

Point = tuple[Fraction, ...]
Simplex = tuple[int, ...]


class InvalidComplexError(ValueError):
    """The vertex/face data does not describe a geometric simplicial complex."""


class NotPureError(ValueError):
    """Maximal faces do not all have the same dimension."""


class EmptyMedialFaceError(ValueError):
    """The maximal faces have no common vertex, so no medial face exists."""


def _as_point(coords: Iterable[Fraction | int]) -> Point:
    return tuple(Fraction(c) for c in coords)


def _affinely_independent(points: Sequence[Point]) -> bool:
    if not points:
        return True
    base = points[0]
    vecs = [[p[j] - base[j] for j in range(len(base))] for p in points[1:]]
    if not vecs:
        return True
    # rank of the edge-vector matrix must equal the number of edge vectors
    from .exact import RationalMatrix

    return RationalMatrix.from_rows(vecs).rank() == len(vecs)


def barycentric_coordinates(
    point: Point, vertices: Sequence[Point]
) -> list[Fraction] | None:
    """Exact barycentric coordinates of ``point`` w.r.t. an affinely
    independent vertex tuple, or None when the point is off the affine hull."""
    m = len(vertices)
    dim = len(point)
    matrix = [[vertices[j][i] for j in range(m)] for i in range(dim)]
    matrix.append([Fraction(1)] * m)
    rhs = [Fraction(c) for c in point] + [Fraction(1)]
    sol = solve_linear(matrix, rhs)
    if sol is None:
        return None
    particular, basis = sol
    if basis:
        raise ValueError("vertices are affinely dependent")
    return particular


def _point_in_simplex(point: Point, vertices: Sequence[Point]) -> bool:
    bc = barycentric_coordinates(point, vertices)
    return bc is not None and all(c >= 0 for c in bc)


def _intersection_within_hull(
    verts_a: Sequence[Point], verts_b: Sequence[Point], common: Sequence[Point]
) -> bool:
    """Check conv(verts_a) ∩ conv(verts_b) ⊆ conv(common), exactly.

    Points of the intersection are written as convex combinations from both
    sides; the combined linear system cuts out a polytope in the coefficient
    space, every vertex of which is found by brute-force basis enumeration.
    Each such vertex is then tested for membership in conv(common).
    """
    na, nb = len(verts_a), len(verts_b)
    dim = len(verts_a[0]) if verts_a else 0
    nvars = na + nb
    # equality constraints: sum a_i A_i - sum b_j B_j = 0, sum a_i = 1, sum b_j = 1
    eq_rows: list[list[Fraction]] = []
    eq_rhs: list[Fraction] = []
    for c in range(dim):
        row = [verts_a[i][c] for i in range(na)] + [-verts_b[j][c] for j in range(nb)]
        eq_rows.append(row)
        eq_rhs.append(Fraction(0))
    eq_rows.append([Fraction(1)] * na + [Fraction(0)] * nb)
    eq_rhs.append(Fraction(1))
    eq_rows.append([Fraction(0)] * na + [Fraction(1)] * nb)
    eq_rhs.append(Fraction(1))

    sol = solve_linear(eq_rows, eq_rhs)
    if sol is None:
        return True  # affine hulls do not meet, intersection empty
    particular, basis = sol
    f = len(basis)
    if f == 0:
        cand = [particular]
    else:
        # vertices of {x = particular + B t, x >= 0}: pick f of the nvars
        # inequality constraints to be active, solve for t, keep feasible
        cand = []
        seen: set[tuple[Fraction, ...]] = set()
        for active in combinations(range(nvars), f):
            mat = [[basis[t][idx] for t in range(f)] for idx in active]
            rhs = [-particular[idx] for idx in active]
            s = solve_linear(mat, rhs)
            if s is None:
                continue
            tpart, tbasis = s
            if tbasis:
                continue  # active set does not pin a unique point
            x = list(particular)
            for t in range(f):
                if tpart[t]:
                    for idx in range(nvars):
                        x[idx] += basis[t][idx] * tpart[t]
            key = tuple(x)
            if key in seen:
                continue
            seen.add(key)
            if all(v >= 0 for v in x):
                cand.append(x)

    if not cand:
        return True
    if not common:
        return False
    for x in cand:
        pt = tuple(
            sum((x[i] * verts_a[i][c] for i in range(na)), Fraction(0))
            for c in range(dim)
        )
        if not _point_in_simplex(pt, common):
            return False
    return True


@dataclass(frozen=True)
class SimplicialComplex:
    """A pure-data simplicial complex: rational vertices plus maximal faces.

    Vertices are indexed by position; every maximal face is stored as a
    sorted tuple of vertex indices.  Instances are immutable and hashable,
    which lets dimension computations be cached per complex.
    """

    ambient_dim: int
    vertices: tuple[Point, ...]
    maximal_faces: tuple[Simplex, ...]

    def __init__(
        self,
        ambient_dim: int,
        vertices: Iterable[Iterable[Fraction | int]],
        maximal_faces: Iterable[Iterable[int]],
    ) -> None:
        pts = tuple(_as_point(v) for v in vertices)
        faces = tuple(sorted(tuple(sorted(set(f))) for f in maximal_faces))
        object.__setattr__(self, "ambient_dim", int(ambient_dim))
        object.__setattr__(self, "vertices", pts)
        object.__setattr__(self, "maximal_faces", faces)

    @cached_property
    def dim(self) -> int:
        """Dimension of the largest maximal face (-1 when there are none)."""
        if not self.maximal_faces:
            return -1
        return max(len(f) for f in self.maximal_faces) - 1

    @cached_property
    def is_pure(self) -> bool:
        return bool(self.maximal_faces) and all(
            len(f) == len(self.maximal_faces[0]) for f in self.maximal_faces
        )

    @cached_property
    def faces(self) -> frozenset[Simplex]:
        """All nonempty faces of all maximal simplices."""
        out: set[Simplex] = set()
        for mf in self.maximal_faces:
            for r in range(1, len(mf) + 1):
                out.update(combinations(mf, r))
        return frozenset(out)

    def face_points(self, face: Sequence[int]) -> list[Point]:
        return [self.vertices[i] for i in face]

    def validate(self) -> None:
        """Raise InvalidComplexError unless this is a geometric complex.

        Checks coordinate arity, index bounds, duplicate or nested maximal
        faces, affine independence of every maximal face, and the exact
        intersection condition on every pair of maximal simplices.  Checking
        maximal pairs suffices: any two faces lie inside maximal ones, and
        the intersection condition is inherited by subsets.
        """
        for v in self.vertices:
            if len(v) != self.ambient_dim:
                raise InvalidComplexError(
                    f"vertex {v} has arity {len(v)}, ambient dimension is {self.ambient_dim}"
                )
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidComplexError("duplicate vertex coordinates")
        if not self.maximal_faces:
            raise InvalidComplexError("no maximal faces")
        nv = len(self.vertices)
        for f in self.maximal_faces:
            if not f:
                raise InvalidComplexError("empty face")
            if f[0] < 0 or f[-1] >= nv:
                raise InvalidComplexError(f"face {f} references a missing vertex")
        fsets = [frozenset(f) for f in self.maximal_faces]
        for a, b in combinations(range(len(fsets)), 2):
            if fsets[a] <= fsets[b] or fsets[b] <= fsets[a]:
                raise InvalidComplexError(
                    f"faces {self.maximal_faces[a]} and {self.maximal_faces[b]} are nested"
                )
        for f in self.maximal_faces:
            if not _affinely_independent(self.face_points(f)):
                raise InvalidComplexError(f"face {f} is geometrically degenerate")
        for a, b in combinations(range(len(self.maximal_faces)), 2):
            fa, fb = self.maximal_faces[a], self.maximal_faces[b]
            common = sorted(set(fa) & set(fb))
            ok = _intersection_within_hull(
                self.face_points(fa),
                self.face_points(fb),
                self.face_points(common),
            )
            if not ok:
                raise InvalidComplexError(
                    f"faces {fa} and {fb} overlap beyond their shared vertices"
                )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.vertices, self.maximal_faces))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.vertices == other.vertices
            and self.maximal_faces == other.maximal_faces
        )


@dataclass(frozen=True)
class OrangeProfile:
    """Shape parameters of a generalized orange.

    ``k`` is the dimension of the maximal faces, ``i`` the codimension of
    the medial face inside them (so the medial face has dimension k - i),
    and ``n`` the number of maximal faces (segments).
    """

    k: int
    i: int
    medial: Simplex
    n: int


def detect_orange(complex_: SimplicialComplex) -> OrangeProfile:
    """Recognize a (k, i)-orange, or raise.

    The medial face is the intersection of all maximal vertex sets; the
    defining property makes it unique, so set intersection recovers it.
    """
    if not complex_.is_pure:
        raise NotPureError("maximal faces have differing dimensions")
    k = complex_.dim
    shared = set(complex_.maximal_faces[0])
    for f in complex_.maximal_faces[1:]:
        shared &= set(f)
    if not shared:
        raise EmptyMedialFaceError("maximal faces share no common vertex")
    medial = tuple(sorted(shared))
    i = k - (len(medial) - 1)
    return OrangeProfile(k=k, i=i, medial=medial, n=len(complex_.maximal_faces))


def adjacent_pairs(complex_: SimplicialComplex) -> list[tuple[int, int]]:
    """Indices (s, t), s < t, of maximal faces sharing a facet (k vertices)."""
    out = []
    faces = complex_.maximal_faces
    for s, t in combinations(range(len(faces)), 2):
        if len(set(faces[s]) & set(faces[t])) == len(faces[s]) - 1:
            out.append((s, t))
    return out


def affine_image(
    complex_: SimplicialComplex,
    matrix: Sequence[Sequence[Fraction]],
    translation: Sequence[Fraction],
) -> SimplicialComplex:
    """Apply x -> M x + b to every vertex (M must be square invertible for
    the image to remain a simplicial complex; the caller owns that)."""
    k = complex_.ambient_dim
    new_vertices = []
    for v in complex_.vertices:
        img = [
            sum((matrix[r][c] * v[c] for c in range(k)), Fraction(0)) + Fraction(translation[r])
            for r in range(k)
        ]
        new_vertices.append(img)
    return SimplicialComplex(k, new_vertices, complex_.maximal_faces)
