"""Built-in worked examples: one orange per shape class.

Every entry validates as a geometric complex and is recognized with the
stated (k, i) profile.  The four single-simplex entries cover the extremal
case i = 0; the six multi-segment entries cover i from 1 up to k in
ambient dimensions 2 through 4; the skew entry exercises non-axis-aligned
medial faces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import OrangeProfile, SimplicialComplex

__all__ = ["CatalogEntry", "CATALOG", "SWEEP_NAMES", "names", "get"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    notes: str
    complex: SimplicialComplex
    profile: OrangeProfile


def _entry(
    name: str,
    notes: str,
    ambient: int,
    vertices: list[list],
    faces: list[list[int]],
    k: int,
    i: int,
    medial: tuple[int, ...],
) -> CatalogEntry:
    cx = SimplicialComplex(ambient, vertices, faces)
    return CatalogEntry(
        name=name,
        notes=notes,
        complex=cx,
        profile=OrangeProfile(k=k, i=i, medial=medial, n=len(cx.maximal_faces)),
    )


CATALOG: tuple[CatalogEntry, ...] = (
    _entry(
        "segment",
        "single 1-simplex; extremal case i = 0 in the line",
        1,
        [[0], [1]],
        [[0, 1]],
        k=1,
        i=0,
        medial=(0, 1),
    ),
    _entry(
        "triangle",
        "single 2-simplex; extremal case i = 0 in the plane",
        2,
        [[0, 0], [1, 0], [0, 1]],
        [[0, 1, 2]],
        k=2,
        i=0,
        medial=(0, 1, 2),
    ),
    _entry(
        "tetrahedron",
        "single 3-simplex; extremal case i = 0 in space",
        3,
        [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 2, 3]],
        k=3,
        i=0,
        medial=(0, 1, 2, 3),
    ),
    _entry(
        "four-simplex",
        "single 4-simplex; extremal case i = 0 in four dimensions",
        4,
        [
            [0, 0, 0, 0],
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ],
        [[0, 1, 2, 3, 4]],
        k=4,
        i=0,
        medial=(0, 1, 2, 3, 4),
    ),
    _entry(
        "two-triangle",
        "two triangles glued along a medial edge; projects to two intervals",
        2,
        [[0, 0], [0, 1], [-1, 0], [1, 0]],
        [[0, 1, 2], [0, 1, 3]],
        k=2,
        i=1,
        medial=(0, 1),
    ),
    _entry(
        "two-triangle-skew",
        "affine image of two-triangle; medial edge off the coordinate axes",
        2,
        [[3, -2], [4, -1], [1, -3], [5, -1]],
        [[0, 1, 2], [0, 1, 3]],
        k=2,
        i=1,
        medial=(0, 1),
    ),
    _entry(
        "planar-star",
        "four quadrant triangles around the origin; medial face is a vertex",
        2,
        [[0, 0], [1, 0], [0, 1], [-1, 0], [0, -1]],
        [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 1, 4]],
        k=2,
        i=2,
        medial=(0,),
    ),
    _entry(
        "two-tetrahedron",
        "two tetrahedra glued along a medial triangle; projects to two intervals",
        3,
        [[0, 0, 0], [0, 1, 0], [0, 0, 1], [-1, 0, 0], [1, 0, 0]],
        [[0, 1, 2, 3], [0, 1, 2, 4]],
        k=3,
        i=1,
        medial=(0, 1, 2),
    ),
    _entry(
        "tetrahedral-fan",
        "closed fan of four tetrahedra around a medial edge on the x3-axis",
        3,
        [
            [0, 0, 0],
            [0, 0, 1],
            [1, 0, 0],
            [0, 1, 0],
            [-1, 0, 0],
            [0, -1, 0],
        ],
        [[0, 1, 2, 3], [0, 1, 3, 4], [0, 1, 4, 5], [0, 1, 2, 5]],
        k=3,
        i=2,
        medial=(0, 1),
    ),
    _entry(
        "vertex-star-3d",
        "star of the centroid of a tetrahedron; medial face is a vertex",
        3,
        [
            [0, 0, 0],
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [-1, -1, -1],
        ],
        [[0, 1, 2, 3], [0, 1, 2, 4], [0, 1, 3, 4], [0, 2, 3, 4]],
        k=3,
        i=3,
        medial=(0,),
    ),
    _entry(
        "fan-4d",
        "closed fan of four 4-simplices around a medial triangle",
        4,
        [
            [0, 0, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [-1, 0, 0, 0],
            [0, -1, 0, 0],
        ],
        [
            [0, 1, 2, 3, 4],
            [0, 1, 2, 4, 5],
            [0, 1, 2, 5, 6],
            [0, 1, 2, 3, 6],
        ],
        k=4,
        i=2,
        medial=(0, 1, 2),
    ),
)

SWEEP_NAMES: tuple[str, ...] = (
    "two-triangle",
    "planar-star",
    "two-tetrahedron",
    "tetrahedral-fan",
    "vertex-star-3d",
    "fan-4d",
)


def names() -> list[str]:
    return [e.name for e in CATALOG]


def get(name: str) -> CatalogEntry:
    for e in CATALOG:
        if e.name == name:
            return e
    raise KeyError(f"no catalog entry named {name!r}")
