"""Ideal triangulation combinatorics: validation, exchange matrices, flips and valences."""

from __future__ import annotations

import logging
from collections import Counter

import numpy as np

from ..errors import TriangulationError
from .models import ExMat, ThetaVec, Tri

logger = logging.getLogger(__name__)


def _endpoints(tri: Tri, t: int, s: int) -> tuple[str, str]:
    """Punctures at the start and end of side s of triangle t (counter-clockwise)."""
    corners = tri.corners[t]
    return corners[(s - 1) % 3], corners[s]


def validate_tri(tri: Tri) -> None:
    """Check the combinatorial consistency of a triangulation encoding.

    Raises:
        TriangulationError: On self-folded triangles, unknown or unused arcs,
            arcs used more than twice, or glued sides whose endpoints disagree
    """
    if len(set(tri.arcs)) != len(tri.arcs):
        raise TriangulationError(f"Arc labels must be distinct: {tri.arcs}")
    if len(tri.corners) != len(tri.triangles):
        raise TriangulationError("Every triangle needs exactly one corner triple")
    arcs = set(tri.arcs)
    for t, sides in enumerate(tri.triangles):
        if len(sides) != 3 or len(tri.corners[t]) != 3:
            raise TriangulationError(f"Triangle {t} must have three sides and three corners")
        if len(set(sides)) != 3:
            raise TriangulationError(
                f"Triangle {t} has a repeated side {sides}; self-folded triangles are not supported"
            )
        unknown = set(sides) - arcs
        if unknown:
            raise TriangulationError(f"Triangle {t} uses unknown arcs {sorted(unknown)}")

    for arc in tri.arcs:
        places = tri.occurrences(arc)
        if not places:
            raise TriangulationError(f"Arc {arc} bounds no triangle")
        if len(places) > 2:
            raise TriangulationError(f"Arc {arc} bounds {len(places)} triangle sides")
        if len(places) == 2:
            (t1, s1), (t2, s2) = places
            start1, end1 = _endpoints(tri, t1, s1)
            start2, end2 = _endpoints(tri, t2, s2)
            if (start1, end1) != (end2, start2):
                raise TriangulationError(
                    f"Arc {arc} is glued inconsistently: endpoints {start1}->{end1} "
                    f"against {start2}->{end2}"
                )

    if tri.closed:
        genus = surface_genus(tri)
        logger.debug(f"Closed triangulation of genus {genus} with {len(tri.punctures)} punctures")


def surface_genus(tri: Tri) -> int:
    """Genus of a closed triangulated surface from its Euler characteristic.

    Raises:
        TriangulationError: If the counts are inconsistent with a closed surface
    """
    faces, edges, vertices = len(tri.triangles), len(tri.arcs), len(tri.punctures)
    if 3 * faces != 2 * edges:
        raise TriangulationError(f"Closed surface needs 3F = 2E; got F={faces}, E={edges}")
    twice_genus = 2 - vertices + edges - faces
    if twice_genus < 0 or twice_genus % 2:
        raise TriangulationError(
            f"Euler count gives no valid genus (F={faces}, E={edges}, punctures={vertices})"
        )
    genus = twice_genus // 2
    if edges != 6 * genus - 6 + 3 * vertices:
        raise TriangulationError(f"Arc count {edges} differs from 6g-6+3n for g={genus}")
    return genus


def corner_matrix(tri: Tri) -> np.ndarray:
    """a_ij: number of corners with arc i on the right and arc j on the left."""
    n = len(tri.arcs)
    a = np.zeros((n, n), dtype=np.int64)
    position = {arc: i for i, arc in enumerate(tri.arcs)}
    for sides in tri.triangles:
        for c in range(3):
            a[position[sides[c]], position[sides[(c + 1) % 3]]] += 1
    return a


def exmat_from_tri(tri: Tri) -> ExMat:
    """Exchange matrix ε = a − aᵀ of a triangulation, indexed in ``tri.arcs`` order."""
    a = corner_matrix(tri)
    return ExMat.from_array(a - a.T)


def _rotate_to(sides, corners, arc: int):
    shift = sides.index(arc)
    return (
        tuple(sides[(shift + i) % 3] for i in range(3)),
        tuple(corners[(shift + i) % 3] for i in range(3)),
    )


def flip_tri(tri: Tri, k: int) -> Tri:
    """Flip the arc k inside its quadrilateral; the new diagonal keeps the label k.

    Raises:
        TriangulationError: If k is a boundary arc or the flip would create a
            self-folded triangle
    """
    places = tri.occurrences(k)
    if len(places) != 2:
        raise TriangulationError(f"Arc {k} is a boundary arc and cannot be flipped")
    (t1, _), (t2, _) = places
    if t1 == t2:
        raise TriangulationError(f"Arc {k} bounds a single triangle twice")

    (_, a, b), (v1, v2, v3) = _rotate_to(tri.triangles[t1], tri.corners[t1], k)
    (_, c, d), (_, w2, _) = _rotate_to(tri.triangles[t2], tri.corners[t2], k)
    if b == c or d == a:
        raise TriangulationError(f"Flipping arc {k} would create a self-folded triangle")

    triangles = list(tri.triangles)
    corners = list(tri.corners)
    triangles[t1], corners[t1] = (k, b, c), (v2, v3, w2)
    triangles[t2], corners[t2] = (k, d, a), (w2, v1, v2)
    return Tri(tri.arcs, tuple(triangles), tuple(corners))


def canonical_form(tri: Tri) -> tuple:
    """Hashable normal form: each triangle rotated to its smallest side, then sorted."""
    normalised = []
    for sides, corners in zip(tri.triangles, tri.corners):
        normalised.append(_rotate_to(sides, corners, min(sides)))
    return tuple(sorted(normalised))


def theta_from_punctures(tri: Tri) -> list[ThetaVec]:
    """Valence vectors θ_p, one per puncture, with θ_{p,i} the valence of arc i at p."""
    vectors = []
    for puncture in tri.punctures:
        counts = []
        for arc in tri.arcs:
            places = tri.occurrences(arc)
            ends = Counter()
            for t, s in places:
                ends.update(_endpoints(tri, t, s))
            if ends[puncture] % len(places):
                raise TriangulationError(f"Arc {arc} has inconsistent endpoints at {puncture}")
            counts.append(ends[puncture] // len(places))
        vectors.append(ThetaVec(tuple(counts), tag=puncture))
    return vectors


# ---------------------------------------------------------------------------
# Stock triangulations
# ---------------------------------------------------------------------------


def punctured_torus() -> Tri:
    """Once-punctured torus: two triangles glued along three arcs."""
    return Tri(
        arcs=(0, 1, 2),
        triangles=((0, 1, 2), (0, 1, 2)),
        corners=(("p", "p", "p"), ("p", "p", "p")),
    )


def four_punctured_sphere() -> Tri:
    """4-punctured sphere as a tetrahedron: arcs e0..e3 around, f and g diagonals."""
    return Tri(
        arcs=(0, 1, 2, 3, 4, 5),
        triangles=((0, 1, 4), (4, 2, 3), (2, 1, 5), (0, 3, 5)),
        corners=(
            ("P1", "P2", "P0"),
            ("P2", "P3", "P0"),
            ("P2", "P1", "P3"),
            ("P0", "P3", "P1"),
        ),
    )


def ideal_square() -> Tri:
    """Disc with four marked points cut by one diagonal (arc 4)."""
    return Tri(
        arcs=(0, 1, 2, 3, 4),
        triangles=((4, 0, 1), (4, 2, 3)),
        corners=(("A", "B", "C"), ("C", "D", "A")),
    )


STOCK_TRIANGULATIONS = {
    "torus": punctured_torus,
    "sphere4": four_punctured_sphere,
    "square": ideal_square,
}
