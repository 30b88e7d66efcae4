"""Kite and dart tiles with their matching-rule decorations.

A tile is stored as its four vertices in Z[zeta5], counterclockwise and
starting from the distinguished corner (the 72-degree apex of the kite, the
216-degree reflex corner of the dart).  Both shapes are mirror-symmetric,
so every placement is a rotation-plus-translation of the canonical tile and
the decoration depends only on (kind, edge index).

Edges carry one of two symbols plus a direction; two tiles may share an
edge only when the symbols agree and the arrows point the same way along
the shared segment.  The table below is the one adjacency relation generated
by the half-tile substitution:

* kite short against kite short or dart short,
* long edges freely among kite legs and dart sides,
* always co-aligned arrows (which in particular forbids the dart-dart
  short contact and every reversed gluing).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .exact import CYC_PHI, CYC_ZERO, Cyclotomic5, cyc_reflect, direction_index, rot36


class PairedKind(str, Enum):
    KITE = "kite"
    DART = "dart"


_Z = Cyclotomic5.zeta

# canonical kite: apex at the origin, symmetry axis along 36 degrees
KITE_POLY = (
    CYC_ZERO,
    CYC_PHI,                      # phi on the real axis
    Cyclotomic5(1, 1, 0, 0),      # 1 + zeta = phi * exp(i 36)
    Cyclotomic5(1, 1, 1, 0),      # phi * zeta
)
# canonical dart: reflex corner at 1, head at the origin
DART_POLY = (
    Cyclotomic5(1, 0, 0, 0),
    Cyclotomic5(1, 1, 0, 0),      # 1 + zeta
    CYC_ZERO,
    Cyclotomic5(0, -1, -1, -1),   # 1 + zeta^4
)

CANONICAL_POLY = {PairedKind.KITE: KITE_POLY, PairedKind.DART: DART_POLY}

# interior angle at each corner, in units of 36 degrees
CORNER_ANGLES = {PairedKind.KITE: (2, 2, 4, 2), PairedKind.DART: (6, 1, 2, 1)}

LONG, SHORT = "long", "short"

# (symbol, arrow-along-ccw-walk) per edge index; edge i runs v[i] -> v[i+1]
EDGE_LABELS = {
    PairedKind.KITE: ((LONG, True), (SHORT, True), (SHORT, False), (LONG, False)),
    PairedKind.DART: ((SHORT, True), (LONG, True), (LONG, False), (SHORT, False)),
}

_CANON_EDGE0_DIR = {PairedKind.KITE: 0, PairedKind.DART: 2}


@dataclass(frozen=True)
class Pose:
    """Rotation (multiples of 36 degrees), reflection flag, translation."""

    rotation: int
    reflection: bool
    translation: Cyclotomic5


class MarkedTile:
    """A kite or dart placed in the plane, vertices exact in Z[zeta5]."""

    __slots__ = ("kind", "vertices", "_pose")

    def __init__(self, kind: PairedKind, vertices) -> None:
        object.__setattr__(self, "kind", PairedKind(kind))
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "_pose", None)
        if len(self.vertices) != 4:
            raise ValueError("a marked tile has four vertices")

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("MarkedTile is immutable")

    @classmethod
    def from_pose(cls, kind: PairedKind, rotation: int, reflection: bool,
                  translation: Cyclotomic5) -> MarkedTile:
        poly = CANONICAL_POLY[PairedKind(kind)]
        if reflection:
            poly = _reflect_quad(poly)
        verts = tuple(translation + rot36(v, rotation) for v in poly)
        return cls(kind, verts)

    @property
    def pose(self) -> Pose:
        """Pose with respect to the canonical tile.

        Kites and darts are mirror-symmetric, so the reflection flag is
        always normalisable to False.
        """
        if self._pose is None:
            d = direction_index(self.vertices[1] - self.vertices[0])
            if d is None:
                raise ValueError("tile edge not on the 36-degree grid")
            rot = (d - _CANON_EDGE0_DIR[self.kind]) % 10
            trans = self.vertices[0] - rot36(CANONICAL_POLY[self.kind][0], rot)
            candidate = MarkedTile.from_pose(self.kind, rot, False, trans)
            if candidate.vertices != self.vertices:
                raise ValueError(f"not a valid {self.kind.value}: {self.vertices}")
            object.__setattr__(self, "_pose", Pose(rot, False, trans))
        return self._pose

    def validate(self) -> None:
        self.pose  # raises when the quad is not a posed canonical tile

    def edges(self):
        v = self.vertices
        return tuple((v[i], v[(i + 1) % 4]) for i in range(4))

    def edge_label(self, i: int):
        """(symbol, (tail, head)) of edge i, the arrow as a geometric pair."""
        symbol, forward = EDGE_LABELS[self.kind][i]
        a, b = self.vertices[i], self.vertices[(i + 1) % 4]
        return (symbol, (a, b) if forward else (b, a))

    def triangles(self):
        """Split along the symmetry axis into two exact triangles."""
        v = self.vertices
        return ((v[0], v[1], v[2]), (v[0], v[2], v[3]))

    def transformed(self, rotation: int = 0, reflection: bool = False,
                    translation: Cyclotomic5 = CYC_ZERO) -> MarkedTile:
        """Image under reflection (first), then rotation, then translation."""
        verts = self.vertices
        if reflection:
            verts = _reflect_quad(verts)
        verts = tuple(translation + rot36(v, rotation) for v in verts)
        return MarkedTile(self.kind, verts)

    def centroid(self) -> tuple[float, float]:
        xs = ys = 0.0
        for v in self.vertices:
            x, y = v.embed()
            xs += x
            ys += y
        return xs / 4.0, ys / 4.0

    def key(self):
        return (self.kind.value, tuple(v.c for v in self.vertices))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MarkedTile):
            return NotImplemented
        return self.kind == other.kind and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash((self.kind, self.vertices))

    def __repr__(self) -> str:
        return f"MarkedTile({self.kind.value}, {[v.c for v in self.vertices]})"


def _reflect_quad(poly):
    # conjugation reverses orientation; re-list counterclockwise from the
    # same distinguished corner (wings swap, the mirror-symmetric shape is
    # preserved)
    r = tuple(cyc_reflect(v) for v in poly)
    return (r[0], r[3], r[2], r[1])
