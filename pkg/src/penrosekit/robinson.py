"""Robinson half-tile substitution: seeds, inflation, composition, pairing.

Tiles are golden triangles with exact Z[zeta5] vertices:

* acute (half-kite), angles 36-72-72: legs phi*s, base s;
* obtuse (half-dart), angles 36-36-108: legs s, base phi*s.

Vertices are stored as (apex, b1, b2): the apex sits between the two equal
sides, the edge apex-b2 is the symmetry axis of the kite or dart the half
belongs to, apex-b1 is the outer leg, b1-b2 the base.  A right-handed tile
lists (apex, b1, b2) counterclockwise, a left-handed one clockwise.

Inflation multiplies all coordinates by phi (exactly, :func:`phi_times`)
and subdivides each scaled triangle with cut points v + (w - v)(phi - 1) on
the long sides:

* acute  -> acute (same handedness), acute (mirrored), obtuse (same);
* obtuse -> acute (mirrored), obtuse (same).

Coordinates therefore stay integral forever; the patch records the
cumulative power of phi in ``scale_exponent`` (rendering multiplies by
phi**scale_exponent, so inflation refines tiles inside a fixed footprint).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from . import _core, _pure
from .exact import CYC_PHI, Cyclotomic5, rot36
from .marking import MarkedTile, PairedKind


class TileKind(IntEnum):
    ACUTE = 0
    OBTUSE = 1


class Chirality(IntEnum):
    RIGHT = 0
    LEFT = 1


class UnknownSeed(ValueError):
    """Raised by :func:`seed_patch` for an unrecognized seed name."""


class NoComposition(ValueError):
    """Raised when a patch contradicts the subdivision table."""


@dataclass(frozen=True)
class TileCounts:
    acute: int
    obtuse: int

    def as_tuple(self) -> tuple[int, int]:
        return (self.acute, self.obtuse)


class HalfTile:
    """One Robinson triangle; immutable, identified by kind, handedness, vertices."""

    __slots__ = ("kind", "chirality", "vertices")

    def __init__(self, kind, chirality, vertices) -> None:
        object.__setattr__(self, "kind", TileKind(kind))
        object.__setattr__(self, "chirality", Chirality(chirality))
        object.__setattr__(self, "vertices", tuple(vertices))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("HalfTile is immutable")

    @property
    def apex(self) -> Cyclotomic5:
        return self.vertices[0]

    @property
    def axis_edge(self):
        return (self.vertices[0], self.vertices[2])

    @property
    def outer_edge(self):
        return (self.vertices[0], self.vertices[1])

    @property
    def base_edge(self):
        return (self.vertices[1], self.vertices[2])

    def raw(self):
        return (int(self.kind), int(self.chirality), tuple(v.c for v in self.vertices))

    @classmethod
    def from_raw(cls, raw) -> HalfTile:
        kind, chi, verts = raw
        return cls(kind, chi, tuple(Cyclotomic5.from_tuple(v) for v in verts))

    def orientation(self) -> int:
        return _pure.orient(*(v.c for v in self.vertices))

    def validate(self) -> None:
        """Check handedness and the exact side-length pattern of the kind."""
        a, b1, b2 = (v.c for v in self.vertices)
        want = 1 if self.chirality == Chirality.RIGHT else -1
        if _pure.orient(a, b1, b2) != want:
            raise ValueError(f"handedness/orientation mismatch: {self!r}")
        leg1 = (self.vertices[1] - self.vertices[0]).norm_squared()
        leg2 = (self.vertices[2] - self.vertices[0]).norm_squared()
        base = (self.vertices[2] - self.vertices[1]).norm_squared()
        if leg1 != leg2:
            raise ValueError(f"legs differ: {self!r}")
        phi2 = CYC_PHI.norm_squared()  # phi^2 as a golden number
        if self.kind == TileKind.ACUTE:
            ok = leg1 == base * phi2
        else:
            ok = base == leg1 * phi2
        if not ok:
            raise ValueError(f"side lengths do not match kind: {self!r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, HalfTile):
            return NotImplemented
        return (self.kind == other.kind and self.chirality == other.chirality
                and self.vertices == other.vertices)

    def __hash__(self) -> int:
        return hash((self.kind, self.chirality, self.vertices))

    def __repr__(self) -> str:
        k = "acute" if self.kind == TileKind.ACUTE else "obtuse"
        c = "R" if self.chirality == Chirality.RIGHT else "L"
        return f"HalfTile({k}/{c}, {[v.c for v in self.vertices]})"


class Patch:
    """An edge-to-edge collection of half-tiles at a common scale.

    Tiles are kept canonically ordered (by kind, handedness, vertex
    coordinates) so equal patches compare and serialize identically.  The
    tile data lives in int64 arrays whenever coordinates fit; patches whose
    coordinates outgrow that (never at desk scale) fall back to plain
    integer tuples transparently.
    """

    __slots__ = ("_kinds", "_chis", "_verts", "_list", "scale_exponent", "_tiles")

    def __init__(self, tiles=None, scale_exponent: int = 0, _raw=None, _arrays=None):
        object.__setattr__(self, "scale_exponent", int(scale_exponent))
        object.__setattr__(self, "_tiles", None)
        if _arrays is not None:
            kinds, chis, verts = _arrays
            order = _canonical_order(kinds, chis, verts)
            object.__setattr__(self, "_kinds", kinds[order])
            object.__setattr__(self, "_chis", chis[order])
            object.__setattr__(self, "_verts", verts[order])
            object.__setattr__(self, "_list", None)
            return
        if _raw is None:
            _raw = [t.raw() for t in (tiles or [])]
        _raw = sorted(_raw)
        packed = _core.pack_tiles(_raw)
        if packed is None:
            object.__setattr__(self, "_kinds", None)
            object.__setattr__(self, "_chis", None)
            object.__setattr__(self, "_verts", None)
            object.__setattr__(self, "_list", _raw)
        else:
            object.__setattr__(self, "_kinds", packed[0])
            object.__setattr__(self, "_chis", packed[1])
            object.__setattr__(self, "_verts", packed[2])
            object.__setattr__(self, "_list", None)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Patch is immutable")

    def __len__(self) -> int:
        return len(self._list) if self._list is not None else len(self._kinds)

    def raw_tiles(self):
        if self._list is not None:
            return self._list
        return _core.unpack_tiles(self._kinds, self._chis, self._verts)

    @property
    def tiles(self):
        if self._tiles is None:
            object.__setattr__(
                self, "_tiles", tuple(HalfTile.from_raw(r) for r in self.raw_tiles())
            )
        return self._tiles

    def arrays(self):
        if self._kinds is None:
            raise OverflowError("patch coordinates exceed the array representation")
        return self._kinds, self._chis, self._verts

    def has_arrays(self) -> bool:
        return self._kinds is not None

    def counts(self) -> TileCounts:
        if self._kinds is not None:
            c = np.bincount(self._kinds, minlength=2)
            return TileCounts(int(c[0]), int(c[1]))
        a = sum(1 for k, _, _ in self._list if k == int(TileKind.ACUTE))
        return TileCounts(a, len(self._list) - a)

    def area_units(self):
        """Exact total area in units of sin(36 deg), as a GoldenNumber.

        The signed area of a triangle is Im(conj(b-a)(c-a))/2 and the
        imaginary part of any Z[zeta5] value is sin(36) times a golden
        number, so areas are golden numbers once that factor is divided
        out; ratios (inflation scales by phi^2) are exact.
        """
        from fractions import Fraction

        from .exact import GoldenNumber, gn_sign_int

        total_a = Fraction(0)
        total_b = Fraction(0)
        for _, _, (p, q, r) in self.raw_tiles():
            m = _imag_golden_pair(p, q, r)
            s = gn_sign_int(m[0], m[1])
            total_a += s * Fraction(m[0], 2)
            total_b += s * Fraction(m[1], 2)
        return GoldenNumber(total_a, total_b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Patch):
            return NotImplemented
        if self.scale_exponent != other.scale_exponent or len(self) != len(other):
            return False
        if self._kinds is not None and other._kinds is not None:
            return (np.array_equal(self._kinds, other._kinds)
                    and np.array_equal(self._chis, other._chis)
                    and np.array_equal(self._verts, other._verts))
        return self.raw_tiles() == other.raw_tiles()

    def __repr__(self) -> str:
        c = self.counts()
        return (f"Patch({c.acute} acute + {c.obtuse} obtuse halves, "
                f"scale_exponent={self.scale_exponent})")


def _canonical_order(kinds, chis, verts):
    flat = verts.reshape(len(kinds), 12)
    keys = [flat[:, i] for i in range(11, -1, -1)] + [chis, kinds]
    return np.lexsort(keys)


def _imag_golden_pair(a, b, c):
    """Im(conj(b-a)(c-a)) = sin36 * (m1*phi + (m2-m3)); returns ((m2-m3), m1)."""
    u0, u1, u2, u3 = b[0] - a[0], b[1] - a[1], b[2] - a[2], b[3] - a[3]
    w0, w1, w2, w3 = c[0] - a[0], c[1] - a[1], c[2] - a[2], c[3] - a[3]
    u0, u1, u2, u3 = u0 - u1, -u1, u3 - u1, u2 - u1
    p1 = u0 * w1 + u1 * w0
    p2 = u0 * w2 + u1 * w1 + u2 * w0
    p3 = u0 * w3 + u1 * w2 + u2 * w1 + u3 * w0
    p4 = u1 * w3 + u2 * w2 + u3 * w1
    p6 = u3 * w3
    m1 = p1 - p4 + p6
    return (p2 - p4 - (p3 - p4), m1)


# ---------------------------------------------------------------------------
# seeds
# ---------------------------------------------------------------------------

SEED_NAMES = ("acute", "obtuse", "sun", "star")


def seed_patch(name: str) -> Patch:
    """Canonical seed at the origin: a single half, or the sun/star roses."""
    z = Cyclotomic5.zeta
    if name == "acute":
        tiles = [(0, 0, ((0, 0, 0, 0), CYC_PHI.c, (1, 1, 0, 0)))]
    elif name == "obtuse":
        tiles = [(1, 0, ((0, 0, 0, 0), (1, 0, 0, 0), (1, 1, 1, 1)))]
    elif name == "sun":
        # five kites around the origin; kite j has its axis along 72j+36
        tiles = []
        for j in range(5):
            axis = (-(CYC_PHI * z(j + 3))).c
            tiles.append((0, 0, ((0, 0, 0, 0), (CYC_PHI * z(j)).c, axis)))
            tiles.append((0, 1, ((0, 0, 0, 0), (CYC_PHI * z(j + 1)).c, axis)))
    elif name == "star":
        # five darts pointing outward along 72j; heads meet at the origin
        tiles = []
        for j in range(5):
            apex = z(j).c
            tiles.append((1, 0, (apex, (z(j) + z(j + 1)).c, (0, 0, 0, 0))))
            tiles.append((1, 1, (apex, (z(j) + z(j - 1)).c, (0, 0, 0, 0))))
    else:
        raise UnknownSeed(f"unknown seed {name!r}; expected one of {SEED_NAMES}")
    return Patch(_raw=tiles, scale_exponent=0)


# ---------------------------------------------------------------------------
# inflation and composition
# ---------------------------------------------------------------------------


def inflate(patch: Patch, levels: int) -> Patch:
    """Apply ``levels`` substitution rounds; exact, edge-to-edge preserving."""
    if levels < 0:
        raise ValueError("levels must be non-negative")
    if levels == 0:
        return patch
    m = patch.scale_exponent - levels
    if len(patch) == 0:
        return Patch(_raw=[], scale_exponent=m)
    if patch.has_arrays():
        kinds, chis, verts = patch.arrays()
        done = 0
        while done < levels and _core.compiled_subdivide_ok(verts):
            kinds, chis, verts = _core.kernel_subdivide(kinds, chis, verts)
            done += 1
        if done == levels:
            return Patch(_arrays=(kinds, chis, verts), scale_exponent=m)
        tiles = _core.unpack_tiles(kinds, chis, verts)
    else:
        done = 0
        tiles = patch.raw_tiles()
    for _ in range(levels - done):
        tiles = _pure.subdivide_level(tiles)
    return Patch(_raw=tiles, scale_exponent=m)


def counts(patch: Patch) -> TileCounts:
    """Exact census of acute and obtuse halves."""
    return patch.counts()


def _mul_phi(v):
    return _pure._phi(v)


def _mul_phi_inv(v):
    p = _pure._phi(v)
    return (p[0] - v[0], p[1] - v[1], p[2] - v[2], p[3] - v[3])


@dataclass(frozen=True)
class ComposeResult:
    patch: Patch
    dropped: tuple


def compose(patch: Patch) -> ComposeResult:
    """Invert one inflation round.

    Recovers every parent triangle whose full child group is present,
    rescales by 1/phi (exact) and reports boundary fragments that complete
    no parent.  Raises :class:`NoComposition` when a tile is claimed by two
    parents, which cannot happen for a patch that arose from inflation.
    """
    tiles = patch.raw_tiles()
    tileset = set(tiles)
    claims = {}
    parents = []

    def claim(children, parent):
        idx = len(parents)
        for ch in children:
            if ch in claims:
                raise NoComposition(f"tile {ch} matched by two parent groups")
            claims[ch] = idx
        parents.append(parent)

    for t in tiles:
        kind, chi, (a, b1, b2) = t
        if kind == int(TileKind.ACUTE):
            # try t as the same-handed acute child: parent (P; Q=a, R=b1), S=b2
            q, r, s = a, b1, b2
            p = tuple(s[i] + x for i, x in enumerate(_mul_phi(_sub4(s, r))))
            tvtx = tuple(q[i] + x for i, x in enumerate(_pure._phim1(_sub4(p, q))))
            a2 = (0, 1 - chi, (q, tvtx, s))
            o1 = (1, chi, (tvtx, s, p))
            if a2 in tileset and o1 in tileset:
                claim((t, a2, o1), (0, chi, (p, q, r)))
        else:
            # try t as the same-handed obtuse child: parent (O=b1; U=b2, V)
            tv, o, u = a, b1, b2
            v = tuple(tv[i] + x for i, x in enumerate(_mul_phi(_sub4(tv, u))))
            ac = (0, 1 - chi, (v, tv, o))
            if ac in tileset:
                claim((t, ac), (1, chi, (o, u, v)))

    dropped = tuple(HalfTile.from_raw(t) for t in tiles if t not in claims)
    scaled = [
        (k, c, tuple(_mul_phi_inv(v) for v in verts)) for k, c, verts in parents
    ]
    return ComposeResult(
        Patch(_raw=scaled, scale_exponent=patch.scale_exponent + 1), dropped
    )


def _sub4(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3])


# ---------------------------------------------------------------------------
# pairing halves into kites and darts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairResult:
    tiles: tuple          # MarkedTile kites and darts
    unpaired: tuple       # HalfTile leftovers on the boundary


def pair_halves(patch: Patch) -> PairResult:
    """Glue mirror halves along their axis edges into kites and darts.

    Halves pair when they share kind and axis (apex and far vertex) with
    opposite handedness; boundary halves without a partner are reported,
    not errors.
    """
    groups = {}
    for kind, chi, (a, b1, b2) in patch.raw_tiles():
        groups.setdefault((kind, a, b2), []).append((chi, b1))
    tiles = []
    unpaired = []
    for (kind, a, b2), members in sorted(groups.items()):
        members.sort()
        while len(members) >= 2 and members[0][0] == 0 and members[-1][0] == 1:
            right = members.pop(0)
            left = members.pop()
            quad = (a, right[1], b2, left[1])
            pk = PairedKind.KITE if kind == 0 else PairedKind.DART
            tiles.append(MarkedTile(pk, tuple(Cyclotomic5.from_tuple(v) for v in quad)))
        for chi, b1 in members:
            unpaired.append(HalfTile(kind, chi, (
                Cyclotomic5.from_tuple(a),
                Cyclotomic5.from_tuple(b1),
                Cyclotomic5.from_tuple(b2),
            )))
    tiles.sort(key=lambda t: t.key())
    return PairResult(tuple(tiles), tuple(unpaired))


# ---------------------------------------------------------------------------
# exact edge-to-edge validation
# ---------------------------------------------------------------------------


def validate_patch(patch: Patch) -> list:
    """Exact edge-to-edge audit of a half-tile patch; [] when valid.

    Checks pairwise interior disjointness, that no vertex falls strictly
    inside an edge, and that no edge is shared by more than two tiles.
    """
    from . import _geom

    raw = patch.raw_tiles()
    tris = [verts for _, _, verts in raw]
    violations = _geom.audit_triangles(tris)
    return violations


def symmetry_rotations(patch: Patch) -> list[int]:
    """Rotation indices k (36-degree units) with rot_k(patch) == patch."""
    base = set(patch.raw_tiles())
    out = []
    for k in range(10):
        rotated = {
            (kind, chi, tuple(rot36(Cyclotomic5.from_tuple(v), k).c for v in verts))
            for kind, chi, verts in base
        }
        if rotated == base:
            out.append(k)
    return out
