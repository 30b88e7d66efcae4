"""Backend selection between the compiled kernel and the pure-Python one.

The compiled kernel works on int64 coordinates (with int128 accumulators in
its sign predicates), which is exact as long as coefficients stay under the
bounds below -- comfortably true at desk scale, where inflation multiplies
coefficients by roughly phi per level.  Whenever a bound is exceeded, or the
extension is unavailable, or ``PENROSEKIT_PURE`` is set in the environment,
calls take the arbitrary-precision pure path instead.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pure

try:  # pragma: no cover - exercised indirectly
    from . import _kernel
except ImportError:  # pragma: no cover
    _kernel = None

# One subdivision multiplies coefficients by at most 3 (row sums of the phi
# matrix); keep far away from int64 overflow.
_SUBDIVIDE_BOUND = 2**59
# Overlap predicates square twice; 2^26 keeps (240*C^2)^2 well inside int128.
_OVERLAP_BOUND = 2**26


def _compiled_enabled() -> bool:
    return _kernel is not None and not os.environ.get("PENROSEKIT_PURE")


def backend_name() -> str:
    """Name of the kernel backend the next call would prefer."""
    return "compiled" if _compiled_enabled() else "pure"


def _pack_tiles(tiles):
    n = len(tiles)
    kinds = np.empty(n, dtype=np.uint8)
    chis = np.empty(n, dtype=np.uint8)
    verts = np.empty((n, 3, 4), dtype=np.int64)
    for i, (kind, chi, vs) in enumerate(tiles):
        kinds[i] = kind
        chis[i] = chi
        verts[i] = vs
    return kinds, chis, verts


def _unpack_tiles(kinds, chis, verts):
    vl = verts.tolist()
    return [
        (int(k), int(c), (tuple(v[0]), tuple(v[1]), tuple(v[2])))
        for k, c, v in zip(kinds.tolist(), chis.tolist(), vl)
    ]


def inflate_tiles(tiles, levels: int):
    """Apply ``levels`` subdivision rounds to a tile list.

    Routes each round to the compiled kernel when coordinates fit its
    bounds, otherwise to the bigint reference implementation.
    """
    if levels <= 0 or not tiles:
        return list(tiles)
    packed = None
    if _compiled_enabled():
        try:
            packed = _pack_tiles(tiles)
        except OverflowError:
            packed = None
    if packed is not None:
        kinds, chis, verts = packed
        for level in range(levels):
            if np.abs(verts).max() > _SUBDIVIDE_BOUND:
                tiles = _unpack_tiles(kinds, chis, verts)
                for _ in range(levels - level):
                    tiles = _pure.subdivide_level(tiles)
                return tiles
            kinds, chis, verts = _kernel.subdivide_batch(kinds, chis, verts)
        return _unpack_tiles(kinds, chis, verts)
    for _ in range(levels):
        tiles = _pure.subdivide_level(tiles)
    return tiles


def tri_pairs_overlap(triangles, pairs):
    """Exact interior-overlap mask over candidate index pairs.

    ``triangles``: sequence of vertex triples (4-int tuples each);
    ``pairs``: sequence of (i, j) indices.  Returns a list of bools.
    """
    if not pairs:
        return []
    if _compiled_enabled():
        try:
            tris = np.asarray(triangles, dtype=np.int64)
        except OverflowError:
            tris = None
        if tris is not None and np.abs(tris).max() <= _OVERLAP_BOUND:
            parr = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
            return _kernel.tri_pairs_overlap(tris, parr).tolist()
    return _pure.tri_pairs_overlap(triangles, pairs)
