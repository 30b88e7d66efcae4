"""Pure-Python kernel: the always-correct arbitrary-precision reference.

The hot loops of the package (half-tile subdivision and the exact
triangle-overlap predicate) exist twice: here with Python integers, and in
the optional compiled extension :mod:`penrosekit._kernel` with machine
integers.  :mod:`penrosekit._core` picks a backend per call; results are
identical whenever the compiled coefficient bounds hold.

Tiles flow through as plain tuples ``(kind, chirality, (v0, v1, v2))`` with
each vertex a 4-tuple of integers (Z[zeta5] coordinates).  kind 0 = acute
half-kite, 1 = obtuse half-dart; chirality 0 = right, 1 = left.
"""

from __future__ import annotations

from .exact import gn_sign_int

ACUTE, OBTUSE = 0, 1


def _phi(v):
    c0, c1, c2, c3 = v
    return (c1 - c3, c1 + c2 - c3, c1 + c2 - c0, c2 - c0)


def _phim1(v):
    # (phi - 1) * v, i.e. _phi(v) - v
    c0, c1, c2, c3 = v
    return (c1 - c3 - c0, c2 - c3, c1 - c0, c2 - c0 - c3)


def _add(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3])


def _sub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3])


def subdivide_level(tiles):
    """One inflation round: scale all tiles by phi, then subdivide.

    A scaled acute splits into two acutes and one obtuse, a scaled obtuse
    into one of each; cut points sit at v + (w - v)(phi - 1) on the long
    sides, which keeps every vertex in Z[zeta5].
    """
    out = []
    append = out.append
    for kind, chi, (p, q, r) in tiles:
        p, q, r = _phi(p), _phi(q), _phi(r)
        if kind == ACUTE:
            s = _add(p, _phim1(_sub(r, p)))
            t = _add(q, _phim1(_sub(p, q)))
            append((ACUTE, chi, (q, r, s)))
            append((ACUTE, 1 - chi, (q, t, s)))
            append((OBTUSE, chi, (t, s, p)))
        else:
            t = _add(r, _phim1(_sub(q, r)))
            append((ACUTE, 1 - chi, (r, t, p)))
            append((OBTUSE, chi, (t, p, q)))
    return out


def orient(a, b, c) -> int:
    """Exact orientation sign of the triangle (a, b, c); +1 = counterclockwise.

    Computes Im(conj(b - a) * (c - a)) and takes its sign in Q(phi).
    """
    u0, u1, u2, u3 = b[0] - a[0], b[1] - a[1], b[2] - a[2], b[3] - a[3]
    w0, w1, w2, w3 = c[0] - a[0], c[1] - a[1], c[2] - a[2], c[3] - a[3]
    # conj(u)
    u0, u1, u2, u3 = u0 - u1, -u1, u3 - u1, u2 - u1
    p0 = u0 * w0
    p1 = u0 * w1 + u1 * w0
    p2 = u0 * w2 + u1 * w1 + u2 * w0
    p3 = u0 * w3 + u1 * w2 + u2 * w1 + u3 * w0
    p4 = u1 * w3 + u2 * w2 + u3 * w1
    p5 = u2 * w3 + u3 * w2
    p6 = u3 * w3
    m1 = p1 - p4 + p6
    m2 = p2 - p4
    m3 = p3 - p4
    # sign(Im) = sign((m2 - m3) + m1 * phi)
    return gn_sign_int(m2 - m3, m1)


def _ccw(t):
    return t if orient(*t) > 0 else (t[0], t[2], t[1])


def _separated_by_edge_of(x, y) -> bool:
    x0, x1, x2 = x
    for a, b in ((x0, x1), (x1, x2), (x2, x0)):
        if orient(a, b, y[0]) <= 0 and orient(a, b, y[1]) <= 0 and orient(a, b, y[2]) <= 0:
            return True
    return False


def tri_interiors_intersect(t1, t2) -> bool:
    """Exact test whether two non-degenerate triangles share interior points.

    Separating-axis test over the six edges; touching along edges or at
    vertices does not count as intersection.
    """
    t1 = _ccw(t1)
    t2 = _ccw(t2)
    if _separated_by_edge_of(t1, t2) or _separated_by_edge_of(t2, t1):
        return False
    return True


def tri_pairs_overlap(triangles, pairs):
    """Overlap mask for candidate index pairs into ``triangles``."""
    return [tri_interiors_intersect(triangles[i], triangles[j]) for i, j in pairs]
