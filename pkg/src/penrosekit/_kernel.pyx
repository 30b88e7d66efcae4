# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: int64 subdivision and exact overlap predicates.

Mirrors :mod:`penrosekit._pure` on machine integers.  Callers
(:mod:`penrosekit._core`) are responsible for the coefficient bounds that
make int64/int128 arithmetic exact; within those bounds the two backends
return identical results.
"""

import numpy as np

cdef extern from *:
    ctypedef long long int128 "__int128"

ctypedef long long i64

ACUTE, OBTUSE = 0, 1


cdef inline void _phi(const i64* v, i64* out) nogil:
    out[0] = v[1] - v[3]
    out[1] = v[1] + v[2] - v[3]
    out[2] = v[1] + v[2] - v[0]
    out[3] = v[2] - v[0]


cdef inline void _phim1_sub(const i64* w, const i64* v, i64* out) nogil:
    # (phi - 1) * (w - v)
    cdef i64 d0 = w[0] - v[0]
    cdef i64 d1 = w[1] - v[1]
    cdef i64 d2 = w[2] - v[2]
    cdef i64 d3 = w[3] - v[3]
    out[0] = d1 - d3 - d0
    out[1] = d2 - d3
    out[2] = d1 - d0
    out[3] = d2 - d0 - d3


def subdivide_batch(unsigned char[:] kinds, unsigned char[:] chis, i64[:, :, :] verts):
    """One inflation round over tile arrays; returns (kinds', chis', verts')."""
    cdef Py_ssize_t n = kinds.shape[0]
    cdef Py_ssize_t m = 0
    cdef Py_ssize_t i, j, k
    for i in range(n):
        m += 3 if kinds[i] == 0 else 2

    kinds_out = np.empty(m, dtype=np.uint8)
    chis_out = np.empty(m, dtype=np.uint8)
    verts_out = np.empty((m, 3, 4), dtype=np.int64)
    cdef unsigned char[:] ko = kinds_out
    cdef unsigned char[:] co = chis_out
    cdef i64[:, :, :] vo = verts_out

    cdef i64 p[4]
    cdef i64 q[4]
    cdef i64 r[4]
    cdef i64 s[4]
    cdef i64 t[4]
    cdef unsigned char chi
    cdef Py_ssize_t w = 0
    with nogil:
        for i in range(n):
            _phi(&verts[i, 0, 0], p)
            _phi(&verts[i, 1, 0], q)
            _phi(&verts[i, 2, 0], r)
            chi = chis[i]
            if kinds[i] == 0:
                _phim1_sub(r, p, s)
                _phim1_sub(p, q, t)
                for k in range(4):
                    s[k] += p[k]
                    t[k] += q[k]
                ko[w] = 0; co[w] = chi
                for k in range(4):
                    vo[w, 0, k] = q[k]; vo[w, 1, k] = r[k]; vo[w, 2, k] = s[k]
                w += 1
                ko[w] = 0; co[w] = 1 - chi
                for k in range(4):
                    vo[w, 0, k] = q[k]; vo[w, 1, k] = t[k]; vo[w, 2, k] = s[k]
                w += 1
                ko[w] = 1; co[w] = chi
                for k in range(4):
                    vo[w, 0, k] = t[k]; vo[w, 1, k] = s[k]; vo[w, 2, k] = p[k]
                w += 1
            else:
                _phim1_sub(q, r, t)
                for k in range(4):
                    t[k] += r[k]
                ko[w] = 0; co[w] = 1 - chi
                for k in range(4):
                    vo[w, 0, k] = r[k]; vo[w, 1, k] = t[k]; vo[w, 2, k] = p[k]
                w += 1
                ko[w] = 1; co[w] = chi
                for k in range(4):
                    vo[w, 0, k] = t[k]; vo[w, 1, k] = p[k]; vo[w, 2, k] = q[k]
                w += 1
    return kinds_out, chis_out, verts_out


cdef inline int _sign128(int128 x) nogil:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


cdef inline int _gn_sign(i64 a, i64 b) nogil:
    # sign of a + b*phi via ((2a+b) + b*sqrt5)/2; squares fit in int128
    cdef int128 u, d
    if b == 0:
        if a > 0:
            return 1
        if a < 0:
            return -1
        return 0
    u = 2 * <int128> a + b
    if u >= 0 and b > 0:
        return 1
    if u <= 0 and b < 0:
        return -1
    d = u * u - 5 * (<int128> b) * b
    if u > 0:
        return _sign128(d)
    return -_sign128(d)


cdef inline int _orient(const i64* a, const i64* b, const i64* c) nogil:
    cdef i64 u0 = b[0] - a[0], u1 = b[1] - a[1], u2 = b[2] - a[2], u3 = b[3] - a[3]
    cdef i64 w0 = c[0] - a[0], w1 = c[1] - a[1], w2 = c[2] - a[2], w3 = c[3] - a[3]
    cdef i64 v0 = u0 - u1, v1 = -u1, v2 = u3 - u1, v3 = u2 - u1
    cdef i64 p1 = v0 * w1 + v1 * w0
    cdef i64 p2 = v0 * w2 + v1 * w1 + v2 * w0
    cdef i64 p3 = v0 * w3 + v1 * w2 + v2 * w1 + v3 * w0
    cdef i64 p4 = v1 * w3 + v2 * w2 + v3 * w1
    cdef i64 p6 = v3 * w3
    cdef i64 m1 = p1 - p4 + p6
    cdef i64 m2 = p2 - p4
    cdef i64 m3 = p3 - p4
    return _gn_sign(m2 - m3, m1)


cdef bint _separated(const i64* x0, const i64* x1, const i64* x2,
                     const i64* y0, const i64* y1, const i64* y2) nogil:
    if _orient(x0, x1, y0) <= 0 and _orient(x0, x1, y1) <= 0 and _orient(x0, x1, y2) <= 0:
        return True
    if _orient(x1, x2, y0) <= 0 and _orient(x1, x2, y1) <= 0 and _orient(x1, x2, y2) <= 0:
        return True
    if _orient(x2, x0, y0) <= 0 and _orient(x2, x0, y1) <= 0 and _orient(x2, x0, y2) <= 0:
        return True
    return False


def tri_pairs_overlap(i64[:, :, :] tris, long long[:, :] pairs):
    """Exact interior-overlap mask for candidate triangle index pairs."""
    cdef Py_ssize_t n = pairs.shape[0]
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[:] o = out
    cdef Py_ssize_t idx, i, j
    cdef const i64 *a0
    cdef const i64 *a1
    cdef const i64 *a2
    cdef const i64 *b0
    cdef const i64 *b1
    cdef const i64 *b2
    cdef const i64 *tmp
    with nogil:
        for idx in range(n):
            i = pairs[idx, 0]
            j = pairs[idx, 1]
            a0 = &tris[i, 0, 0]; a1 = &tris[i, 1, 0]; a2 = &tris[i, 2, 0]
            b0 = &tris[j, 0, 0]; b1 = &tris[j, 1, 0]; b2 = &tris[j, 2, 0]
            if _orient(a0, a1, a2) < 0:
                tmp = a1; a1 = a2; a2 = tmp
            if _orient(b0, b1, b2) < 0:
                tmp = b1; b1 = b2; b2 = tmp
            if _separated(a0, a1, a2, b0, b1, b2):
                continue
            if _separated(b0, b1, b2, a0, a1, a2):
                continue
            o[idx] = 1
    return out.view(np.bool_)
