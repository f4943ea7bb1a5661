# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled float kernels for the chord search; see ``_kernels_py`` for the contract."""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


cdef inline double _pseg2(double px, double py, double ax, double ay,
                          double bx, double by) nogil:
    cdef double dx = bx - ax, dy = by - ay
    cdef double len2 = dx * dx + dy * dy
    cdef double t = 0.0
    if len2 > 0:
        t = ((px - ax) * dx + (py - ay) * dy) / len2
        if t < 0:
            t = 0.0
        elif t > 1:
            t = 1.0
    cdef double ex = ax + t * dx - px, ey = ay + t * dy - py
    return ex * ex + ey * ey


cdef inline double _cross(double ox, double oy, double ax, double ay,
                          double bx, double by) nogil:
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


cdef double _member_seg2(const double[:, ::1] v, Py_ssize_t lo, Py_ssize_t hi,
                         double ax, double ay, double bx, double by) nogil:
    cdef Py_ssize_t e, nxt
    cdef double best = 1e300, d, px, py, qx, qy, o1, o2, o3, o4
    cdef bint in_a = True, in_b = True
    for e in range(lo, hi):
        nxt = e + 1
        if nxt == hi:
            nxt = lo
        px = v[e, 0]; py = v[e, 1]; qx = v[nxt, 0]; qy = v[nxt, 1]
        o1 = _cross(px, py, qx, qy, ax, ay)
        o2 = _cross(px, py, qx, qy, bx, by)
        if o1 < 0:
            in_a = False
        if o2 < 0:
            in_b = False
        o3 = _cross(ax, ay, bx, by, px, py)
        o4 = _cross(ax, ay, bx, by, qx, qy)
        if o1 * o2 < 0 and o3 * o4 < 0:
            return 0.0
        d = _pseg2(px, py, ax, ay, bx, by)
        if d < best:
            best = d
        d = _pseg2(ax, ay, px, py, qx, qy)
        if d < best:
            best = d
        d = _pseg2(bx, by, px, py, qx, qy)
        if d < best:
            best = d
    if hi - lo >= 3 and (in_a or in_b):
        return 0.0
    return best


def segment_distances(verts, offsets, segs):
    cdef const double[:, ::1] v = np.ascontiguousarray(verts, dtype=np.float64)
    cdef const long long[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef const double[:, ::1] s = np.ascontiguousarray(segs, dtype=np.float64)
    cdef Py_ssize_t m_count = off.shape[0] - 1, c_count = s.shape[0], m, c
    out = np.empty((m_count, c_count), dtype=np.float64)
    cdef double[:, ::1] o = out
    with nogil:
        for m in range(m_count):
            for c in range(c_count):
                o[m, c] = sqrt(_member_seg2(v, off[m], off[m + 1],
                                            s[c, 0], s[c, 1], s[c, 2], s[c, 3]))
    return out


def region_members(verts, offsets, planes):
    cdef const double[:, ::1] v = np.ascontiguousarray(verts, dtype=np.float64)
    cdef const long long[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef const double[:, ::1] p = np.ascontiguousarray(
        np.asarray(planes, dtype=np.float64).reshape(-1, 3))
    cdef Py_ssize_t m_count = off.shape[0] - 1, m, i, j
    out = np.empty(m_count, dtype=bool)
    cdef cnp.npy_bool[::1] o = out
    cdef bint ok
    cdef double x, y
    with nogil:
        for m in range(m_count):
            ok = True
            for i in range(off[m], off[m + 1]):
                x = v[i, 0]; y = v[i, 1]
                if not x * x + y * y < 1.0:
                    ok = False
                    break
                for j in range(p.shape[0]):
                    if not p[j, 0] * x + p[j, 1] * y - p[j, 2] < 0:
                        ok = False
                        break
                if not ok:
                    break
            o[m] = ok
    return out
