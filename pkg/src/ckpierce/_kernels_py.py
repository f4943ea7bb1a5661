"""Pure Python/numpy versions of the float kernels in ``_kernels.pyx``.

Bodies are packed as a vertex array ``verts`` of shape (V, 2) and an offset
array ``offsets`` of shape (M + 1,): member m owns rows
``offsets[m]:offsets[m + 1]``, in counterclockwise order.
"""
import numpy as np


def _edges(verts, offsets):
    starts = offsets[:-1]
    ends = offsets[1:]
    counts = ends - starts
    owner = np.repeat(np.arange(len(counts)), counts)
    nxt = np.arange(len(verts)) + 1
    nxt[ends - 1] = starts
    return verts, verts[nxt], owner


def _point_segment_dist2(px, py, ax, ay, bx, by):
    dx, dy = bx - ax, by - ay
    len2 = dx * dx + dy * dy
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.where(len2 > 0, ((px - ax) * dx + (py - ay) * dy) / np.where(len2 > 0, len2, 1), 0.0)
    t = np.clip(t, 0.0, 1.0)
    ex, ey = ax + t * dx - px, ay + t * dy - py
    return ex * ex + ey * ey


def _cross(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def segment_distances(verts, offsets, segs):
    """Euclidean distance from each member to each segment, shape (M, C)."""
    verts = np.ascontiguousarray(verts, dtype=np.float64)
    offsets = np.asarray(offsets, dtype=np.int64)
    segs = np.ascontiguousarray(segs, dtype=np.float64)
    p, q, owner = _edges(verts, offsets)
    px, py = p[:, 0:1], p[:, 1:2]
    qx, qy = q[:, 0:1], q[:, 1:2]
    ax, ay, bx, by = segs[:, 0], segs[:, 1], segs[:, 2], segs[:, 3]

    d2 = np.minimum.reduce([
        _point_segment_dist2(px, py, ax, ay, bx, by),
        _point_segment_dist2(qx, qy, ax, ay, bx, by),
        _point_segment_dist2(ax, ay, px, py, qx, qy),
        _point_segment_dist2(bx, by, px, py, qx, qy),
    ])
    o1 = _cross(px, py, qx, qy, ax, ay)
    o2 = _cross(px, py, qx, qy, bx, by)
    o3 = _cross(ax, ay, bx, by, px, py)
    o4 = _cross(ax, ay, bx, by, qx, qy)
    crossing = (o1 * o2 < 0) & (o3 * o4 < 0)
    d2 = np.where(crossing, 0.0, d2)
    dist = np.minimum.reduceat(d2, offsets[:-1], axis=0)

    # segment endpoint inside a proper polygon
    counts = np.diff(offsets)
    inside_a = np.logical_and.reduceat(_cross(px, py, qx, qy, ax, ay) >= 0, offsets[:-1], axis=0)
    inside_b = np.logical_and.reduceat(_cross(px, py, qx, qy, bx, by) >= 0, offsets[:-1], axis=0)
    inside = (inside_a | inside_b) & (counts >= 3)[:, None]
    dist = np.where(inside, 0.0, dist)
    return np.sqrt(dist)


def region_members(verts, offsets, planes):
    """Members lying strictly inside the unit disk and every plane ``a*x + b*y < c``."""
    verts = np.ascontiguousarray(verts, dtype=np.float64)
    offsets = np.asarray(offsets, dtype=np.int64)
    planes = np.asarray(planes, dtype=np.float64).reshape(-1, 3)
    ok = verts[:, 0] ** 2 + verts[:, 1] ** 2 < 1.0
    if len(planes):
        vals = verts @ planes[:, :2].T - planes[:, 2]
        ok &= np.all(vals < 0, axis=1)
    return np.logical_and.reduceat(ok, offsets[:-1])
