"""Exact planar geometry over rationals.

Every decision predicate here works on :class:`fractions.Fraction`
coordinates and never uses a tolerance.  Bodies are closed convex polygons,
possibly degenerate (a single point or a segment).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

Number = Union[int, Fraction, str]


def as_rational(value: Number) -> Fraction:
    """Parse an int, Fraction or ``"n/d"`` string; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, float):
        raise TypeError(f"floating-point coordinate {value!r} is not exact")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"unsupported coordinate type {type(value).__name__}")


class RationalPoint(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: Number, y: Number) -> "RationalPoint":
        return cls(as_rational(x), as_rational(y))

    def __sub__(self, other):  # type: ignore[override]
        return RationalPoint(self.x - other.x, self.y - other.y)

    def __add__(self, other):  # type: ignore[override]
        return RationalPoint(self.x + other.x, self.y + other.y)

    def norm2(self) -> Fraction:
        return self.x * self.x + self.y * self.y

    def to_float(self) -> "FloatPoint":
        return FloatPoint(float(self.x), float(self.y))


class FloatPoint(NamedTuple):
    x: float
    y: float


def float_point(x: float, y: float) -> FloatPoint:
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError("float point must be finite")
    return FloatPoint(float(x), float(y))


def _pt(p) -> RationalPoint:
    if isinstance(p, RationalPoint):
        return p
    return RationalPoint.of(p[0], p[1])


def cross(o: RationalPoint, a: RationalPoint, b: RationalPoint) -> Fraction:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orient(p, q, r) -> int:
    """Sign of the turn p -> q -> r: +1 counterclockwise, -1 clockwise, 0 collinear."""
    c = cross(_pt(p), _pt(q), _pt(r))
    return (c > 0) - (c < 0)


@dataclass(frozen=True)
class ConvexBody:
    """Closed convex polygon with vertices in strict counterclockwise order.

    One vertex is a point, two vertices a segment.  The vertex list starts at
    the lexicographically smallest vertex, so equal bodies compare equal.
    Build instances with :func:`convex_hull` rather than directly.
    """

    vertices: tuple[RationalPoint, ...]

    def __post_init__(self):
        vs = self.vertices
        if not vs:
            raise ValueError("empty point set")
        if min(vs) != vs[0]:
            raise ValueError("vertex list must start at its smallest vertex")
        n = len(vs)
        if n == 2 and vs[0] == vs[1]:
            raise ValueError("segment endpoints coincide")
        if n >= 3 and any(orient(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) != 1
                          for i in range(n)):
            raise ValueError("vertices are not in strictly counterclockwise convex position")

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    def edges(self):
        vs = self.vertices
        n = len(vs)
        if n == 1:
            return []
        if n == 2:
            return [(vs[0], vs[1])]
        return [(vs[i], vs[(i + 1) % n]) for i in range(n)]

    def halfplanes(self) -> list[tuple[Fraction, Fraction, Fraction]]:
        """Closed half-planes ``a*x + b*y <= c`` whose intersection is the body."""
        vs = self.vertices
        if len(vs) == 1:
            p = vs[0]
            return [(Fraction(1), Fraction(0), p.x), (Fraction(-1), Fraction(0), -p.x),
                    (Fraction(0), Fraction(1), p.y), (Fraction(0), Fraction(-1), -p.y)]
        if len(vs) == 2:
            p, q = vs
            dx, dy = q.x - p.x, q.y - p.y
            a, b = -dy, dx
            c = a * p.x + b * p.y
            return [(a, b, c), (-a, -b, -c),
                    (dx, dy, dx * q.x + dy * q.y),
                    (-dx, -dy, -(dx * p.x + dy * p.y))]
        out = []
        for p, q in self.edges():
            # interior lies to the left of p->q
            a, b = q.y - p.y, p.x - q.x
            out.append((a, b, a * p.x + b * p.y))
        return out

    def contains(self, p) -> bool:
        p = _pt(p)
        return all(a * p.x + b * p.y <= c for a, b, c in self.halfplanes())

    def transformed(self, scale: Fraction, shift: RationalPoint) -> "ConvexBody":
        return convex_hull([RationalPoint(scale * v.x + shift.x, scale * v.y + shift.y)
                            for v in self.vertices])

    def __repr__(self) -> str:
        pts = ", ".join(f"({v.x}, {v.y})" for v in self.vertices)
        return f"ConvexBody([{pts}])"


def convex_hull(points: Iterable) -> ConvexBody:
    """Andrew's monotone chain; collinear and duplicate points are dropped."""
    pts = sorted({_pt(p) for p in points})
    if not pts:
        raise ValueError("empty point set")
    if len(pts) <= 2:
        return ConvexBody(tuple(pts))

    def chain(seq):
        out: list[RationalPoint] = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return ConvexBody(tuple(hull))


def hull_union(a: ConvexBody, b: ConvexBody) -> ConvexBody:
    return convex_hull(a.vertices + b.vertices)


def _project(body: ConvexBody, dx: Fraction, dy: Fraction) -> tuple[Fraction, Fraction]:
    vals = [dx * v.x + dy * v.y for v in body.vertices]
    return min(vals), max(vals)


def _axes(a: ConvexBody, b: ConvexBody):
    seen = set()
    for body in (a, b):
        for p, q in body.edges():
            d = (q.y - p.y, p.x - q.x)
            if d not in seen:
                seen.add(d)
                yield d
    # vertex-difference directions keep point/segment cases correct
    for p in a.vertices:
        for q in b.vertices:
            d = (q.x - p.x, q.y - p.y)
            if d != (0, 0) and d not in seen:
                seen.add(d)
                yield d


def bodies_disjoint(a: ConvexBody, b: ConvexBody) -> bool:
    """True iff the closed bodies have empty intersection (separating axis test)."""
    for dx, dy in _axes(a, b):
        lo_a, hi_a = _project(a, dx, dy)
        lo_b, hi_b = _project(b, dx, dy)
        if hi_a < lo_b or hi_b < lo_a:
            return True
    return False


def clip_halfplane(points: Sequence[RationalPoint], a, b, c) -> list[RationalPoint]:
    """Points of conv(points) with ``a*x + b*y <= c``, as a generating set.

    ``points`` must be the cyclic vertex list of a convex polygon (any
    degenerate form is fine).
    """
    n = len(points)
    out: list[RationalPoint] = []
    vals = [a * p.x + b * p.y - c for p in points]
    for i in range(n):
        p, vp = points[i], vals[i]
        if vp <= 0:
            out.append(p)
        j = (i + 1) % n
        q, vq = points[j], vals[j]
        if (vp < 0 < vq) or (vq < 0 < vp):
            t = vp / (vp - vq)
            out.append(RationalPoint(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)))
    return out


def intersect_bodies(a: ConvexBody, b: ConvexBody) -> ConvexBody | None:
    """Exact intersection of two bodies by half-plane clipping, or None."""
    pts = list(a.vertices)
    for hp in b.halfplanes():
        clipped = clip_halfplane(pts, *hp)
        if not clipped:
            return None
        pts = list(convex_hull(clipped).vertices)
    return convex_hull(pts)


@dataclass(frozen=True, order=True)
class Line:
    """The line ``a*x + b*y = c`` with integer coefficients in canonical form."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("degenerate line: a = b = 0")

    @classmethod
    def from_coefficients(cls, a: Number, b: Number, c: Number) -> "Line":
        a, b, c = as_rational(a), as_rational(b), as_rational(c)
        if a == 0 and b == 0:
            raise ValueError("degenerate line: a = b = 0")
        den = math.lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = int(a * den), int(b * den), int(c * den)
        g = math.gcd(math.gcd(ia, ib), ic)
        ia, ib, ic = ia // g, ib // g, ic // g
        if ia < 0 or (ia == 0 and ib < 0):
            ia, ib, ic = -ia, -ib, -ic
        return cls(ia, ib, ic)

    @classmethod
    def through(cls, p, q) -> "Line":
        p, q = _pt(p), _pt(q)
        if p == q:
            raise ValueError("a line needs two distinct points")
        a = q.y - p.y
        b = p.x - q.x
        return cls.from_coefficients(a, b, a * p.x + b * p.y)

    def value(self, p) -> Fraction:
        p = _pt(p)
        return self.a * p.x + self.b * p.y - self.c

    def side(self, p) -> int:
        v = self.value(p)
        return (v > 0) - (v < 0)

    def __str__(self) -> str:
        return f"{self.a}x + {self.b}y = {self.c}"


def line_meets_body(line: Line, body: ConvexBody) -> bool:
    vals = [line.value(v) for v in body.vertices]
    return min(vals) <= 0 <= max(vals)


def distance_lower_bound(body: ConvexBody, line: Line) -> Fraction:
    """Exact squared Euclidean distance between ``body`` and ``line``."""
    vals = [line.value(v) for v in body.vertices]
    if min(vals) <= 0 <= max(vals):
        return Fraction(0)
    nearest = min(abs(v) for v in vals)
    return nearest * nearest / (line.a * line.a + line.b * line.b)
