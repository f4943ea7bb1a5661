"""Segments on the unit circle forming a C(k)-free family that needs many lines.

Points p_1..p_N (N = 3(k-1)) run clockwise around the unit circle with p_5
at angle 0.  Near p_1, p_2, p_3 there are extra points p_i^l (slightly
counterclockwise) and p_i^r (slightly clockwise).  Coordinates are exact
rationals from the tangent half-angle map, so only the cyclic order of the
targets is reproduced, not their exact spacing.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .family import Family, FamilyError
from .geometry import RationalPoint, convex_hull

DEFAULT_PERTURBATION = Fraction(1, 10)
_DENOMINATOR_LIMIT = 10_000


@dataclass(frozen=True)
class CirclePointSpec:
    k: int
    perturbation: Fraction = DEFAULT_PERTURBATION

    @property
    def base_count(self) -> int:
        return 3 * (self.k - 1)


def point_from_parameter(t: Fraction | None) -> RationalPoint:
    """Tangent half-angle map; ``None`` stands for t = infinity, the point (-1, 0)."""
    if t is None:
        return RationalPoint(Fraction(-1), Fraction(0))
    d = 1 + t * t
    return RationalPoint((1 - t * t) / d, 2 * t / d)


def _parameter(angle: float) -> Fraction | None:
    a = math.remainder(angle, 2 * math.pi)
    if abs(abs(a) - math.pi) < 1e-12:
        return None
    return Fraction(math.tan(a / 2)).limit_denominator(_DENOMINATOR_LIMIT)


def point_names(k: int) -> list[str]:
    """Names of all generated points in clockwise order starting at p1l."""
    names = []
    for i in range(1, 3 * (k - 1) + 1):
        if i <= 3:
            names += [f"p{i}l", f"p{i}", f"p{i}r"]
        else:
            names.append(f"p{i}")
    return names


def name_index(name: str) -> int:
    return int(name[1:].rstrip("lr"))


def _angle_key(t: Fraction | None):
    # counterclockwise position on the circle, for exact order checks
    return (1, 0) if t is None else (0, t)


def circle_points(spec: CirclePointSpec) -> list[tuple[str, RationalPoint]]:
    """All 3(k-1) base points plus the six perturbed ones, clockwise from p1l."""
    k, delta = spec.k, Fraction(spec.perturbation)
    if k < 5:
        raise ValueError("the construction needs k >= 5")
    if not 0 < delta < Fraction(1, 2):
        raise ValueError("perturbation must lie strictly between 0 and 1/2 of the spacing")
    n = spec.base_count
    step = 2 * math.pi / n
    d = float(delta)
    out = []
    params = []
    for name in point_names(k):
        i = name_index(name)
        angle = (5 - i) * step
        if name.endswith("l"):
            angle += d * step
        elif name.endswith("r"):
            angle -= d * step
        t = _parameter(angle)
        params.append(t)
        out.append((name, point_from_parameter(t)))
    # clockwise order means the counterclockwise keys decrease, wrapping once
    keys = [_angle_key(t) for t in params]
    drops = sum(keys[(i + 1) % len(keys)] > keys[i] for i in range(len(keys)))
    if drops != 1 or len(set(keys)) != len(keys):
        raise ValueError("perturbation too large to preserve the cyclic order")
    return out


def segment_endpoints(k: int) -> list[tuple[int, str, str]]:
    """(subfamily, first, second) per segment; ``first`` is clockwise before ``second``."""
    if k < 5:
        raise ValueError("the construction needs k >= 5")
    n = 3 * (k - 1)

    def p(i: int) -> str:
        return f"p{i}"

    f1 = [(1, "p1r", "p3l")] + [(1, p(i), p(i + 2)) for i in range(4, n - 1, 3)]
    f2 = [(2, "p2r", "p4")] + [(2, p(i), p(i + 2)) for i in range(5, n - 3, 3)]
    f2.append((2, p(n - 1), "p1l"))
    f3 = [(3, "p3r", "p5")] + [(3, p(i), p(i + 2)) for i in range(6, n - 2, 3)]
    f3.append((3, p(n), "p2l"))
    return f1 + f2 + f3


def build_construction(k: int, perturbation: Fraction = DEFAULT_PERTURBATION) -> Family:
    """The 3(k-1) segments of the lower-bound family, with provenance metadata."""
    pts = dict(circle_points(CirclePointSpec(k, Fraction(perturbation))))
    segs = segment_endpoints(k)
    members, labels, provenance = [], [], []
    for sub, a, b in segs:
        members.append(convex_hull([pts[a], pts[b]]))
        labels.append(f"F{sub}:[{a},{b}]")
        provenance.append({"family": sub, "endpoints": [a, b]})
    meta = {"k": k, "perturbation": str(Fraction(perturbation)),
            "points": point_names(k), "members": provenance}
    return Family(tuple(members), tuple(labels), "generated", meta)


def _meta(f: Family, member: int) -> tuple[dict, list[str]]:
    meta = f.construction
    if not meta or "members" not in meta:
        raise FamilyError("family carries no construction metadata")
    if not 0 <= member < len(meta["members"]):
        raise FamilyError(f"member {member} is not part of the construction")
    return meta["members"][member], point_names(int(meta["k"]))


def arc_names(f: Family, member: int) -> list[str]:
    """Names of generated points on the clockwise arc of ``member``, endpoints included."""
    prov, names = _meta(f, member)
    a, b = prov["endpoints"]
    i = names.index(a)
    out = [a]
    while names[i] != b:
        i = (i + 1) % len(names)
        out.append(names[i])
    return out


def arc_index_set(f: Family, member: int) -> frozenset[int]:
    return frozenset(name_index(n) for n in arc_names(f, member))


def arc_point_count(f: Family, member: int) -> int:
    """Points of the 3k-point set P (base p1..p3 excluded) on the member's arc."""
    return sum(1 for n in arc_names(f, member) if n not in ("p1", "p2", "p3"))


def general_position_points(n: int) -> Family:
    """n points on the parabola y = x^2, so no three are collinear."""
    if n < 1:
        raise ValueError("n must be positive")
    bodies = [convex_hull([(i, i * i)]) for i in range(n)]
    return Family(tuple(bodies), tuple(f"q{i}" for i in range(n)), "generated")


def pentagon_ck(k: int = 5) -> Family:
    """k points in convex position on the unit circle, an explicit C(k)."""
    if k < 3:
        raise ValueError("k must be at least 3")
    pts = []
    for i in range(k):
        t = _parameter(2 * math.pi * i / k + 0.1)
        pts.append(point_from_parameter(t))
    bodies = [convex_hull([p]) for p in pts]
    return Family(tuple(bodies), tuple(f"v{i}" for i in range(k)), "generated")
