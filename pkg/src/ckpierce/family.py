"""Families of convex bodies, their JSON form, and unit-disk normalization."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from .geometry import ConvexBody, RationalPoint, as_rational, convex_hull, cross


class FamilyError(ValueError):
    """Raised for malformed or invalid family documents."""


@dataclass(frozen=True)
class Family:
    members: tuple[ConvexBody, ...]
    labels: tuple[Optional[str], ...] = ()
    source: str = "loaded"
    # lower-bound construction metadata, see ckpierce.construction
    construction: Optional[dict] = field(default=None, compare=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", (None,) * len(self.members))
        if len(self.labels) != len(self.members):
            raise FamilyError("labels and members differ in length")

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, i: int) -> ConvexBody:
        return self.members[i]

    def __iter__(self):
        return iter(self.members)

    def subfamily(self, indices: Sequence[int]) -> "Family":
        return Family(tuple(self.members[i] for i in indices),
                      tuple(self.labels[i] for i in indices), self.source)

    def permuted(self, perm: Sequence[int]) -> "Family":
        """Family whose member ``t`` is the old member ``perm[t]``."""
        return self.subfamily(perm)

    def vertices(self) -> list[RationalPoint]:
        return [v for m in self.members for v in m.vertices]


def family_of(bodies, labels=None, source="generated") -> Family:
    members = tuple(b if isinstance(b, ConvexBody) else convex_hull(b) for b in bodies)
    return Family(members, tuple(labels) if labels else (), source)


def _in_convex_position(points: list[RationalPoint], hull: ConvexBody) -> bool:
    """Every point on the hull boundary and the listed cyclic order is convex."""
    if len(hull.vertices) <= 2:
        return True
    for p in points:
        on_boundary = False
        for a, b in hull.edges():
            if cross(a, b, p) == 0:
                on_boundary = True
                break
        if not on_boundary:
            return False
    turns = set()
    n = len(points)
    for i in range(n):
        c = cross(points[i], points[(i + 1) % n], points[(i + 2) % n])
        if c:
            turns.add(c > 0)
    return len(turns) <= 1


def _parse_coord(value: Any, where: str) -> Fraction:
    try:
        return as_rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FamilyError(f"{where}: {exc}") from None


def family_from_dict(doc: Any, source: str = "loaded") -> Family:
    if not isinstance(doc, dict) or "members" not in doc:
        raise FamilyError("document: expected an object with a 'members' array")
    raw = doc["members"]
    if not isinstance(raw, list):
        raise FamilyError("members: expected an array")
    if not raw:
        raise FamilyError("members: family has no members")
    members, labels = [], []
    for i, m in enumerate(raw):
        where = f"members[{i}]"
        if not isinstance(m, dict) or "vertices" not in m:
            raise FamilyError(f"{where}: expected an object with 'vertices'")
        label = m.get("label")
        if label is not None and not isinstance(label, str):
            raise FamilyError(f"{where}.label: expected a string")
        verts = m["vertices"]
        if not isinstance(verts, list) or not verts:
            raise FamilyError(f"{where}.vertices: expected a nonempty array")
        pts = []
        for j, v in enumerate(verts):
            if not isinstance(v, list) or len(v) != 2:
                raise FamilyError(f"{where}.vertices[{j}]: expected [x, y]")
            pts.append(RationalPoint(_parse_coord(v[0], f"{where}.vertices[{j}][0]"),
                                     _parse_coord(v[1], f"{where}.vertices[{j}][1]")))
        hull = convex_hull(pts)
        if not _in_convex_position(pts, hull):
            name = f" ({label})" if label else ""
            raise FamilyError(f"{where}{name}: vertex list is not convex")
        members.append(hull)
        labels.append(label)
    fam = Family(tuple(members), tuple(labels), source, doc.get("construction"))
    return fam


def load_family(text: str | bytes) -> Family:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return family_from_dict(doc)


def _coord(q: Fraction):
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def family_to_dict(f: Family) -> dict:
    members = []
    for body, label in zip(f.members, f.labels):
        entry: dict = {}
        if label is not None:
            entry["label"] = label
        entry["vertices"] = [[_coord(v.x), _coord(v.y)] for v in body.vertices]
        members.append(entry)
    doc: dict = {"members": members}
    if f.construction is not None:
        doc["construction"] = f.construction
    return doc


def save_family(f: Family) -> str:
    return json.dumps(family_to_dict(f), indent=1) + "\n"


@dataclass(frozen=True)
class DiskTransform:
    """The similarity ``p -> scale * p + translation``."""

    scale: Fraction
    translation: RationalPoint

    def apply(self, p: RationalPoint) -> RationalPoint:
        return RationalPoint(self.scale * p.x + self.translation.x,
                             self.scale * p.y + self.translation.y)

    def invert(self, p: RationalPoint) -> RationalPoint:
        return RationalPoint((p.x - self.translation.x) / self.scale,
                             (p.y - self.translation.y) / self.scale)

    def apply_family(self, f: Family) -> Family:
        return Family(tuple(m.transformed(self.scale, self.translation) for m in f.members),
                      f.labels, f.source, f.construction)


TARGET_RADIUS = Fraction(9, 10)


def _sqrt_upper(q: Fraction, bits: int = 40) -> Fraction:
    """A rational r >= sqrt(q), exact when q is a square of a rational."""
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    scale = 1 << bits
    num = n * scale * scale
    r = math.isqrt(num // d) + 1
    return Fraction(r, scale)


def scale_to_unit_disk(f: Family) -> tuple[Family, DiskTransform]:
    """Move the vertex centroid to the origin and shrink to radius <= 9/10."""
    verts = f.vertices()
    if not verts:
        raise FamilyError("cannot scale an empty family")
    cx = sum((v.x for v in verts), Fraction(0)) / len(verts)
    cy = sum((v.y for v in verts), Fraction(0)) / len(verts)
    r2 = max((v.x - cx) ** 2 + (v.y - cy) ** 2 for v in verts)
    scale = Fraction(1) if r2 == 0 else TARGET_RADIUS / _sqrt_upper(r2)
    t = DiskTransform(scale, RationalPoint(-scale * cx, -scale * cy))
    return t.apply_family(f), t
