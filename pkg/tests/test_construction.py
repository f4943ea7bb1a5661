import itertools
import math
from fractions import Fraction as Fr

import pytest

from ckpierce.construction import (
    CirclePointSpec, arc_index_set, arc_names, arc_point_count, build_construction,
    circle_points, general_position_points, pentagon_ck, point_names,
)
from ckpierce.family import FamilyError
from ckpierce.geometry import bodies_disjoint, orient

KS = [5, 6, 7]


@pytest.mark.parametrize("k", KS)
def test_points_on_circle_in_clockwise_order(k):
    named = circle_points(CirclePointSpec(k))
    assert len(named) == 3 * (k - 1) + 6
    pts = [p for _, p in named]
    assert all(p.x * p.x + p.y * p.y == 1 for p in pts)
    assert len(set(pts)) == len(pts)
    # distinct points on a circle listed clockwise: every consecutive triple turns right
    n = len(pts)
    assert all(orient(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) == -1 for i in range(n))


def test_layout_angles():
    pts = dict(circle_points(CirclePointSpec(5)))
    p5 = pts["p5"]
    assert p5.x == 1 and p5.y == 0
    ang = lambda p: math.degrees(math.atan2(float(p.y), float(p.x)))
    assert ang(pts["p4"]) == pytest.approx(30, abs=0.01)
    assert ang(pts["p6"]) == pytest.approx(-30, abs=0.01)
    assert ang(pts["p1"]) - ang(pts["p1r"]) == pytest.approx(3, abs=0.01)


def test_perturbation_bounds():
    with pytest.raises(ValueError):
        circle_points(CirclePointSpec(5, Fr(1, 2)))
    with pytest.raises(ValueError):
        circle_points(CirclePointSpec(5, Fr(0)))
    with pytest.raises(ValueError):
        circle_points(CirclePointSpec(4))
    assert len(circle_points(CirclePointSpec(5, Fr(9, 20)))) == 18


@pytest.mark.parametrize("k", KS)
def test_member_count(k):
    f = build_construction(k)
    assert len(f) == 3 * (k - 1)
    assert all(b.is_segment for b in f.members)
    assert f.construction["k"] == k


def test_k5_members_listed():
    labels = build_construction(5).labels
    assert labels == (
        "F1:[p1r,p3l]", "F1:[p4,p6]", "F1:[p7,p9]", "F1:[p10,p12]",
        "F2:[p2r,p4]", "F2:[p5,p7]", "F2:[p8,p10]", "F2:[p11,p1l]",
        "F3:[p3r,p5]", "F3:[p6,p8]", "F3:[p9,p11]", "F3:[p12,p2l]",
    )
    with pytest.raises(ValueError):
        build_construction(4)


def test_arc_index_examples():
    f = build_construction(5)
    idx = {label: i for i, label in enumerate(f.labels)}
    assert arc_index_set(f, idx["F2:[p2r,p4]"]) == {2, 3, 4}
    assert arc_index_set(f, idx["F1:[p4,p6]"]) == {4, 5, 6}
    assert arc_index_set(f, idx["F1:[p1r,p3l]"]) == {1, 2, 3}
    with pytest.raises(FamilyError):
        arc_index_set(general_position_points(3), 0)


@pytest.mark.parametrize("k", KS)
def test_arc_counts(k):
    f = build_construction(k)
    for m in range(len(f)):
        assert len(arc_index_set(f, m)) == 3
        count = arc_point_count(f, m)
        assert count >= 3
        if "p2r" in arc_names(f, m):
            assert count >= 4


@pytest.mark.parametrize("k", KS)
def test_intersecting_members_share_indices(k):
    f = build_construction(k)
    for a, b in itertools.combinations(range(len(f)), 2):
        if not bodies_disjoint(f[a], f[b]):
            assert arc_index_set(f, a) & arc_index_set(f, b)


def test_point_names():
    assert point_names(5)[:4] == ["p1l", "p1", "p1r", "p2l"]
    assert len(point_names(6)) == 3 * 5 + 6


def test_fixtures():
    g = general_position_points(4)
    pts = [b.vertices[0] for b in g.members]
    assert all(orient(*t) != 0 for t in itertools.combinations(pts, 3))
    p = pentagon_ck(5)
    verts = [b.vertices[0] for b in p.members]
    assert all(orient(verts[i], verts[(i + 1) % 5], verts[(i + 2) % 5]) == 1 for i in range(5))
