import json
import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given, strategies as st

from ckpierce.construction import build_construction
from ckpierce.family import (
    Family, FamilyError, family_of, load_family, save_family, scale_to_unit_disk,
)
from ckpierce.geometry import RationalPoint, convex_hull

from families import random_family


def doc(*members):
    return json.dumps({"members": [{"vertices": m} for m in members]})


def test_load_examples():
    f = load_family(doc([[0, 0], [1, 0]]))
    assert len(f) == 1 and f[0].is_segment
    sq = load_family(doc([[0, 0], [1, 0], [1, 1], [0, 1]]))
    assert sq[0] == convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])
    seg = load_family(doc([[0, 0], [2, 0], [1, 0]]))
    assert seg[0].vertices == (RationalPoint.of(0, 0), RationalPoint.of(2, 0))


def test_load_rationals_exact():
    f = load_family(doc([["1/3", "-2/6"]]))
    assert f[0].vertices[0] == RationalPoint(Fr(1, 3), Fr(-1, 3))


@pytest.mark.parametrize("text, where", [
    ('{"members": [', "line 1 column"),
    ('{"members": []}', "no members"),
    (doc([[0, 0], [1, 0], [0, 1], [1, 1]]), "members[0]"),
    (doc([[0, 0]], [[0, 0], [2, 2], [1, 1], [0, 2]]), "members[1]"),
    (doc([[0, "0.5"]]), "members[0].vertices[0][1]"),
    (doc([[0, 0, 0]]), "members[0].vertices[0]"),
    ('{"members": [{"vertices": []}]}', "members[0].vertices"),
    ('[1, 2]', "document"),
])
def test_load_errors(text, where):
    with pytest.raises(FamilyError) as err:
        load_family(text)
    assert where in str(err.value)


def test_nonconvex_error_names_member():
    text = json.dumps({"members": [{"label": "bowtie",
                                    "vertices": [[0, 0], [2, 2], [2, 0], [0, 2]]}]})
    with pytest.raises(FamilyError, match="bowtie"):
        load_family(text)


def test_save_format():
    f = family_of([[(Fr(1, 3), 0), (1, 1)]])
    text = save_family(f)
    assert '"1/3"' in text and "label" not in text
    assert "0.33" not in text


def test_roundtrip_construction():
    f = build_construction(5)
    g = load_family(save_family(f))
    assert g.members == f.members and g.labels == f.labels
    assert g.construction == f.construction


@given(st.integers(0, 10_000), st.integers(1, 8))
def test_roundtrip_random(seed, n):
    f = random_family(random.Random(seed), n)
    g = load_family(save_family(f))
    assert g.members == f.members


def test_labels_length_checked():
    with pytest.raises(FamilyError):
        Family((convex_hull([(0, 0)]),), ("a", "b"))


def inside_disk(f):
    return all(v.norm2() < 1 for v in f.vertices())


def test_scale_examples():
    g, t = scale_to_unit_disk(family_of([[(100, 100)]]))
    assert inside_disk(g)
    tiny = family_of([[(Fr(1, 10), 0), (0, Fr(1, 10))]])
    assert inside_disk(scale_to_unit_disk(tiny)[0])
    c = build_construction(5)
    assert inside_disk(scale_to_unit_disk(c)[0])


@given(st.integers(0, 10_000), st.integers(1, 6), st.integers(1, 300))
def test_scale_invariant(seed, n, spread):
    rng = random.Random(seed)
    f = random_family(rng, n, span=spread, size=spread)
    g, t = scale_to_unit_disk(f)
    assert inside_disk(g)
    for a, b in zip(f.vertices(), g.vertices()):
        assert t.apply(a) == b and t.invert(b) == a
