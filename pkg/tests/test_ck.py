import itertools
import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings, strategies as st

from ckpierce.ck import (
    canonical_order, find_ck, find_ck_bruteforce, find_violation, is_tight_triple,
    required_pairs, verify_ck,
)
from ckpierce.construction import build_construction, pentagon_ck
from ckpierce.family import family_of
from ckpierce.geometry import bodies_disjoint, convex_hull, hull_union

from families import random_ck, random_family

pt = lambda x, y: convex_hull([(x, y)])


def test_tight_triple_examples():
    assert is_tight_triple(pt(0, 0), pt(1, 0), pt(2, 0))
    assert not is_tight_triple(pt(0, 0), pt(1, 0), pt(0, 1))


@given(st.integers(0, 10_000))
def test_common_transversal_implies_tight(seed):
    rng = random.Random(seed)
    a, b, c = (rng.randint(-5, 5) for _ in range(3))
    if a == 0 and b == 0:
        a = 1
    bodies = []
    for _ in range(3):
        # a body containing a point of a*x + b*y = c
        t = Fr(rng.randint(-20, 20), 4)
        p = (Fr(c, a) - Fr(b, a) * t, t) if a else (t, Fr(c, b))
        extra = [(p[0] + rng.randint(-3, 3), p[1] + rng.randint(-3, 3))
                 for _ in range(rng.randint(0, 3))]
        bodies.append(convex_hull([p] + extra))
    assert is_tight_triple(*bodies)


def test_required_pairs():
    assert required_pairs(4) == [(0, 2), (1, 3)]
    pairs = required_pairs(5)
    assert len(pairs) == 5
    for i, j in pairs:
        assert not {i, (i + 1) % 5} & {j, (j + 1) % 5}


def test_verify_square():
    f = family_of([[(1, 1)], [(-1, 1)], [(-1, -1)], [(1, -1)]])
    cert = verify_ck(f, [0, 1, 2, 3])
    assert cert is not None and cert.k == 4
    assert verify_ck(f, [0, 2, 1, 3]) is None
    assert find_violation(f, [0, 2, 1, 3]) is not None


def test_verify_errors():
    f = family_of([[(0, 0)], [(1, 0)], [(0, 1)]])
    with pytest.raises(ValueError):
        verify_ck(f, [0, 0, 1])
    with pytest.raises(ValueError):
        verify_ck(f, [0, 1, 5])
    with pytest.raises(ValueError):
        verify_ck(f, [0, 1])
    with pytest.raises(ValueError):
        find_ck(f, 2)


def test_k3_definition():
    f = family_of([[(0, 0)], [(1, 0)], [(0, 1)]])
    assert verify_ck(f, [0, 1, 2]) is not None
    line = family_of([[(0, 0)], [(1, 0)], [(2, 0)]])
    assert find_violation(line, [0, 1, 2]) == (0, 0)
    touching = family_of([[(0, 0), (1, 0)], [(1, 0), (1, 1)], [(3, 3)]])
    assert verify_ck(touching, [0, 1, 2]) is None


def test_pentagon():
    f = pentagon_ck(5)
    cert = verify_ck(f, range(5))
    assert cert is not None
    # pair hulls of non-adjacent positions really are disjoint
    hulls = [hull_union(f[i], f[(i + 1) % 5]) for i in range(5)]
    for i, j in cert.checked_pairs:
        assert bodies_disjoint(hulls[i], hulls[j])


def test_convex_position_order_unique():
    f = pentagon_ck(5)
    valid = {canonical_order(p) for p in itertools.permutations(range(5)) if verify_ck(f, p)}
    assert valid == {(0, 1, 2, 3, 4)}
    shuffled = f.permuted([3, 0, 4, 2, 1])
    cert = find_ck(shuffled, 5)
    assert cert is not None and cert.order == (0, 2, 1, 4, 3)
    assert find_ck(f, 6) is None


def test_canonical_order():
    assert canonical_order([3, 4, 0, 1, 2]) == (0, 1, 2, 3, 4)
    assert canonical_order([2, 1, 0, 4, 3]) == (0, 1, 2, 3, 4)
    assert canonical_order([0, 2, 1]) == (0, 1, 2)


@pytest.mark.parametrize("k", [5, 6])
def test_construction_free(k):
    assert find_ck(build_construction(5), k) is None


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(3, 7), st.integers(3, 5))
def test_pruned_matches_bruteforce(seed, n, k):
    f = random_family(random.Random(seed), n, span=6, size=3)
    fast, slow = find_ck(f, k), find_ck_bruteforce(f, k)
    assert (fast is None) == (slow is None)
    if fast:
        assert fast.order == slow.order
        assert verify_ck(f, fast.order)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(3, 6))
def test_planted_ck_found(seed, k):
    drawn = random_ck(random.Random(seed), k, extra=1)
    if drawn is None:
        return
    f, _ = drawn
    cert = find_ck(f, k)
    assert cert is not None and verify_ck(f, cert.order)


def test_parallel_matches_serial(monkeypatch):
    f = random_ck(random.Random(7), 5, extra=2)
    assert f is not None
    fam = f[0]
    serial = find_ck(fam, 5, workers=1)
    monkeypatch.setenv("CKPIERCE_THREADS", "2")
    assert find_ck(fam, 5) == serial
