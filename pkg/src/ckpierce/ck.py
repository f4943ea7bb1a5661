"""Tight triples and C(k) subfamilies.

An ordered family F_1..F_k (k >= 4) is a C(k) when conv(F_i u F_{i+1}) and
conv(F_j u F_{j+1}) are disjoint for every pair of cyclically non-adjacent
positions i, j.  A C(3) is three pairwise disjoint sets that do not form a
tight triple.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .family import Family
from .geometry import ConvexBody, bodies_disjoint, hull_union, intersect_bodies


@dataclass(frozen=True)
class CkCertificate:
    k: int
    order: tuple[int, ...]
    # position pairs (i, j) whose consecutive-pair hulls were checked disjoint;
    # for k == 3 these are the member-position pairs checked disjoint
    checked_pairs: tuple[tuple[int, int], ...]


def is_tight_triple(a: ConvexBody, b: ConvexBody, c: ConvexBody) -> bool:
    ab = intersect_bodies(hull_union(a, b), hull_union(b, c))
    if ab is None:
        return False
    return intersect_bodies(ab, hull_union(c, a)) is not None


def required_pairs(k: int) -> list[tuple[int, int]]:
    """Position pairs (i, j), i < j, whose pair hulls must be disjoint.

    Pairs at cyclic distance 2 come first since they fail most often.
    """
    pairs = []
    for i in range(k):
        for j in range(i + 2, k):
            if (j + 1) % k != i:
                pairs.append((i, j))
    return sorted(pairs, key=lambda p: (min(p[1] - p[0], k - p[1] + p[0]), p))


def _check_order(order: Sequence[int], f: Family):
    k = len(order)
    if k < 3:
        raise ValueError("a C(k) needs k >= 3")
    if len(set(order)) != k:
        raise ValueError(f"duplicate indices in order {list(order)}")
    for i in order:
        if not 0 <= i < len(f):
            raise ValueError(f"index {i} out of range for a family of {len(f)}")


def find_violation(f: Family, order: Sequence[int]) -> Optional[tuple[int, int]]:
    """First position pair violating the C(k) condition, or None.

    For k == 3 a tight triple is reported as the pair (0, 0).
    """
    _check_order(order, f)
    k = len(order)
    bodies = [f.members[i] for i in order]
    if k == 3:
        for i, j in ((0, 1), (1, 2), (0, 2)):
            if not bodies_disjoint(bodies[i], bodies[j]):
                return (i, j)
        return (0, 0) if is_tight_triple(*bodies) else None
    hulls = [hull_union(bodies[i], bodies[(i + 1) % k]) for i in range(k)]
    for i, j in required_pairs(k):
        if not bodies_disjoint(hulls[i], hulls[j]):
            return (i, j)
    return None


def verify_ck(f: Family, order: Sequence[int]) -> Optional[CkCertificate]:
    """Certificate if ``order`` lists a C(k) of ``f``, else None."""
    if find_violation(f, order) is not None:
        return None
    k = len(order)
    pairs = ((0, 1), (1, 2), (0, 2)) if k == 3 else tuple(required_pairs(k))
    return CkCertificate(k, tuple(order), tuple(pairs))


def canonical_order(order: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a cyclic order to start at its minimum with order[1] < order[-1]."""
    order = list(order)
    i = order.index(min(order))
    rot = order[i:] + order[:i]
    if len(rot) > 2 and rot[1] > rot[-1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


class _PairHulls:
    """Lazy cache of pair hulls and their disjointness."""

    def __init__(self, f: Family):
        self.f = f
        self._hull: dict = {}
        self._disj: dict = {}

    def hull(self, a: int, b: int) -> ConvexBody:
        key = (a, b) if a < b else (b, a)
        h = self._hull.get(key)
        if h is None:
            h = self._hull[key] = hull_union(self.f.members[a], self.f.members[b])
        return h

    def disjoint(self, p: tuple[int, int], q: tuple[int, int]) -> bool:
        p = p if p[0] < p[1] else (p[1], p[0])
        q = q if q[0] < q[1] else (q[1], q[0])
        key = (p, q) if p < q else (q, p)
        d = self._disj.get(key)
        if d is None:
            d = self._disj[key] = bodies_disjoint(self.hull(*p), self.hull(*q))
        return d


def _search_from(f: Family, k: int, first: int, cache: _PairHulls,
                 member_disjoint) -> Optional[tuple[int, ...]]:
    n = len(f)
    order = [first]

    def closing_ok() -> bool:
        last = (order[-1], order[0])
        # pair (k-1, 0) against pairs (j, j+1) for 1 <= j <= k-3
        for j in range(k - 3, 0, -1):
            if not cache.disjoint(last, (order[j], order[j + 1])):
                return False
        return True

    def extend() -> Optional[tuple[int, ...]]:
        t = len(order)
        if t == k:
            if order[1] < order[-1] and closing_ok():
                return tuple(order)
            return None
        for c in range(first + 1, n):
            if c in order or not all(member_disjoint(c, o) for o in order):
                continue
            order.append(c)
            new = (order[t - 1], c)
            ok = True
            # new pair (t-1, t) against (j, j+1), j <= t-3; nearest first
            for j in range(t - 3, -1, -1):
                if not cache.disjoint(new, (order[j], order[j + 1])):
                    ok = False
                    break
            if ok:
                found = extend()
                if found:
                    return found
            order.pop()
        return None

    return extend()


def _find_k3(f: Family) -> Optional[CkCertificate]:
    n = len(f)
    for combo in itertools.combinations(range(n), 3):
        cert = verify_ck(f, combo)
        if cert:
            return cert
    return None


def _first_search(args):
    f, k, firsts = args
    cache = _PairHulls(f)
    disj: dict = {}

    def member_disjoint(a, b):
        key = (a, b) if a < b else (b, a)
        if key not in disj:
            disj[key] = bodies_disjoint(f.members[a], f.members[b])
        return disj[key]

    for first in firsts:
        found = _search_from(f, k, first, cache, member_disjoint)
        if found:
            return found
    return None


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("CKPIERCE_THREADS", "1")))
    except ValueError:
        return 1


def find_ck(f: Family, k: int, workers: Optional[int] = None) -> Optional[CkCertificate]:
    """Lexicographically least canonical C(k) order in ``f``, or None.

    Orders are enumerated up to rotation and reflection: the smallest index
    comes first and the second entry is smaller than the last.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if k > len(f):
        return None
    if k == 3:
        return _find_k3(f)
    firsts = list(range(len(f) - k + 1))
    workers = workers or _workers()
    if workers <= 1 or len(firsts) == 1:
        found = _first_search((f, k, firsts))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_first_search, [(f, k, [s]) for s in firsts]))
        found = next((r for r in results if r), None)
    if found is None:
        return None
    return CkCertificate(k, found, tuple(required_pairs(k)))


def find_ck_bruteforce(f: Family, k: int) -> Optional[CkCertificate]:
    """Reference search: every k-permutation, full verification, no pruning."""
    if k < 3:
        raise ValueError("k must be at least 3")
    best = None
    for combo in itertools.combinations(range(len(f)), k):
        for perm in itertools.permutations(combo):
            if verify_ck(f, perm):
                c = canonical_order(perm)
                if best is None or c < best:
                    best = c
    return verify_ck(f, best) if best is not None else None
