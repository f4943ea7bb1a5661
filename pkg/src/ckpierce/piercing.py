"""Line transversals and exact minimum line piercing.

Line space is finitized by vertex-pair lines: a subfamily of closed convex
polygons with a common transversal also has one through two vertices of
its members, so every decision below ranges over that finite candidate set.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .family import Family, FamilyError
from .geometry import ConvexBody, Line, RationalPoint, line_meets_body


@dataclass(frozen=True)
class PiercingSolution:
    lines: tuple[Line, ...]
    # assignment[m] is the index into ``lines`` of a line meeting member m
    assignment: tuple[int, ...]

    def verify(self, f: Family) -> bool:
        return len(self.assignment) == len(f) and all(
            line_meets_body(self.lines[a], body)
            for a, body in zip(self.assignment, f.members))


def _lines_through(points: Sequence[RationalPoint]) -> list[Line]:
    pts = sorted(set(points))
    if len(pts) == 1:
        p = pts[0]
        return [Line.from_coefficients(0, 1, p.y)]
    lines = {Line.through(p, q) for p, q in itertools.combinations(pts, 2)}
    return sorted(lines)


def candidate_lines(f: Family, subset: Optional[Iterable[int]] = None) -> list[Line]:
    """Deduplicated vertex-pair lines of the members in ``subset`` (default all)."""
    idx = range(len(f)) if subset is None else subset
    pts = [v for i in idx for v in f.members[i].vertices]
    if not pts:
        raise ValueError("candidate lines need at least one member")
    return _lines_through(pts)


def _check_subset(f: Family, subset) -> list[int]:
    subset = sorted(set(subset))
    if not subset:
        raise ValueError("subset must be nonempty")
    for i in subset:
        if not 0 <= i < len(f):
            raise ValueError(f"index {i} out of range for a family of {len(f)}")
    return subset


def has_line_transversal(f: Family, subset: Optional[Iterable[int]] = None) -> Optional[Line]:
    """Least canonical line meeting every member of ``subset``, or None."""
    subset = _check_subset(f, range(len(f)) if subset is None else subset)
    bodies = [f.members[i] for i in subset]
    for line in candidate_lines(f, subset):
        if all(line_meets_body(line, b) for b in bodies):
            return line
    return None


def hit_mask(line: Line, members: Sequence[ConvexBody]) -> int:
    mask = 0
    for i, b in enumerate(members):
        if line_meets_body(line, b):
            mask |= 1 << i
    return mask


def max_line_hits(f: Family, through: Optional[int] = None) -> tuple[int, Line]:
    """Most members met by a single line, with the least canonical witness.

    With ``through`` set, only lines meeting that member are considered.
    """
    if not len(f):
        raise ValueError("family is empty")
    best, witness = -1, None
    for line in candidate_lines(f):
        if through is not None and not line_meets_body(line, f.members[through]):
            continue
        hits = sum(line_meets_body(line, b) for b in f.members)
        if hits > best:
            best, witness = hits, line
    assert witness is not None
    return best, witness


def _maximal_masks(lines: list[Line], masks: list[int]) -> list[tuple[int, Line]]:
    first: dict[int, Line] = {}
    for line, m in zip(lines, masks):
        if m and m not in first:
            first[m] = line
    uniq = sorted(first, key=lambda m: -bin(m).count("1"))
    keep = []
    for m in uniq:
        if not any(m | k == k for k, _ in keep):
            keep.append((m, first[m]))
    return keep


class _SetCover:
    """Branch and bound over a bitmask set system."""

    def __init__(self, n: int, sets: list[int]):
        self.n = n
        self.full = (1 << n) - 1
        self.sets = sets
        self.cover = [[s for s, m in enumerate(sets) if m >> e & 1] for e in range(n)]
        self.max_size = max(bin(m).count("1") for m in sets)

    def greedy(self) -> list[int]:
        covered, chosen = 0, []
        while covered != self.full:
            s = max(range(len(self.sets)),
                    key=lambda s: (bin(self.sets[s] & ~covered).count("1"), -s))
            chosen.append(s)
            covered |= self.sets[s]
        return chosen

    def solve(self, limit: int) -> Optional[list[int]]:
        """An optimal cover of size <= limit, or None."""
        best: list[Optional[list[int]]] = [None]
        bound = [limit + 1]
        g = self.greedy()
        if len(g) <= limit:
            best[0], bound[0] = g, len(g)

        def rec(covered: int, chosen: list[int]):
            if covered == self.full:
                if len(chosen) < bound[0]:
                    bound[0], best[0] = len(chosen), list(chosen)
                return
            left = bin(self.full & ~covered).count("1")
            if len(chosen) + -(-left // self.max_size) >= bound[0]:
                return
            e = min((e for e in range(self.n) if not covered >> e & 1),
                    key=lambda e: len(self.cover[e]))
            for s in self.cover[e]:
                chosen.append(s)
                rec(covered | self.sets[s], chosen)
                chosen.pop()

        rec(0, [])
        return best[0]

    def lex_least(self, size: int) -> list[int]:
        """Lexicographically least set-index tuple covering everything with ``size`` sets."""
        m = len(self.sets)
        suffix = [0] * (m + 1)
        for s in range(m - 1, -1, -1):
            suffix[s] = suffix[s + 1] | self.sets[s]

        def rec(start: int, covered: int, chosen: list[int]) -> Optional[list[int]]:
            if covered == self.full:
                return list(chosen)
            if len(chosen) == size or (covered | suffix[start]) != self.full:
                return None
            left = bin(self.full & ~covered).count("1")
            if len(chosen) + -(-left // self.max_size) > size:
                return None
            for s in range(start, m):
                if not self.sets[s] & ~covered:
                    continue
                chosen.append(s)
                found = rec(s + 1, covered | self.sets[s], chosen)
                chosen.pop()
                if found:
                    return found
                if (covered | suffix[s + 1]) != self.full:
                    break
            return None

        found = rec(0, 0, [])
        assert found is not None
        return found


def min_piercing_lines(f: Family, budget: int) -> Optional[PiercingSolution]:
    """Fewest candidate lines meeting every member, if that is at most ``budget``.

    Among optimal solutions the lexicographically least one (by canonical
    line form, over maximal pierceable subsets) is returned.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    n = len(f)
    if n == 0:
        raise ValueError("family is empty")
    lines = candidate_lines(f)
    masks = [hit_mask(line, f.members) for line in lines]
    system = sorted(_maximal_masks(lines, masks), key=lambda ml: ml[1])
    sc = _SetCover(n, [m for m, _ in system])
    opt = sc.solve(budget)
    if opt is None:
        return None
    chosen = [system[s][1] for s in sc.lex_least(len(opt))]
    assignment = tuple(next(t for t, line in enumerate(chosen) if line_meets_body(line, b))
                       for b in f.members)
    return PiercingSolution(tuple(chosen), assignment)


def solution_for(f: Family, lines: Sequence[Line]) -> Optional[PiercingSolution]:
    """Wrap ``lines`` as a solution if they pierce ``f``."""
    assignment = []
    for b in f.members:
        t = next((t for t, line in enumerate(lines) if line_meets_body(line, b)), None)
        if t is None:
            return None
        assignment.append(t)
    return PiercingSolution(tuple(lines), tuple(assignment))


def count_bound_check(f: Family, a: int) -> bool:
    """Counting bound for the lower-bound construction: 6(a-1) + 5 >= 3(k-1)."""
    meta = f.construction
    if not meta or "k" not in meta:
        raise FamilyError("family carries no construction metadata")
    return counting_bound(int(meta["k"]), a)


def counting_bound(k: int, a: int) -> bool:
    return 6 * (a - 1) + 5 >= 3 * (k - 1)
