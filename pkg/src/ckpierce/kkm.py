"""Chord systems on the unit circle and the KKM-guided piercing search.

A point x of the simplex with n = 2(k-2) coordinates places boundary points
f_i(x) = f(x_1 + ... + x_i) on the unit circle, f(t) = (cos 2 pi t,
sin 2 pi t), and joins f_i to f_{i+k-2} by the chord l_i(x).  The k-2
chords l_0..l_{k-3} either pierce a family or some region R^i_x (a piece of
the disk cut out by the chords next to the arc from f_{i-1} to f_i) holds a
whole member.  Labelling simplex points this way is a Sperner labelling, so
a fully labelled cell of a fine triangulation points at a C(k) when no
chord system pierces.

The search is numeric, but everything it returns is verified exactly: line
solutions are rebuilt from vertex-pair lines and certificates go through
:func:`ckpierce.ck.verify_ck`.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import minimize

from . import kernels
from .ck import CkCertificate, verify_ck
from .family import Family, scale_to_unit_disk
from .geometry import ConvexBody, bodies_disjoint, hull_union
from .piercing import PiercingSolution, has_line_transversal, solution_for

log = logging.getLogger(__name__)

PIERCED = 0
SIMPLEX_TOL = 1e-12
DEFAULT_TOLERANCE = 1e-6
DEFAULT_RESOLUTIONS = (4, 8, 16)


@dataclass(frozen=True)
class SimplexPoint:
    coords: tuple[float, ...]

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=float)
        if c.ndim != 1 or not np.all(np.isfinite(c)):
            raise ValueError("simplex coordinates must be a finite vector")
        if np.any(c < -SIMPLEX_TOL) or abs(c.sum() - 1.0) > SIMPLEX_TOL * max(1, len(c)):
            raise ValueError("coordinates must be nonnegative and sum to 1")

    @classmethod
    def barycenter(cls, n: int) -> "SimplexPoint":
        return cls(tuple([1.0 / n] * n))

    def array(self) -> np.ndarray:
        return np.clip(np.asarray(self.coords, dtype=float), 0.0, None)


def _coords(x) -> np.ndarray:
    if isinstance(x, SimplexPoint):
        return x.array()
    return SimplexPoint(tuple(float(v) for v in x)).array()


def _unit(t: float) -> np.ndarray:
    return np.array([math.cos(2 * math.pi * t), math.sin(2 * math.pi * t)])


@dataclass(frozen=True, eq=False)
class ChordSystem:
    """Boundary points f_0..f_n (f_n = f_0) and chords l_0..l_{n-1}."""

    k: int
    x: np.ndarray
    sums: np.ndarray        # partial sums s_0..s_n
    boundary: np.ndarray    # (n + 1, 2)
    chords: np.ndarray      # (n, 4): x0, y0, x1, y1 of [f_i, f_{i+k-2}]
    degenerate: np.ndarray  # (n,) chord is a single point

    @property
    def n(self) -> int:
        return len(self.x)

    def line(self, j: int) -> np.ndarray:
        """(a, b, c) with a*x + b*y = c through chord j, (a, b) of unit length."""
        x0, y0, x1, y1 = self.chords[j % self.n]
        a, b = y1 - y0, x0 - x1
        norm = math.hypot(a, b)
        if norm == 0:
            raise ValueError(f"chord {j} is a point")
        a, b = a / norm, b / norm
        return np.array([a, b, a * x0 + b * y0])

    def arc_midpoint(self, i: int) -> np.ndarray:
        """Midpoint of the arc from f_{i-1} to f_i, 1 <= i <= n."""
        return _unit(0.5 * (self.sums[i - 1] + self.sums[i]))

    def piercing_chords(self) -> np.ndarray:
        return self.chords[: self.k - 2]


def chord_system(x, k: int) -> ChordSystem:
    if k < 5:
        raise ValueError("chord systems need k >= 5")
    xs = _coords(x)
    n = 2 * (k - 2)
    if len(xs) != n:
        raise ValueError(f"expected {n} coordinates for k={k}, got {len(xs)}")
    sums = np.concatenate([[0.0], np.cumsum(xs)])
    sums[-1] = 1.0
    boundary = np.array([_unit(s) for s in sums])
    boundary[n] = boundary[0]
    half = k - 2
    chords = np.empty((n, 4))
    degenerate = np.empty(n, dtype=bool)
    for i in range(n):
        j = (i + half) % n
        chords[i, :2] = boundary[i]
        chords[i, 2:] = boundary[j]
        block = xs[[(i + t) % n for t in range(half)]]  # x_{i+1}..x_{i+k-2}
        rest = xs[[(i + half + t) % n for t in range(half)]]
        degenerate[i] = not block.any() or not rest.any()
    return ChordSystem(k, xs, sums, boundary, chords, degenerate)


def region_planes(cs: ChordSystem, i: int) -> Optional[np.ndarray]:
    """Open half-planes (rows a, b, c meaning a*x + b*y < c) cutting out R^i_x.

    None when the region is empty (x_i = 0).
    """
    n, k = cs.n, cs.k
    if not 1 <= i <= n:
        raise ValueError(f"region index {i} outside 1..{n}")
    if cs.x[i - 1] <= 0:
        return None
    if i <= k - 3:
        js = [i - 1, i % n]
    else:
        js = list(range(k - 2))
    mid = cs.arc_midpoint(i)
    rows = []
    for j in dict.fromkeys(j % (k - 2) for j in js):
        if cs.degenerate[j]:
            continue
        a, b, c = cs.line(j)
        if a * mid[0] + b * mid[1] - c > 0:
            a, b, c = -a, -b, -c
        rows.append((a, b, c))
    return np.array(rows, dtype=float).reshape(-1, 3)


class FloatFamily:
    """Float copy of a family packed for the kernels."""

    def __init__(self, f: Family):
        verts, offsets = [], [0]
        for body in f.members:
            verts.extend((float(v.x), float(v.y)) for v in body.vertices)
            offsets.append(len(verts))
        self.verts = np.array(verts, dtype=float).reshape(-1, 2)
        self.offsets = np.array(offsets, dtype=np.int64)
        self.size = len(f)

    @classmethod
    def of(cls, body: ConvexBody) -> "FloatFamily":
        return cls(Family((body,)))


def region_contains(x, k: int, i: int, body) -> bool:
    """Whether ``body`` (a ConvexBody or FloatFamily of one member) lies in R^i_x."""
    cs = x if isinstance(x, ChordSystem) else chord_system(x, k)
    planes = region_planes(cs, i)
    if planes is None:
        return False
    ff = body if isinstance(body, FloatFamily) else FloatFamily.of(body)
    return bool(kernels.region_members(ff.verts, ff.offsets, planes).all())


def region_members(cs: ChordSystem, ff: FloatFamily, i: int) -> np.ndarray:
    """Indices of members inside R^i_x."""
    planes = region_planes(cs, i)
    if planes is None:
        return np.empty(0, dtype=np.int64)
    return np.flatnonzero(kernels.region_members(ff.verts, ff.offsets, planes))


def chord_distances(cs: ChordSystem, ff: FloatFamily) -> np.ndarray:
    """Distance from every member to each of the k-2 piercing chords."""
    return kernels.segment_distances(ff.verts, ff.offsets, cs.piercing_chords())


def cover_label(x, k: int, f, tolerance: float = DEFAULT_TOLERANCE) -> int:
    """PIERCED (0) if chords l_0..l_{k-3} come within ``tolerance`` of every member,
    else the smallest i with x_i > 0 whose region R^i_x contains a member.

    ``f`` must already lie in the open unit disk.
    """
    cs = x if isinstance(x, ChordSystem) else chord_system(x, k)
    ff = f if isinstance(f, FloatFamily) else FloatFamily(f)
    dist = chord_distances(cs, ff)
    if np.all(dist.min(axis=1) <= tolerance):
        return PIERCED
    for i in range(1, cs.n + 1):
        if len(region_members(cs, ff, i)):
            return i
    raise ArithmeticError("no region holds a member; float precision exhausted")


def _line_point(l1: np.ndarray, l2: np.ndarray) -> Optional[np.ndarray]:
    det = l1[0] * l2[1] - l1[1] * l2[0]
    if abs(det) < 1e-15:
        return None
    return np.array([(l1[2] * l2[1] - l1[1] * l2[2]) / det,
                     (l1[0] * l2[2] - l1[2] * l2[0]) / det])


def _arc_in_halfplane(s0: float, s1: float, plane: np.ndarray, tol: float) -> bool:
    """Arc of the unit circle from parameter s0 to s1 (ccw) inside a*x + b*y <= c."""
    a, b, c = plane
    for s in (s0, s1):
        p = _unit(s)
        if a * p[0] + b * p[1] - c > tol:
            return False
    # the arc bulges furthest toward direction (a, b)
    peak = (math.atan2(b, a) / (2 * math.pi)) % 1.0
    span = (s1 - s0) % 1.0 if s1 - s0 < 1 else 1.0
    if (peak - s0) % 1.0 <= span:
        return math.hypot(a, b) - c <= tol
    return True


def quadrant_planes(cs: ChordSystem) -> np.ndarray:
    """Closed half-planes (a*x + b*y <= c) of the quadrant Q_1 of l_{k-3} and l_{k-2}."""
    k = cs.k
    mid = _unit(0.5 * cs.sums[k - 3])
    rows = []
    for j in (k - 3, 0):
        a, b, c = cs.line(j)
        if a * mid[0] + b * mid[1] - c > 0:
            a, b, c = -a, -b, -c
        rows.append((a, b, c))
    return np.array(rows)


def quadrant_region_indices(x, k: int, tol: float = 1e-12) -> list[int]:
    """Every j in 1..k-3 whose region R^j_x lies inside the quadrant Q_1."""
    cs = x if isinstance(x, ChordSystem) else chord_system(x, k)
    if np.any(cs.x <= 0):
        raise ValueError("empty region")
    q = quadrant_planes(cs)
    out = []
    for j in range(1, k - 2):
        apex = _line_point(cs.line(j - 1), cs.line(j))
        if apex is None:
            continue
        if np.any(q[:, :2] @ apex - q[:, 2] > tol):
            continue
        if all(_arc_in_halfplane(cs.sums[j - 1], cs.sums[j], plane, tol) for plane in q):
            out.append(j)
    return out


def quadrant_region_index(x, k: int, tol: float = 1e-12) -> int:
    """Smallest j in 1..k-3 with R^j_x inside the quadrant Q_1."""
    found = quadrant_region_indices(x, k, tol)
    if not found:
        raise ArithmeticError("no region inside Q1; float precision exhausted")
    return found[0]


# ---------------------------------------------------------------------------
# search


@dataclass
class SearchResult:
    status: str  # "pierced" | "ck_witness" | "unresolved"
    solution: Optional[PiercingSolution] = None
    certificate: Optional[CkCertificate] = None
    x: Optional[np.ndarray] = None
    diagnostics: dict = field(default_factory=dict)


@dataclass
class SearchConfig:
    tolerance: float = DEFAULT_TOLERANCE
    resolutions: Sequence[int] = DEFAULT_RESOLUTIONS
    restarts: int = 80
    evals_per_start: int = 400
    grid: int = 4
    grid_starts: int = 6
    seed: int = 0
    snap_slack: float = 1e-3
    snap_nodes: int = 2000
    max_cells: int = 200
    refine_evals: int = 600
    refine_starts: int = 8
    witness_samples: int = 2000
    phases: Sequence[int] = (1, 2, 3)


class _Problem:
    def __init__(self, f: Family, k: int, cfg: SearchConfig):
        self.f = f
        self.k = k
        self.n = 2 * (k - 2)
        self.cfg = cfg
        self.scaled, self.transform = scale_to_unit_disk(f)
        self.ff = FloatFamily(self.scaled)
        self.best_g = math.inf
        self.best_x: Optional[np.ndarray] = None
        self.snap_tried: set = set()
        self.evals = 0
        self.cells = 0

    # phase 1 -------------------------------------------------------------
    def g(self, x: np.ndarray) -> float:
        self.evals += 1
        d = chord_distances(chord_system(x, self.k), self.ff)
        val = float(d.min(axis=1).max())
        if val < self.best_g:
            self.best_g, self.best_x = val, x.copy()
        return val

    def starts(self):
        """Barycenter, the best coarse lattice points, then seeded random points."""
        cfg = self.cfg
        yield np.full(self.n, 1.0 / self.n)
        grid = lattice_points(self.n, cfg.grid)
        scored = sorted((self.g(c / cfg.grid), t) for t, c in enumerate(grid))
        for _, t in scored[: cfg.grid_starts]:
            yield grid[t] / cfg.grid
        rng = np.random.default_rng(cfg.seed)
        while True:
            yield rng.dirichlet(np.ones(self.n))

    def local_search(self, x0: np.ndarray) -> tuple[float, np.ndarray]:
        def obj(z):
            a = np.abs(z)
            s = a.sum()
            return 10.0 if s == 0 else self.g(a / s)

        res = minimize(obj, x0, method="Nelder-Mead",
                       options={"maxfev": self.cfg.evals_per_start,
                                "xatol": 1e-10, "fatol": 1e-12})
        a = np.abs(res.x)
        return float(res.fun), a / a.sum()

    def numeric_search(self, snap: bool = True) -> Optional[tuple[PiercingSolution, np.ndarray]]:
        """Multi-start local search on g; snaps every promising local minimum."""
        for x0 in itertools.islice(self.starts(), self.cfg.restarts):
            g, x = self.local_search(x0)
            if snap and g <= max(self.cfg.tolerance, self.cfg.snap_slack):
                sol = self.snap(x)
                if sol is not None:
                    return sol, x
        return None

    # phase 2 -------------------------------------------------------------
    def snap(self, x: np.ndarray) -> Optional[PiercingSolution]:
        key = tuple(np.round(x, 12))
        if key in self.snap_tried:
            return None
        self.snap_tried.add(key)
        cs = chord_system(x, self.k)
        d = chord_distances(cs, self.ff)
        near = d.min(axis=1)
        slack = max(self.cfg.snap_slack, 2 * float(near.max()))
        options = [[j for j in np.argsort(d[m], kind="stable") if d[m, j] <= near[m] + slack]
                   for m in range(len(self.f))]
        order = sorted(range(len(self.f)), key=lambda m: (len(options[m]), m))
        groups: list[list[int]] = [[] for _ in range(self.k - 2)]
        lines = [None] * (self.k - 2)
        nodes = [0]

        def assign(t: int) -> bool:
            if t == len(order):
                return True
            nodes[0] += 1
            if nodes[0] > self.cfg.snap_nodes:
                return False
            m = order[t]
            for j in options[m]:
                groups[j].append(m)
                prev = lines[j]
                line = has_line_transversal(self.f, groups[j])
                if line is not None:
                    lines[j] = line
                    if assign(t + 1):
                        return True
                lines[j] = prev
                groups[j].pop()
            return False

        if not assign(0):
            return None
        chosen = sorted(set(line for line in lines if line is not None))
        sol = solution_for(self.f, chosen)
        assert sol is not None and sol.verify(self.f)
        return sol

    # phase 3 -------------------------------------------------------------
    def sperner_label(self, x: np.ndarray) -> tuple[int, Optional[PiercingSolution]]:
        cs = chord_system(x, self.k)
        d = chord_distances(cs, self.ff)
        g = float(d.min(axis=1).max())
        if g < self.best_g:
            self.best_g, self.best_x = g, x.copy()
        for i in range(1, self.n + 1):
            if len(region_members(cs, self.ff, i)):
                if g <= self.cfg.tolerance:
                    sol = self.snap(x)
                    if sol is not None:
                        return PIERCED, sol
                return i, None
        sol = self.snap(x)
        if sol is not None:
            return PIERCED, sol
        # every member touches a chord but snapping failed: any admissible label keeps
        # the labelling proper
        return int(np.flatnonzero(x > 0)[0]) + 1, None

    def extract(self, x: np.ndarray) -> Optional[CkCertificate]:
        if np.any(x <= 0):
            return None
        cs = chord_system(x, self.k)
        tail = [list(region_members(cs, self.ff, i)) for i in range(self.k - 2, self.n + 1)]
        if any(not c for c in tail):
            return None
        for j in quadrant_region_indices(cs, self.k):
            head = list(region_members(cs, self.ff, j))
            for combo in itertools.islice(itertools.product(head, *tail), 256):
                if len(set(combo)) != len(combo):
                    continue
                cert = verify_ck(self.f, [int(m) for m in combo])
                if cert is not None:
                    return cert
        return None

    def sperner(self, m: int):
        pts = lattice_points(self.n, m)
        labels = np.empty(len(pts), dtype=np.int64)
        for t, c in enumerate(pts):
            lab, sol = self.sperner_label(c / m)
            if sol is not None:
                return sol, None
            labels[t] = lab
        cells = fully_labeled_cells(pts, labels, m)
        self.cells += len(cells)
        for cell in cells[: self.cfg.max_cells]:
            verts = pts[list(cell)] / m
            for x in [verts.mean(axis=0)] + list(verts):
                cert = self.extract(x)
                if cert is not None:
                    return None, (cert, x)
        # A pierceable family can still hold a C(k); then the cells need not sit
        # where every extraction region is filled, so refine from the most
        # promising cell barycenters and interior lattice points.
        seeds = [pts[list(cell)].mean(axis=0) / m for cell in cells[: self.cfg.max_cells]]
        seeds += [c / m for c in pts if np.all(c > 0)]
        rng = np.random.default_rng([self.cfg.seed, m])
        seeds += list(rng.dirichlet(np.ones(self.n), size=self.cfg.witness_samples))
        scored = sorted(((self.slot_deficit(x), t) for t, x in enumerate(seeds)),
                        key=lambda st: st[0])
        for d, t in scored[: self.cfg.refine_starts]:
            if not math.isfinite(d):
                break
            x = seeds[t] if d == 0 else self.refine_witness(seeds[t])
            if x is not None:
                cert = self.extract(x)
                if cert is not None:
                    return None, (cert, x)
        return None, None

    def slot_deficit(self, x: np.ndarray, margin: float = 1e-9) -> float:
        """How far the extraction regions are from each holding a member (0 = all do)."""
        if np.any(x <= 0):
            return math.inf
        cs = chord_system(x, self.k)
        ff = self.ff
        starts = ff.offsets[:-1]
        norm = (ff.verts ** 2).sum(axis=1) - 1.0

        def violation(i: int) -> float:
            planes = region_planes(cs, i)
            if planes is None:
                return math.inf
            v = norm
            if len(planes):
                vals = ff.verts @ planes[:, :2].T - planes[:, 2]
                v = np.maximum(v, vals.max(axis=1))
            per_member = np.maximum.reduceat(v, starts)
            return max(0.0, float(per_member.min()) + margin)

        q = quadrant_planes(cs)
        first = math.inf
        for j in range(1, self.k - 2):
            apex = _line_point(cs.line(j - 1), cs.line(j))
            if apex is None or np.any(q[:, :2] @ apex - q[:, 2] > 1e-12):
                continue
            first = min(first, violation(j))
        return first + sum(violation(i) for i in range(self.k - 2, self.n + 1))

    def refine_witness(self, x0: np.ndarray) -> Optional[np.ndarray]:
        def obj(z):
            a = np.abs(z)
            s = a.sum()
            if s == 0:
                return 1e6
            d = self.slot_deficit(a / s)
            return 1e6 if not math.isfinite(d) else d

        res = minimize(obj, x0, method="Nelder-Mead",
                       options={"maxfev": self.cfg.refine_evals, "fatol": 0.0, "xatol": 1e-12})
        a = np.abs(res.x)
        return a / a.sum() if res.fun == 0 else None


def lattice_points(n: int, m: int) -> np.ndarray:
    """All nonnegative integer vectors of length n summing to m (lexicographic)."""
    out = []
    for bars in itertools.combinations(range(m + n - 1), n - 1):
        prev, row = -1, []
        for b in bars:
            row.append(b - prev - 1)
            prev = b
        row.append(m + n - 2 - prev)
        out.append(row)
    return np.array(out, dtype=np.int64)


def fully_labeled_cells(points: np.ndarray, labels: np.ndarray, m: int) -> list[tuple[int, ...]]:
    """Cells of the Kuhn triangulation whose n vertices carry all labels 1..n.

    Cells are written in partial-sum coordinates c_j = v_1 + ... + v_j
    (j < n): vertex y_0 is a lattice point and y_t = y_{t-1} + e_{pi(t)}
    for a permutation pi of the n-1 axes.
    """
    n = points.shape[1]
    cum = np.cumsum(points[:, :-1], axis=1)
    base = m + 1
    weights = base ** np.arange(n - 1, dtype=np.int64)
    keys = cum @ weights
    sorter = np.argsort(keys)
    sorted_keys = keys[sorter]
    found = []
    for perm in itertools.permutations(range(n - 1)):
        y = cum.copy()
        idx = [np.arange(len(points))]
        valid = np.ones(len(points), dtype=bool)
        for axis in perm:
            y = y.copy()
            y[:, axis] += 1
            ok = (y <= m).all(axis=1) & (np.diff(y, axis=1) >= 0).all(axis=1)
            valid &= ok
            k = y @ weights
            pos = np.searchsorted(sorted_keys, k)
            pos = np.clip(pos, 0, len(sorted_keys) - 1)
            valid &= sorted_keys[pos] == k
            idx.append(sorter[pos])
        cell_labels = np.stack([labels[i] for i in idx], axis=1)
        srt = np.sort(cell_labels, axis=1)
        full = valid & (srt == np.arange(1, n + 1)).all(axis=1)
        for r in np.flatnonzero(full):
            found.append(tuple(int(i[r]) for i in idx))
    found.sort()
    return found


def find_piercing_lines(f: Family, k: int, tolerance: float = DEFAULT_TOLERANCE,
                        config: Optional[SearchConfig] = None) -> SearchResult:
    """Pierce ``f`` with at most k-2 exact lines, or exhibit a C(k), or give up."""
    if k < 5:
        raise ValueError("k must be at least 5")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if not len(f):
        raise ValueError("family is empty")
    cfg = config or SearchConfig()
    cfg = SearchConfig(**{**cfg.__dict__, "tolerance": tolerance})
    prob = _Problem(f, k, cfg)

    def pierced(sol, x, phase):
        return SearchResult("pierced", solution=sol, x=x,
                            diagnostics={"best_g": prob.best_g, "phase": phase,
                                         "evaluations": prob.evals})

    if 1 in cfg.phases:
        found = prob.numeric_search(snap=2 in cfg.phases)
        if found is not None:
            return pierced(found[0], found[1], 2)
    resolution = None
    if 3 in cfg.phases:
        for m in cfg.resolutions:
            resolution = m
            sol, witness = prob.sperner(m)
            if sol is not None:
                return pierced(sol, prob.best_x, 3)
            if witness is not None:
                cert, x = witness
                return SearchResult("ck_witness", certificate=cert, x=x,
                                    diagnostics={"best_g": prob.best_g, "resolution": m,
                                                 "phase": 3})
    return SearchResult("unresolved", x=prob.best_x,
                        diagnostics={"best_g": prob.best_g, "resolution": resolution,
                                     "evaluations": prob.evals})


def exact_line(cs: ChordSystem, j: int) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients of chord j's supporting line as exact rationals of its float values."""
    a, b, c = cs.line(j)
    return Fraction(a), Fraction(b), Fraction(c)


def _strict_side(body: ConvexBody, line, sign: int) -> bool:
    a, b, c = line
    return all(sign * (a * v.x + b * v.y - c) > 0 for v in body.vertices)


def extraction_separations(f: Family, cert: CkCertificate, x) -> dict[str, bool]:
    """Check the three separation clauses behind an extracted C(k), exactly.

    ``x`` is the simplex point the certificate was read off; the clauses are
    checked on the disk-scaled family against the float chords of ``x``
    converted to exact rationals.
    """
    k = cert.k
    scaled, _ = scale_to_unit_disk(f)
    F = [scaled.members[i] for i in cert.order]
    cs = chord_system(x, k)
    out = {}

    def separated(line_index: int, near: list[int], far: list[int]) -> bool:
        line = exact_line(cs, line_index)
        for sign in (1, -1):
            if all(_strict_side(F[t], line, sign) for t in near) and \
                    all(_strict_side(F[t], line, -sign) for t in far):
                return True
        return False

    def hulls_disjoint(p: int, qs: list[int]) -> bool:
        h = hull_union(F[p], F[(p + 1) % k])
        return all(bodies_disjoint(h, hull_union(F[q], F[(q + 1) % k])) for q in qs)

    # 0-based positions: F_1 is position 0
    out["first_pair_by_l0"] = separated(0, [0, 1], list(range(2, k))) and \
        hulls_disjoint(0, list(range(2, k - 1)))
    ok = True
    for j in range(2, k):  # 1-based position j -> index j-1
        far = list(range(j + 1, k))
        if far and not separated(k - 3 + j, [j - 1, j], far):
            ok = False
        if not hulls_disjoint(j - 1, list(range(j + 1, k - 1))):
            ok = False
    out["middle_pairs"] = ok
    out["closing_pair_by_lk3"] = separated(k - 3, [k - 1, 0], list(range(1, k - 1))) and \
        hulls_disjoint(k - 1, list(range(1, k - 2)))
    return out
