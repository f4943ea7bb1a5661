"""The eight acceptance criteria, one test each, at their stated tolerances.

Each test prints a single PASS/FAIL line.  Run on its own with
``pytest tests/test_acceptance.py -v`` or as a script.
"""
import math
import random
import sys
import time

import numpy as np
import pytest

from ckpierce.ck import find_ck, find_ck_bruteforce, verify_ck
from ckpierce.construction import build_construction, pentagon_ck
from ckpierce.family import scale_to_unit_disk
from ckpierce.geometry import bodies_disjoint, intersect_bodies, line_meets_body
from ckpierce.kkm import (
    DEFAULT_TOLERANCE, PIERCED, FloatFamily, SearchConfig, cover_label,
    extraction_separations, find_piercing_lines,
)
from ckpierce.piercing import has_line_transversal, max_line_hits, min_piercing_lines

sys.path.insert(0, __file__.rsplit("/", 1)[0])
from families import random_body, random_ck, random_family, random_segments  # noqa: E402
from test_piercing import sampled_transversal  # noqa: E402

pytestmark = pytest.mark.slow

GRID8 = SearchConfig(resolutions=(4, 8))


@pytest.fixture
def report(capsys):
    def emit(n: int, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


def test_criterion_1_construction_freeness(report):
    detail, ok = [], True
    for k in (5, 6):
        f = build_construction(k)
        t = time.perf_counter()
        free = find_ck(f, k) is None and find_ck(f, k + 1) is None
        dt = time.perf_counter() - t
        limit = 10 if k == 5 else 300
        ok &= free and dt < limit
        detail.append(f"k={k} C({k})/C({k + 1})-free={free} in {dt:.2f}s (limit {limit}s)")
    report(1, ok, "; ".join(detail))


def test_criterion_2_max_hits(report):
    detail, ok = [], True
    for k in (5, 6, 7):
        f = build_construction(k)
        hits, _ = max_line_hits(f)
        first = f.labels.index("F1:[p1r,p3l]")
        through, _ = max_line_hits(f, through=first)
        ok &= hits <= 6 and through <= 5
        detail.append(f"k={k} max={hits} through [p1r,p3l]={through}")
    report(2, ok, "; ".join(detail))


def test_criterion_3_lower_bound(report):
    f = build_construction(5)
    t = time.perf_counter()
    two = min_piercing_lines(f, 2)
    three = min_piercing_lines(f, 3)
    dt = time.perf_counter() - t
    ok = two is None and three is not None and len(three.lines) == 3 and three.verify(f)
    ok &= dt < 60
    report(3, ok, f"budget 2 -> {'none' if two is None else 'found'}; "
                  f"budget 3 -> {len(three.lines) if three else 'none'} verified lines; {dt:.2f}s")


def test_criterion_4_ck_no_transversal(report):
    rng = random.Random(404)
    counts = {3: 0, 4: 0, 5: 0}
    failures = 0
    while sum(counts.values()) < 100:
        k = rng.choice((3, 4, 5))
        drawn = random_ck(rng, k, extra=rng.randint(0, 2))
        if drawn is None:
            continue
        f, cert = drawn
        assert verify_ck(f, cert.order)
        if has_line_transversal(f, cert.order) is not None:
            failures += 1
        counts[k] += 1
    report(4, failures == 0, f"{sum(counts.values())} verified certificates {counts}, "
                             f"{failures} with a transversal")


def test_criterion_5_cover_totality(report):
    rng = np.random.default_rng(505)
    n = 6
    xs = rng.dirichlet(np.ones(n), size=10_000)
    with_zeros = rng.random(10_000) < 0.3
    for t in np.flatnonzero(with_zeros):
        zeros = rng.choice(n, size=rng.integers(1, n), replace=False)
        xs[t, zeros] = 0.0
        xs[t] /= xs[t].sum()
    prng = random.Random(505)
    families = [FloatFamily(scale_to_unit_disk(random_family(prng, prng.randint(1, 10)))[0])
                for _ in range(20)]
    bad, pierced, labelled = 0, 0, 0
    for ff in families:
        for x in xs:
            lab = cover_label(x, 5, ff, DEFAULT_TOLERANCE)
            if lab == PIERCED:
                pierced += 1
            elif x[lab - 1] > 0:
                labelled += 1
            else:
                bad += 1
    report(5, bad == 0, f"{len(xs)} points ({with_zeros.sum()} with zero coordinates) x 20 "
                        f"families: {pierced} pierced, {labelled} labelled, {bad} bad labels")


def _c5_free_families(count: int, seed: int):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        f = random_segments(rng, rng.randint(5, 10))
        if find_ck(f, 5) is None:
            out.append(f)
    return out


def test_criterion_6_upper_bound(report):
    stats = {"pierced": 0, "ck_witness": 0, "unresolved": 0}
    worst, bad = 0.0, 0
    for f in _c5_free_families(50, 606):
        t = time.perf_counter()
        res = find_piercing_lines(f, 5, config=GRID8)
        worst = max(worst, time.perf_counter() - t)
        stats[res.status] += 1
        if res.status != "pierced" or len(res.solution.lines) > 3 or not res.solution.verify(f):
            bad += 1
    pent = pentagon_ck(5)
    res = find_piercing_lines(pent, 5, config=SearchConfig(phases=(3,), resolutions=(4, 8)))
    pent_ok = res.status == "ck_witness" and verify_ck(pent, res.certificate.order) is not None
    ok = bad == 0 and worst <= 120 and pent_ok
    report(6, ok, f"50 C(5)-free families {stats}, worst {worst:.2f}s; "
                  f"pentagon phase 3 -> {res.status}"
                  f"{' ' + str(res.certificate.order) if res.certificate else ''}")


def test_criterion_7_extraction_separations(report):
    rng = random.Random(707)
    families = [pentagon_ck(5)]
    while len(families) < 8:
        drawn = random_ck(rng, 5, extra=rng.randint(0, 2))
        if drawn:
            families.append(drawn[0])
    emitted, failed = 0, 0
    for f in families:
        res = find_piercing_lines(f, 5, config=SearchConfig(phases=(3,), resolutions=(4, 8)))
        if res.status != "ck_witness":
            continue
        emitted += 1
        seps = extraction_separations(f, res.certificate, res.x)
        if not all(seps.values()):
            failed += 1
    report(7, emitted > 0 and failed == 0,
           f"{emitted} of {len(families)} phase-3 runs emitted certificates, "
           f"{failed} with a failed separation clause")


def test_criterion_8_oracles(report):
    rng = random.Random(808)
    mismatch = 0
    for _ in range(10_000):
        a, b = random_body(rng, span=5, size=3), random_body(rng, span=5, size=3)
        if bodies_disjoint(a, b) != (intersect_bodies(a, b) is None):
            mismatch += 1

    ck_diff, found = 0, 0
    for _ in range(200):
        f = random_family(rng, rng.randint(3, 7), span=6, size=3)
        k = rng.randint(3, min(5, len(f)))
        fast, slow = find_ck(f, k), find_ck_bruteforce(f, k)
        found += fast is not None
        if (fast.order if fast else None) != (slow.order if slow else None):
            ck_diff += 1

    unsound, checked = 0, 0
    for _ in range(300):
        f = random_family(rng, rng.randint(2, 7), span=6, size=3)
        subset = sorted(rng.sample(range(len(f)), rng.randint(2, len(f))))
        line = has_line_transversal(f, subset)
        bodies = [f[i] for i in subset]
        if line is None:
            checked += 1
            unsound += sampled_transversal(bodies)
        else:
            unsound += not all(line_meets_body(line, b) for b in bodies)
    ok = mismatch == 0 and ck_diff == 0 and unsound == 0
    report(8, ok, f"disjointness 10000 pairs, {mismatch} mismatches; find_ck 200 families "
                  f"({found} with a C(k)), {ck_diff} differences; transversal 300 subfamilies "
                  f"({checked} without), {unsound} unsound")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
