"""Random fixtures shared by the test modules."""
import math
import random
from fractions import Fraction as Fr

from ckpierce.ck import verify_ck
from ckpierce.family import Family
from ckpierce.geometry import ConvexBody, RationalPoint, convex_hull


def random_body(rng: random.Random, span: int = 8, size: int = 4) -> ConvexBody:
    """Point, segment or polygon with small integer coordinates."""
    cx, cy = rng.randint(-span, span), rng.randint(-span, span)
    n = rng.choice([1, 2, 2, 3, 4, 5])
    return convex_hull([(cx + rng.randint(-size, size), cy + rng.randint(-size, size))
                        for _ in range(n)])


def random_family(rng: random.Random, n: int, **kw) -> Family:
    return Family(tuple(random_body(rng, **kw) for _ in range(n)))


def random_segments(rng: random.Random, n: int, length: int = 40) -> Family:
    bodies = []
    for _ in range(n):
        x, y = rng.randint(-100, 100), rng.randint(-100, 100)
        dx, dy = rng.randint(-length, length), rng.randint(-length, length)
        bodies.append(convex_hull([(Fr(x, 100), Fr(y, 100)),
                                   (Fr(x + dx, 100), Fr(y + dy, 100))]))
    return Family(tuple(bodies))


def _rational_unit(angle: float) -> RationalPoint:
    t = Fr(math.tan(angle / 2)).limit_denominator(1000)
    d = 1 + t * t
    return RationalPoint((1 - t * t) / d, 2 * t / d)


def random_ck(rng: random.Random, k: int, extra: int = 0):
    """A shuffled family containing a C(k) made of small bodies near a circle.

    Returns (family, certificate) for the embedded members, or None when the
    random draw failed verification.
    """
    gaps = [rng.uniform(0.5, 1.5) for _ in range(k)]
    total = sum(gaps)
    angles = [2 * math.pi * sum(gaps[:i]) / total for i in range(k)]
    r = Fr(1, 20 + rng.randint(0, 20))
    bodies = []
    for a in angles:
        c = _rational_unit(a)
        pts = [(c.x + r * Fr(rng.randint(-4, 4), 4), c.y + r * Fr(rng.randint(-4, 4), 4))
               for _ in range(rng.randint(1, 4))]
        bodies.append(convex_hull(pts))
    bodies += [random_body(rng, span=2, size=1) for _ in range(extra)]
    perm = list(range(len(bodies)))
    rng.shuffle(perm)
    inverse = {old: new for new, old in enumerate(perm)}
    f = Family(tuple(bodies[i] for i in perm))
    cert = verify_ck(f, [inverse[i] for i in range(k)])
    return (f, cert) if cert is not None else None
