"""Fixtures data and independent oracles shared by the test modules."""

from __future__ import annotations

import math
import random
from fractions import Fraction as F
from itertools import combinations

from polycoords.geometry import Point2, Polygon, point, validate_polygon

HEXAGON = validate_polygon([(2, 1), (2, 2), (1, 2), (0, 1), (0, 0), (1, 0)])
HEX_A = point(F(7, 4), F(3, 2))
HEX_B = point(F(3, 2), F(3, 2))
HEX_C = point(1, 1)

QUAD = validate_polygon([(0, 0), (1, 0), (0, 1), (-1, F(1, 2))])
QUAD_A = point(0, F(3, 8))


def orient(a, b, c) -> F:
    """Twice the signed area, written out independently of the package."""
    return (F(b[0]) - a[0]) * (F(c[1]) - a[1]) - (F(b[1]) - a[1]) * (F(c[0]) - a[0])


def segments_cross(p1, p2, q1, q2) -> bool:
    """Proper intersection of two closed segments in general position."""
    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    return d1 * d2 < 0 and d3 * d4 < 0


def circle_points(n: int) -> list[Point2]:
    """Rational points on the unit circle, counterclockwise, roughly evenly spaced."""
    ts = []
    for k in range(n):
        theta = -math.pi + (k + 0.5) * 2 * math.pi / n
        ts.append(F(math.tan(theta / 2)).limit_denominator(97))
    ts = sorted(set(ts))
    assert len(ts) == n
    return [point((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)) for t in ts]


def random_convex_polygon(rng: random.Random, n: int) -> Polygon:
    """Rational points on a circle pushed through a random orientation-preserving affine map."""
    ts: set[F] = set()
    while len(ts) < n:
        ts.add(F(rng.randint(-30, 30), rng.randint(1, 6)))
    pts = [((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)) for t in sorted(ts)]
    while True:
        a, b, c, d = (F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4))
        if a * d - b * c > 0:
            break
    ox, oy = F(rng.randint(-20, 20), 3), F(rng.randint(-20, 20), 7)
    return validate_polygon([(a * x + b * y + ox, c * x + d * y + oy) for x, y in pts])


def random_weights(rng: random.Random, k: int, max_den: int = 12) -> list[F]:
    raw = [F(rng.randint(0, max_den)) for _ in range(k)]
    if sum(raw) == 0:
        raw[rng.randrange(k)] = F(1)
    total = sum(raw)
    return [r / total for r in raw]


def combo(points, weights) -> Point2:
    return point(sum(w * p[0] for p, w in zip(points, weights)), sum(w * p[1] for p, w in zip(points, weights)))


def random_point_in(rng: random.Random, poly: Polygon) -> Point2:
    return combo(poly.vertices, random_weights(rng, poly.n))


def random_point_on(rng: random.Random, p, q) -> Point2:
    """A point strictly inside segment ``pq``."""
    t = F(rng.randint(1, 30), 31)
    return point((1 - t) * p[0] + t * q[0], (1 - t) * p[1] + t * q[1])


def brute_force_decompositions(n: int) -> list[tuple[tuple[int, int], ...]]:
    """Every (n-3)-subset of chords with no geometrically crossing pair."""
    pts = circle_points(n)
    chords = [(a, b) for a in range(1, n + 1) for b in range(a + 2, n + 1) if (a, b) != (1, n)]
    crossing = {
        (c1, c2)
        for c1, c2 in combinations(chords, 2)
        if segments_cross(pts[c1[0] - 1], pts[c1[1] - 1], pts[c2[0] - 1], pts[c2[1] - 1])
    }
    return [
        subset
        for subset in combinations(chords, n - 3)
        if not any(pair in crossing for pair in combinations(subset, 2))
    ]


def catalan_by_recurrence(k: int) -> int:
    c = [1]
    for m in range(k):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[k]


def dihedral_permutations(n: int) -> set[tuple[int, ...]]:
    """Closure of the rotation and the reflection ``i -> -i`` as permutations of 1..n."""
    rho = tuple(i % n + 1 for i in range(1, n + 1))
    sigma = tuple((-i) % n or n for i in range(1, n + 1))
    group = {tuple(range(1, n + 1))}
    frontier = list(group)
    while frontier:
        g = frontier.pop()
        for gen in (rho, sigma):
            h = tuple(gen[g[i] - 1] for i in range(n))
            if h not in group:
                group.add(h)
                frontier.append(h)
    return group
