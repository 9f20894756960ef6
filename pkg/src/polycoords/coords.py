"""Coordinate systems on a convex polygon.

A coordinate system maps each point ``a`` of the polygon to a vector of ``n``
weights, one per vertex, summing to 1 and reproducing ``a`` as the weighted
combination of the vertices.  Three kinds are provided: chordal systems from
a single triangulation, cartographic systems averaging chordal systems over
a dihedral orbit, and finite convex mixtures of any systems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence, Union

from .algebra import ONE, ZERO, RationalLike, as_rational, format_rational, weight
from .decomposition import ChordalDecomposition, orbit
from .errors import InvalidWeightError, PolyCoordsError
from .geometry import Point2, Polygon, in_triangle, raw_triangle_coords, triangle_coords
from .locator import Locator


class CoordinateSystem:
    """Base class; subclasses implement :meth:`_evaluate` for inside points."""

    kind = "abstract"
    polygon: Polygon

    def evaluate(self, a: Sequence[Fraction]) -> tuple[Fraction, ...]:
        self.polygon.require_inside(a)
        return self._evaluate(a)

    __call__ = evaluate

    def _evaluate(self, a: Sequence[Fraction]) -> tuple[Fraction, ...]:
        raise NotImplementedError

    def descriptor(self) -> dict[str, Any]:
        raise NotImplementedError


class ChordalSystem(CoordinateSystem):
    """Areal coordinates inside whichever region contains the point."""

    kind = "chordal"

    def __init__(self, poly: Polygon, d: ChordalDecomposition):
        self.polygon = poly
        self.decomposition = d
        self.locator = Locator(poly, d)

    @property
    def regions(self):
        return self.locator.regions

    def _evaluate(self, a: Sequence[Fraction]) -> tuple[Fraction, ...]:
        found = self.locator.locate(a)
        vec = None
        for idx in found:
            tri = self.regions[idx]
            w = [ZERO] * self.polygon.n
            for label, c in zip(tri, triangle_coords(a, tri, self.polygon)):
                w[label - 1] = c
            if vec is None:
                vec = tuple(w)
            elif vec != tuple(w):
                raise AssertionError(f"regions containing {a} disagree: {vec} vs {w}")
        return vec  # type: ignore[return-value]

    def descriptor(self) -> dict[str, Any]:
        return {"kind": "chordal", "chords": self.decomposition.pairs()}


class CartographicSystem(CoordinateSystem):
    """Average of the chordal systems over the dihedral orbit of a decomposition."""

    kind = "cartographic"

    def __init__(self, poly: Polygon, representative: ChordalDecomposition):
        self.polygon = poly
        self.representative = representative
        self.orbit = orbit(representative)
        group_order = 2 * representative.n
        self.members = [
            (ChordalSystem(poly, img), Fraction(mult, group_order))
            for img, mult in self.orbit.items()
        ]

    def _evaluate(self, a: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return _combine((w, sys._evaluate(a)) for sys, w in self.members)

    def descriptor(self) -> dict[str, Any]:
        return {"kind": "cartographic", "representative": self.representative.pairs()}


class MixtureSystem(CoordinateSystem):
    """Convex combination of coordinate systems on one polygon.

    Nested mixtures are flattened for evaluation; :attr:`parts` keeps the
    structure as given.
    """

    kind = "mixture"

    def __init__(self, parts: Iterable[tuple[CoordinateSystem, RationalLike]]):
        self.parts = [(sys, weight(w)) for sys, w in parts]
        if not self.parts:
            raise PolyCoordsError("a mixture needs at least one part")
        total = sum((w for _, w in self.parts), ZERO)
        if total != ONE:
            raise InvalidWeightError(f"mixture weights sum to {total}, not 1")
        self.polygon = self.parts[0][0].polygon
        for sys, _ in self.parts:
            if sys.polygon != self.polygon:
                raise PolyCoordsError("mixture parts live on different polygons")
        self.flat = _flatten(self.parts)

    def _evaluate(self, a: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return _combine((w, sys._evaluate(a)) for sys, w in self.flat)

    def descriptor(self) -> dict[str, Any]:
        return {
            "kind": "mixture",
            "parts": [
                {"weight": format_rational(w), "system": sys.descriptor()} for sys, w in self.parts
            ],
        }


def _flatten(parts: list[tuple[CoordinateSystem, Fraction]]) -> list[tuple[CoordinateSystem, Fraction]]:
    out = []
    for sys, w in parts:
        if isinstance(sys, MixtureSystem):
            out.extend((inner, w * v) for inner, v in sys.flat)
        elif w != ZERO:
            out.append((sys, w))
    return out


def _combine(terms: Iterable[tuple[Fraction, Sequence[Fraction]]]) -> tuple[Fraction, ...]:
    acc: list[Fraction] | None = None
    for w, vec in terms:
        if acc is None:
            acc = [ZERO] * len(vec)
        for i, x in enumerate(vec):
            acc[i] += w * x
    assert acc is not None
    return tuple(acc)


def chordal_eval(a: Sequence[Fraction], sys: ChordalSystem) -> tuple[Fraction, ...]:
    return sys.evaluate(a)


def chordal_eval_recursive(a: Sequence[Fraction], v: int, sys: ChordalSystem) -> Fraction:
    """Weight of vertex ``v`` at ``a`` by the literal indicator recursion.

    Over the regions containing ``v`` (in tree order) accumulate
    ``1_tau(a) <a|v>_tau - 1_{tau & union(S)}(a) <a|v>_tau`` where ``S`` holds
    the regions already visited.  Membership is closed-set membership.
    Independent of :class:`Locator`; used as a reference for the fast path.
    """
    poly = sys.polygon
    poly.require_inside(a)
    poly.vertex(v)
    acc = ZERO
    seen: list[Sequence[int]] = []
    for tri in sys.locator.tree.regions():
        if v not in tri:
            continue
        coord = raw_triangle_coords(a, tri, poly)[tuple(tri).index(v)]
        in_tau = in_triangle(a, tri, poly)
        in_union = any(in_triangle(a, s, poly) for s in seen)
        acc += (ONE if in_tau else ZERO) * coord
        acc -= (ONE if in_tau and in_union else ZERO) * coord
        seen.append(tri)
    return acc


def mix_systems(parts: Iterable[tuple[CoordinateSystem, RationalLike]]) -> MixtureSystem:
    return MixtureSystem(parts)


def cartographic_eval(a: Sequence[Fraction], sys: CartographicSystem) -> tuple[Fraction, ...]:
    return sys.evaluate(a)


@dataclass
class Violation:
    point: Point2
    kind: str
    detail: str


@dataclass
class VerificationReport:
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_vector(poly: Polygon, a: Sequence[Fraction], vec: Sequence[Fraction]) -> list[Violation]:
    """Violations of length, range, partition of unity and linear precision."""
    a = Point2(*a)
    out = []
    if len(vec) != poly.n:
        return [Violation(a, "length", f"{len(vec)} weights for {poly.n} vertices")]
    for label, w in enumerate(vec, start=1):
        if not ZERO <= w <= ONE:
            out.append(Violation(a, "range", f"weight of vertex {label} is {w}"))
    total = sum(vec, ZERO)
    if total != ONE:
        out.append(Violation(a, "partition_of_unity", f"weights sum to {total}"))
    x = sum((w * p.x for w, p in zip(vec, poly.vertices)), ZERO)
    y = sum((w * p.y for w, p in zip(vec, poly.vertices)), ZERO)
    if (x, y) != (a.x, a.y):
        out.append(Violation(a, "linear_precision", f"weights reproduce ({x}, {y})"))
    return out


def verify_system(sys: CoordinateSystem, samples: Iterable[Sequence[Fraction]]) -> VerificationReport:
    report = VerificationReport()
    for a in samples:
        report.checked += 1
        report.violations.extend(check_vector(sys.polygon, a, sys.evaluate(a)))
    return report


Values = Union[Mapping[int, Sequence[RationalLike]], Sequence[Sequence[RationalLike]]]


def interpolate(a: Sequence[Fraction], sys: CoordinateSystem, values: Values) -> tuple[Fraction, ...]:
    """``sum_v <a|v> f(v)`` for vector data ``f`` given at every vertex."""
    n = sys.polygon.n
    if isinstance(values, Mapping):
        missing = [v for v in range(1, n + 1) if v not in values]
        if missing:
            raise PolyCoordsError(f"no value for vertices {missing}")
        rows = [values[v] for v in range(1, n + 1)]
    else:
        rows = list(values)
        if len(rows) != n:
            raise PolyCoordsError(f"{len(rows)} values for {n} vertices")
    data = [tuple(as_rational(c) for c in row) for row in rows]
    dims = {len(row) for row in data}
    if len(dims) != 1:
        raise PolyCoordsError(f"vertex values have mixed dimensions {sorted(dims)}")
    vec = sys.evaluate(a)
    return _combine(zip(vec, data))
