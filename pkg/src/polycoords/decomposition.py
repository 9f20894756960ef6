"""Chordal decompositions of a convex n-gon and the dihedral action on them.

Everything here is combinatorial: only vertex labels 1..n are involved.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InvalidDecompositionError, PolyCoordsError

DEFAULT_MAX_N = 14


class Chord(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return f"{self.a}{self.b}" if self.b < 10 else f"{self.a}-{self.b}"


def make_chord(a: int, b: int, n: int) -> Chord:
    """Build a chord of the n-cycle with endpoints stored in increasing order."""
    a, b = int(a), int(b)
    if a > b:
        a, b = b, a
    if not (1 <= a and b <= n):
        raise InvalidDecompositionError(f"chord {a}{b} has endpoints outside 1..{n}")
    if b - a < 2 or (a, b) == (1, n):
        raise InvalidDecompositionError(
            f"{a}^{b} joins adjacent vertices of the {n}-cycle and is not a chord"
        )
    return Chord(a, b)


def chords_cross(c1: Sequence[int], c2: Sequence[int]) -> bool:
    """True iff the endpoint pairs strictly interleave around the cycle."""
    a1, b1 = sorted(c1)
    a2, b2 = sorted(c2)
    return a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1


@dataclass(frozen=True, order=True)
class ChordalDecomposition:
    """``n - 3`` pairwise non-crossing chords of the n-cycle.

    Chords are kept sorted, so equal decompositions compare and hash equal.
    """

    n: int
    chords: tuple[Chord, ...]

    def __post_init__(self) -> None:
        n = self.n
        if n < 3:
            raise InvalidDecompositionError(f"polygon size must be at least 3, got {n}")
        chords = tuple(sorted(make_chord(a, b, n) for a, b in self.chords))
        if len(set(chords)) != len(chords):
            raise InvalidDecompositionError("repeated chord")
        if len(chords) != n - 3:
            raise InvalidDecompositionError(
                f"n={n} needs exactly {n - 3} chords, got {len(chords)}"
            )
        for c1, c2 in combinations(chords, 2):
            if chords_cross(c1, c2):
                raise InvalidDecompositionError(f"chords {c1.a}^{c1.b} and {c2.a}^{c2.b} cross")
        object.__setattr__(self, "chords", chords)

    @classmethod
    def _trusted(cls, n: int, chords: tuple[Chord, ...]) -> "ChordalDecomposition":
        # Skips validation; only for chord tuples already known to be valid and sorted.
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "chords", chords)
        return self

    def __iter__(self) -> Iterator[Chord]:
        return iter(self.chords)

    def __contains__(self, pair: object) -> bool:
        if not isinstance(pair, tuple) or len(pair) != 2:
            return False
        return Chord(*sorted(pair)) in self.chords

    def __str__(self) -> str:
        return "{" + ",".join(str(c) for c in self.chords) + "}"

    def pairs(self) -> list[list[int]]:
        return [[c.a, c.b] for c in self.chords]


def validate_decomposition(n: int, chords: Iterable[Sequence[int]]) -> ChordalDecomposition:
    return ChordalDecomposition(n, tuple(tuple(c) for c in chords))  # type: ignore[arg-type]


def catalan(k: int) -> int:
    c = 1
    for i in range(k):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


@lru_cache(maxsize=None)
def _triangulations(seq: tuple[int, ...]) -> tuple[tuple[tuple[int, int], ...], ...]:
    # Apex choice over the base seq[0]^seq[1]; sub-polygons recurse.
    r = len(seq)
    if r < 3:
        return ((),)
    out = []
    for m in range(2, r):
        new = []
        if m != r - 1:
            new.append(tuple(sorted((seq[0], seq[m]))))
        if m != 2:
            new.append(tuple(sorted((seq[1], seq[m]))))
        left = (seq[0],) + seq[m:]
        right = seq[1 : m + 1]
        for lt in _triangulations(left):
            for rt in _triangulations(right):
                out.append(tuple(new) + lt + rt)
    return tuple(out)


def enumerate_decompositions(n: int, max_n: int = DEFAULT_MAX_N) -> list[ChordalDecomposition]:
    """Every chordal decomposition of the n-gon, lexicographically ordered."""
    if not 3 <= n <= max_n:
        raise PolyCoordsError(f"n must be within 3..{max_n}, got {n}")
    found = sorted(tuple(sorted(t)) for t in _triangulations(tuple(range(1, n + 1))))
    _triangulations.cache_clear()
    return [ChordalDecomposition._trusted(n, tuple(Chord(a, b) for a, b in t)) for t in found]


def cds(d: ChordalDecomposition) -> tuple[int, ...]:
    """Chordal degree sequence: nonzero vertex degrees of the chord graph, non-increasing."""
    deg: Counter[int] = Counter()
    for c in d.chords:
        deg[c.a] += 1
        deg[c.b] += 1
    return tuple(sorted(deg.values(), reverse=True))


def format_cds(seq: Sequence[int]) -> str:
    """Exponent notation in increasing degree, e.g. ``"1^3 3"`` or ``"2^3"``."""
    counts = Counter(seq)
    parts = []
    for degree in sorted(counts):
        k = counts[degree]
        parts.append(str(degree) if k == 1 else f"{degree}^{k}")
    return " ".join(parts)


_CDS_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_cds(text: str) -> tuple[int, ...]:
    """Inverse of :func:`format_cds`; token order is irrelevant."""
    out: list[int] = []
    for token in text.replace(",", " ").split():
        m = _CDS_TOKEN.match(token)
        if m is None:
            raise PolyCoordsError(f"bad degree sequence token {token!r} in {text!r}")
        degree, k = int(m.group(1)), int(m.group(2) or 1)
        if degree < 1 or k < 1:
            raise PolyCoordsError(f"bad degree sequence token {token!r} in {text!r}")
        out.extend([degree] * k)
    return tuple(sorted(out, reverse=True))


class DihedralElement(NamedTuple):
    """Rotation ``i -> i + k`` or reflection ``i -> k - i`` on labels mod n."""

    kind: str
    k: int
    n: int

    def __call__(self, i: int) -> int:
        n = self.n
        if self.kind == "rotation":
            j = (i + self.k) % n
        elif self.kind == "reflection":
            j = (self.k - i) % n
        else:
            raise PolyCoordsError(f"unknown dihedral element kind {self.kind!r}")
        return j or n

    def permutation(self) -> tuple[int, ...]:
        return tuple(self(i) for i in range(1, self.n + 1))


def rotation(n: int, k: int = 1) -> DihedralElement:
    return DihedralElement("rotation", k % n, n)


def reflection(n: int, k: int = 0) -> DihedralElement:
    return DihedralElement("reflection", k % n, n)


def identity(n: int) -> DihedralElement:
    return rotation(n, 0)


def dihedral_group(n: int) -> list[DihedralElement]:
    """All ``2n`` elements: rotations first, then reflections."""
    return [rotation(n, k) for k in range(n)] + [reflection(n, k) for k in range(n)]


def compose(g: DihedralElement, h: DihedralElement) -> DihedralElement:
    """The element acting as ``g`` first, then ``h``."""
    if g.n != h.n:
        raise PolyCoordsError("cannot compose elements of different dihedral groups")
    target = tuple(h(g(i)) for i in range(1, g.n + 1))
    for e in dihedral_group(g.n):
        if e.permutation() == target:
            return e
    raise AssertionError("dihedral group not closed under composition")


def dihedral_apply(d: ChordalDecomposition, g: DihedralElement) -> ChordalDecomposition:
    """Relabel every chord endpoint by ``g`` and renormalize."""
    if g.n != d.n:
        raise PolyCoordsError(f"element of D_{g.n} cannot act on a decomposition with n={d.n}")
    # Automorphisms of the cycle map non-crossing chords to non-crossing chords.
    return ChordalDecomposition._trusted(
        d.n, tuple(sorted(Chord(*sorted((g(c.a), g(c.b)))) for c in d.chords))
    )


def orbit(d: ChordalDecomposition) -> dict[ChordalDecomposition, int]:
    """Distinct images of ``d`` under ``D_n`` with multiplicities, sorted by image.

    Multiplicities sum to ``2n``.
    """
    counts = Counter(dihedral_apply(d, g) for g in dihedral_group(d.n))
    return {img: counts[img] for img in sorted(counts)}


def orbits(n: int, max_n: int = DEFAULT_MAX_N) -> list[dict[ChordalDecomposition, int]]:
    """Partition all decompositions of the n-gon into dihedral orbits."""
    seen: set[ChordalDecomposition] = set()
    out = []
    for d in enumerate_decompositions(n, max_n=max_n):
        if d in seen:
            continue
        orb = orbit(d)
        seen.update(orb)
        out.append(orb)
    return out
