"""Region identification by recursive coproduct steps, and point location.

A frame is a sub-polygon listed as ``(w1, w2, ..., wr)`` with base ``w1^w2``.
Each non-terminal frame selects the triangle ``w1^w2^d`` over its base and
splits into a left frame ``(w1, d, ..., wr)`` with base ``w1^d`` and a right
frame ``(d, w2, ..., w_{d-1})`` with base ``d^w2``.  Path words over ``{L, R}``
name the frames, the empty word being the whole polygon on base ``1^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .decomposition import Chord, ChordalDecomposition
from .errors import PolyCoordsError
from .geometry import OrientedSegment, OrientedTriangle, Polygon, side_of, signed_area

CASE_A = "a"
CASE_BL = "bL"
CASE_BR = "bR"
CASE_TRIANGLE = "t"


@dataclass(frozen=True)
class SubPolygonFrame:
    vertices: tuple[int, ...]
    chords: frozenset[Chord]
    path: str = ""

    def __post_init__(self) -> None:
        if len(self.vertices) < 2:
            raise PolyCoordsError("a frame needs at least two vertices")
        if len(self.vertices) < 4 and self.chords:
            raise PolyCoordsError("frames with fewer than 4 vertices carry no chords")

    @property
    def terminal(self) -> bool:
        return len(self.vertices) == 2

    @property
    def base(self) -> OrientedSegment:
        return OrientedSegment(self.vertices[0], self.vertices[1])

    def is_side(self, u: int, v: int) -> bool:
        """``u^v`` is an edge of this frame or one of its chords."""
        w = self.vertices
        i, j = w.index(u), w.index(v)
        if (i - j) % len(w) in (1, len(w) - 1):
            return True
        return Chord(*sorted((u, v))) in self.chords

    def restrict(self, vertices: tuple[int, ...], path: str) -> "SubPolygonFrame":
        """Child frame on ``vertices`` keeping the chords interior to it."""
        inside = set(vertices)
        r = len(vertices)
        edges = {tuple(sorted((vertices[i], vertices[(i + 1) % r]))) for i in range(r)}
        chords = frozenset(
            c for c in self.chords
            if c.a in inside and c.b in inside and (c.a, c.b) not in edges
        )
        return SubPolygonFrame(vertices, chords, path)


def select_apex(frame: SubPolygonFrame) -> tuple[int, str]:
    """The apex ``d`` of the triangle over the frame's base, with its case tag.

    Tags: ``a`` both new sides are chords, ``bL`` the left side is the frame
    edge ``wr^w1``, ``bR`` the right side is the frame edge ``w2^w3``, and
    ``t`` for a triangle frame where both are edges.
    """
    w = frame.vertices
    r = len(w)
    if r < 3:
        raise PolyCoordsError("terminal frames have no apex")
    if r == 3:
        return w[2], CASE_TRIANGLE
    found = [m for m in range(2, r) if frame.is_side(w[0], w[m]) and frame.is_side(w[1], w[m])]
    if len(found) != 1:
        raise AssertionError(
            f"frame {w} with chords {sorted(frame.chords)} has apex candidates {found}"
        )
    m = found[0]
    if m == r - 1:
        return w[m], CASE_BL
    if m == 2:
        return w[m], CASE_BR
    return w[m], CASE_A


@dataclass(frozen=True)
class TreeNode:
    path: str
    frame: tuple[int, ...]
    base: OrientedSegment
    apex: int
    case: str
    triangle: OrientedTriangle


@dataclass(frozen=True)
class TreeLeaf:
    path: str
    segment: OrientedSegment


@dataclass(frozen=True)
class ParsingTree:
    """Internal nodes in preorder (left before right) and boundary leaves.

    The first leaf is the initial base ``1^2``; the rest follow the traversal.
    """

    n: int
    decomposition: ChordalDecomposition
    nodes: tuple[TreeNode, ...]
    leaves: tuple[TreeLeaf, ...]

    def node(self, path: str) -> TreeNode:
        for nd in self.nodes:
            if nd.path == path:
                return nd
        raise KeyError(path)

    def regions(self) -> list[OrientedTriangle]:
        return [nd.triangle for nd in self.nodes]


def _canonical_triangle(a: int, b: int, c: int) -> OrientedTriangle:
    # Frame sequences follow the polygon's cyclic order, so the sorted
    # rotation keeps the counterclockwise orientation.
    return OrientedTriangle(*sorted((a, b, c)))


def build_tree(d: ChordalDecomposition) -> ParsingTree:
    """Run the recursive step from the root frame ``(1, ..., n)`` on base ``1^2``."""
    n = d.n
    root = SubPolygonFrame(tuple(range(1, n + 1)), frozenset(d.chords), "")
    nodes: list[TreeNode] = []
    leaves: list[TreeLeaf] = [TreeLeaf("", OrientedSegment(1, 2))]
    stack: list[SubPolygonFrame] = [root]
    while stack:
        frame = stack.pop()
        w = frame.vertices
        apex, case = select_apex(frame)
        m = w.index(apex)
        nodes.append(
            TreeNode(frame.path, w, frame.base, apex, case, _canonical_triangle(w[0], w[1], apex))
        )
        left = frame.restrict((w[0],) + w[m:], frame.path + "L")
        right = frame.restrict((apex,) + w[1:m], frame.path + "R")
        pending = []
        for child, output in ((left, OrientedSegment(apex, w[0])), (right, OrientedSegment(w[1], apex))):
            if child.terminal:
                leaves.append(TreeLeaf(child.path, output))
            else:
                pending.append(child)
        # Push right before left so the left subtree is visited first.
        stack.extend(reversed(pending))
    # No leaf path is a prefix of another, so string order is traversal order.
    leaves = [leaves[0]] + sorted(leaves[1:], key=lambda lf: lf.path)
    return ParsingTree(n, d, tuple(nodes), tuple(leaves))


def build_parsing_tree(poly: Polygon, d: ChordalDecomposition) -> ParsingTree:
    if poly.n != d.n:
        raise PolyCoordsError(f"decomposition has n={d.n} but the polygon has {poly.n} vertices")
    tree = build_tree(d)
    for nd in tree.nodes:
        if signed_area(*(poly.vertex(i) for i in nd.triangle)) <= 0:
            raise AssertionError(f"region {nd.triangle} is not counterclockwise")
    return tree


def regions(poly: Polygon, d: ChordalDecomposition) -> list[OrientedTriangle]:
    return build_parsing_tree(poly, d).regions()


@dataclass(frozen=True)
class SignCodeTable:
    """Per region, which closed side of each chord it lies on.

    Bit ``1`` means the chord's areal function is ``>= 0`` on the region,
    ``0`` means ``<= 0``; chords are oriented from smaller to larger label.
    """

    chords: tuple[Chord, ...]
    paths: tuple[str, ...]
    triangles: tuple[OrientedTriangle, ...]
    codes: tuple[str, ...]

    def matches(self, index: int, signs: Sequence[int]) -> bool:
        """A zero sign is compatible with both constraints."""
        for bit, s in zip(self.codes[index], signs):
            if (bit == "1" and s < 0) or (bit == "0" and s > 0):
                return False
        return True


def sign_codes(tree: ParsingTree) -> SignCodeTable:
    """Collate the per-node chord constraints into the triangle/chord table.

    At a node with apex ``d`` over base ``w1^w2``: the left subtree lies on
    the non-negative side of ``w1^d`` and everything else on the
    non-positive side; the right subtree lies on the non-positive side of
    ``w2^d`` and everything else on the non-negative side.  Regions outside
    the node's frame share the node triangle's side.
    """
    chords = tree.decomposition.chords
    col = {c: i for i, c in enumerate(chords)}
    index = {nd.path: i for i, nd in enumerate(tree.nodes)}
    bits = [["?"] * len(chords) for _ in tree.nodes]

    def fill(u: int, v: int, node_path: str, left_sign: str, rest_sign: str, sub: str) -> None:
        key = Chord(*sorted((u, v)))
        if key not in col:
            return
        flip = (u, v) != (key.a, key.b)
        for path, i in index.items():
            s = left_sign if path.startswith(node_path + sub) else rest_sign
            if flip:
                s = "1" if s == "0" else "0"
            bits[i][col[key]] = s

    for nd in tree.nodes:
        w1, w2 = nd.base
        fill(w1, nd.apex, nd.path, "1", "0", "L")
        fill(w2, nd.apex, nd.path, "0", "1", "R")

    codes = tuple("".join(row) for row in bits)
    if any("?" in c for c in codes):
        raise AssertionError("a chord never bounded a selected triangle")
    if len(set(codes)) != len(codes):
        raise AssertionError("sign codes are not distinct")
    return SignCodeTable(
        chords=tuple(chords),
        paths=tuple(nd.path for nd in tree.nodes),
        triangles=tuple(nd.triangle for nd in tree.nodes),
        codes=codes,
    )


def sign_code_table(poly: Polygon, d: ChordalDecomposition) -> SignCodeTable:
    return sign_codes(build_parsing_tree(poly, d))


def chord_signs(x: Sequence[Fraction], poly: Polygon, chords: Sequence[Chord]) -> tuple[int, ...]:
    return tuple(side_of(x, (c.a, c.b), poly) for c in chords)


class Locator:
    """Parsing tree and sign-code table for one polygon and decomposition."""

    def __init__(self, poly: Polygon, d: ChordalDecomposition):
        self.polygon = poly
        self.decomposition = d
        self.tree = build_parsing_tree(poly, d)
        self.table = sign_codes(self.tree)

    @property
    def regions(self) -> tuple[OrientedTriangle, ...]:
        return self.table.triangles

    def signs(self, x: Sequence[Fraction]) -> tuple[int, ...]:
        return chord_signs(x, self.polygon, self.table.chords)

    def locate(self, x: Sequence[Fraction]) -> tuple[int, ...]:
        """Indices (into :attr:`regions`) of every closed region containing ``x``."""
        self.polygon.require_inside(x)
        s = self.signs(x)
        found = tuple(i for i in range(len(self.table.codes)) if self.table.matches(i, s))
        if not found:
            raise AssertionError(f"no region matched signs {s}")
        return found


def locate(x: Sequence[Fraction], poly: Polygon, d: ChordalDecomposition) -> tuple[int, ...]:
    return Locator(poly, d).locate(x)
