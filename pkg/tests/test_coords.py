import random
from fractions import Fraction as F

import pytest

from _support import (
    HEX_A,
    HEX_B,
    HEX_C,
    HEXAGON,
    QUAD,
    QUAD_A,
    combo,
    random_convex_polygon,
    random_point_in,
    random_point_on,
)
from polycoords.coords import (
    CartographicSystem,
    ChordalSystem,
    MixtureSystem,
    cartographic_eval,
    chordal_eval,
    chordal_eval_recursive,
    check_vector,
    interpolate,
    mix_systems,
    verify_system,
)
from polycoords.decomposition import dihedral_apply, dihedral_group, enumerate_decompositions, validate_decomposition
from polycoords.errors import InvalidWeightError, PointOutsideError, PolyCoordsError
from polycoords.geometry import point, validate_polygon

DELTA = validate_decomposition(6, [(1, 3), (1, 5), (3, 5)])
DELTA_2 = validate_decomposition(6, [(2, 4), (2, 6), (4, 6)])


def V(*xs):
    return tuple(F(x) for x in xs)


@pytest.mark.parametrize(
    "x, expected",
    [
        (HEX_A, V("1/2", "1/4", "1/4", 0, 0, 0)),
        (HEX_B, V("1/2", 0, "1/2", 0, 0, 0)),
        (HEX_C, V("1/3", 0, "1/3", 0, "1/3", 0)),
    ],
)
def test_hexagon_chordal(x, expected):
    assert chordal_eval(x, ChordalSystem(HEXAGON, DELTA)) == expected


@pytest.mark.parametrize(
    "x, expected",
    [
        (HEX_A, V(0, "3/4", 0, 0, 0, "1/4")),
        (HEX_B, V(0, "2/3", 0, "1/6", 0, "1/6")),
        (HEX_C, V(0, "1/3", 0, "1/3", 0, "1/3")),
    ],
)
def test_hexagon_chordal_rotated(x, expected):
    assert ChordalSystem(HEXAGON, DELTA_2)(x) == expected


@pytest.mark.parametrize(
    "x, expected",
    [
        (HEX_A, V("1/4", "1/2", "1/8", 0, 0, "1/8")),
        (HEX_B, V("1/4", "2/6", "1/4", "1/12", 0, "1/12")),
        (HEX_C, V(*["1/6"] * 6)),
    ],
)
def test_hexagon_cartographic(x, expected):
    sys = CartographicSystem(HEXAGON, DELTA)
    assert cartographic_eval(x, sys) == expected
    assert sorted(sys.orbit.values()) == [6, 6]


def test_quadrilateral():
    s13 = ChordalSystem(QUAD, validate_decomposition(4, [(1, 3)]))
    s24 = ChordalSystem(QUAD, validate_decomposition(4, [(2, 4)]))
    assert s13(QUAD_A) == V("5/8", 0, "3/8", 0)
    assert s24(QUAD_A) == V(0, "5/12", "2/12", "5/12")
    mixed = mix_systems([(s13, F(1, 2)), (s24, F(1, 2))])
    expected = tuple(F(k, 48) for k in (15, 10, 13, 10))
    assert mixed(QUAD_A) == expected
    assert CartographicSystem(QUAD, validate_decomposition(4, [(2, 4)]))(QUAD_A) == expected


@pytest.mark.parametrize("d", enumerate_decompositions(6))
def test_vertices_get_unit_vectors(d):
    sys = ChordalSystem(HEXAGON, d)
    for v in range(1, 7):
        assert sys(HEXAGON.vertex(v)) == tuple(F(int(i == v)) for i in range(1, 7))


def _samples(rng, poly, d, count):
    pts = [random_point_in(rng, poly) for _ in range(count)]
    pts += [poly.vertex(v) for v in range(1, poly.n + 1)]
    pts += [random_point_on(rng, poly.vertex(c.a), poly.vertex(c.b)) for c in d.chords for _ in range(4)]
    pts += [random_point_on(rng, poly.vertex(j), poly.vertex(k)) for j, k in poly.edges()]
    return pts


def _check_against_recursion(poly, d, pts):
    sys = ChordalSystem(poly, d)
    for x in pts:
        vec = sys(x)
        assert vec == tuple(chordal_eval_recursive(x, v, sys) for v in range(1, poly.n + 1))
        assert check_vector(poly, x, vec) == []
        nonzero = sum(1 for w in vec if w)
        assert nonzero <= 3
        if x in poly.vertices:
            assert nonzero == 1


@pytest.mark.parametrize("d", enumerate_decompositions(6))
def test_hexagon_matches_recursion(d):
    rng = random.Random(str(d))
    _check_against_recursion(HEXAGON, d, _samples(rng, HEXAGON, d, 150))


@pytest.mark.parametrize("chords", [[(1, 3)], [(2, 4)]])
def test_quadrilateral_matches_recursion(chords):
    d = validate_decomposition(4, chords)
    _check_against_recursion(QUAD, d, _samples(random.Random(4), QUAD, d, 300))


@pytest.mark.parametrize("n", [3, 5, 7, 8])
def test_random_polygons_match_recursion(n):
    rng = random.Random(500 + n)
    poly = random_convex_polygon(rng, n)
    for d in rng.sample(enumerate_decompositions(n), min(3, len(enumerate_decompositions(n)))):
        _check_against_recursion(poly, d, _samples(rng, poly, d, 60))


def test_points_on_chords_have_two_weights():
    sys = ChordalSystem(HEXAGON, DELTA)
    rng = random.Random(9)
    for c in DELTA.chords:
        x = random_point_on(rng, HEXAGON.vertex(c.a), HEXAGON.vertex(c.b))
        vec = sys(x)
        assert {i + 1 for i, w in enumerate(vec) if w} == {c.a, c.b}


def test_outside_point_rejected():
    for sys in (ChordalSystem(HEXAGON, DELTA), CartographicSystem(HEXAGON, DELTA)):
        with pytest.raises(PointOutsideError):
            sys(point(3, 3))
    with pytest.raises(PointOutsideError):
        chordal_eval_recursive(point(-1, 0), 1, ChordalSystem(HEXAGON, DELTA))


def test_mixture_of_one_part_is_the_part():
    s = ChordalSystem(HEXAGON, DELTA)
    m = MixtureSystem([(s, 1)])
    for x in (HEX_A, HEX_B, HEX_C):
        assert m(x) == s(x)


def test_nested_mixture_flattens():
    s1, s2 = ChordalSystem(HEXAGON, DELTA), ChordalSystem(HEXAGON, DELTA_2)
    c = CartographicSystem(HEXAGON, DELTA)
    inner = MixtureSystem([(s1, F(1, 3)), (s2, F(2, 3))])
    outer = MixtureSystem([(inner, F(1, 2)), (c, F(1, 2))])
    assert [w for _, w in outer.flat] == [F(1, 6), F(1, 3), F(1, 2)]
    for x in (HEX_A, HEX_B, HEX_C):
        expected = tuple(F(1, 6) * a + F(1, 3) * b + F(1, 2) * w for a, b, w in zip(s1(x), s2(x), c(x)))
        assert outer(x) == expected
        assert sum(outer(x)) == 1


def test_mixture_errors():
    s = ChordalSystem(HEXAGON, DELTA)
    with pytest.raises(InvalidWeightError):
        MixtureSystem([(s, F(1, 2))])
    with pytest.raises(InvalidWeightError):
        MixtureSystem([(s, F(3, 2)), (s, F(-1, 2))])
    with pytest.raises(PolyCoordsError):
        MixtureSystem([])
    with pytest.raises(PolyCoordsError):
        MixtureSystem([(s, F(1, 2)), (ChordalSystem(QUAD, validate_decomposition(4, [(1, 3)])), F(1, 2))])


@pytest.mark.parametrize("d", enumerate_decompositions(6))
def test_cartographic_independent_of_representative(d):
    base = CartographicSystem(HEXAGON, d)
    rng = random.Random(1)
    pts = [random_point_in(rng, HEXAGON) for _ in range(10)]
    for g in dihedral_group(6)[::3]:
        other = CartographicSystem(HEXAGON, dihedral_apply(d, g))
        assert [other(x) for x in pts] == [base(x) for x in pts]


def test_cartographic_equals_average_over_group():
    # averaging over all 2n group elements, not over distinct images
    rng = random.Random(2)
    poly = random_convex_polygon(rng, 7)
    d = rng.choice(enumerate_decompositions(7))
    sys = CartographicSystem(poly, d)
    images = [ChordalSystem(poly, dihedral_apply(d, g)) for g in dihedral_group(7)]
    for _ in range(20):
        x = random_point_in(rng, poly)
        expected = tuple(sum(s(x)[i] for s in images) / 14 for i in range(7))
        assert sys(x) == expected


def test_verify_system_reports():
    rng = random.Random(3)
    pts = [random_point_in(rng, HEXAGON) for _ in range(50)]
    for sys in (ChordalSystem(HEXAGON, DELTA), CartographicSystem(HEXAGON, DELTA)):
        report = verify_system(sys, pts)
        assert report.checked == 50 and report.ok


def test_check_vector_catches_corruption():
    good = ChordalSystem(HEXAGON, DELTA)(HEX_A)
    assert check_vector(HEXAGON, HEX_A, good) == []
    shifted = (good[0] - F(1, 8), good[1] + F(1, 8)) + good[2:]
    assert [v.kind for v in check_vector(HEXAGON, HEX_A, shifted)] == ["linear_precision"]
    heavy = (good[0] + F(1, 8),) + good[1:]
    kinds = {v.kind for v in check_vector(HEXAGON, HEX_A, heavy)}
    assert kinds == {"partition_of_unity", "linear_precision"}
    assert [v.kind for v in check_vector(HEXAGON, HEX_A, good[:5])] == ["length"]
    negative = (F(-1, 4), F(5, 4)) + good[2:]
    assert "range" in {v.kind for v in check_vector(HEXAGON, HEX_A, negative)}


class _Broken(ChordalSystem):
    def _evaluate(self, a):
        vec = super()._evaluate(a)
        return (vec[0] + F(1, 100),) + vec[1:]


def test_verify_system_flags_broken_system():
    report = verify_system(_Broken(HEXAGON, DELTA), [HEX_A, HEX_C])
    assert not report.ok
    assert {v.kind for v in report.violations} == {"partition_of_unity", "linear_precision"}


def test_interpolate():
    sys = CartographicSystem(HEXAGON, DELTA)
    rng = random.Random(4)
    coords = [tuple(v) for v in HEXAGON.vertices]
    for _ in range(20):
        x = random_point_in(rng, HEXAGON)
        assert interpolate(x, sys, coords) == tuple(x)
        assert interpolate(x, sys, [(7,)] * 6) == (7,)
    indicator = {v: (int(v == 1),) for v in range(1, 7)}
    chordal = ChordalSystem(HEXAGON, DELTA)
    assert interpolate(HEX_B, chordal, indicator) == (F(1, 2),)
    ys = {v: (p.y,) for v, p in enumerate(HEXAGON.vertices, start=1)}
    assert interpolate(HEX_C, chordal, ys) == (1,)
    assert interpolate(HEX_A, chordal, [("1/2", 1)] * 6) == (F(1, 2), 1)


def test_interpolate_errors():
    sys = ChordalSystem(HEXAGON, DELTA)
    with pytest.raises(PolyCoordsError):
        interpolate(HEX_A, sys, {1: (0,), 2: (0,)})
    with pytest.raises(PolyCoordsError):
        interpolate(HEX_A, sys, [(0,)] * 5)
    with pytest.raises(PolyCoordsError):
        interpolate(HEX_A, sys, [(0,)] * 5 + [(0, 1)])


def test_descriptors():
    assert ChordalSystem(HEXAGON, DELTA).descriptor() == {"kind": "chordal", "chords": [[1, 3], [1, 5], [3, 5]]}
    assert CartographicSystem(HEXAGON, DELTA).descriptor()["kind"] == "cartographic"
    m = MixtureSystem([(ChordalSystem(HEXAGON, DELTA), F(1, 3)), (ChordalSystem(HEXAGON, DELTA_2), F(2, 3))])
    assert [p["weight"] for p in m.descriptor()["parts"]] == ["1/3", "2/3"]


def test_triangle_polygon_gives_areal_coordinates():
    tri = validate_polygon([(0, 0), (4, 0), (0, 4)])
    sys = ChordalSystem(tri, validate_decomposition(3, []))
    assert sys(point(1, 1)) == V("1/2", "1/4", "1/4")
    assert sys(combo(tri.vertices, [F(1, 3)] * 3)) == V(*["1/3"] * 3)
