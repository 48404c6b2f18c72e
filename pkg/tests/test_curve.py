import itertools

import pytest

from hierdepth.curve import (
    INFINITY,
    CurveSpec,
    Divisor,
    affine_points,
    ec_add,
    ec_neg,
    on_curve,
    point_from_json,
    rational_points,
)
from hierdepth.errors import PointNotOnCurve, SingularCurve
from hierdepth.gf import FieldSpec, enumerate_field

CURVES = [(5, 1, 1, 1), (7, 1, 3, 2), (11, 1, 1, 6), (13, 1, 2, 5), (5, 2, 1, 3)]


def brute_count(curve):
    F = curve.field
    els = enumerate_field(F)
    return 1 + sum(1 for x in els for y in els if y * y == x**3 + curve.a * x + curve.b)


def test_example_points(example_curve):
    pts = rational_points(example_curve)
    assert len(pts) == 9
    assert pts[0] is INFINITY or pts[0].is_infinity
    assert [(p.x.index, p.y.index) for p in pts[1:]] == [
        (0, 1), (0, 4), (2, 1), (2, 4), (3, 1), (3, 4), (4, 2), (4, 3)
    ]


@pytest.mark.parametrize("p,k,a,b", CURVES)
def test_counts_and_hasse(p, k, a, b):
    F = FieldSpec(p, k)
    curve = CurveSpec.elliptic(F, F.from_index(a), F.from_index(b))
    n = len(rational_points(curve))
    assert n == brute_count(curve)
    assert (n - F.q - 1) ** 2 <= 4 * F.q


def test_projective_line():
    F = FieldSpec(7)
    line = CurveSpec.projective_line(F)
    assert line.genus == 0
    assert len(rational_points(line)) == 8
    assert len(affine_points(line)) == 7


def test_singular_and_bad_char():
    with pytest.raises(SingularCurve):
        CurveSpec.elliptic(FieldSpec(5), 0, 0)
    with pytest.raises(SingularCurve):
        CurveSpec.elliptic(FieldSpec(3), 1, 1)


def test_point_membership(example_curve):
    assert on_curve(example_curve, example_curve.point(0, 1))
    with pytest.raises(PointNotOnCurve):
        example_curve.point(1, 1)


@pytest.mark.parametrize("p,k,a,b", CURVES[:3])
def test_group_law_exhaustive(p, k, a, b):
    F = FieldSpec(p, k)
    E = CurveSpec.elliptic(F, F.from_index(a), F.from_index(b))
    pts = rational_points(E)
    for P in pts:
        assert ec_add(E, P, INFINITY) == P
        assert ec_add(E, P, ec_neg(E, P)) == INFINITY
    for P, Q in itertools.product(pts, repeat=2):
        assert ec_add(E, P, Q) == ec_add(E, Q, P)
        assert on_curve(E, ec_add(E, P, Q))
    for P, Q, R in itertools.product(pts, repeat=3):
        assert ec_add(E, ec_add(E, P, Q), R) == ec_add(E, P, ec_add(E, Q, R))


def test_group_order_annihilates(example_curve):
    E = example_curve
    pts = rational_points(E)
    for P in pts:
        acc = INFINITY
        for _ in range(len(pts)):
            acc = ec_add(E, acc, P)
        assert acc == INFINITY


def test_divisors(example_curve):
    P, Q = example_curve.point(0, 1), example_curve.point(2, 1)
    D = Divisor.at(P, 2) + Divisor.at(Q)
    assert D.degree == 3
    assert D.multiplicity(P) == 2 and D.is_effective()
    E = D - Divisor.at(Q, 2)
    assert E.degree == 1 and not E.is_effective()
    assert Divisor.at(P).precedes(D)
    assert not D.precedes(Divisor.at(P))
    assert (3 * Divisor.at(INFINITY)).degree == 3


def test_json(example_curve):
    assert CurveSpec.from_json(example_curve.to_json()) == example_curve
    for pt in rational_points(example_curve):
        assert point_from_json(example_curve, pt.to_json()) == pt
