import pytest
from hypothesis import given, settings, strategies as st

from hierdepth.curve import INFINITY, CurveSpec, affine_points
from hierdepth.errors import EvaluationAtPole, NegativeDegree
from hierdepth.gf import FieldSpec
from hierdepth.rrspace import evaluate, pole_order, rr_basis, rr_dimension


def test_elliptic_basis_order(example_curve):
    b = rr_basis(example_curve, 7)
    assert b.monomials == ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (3, 0), (2, 1))
    assert b.pole_orders == [0, 2, 3, 4, 5, 6, 7]


@pytest.mark.parametrize("m", range(0, 12))
def test_dimensions_match_riemann_roch(example_curve, m):
    assert rr_basis(example_curve, m).dim == rr_dimension(1, m)
    line = CurveSpec.projective_line(FieldSpec(7))
    assert rr_basis(line, m).dim == rr_dimension(0, m) == m + 1


def test_prefix_nesting(example_curve):
    for m in range(10):
        small, big = rr_basis(example_curve, m), rr_basis(example_curve, m + 1)
        assert big.monomials[: small.dim] == small.monomials
        assert all(pole_order(example_curve, mono) <= m for mono in small.monomials)


def test_errors(example_curve):
    with pytest.raises(NegativeDegree):
        rr_basis(example_curve, -1)
    with pytest.raises(EvaluationAtPole):
        rr_basis(example_curve, 3).values_at(INFINITY)


def test_matrix_shape(example_curve):
    pts = affine_points(example_curve)
    M = rr_basis(example_curve, 4).matrix(pts)
    assert len(M) == 4 and all(len(row) == 8 for row in M)
    assert all(v == example_curve.field.one for v in M[0])


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 9), st.data())
def test_evaluate_is_linear(m, data):
    curve = CurveSpec.elliptic(FieldSpec(7), 1, 3)
    b = rr_basis(curve, m)
    f = data.draw(st.lists(st.integers(0, 6), min_size=b.dim, max_size=b.dim))
    g = data.draw(st.lists(st.integers(0, 6), min_size=b.dim, max_size=b.dim))
    for pt in affine_points(curve):
        total = evaluate(b, [x + y for x, y in zip(f, g)], pt)
        assert total == evaluate(b, f, pt) + evaluate(b, g, pt)
