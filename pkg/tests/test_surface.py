import pytest
from hypothesis import given, settings, strategies as st

from hierdepth.errors import ParityViolation
from hierdepth.surface import (
    SurfaceNumerics,
    depth_formula,
    dual_depth_formula,
    monomial_name,
    p2_filtration,
    restrict_to_line,
)


def test_p2_degree_two():
    assert depth_formula(SurfaceNumerics(4, -6, 1)) == 6
    filt = p2_filtration(2)
    assert len(filt) == 6
    assert filt.names() == ["x^2", "xy", "xz", "y^2", "yz", "z^2"]


@pytest.mark.parametrize("d", range(0, 12))
def test_p2_counts(d):
    assert len(p2_filtration(d)) == (d + 1) * (d + 2) // 2 == depth_formula(SurfaceNumerics.p2(d))


def test_parity():
    with pytest.raises(ParityViolation):
        depth_formula(SurfaceNumerics(1, 0, 1))
    with pytest.raises(ParityViolation):
        dual_depth_formula(SurfaceNumerics(2, 1, 0))


def test_dual():
    n = SurfaceNumerics(4, -6, 1)
    assert depth_formula(n.dual()) == dual_depth_formula(n) == 0


def test_names():
    assert monomial_name((0, 0, 0)) == "1"
    assert monomial_name((1, 2, 3)) == "xy^2z^3"


@settings(max_examples=1000, deadline=None)
@given(st.integers(-500, 500), st.integers(-500, 500), st.integers(-50, 50))
def test_sum_identity(a, b, chi):
    c1_sq = a
    c1_k = b if (a - b) % 2 == 0 else b + 1
    n = SurfaceNumerics(c1_sq, c1_k, chi)
    assert depth_formula(n) + dual_depth_formula(n) == c1_sq + 2 * chi


def test_restriction_inequality():
    for d in range(51):
        res = restrict_to_line(p2_filtration(d))
        assert res.restricted_dim == d + 1
        assert res.depth == (d * d + 3 * d) // 2 + 1
        assert res.inequality_holds
        assert res.equality == (d == 0)
