import itertools

import pytest

from hierdepth.arcs import (
    ProjPoint,
    arc_extensions,
    arc_size_bound,
    columns_as_points,
    greedy_complete,
    is_k_arc,
    max_arc_size,
    mds_iff_arc,
    normal_rational_curve,
    projective_points,
)
from hierdepth.code import LinearCode, is_mds
from hierdepth.corpus import arc_corpus, code_corpus
from hierdepth.errors import TooManySubsets, ZeroColumn
from hierdepth.gf import FieldSpec


def test_projective_point_counts():
    for q in (2, 3, 4, 5):
        F = FieldSpec(*{4: (2, 2)}.get(q, (q,)))
        for r in (1, 2, 3):
            pts = projective_points(F, r)
            assert len(pts) == (q ** (r + 1) - 1) // (q - 1) == len(set(pts))


def test_normalisation():
    F = FieldSpec(5)
    p = ProjPoint.from_vector([F(0), F(2), F(4)])
    assert p.coords == (F(0), F(1), F(2))
    with pytest.raises(ZeroColumn):
        ProjPoint.from_vector([F(0), F(0)])


def test_conic_in_p2_f5():
    F = FieldSpec(5)
    conic = normal_rational_curve(F, 2)
    assert len(conic) == 6
    assert is_k_arc(conic, 2).is_arc
    assert arc_extensions(conic, 2, F) == []


def test_dependent_witness():
    F = FieldSpec(5)
    pts = [ProjPoint.from_vector([F(a), F(b), F(c)]) for a, b, c in [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]]
    rep = is_k_arc(pts, 2)
    assert not rep.is_arc and rep.witness == (0, 1, 2)
    assert rep.to_json() == {"n": 4, "r": 2, "is_arc": False, "witness": [0, 1, 2]}


@pytest.mark.parametrize("q,expected", [(3, 4), (5, 6), (7, 8)])
def test_max_arc_p2(q, expected):
    assert max_arc_size(FieldSpec(q), 2) == expected


def test_max_arc_p3_f3():
    assert max_arc_size(FieldSpec(3), 3) == 5


def test_cap():
    F = FieldSpec(7)
    with pytest.raises(TooManySubsets):
        is_k_arc(normal_rational_curve(F, 2), 2, cap=3)


def test_greedy_is_complete_arc():
    F = FieldSpec(3, 2)
    arc = greedy_complete([], 2, F)
    assert is_k_arc(arc, 2).is_arc
    assert len(arc) <= arc_size_bound(2, F.q)
    assert arc_extensions(arc, 2, F) == []


def test_matrix_columns():
    F = FieldSpec(5)
    code = LinearCode.from_matrix(F, [[1, 1, 1, 1], [0, 1, 2, 3]])
    pts = columns_as_points(code)
    assert is_k_arc(pts, 1).is_arc
    assert mds_iff_arc(code) == (True, True, True)


def test_oracles_agree_on_corpus():
    codes = list(code_corpus())
    assert len(codes) >= 30
    for label, code in codes:
        assert mds_iff_arc(code).equivalent, label


def test_arc_corpus_bound():
    for label, F, r, pts in arc_corpus():
        assert is_k_arc(pts, r).is_arc, label
        assert len(pts) <= arc_size_bound(r, F.q), label


def test_random_small_matrices_agree():
    F = FieldSpec(3)
    els = [0, 1, 2]
    for top in itertools.product(els, repeat=4):
        rows = [[1, 0] + list(top[:2]), [0, 1] + list(top[2:])]
        code = LinearCode.from_matrix(F, rows)
        res = mds_iff_arc(code)
        assert res.equivalent and res.mds == is_mds(code)
