"""Deterministic families of codes and arcs used for cross-checks."""

from __future__ import annotations

from typing import Iterator

from .arcs import ProjPoint, greedy_complete, normal_rational_curve, projective_points
from .code import EvaluationSet, LinearCode, eval_code
from .curve import CurveSpec, affine_points
from .gf import FieldSpec, field_new
from .rrspace import rr_basis

# (p, k, a, b); elliptic curves in short Weierstrass form
ELLIPTIC_CURVES = [(5, 1, 1, 1), (7, 1, 3, 2), (11, 1, 1, 6)]
PROJECTIVE_LINE_FIELDS = [(3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


def reference_curve() -> CurveSpec:
    """y^2 = x^3 + x + 1 over GF(5)."""
    return CurveSpec.elliptic(field_new(5), 1, 1)


def code_corpus(max_words: int = 10**5, max_n: int = 10) -> Iterator[tuple[str, LinearCode]]:
    """Evaluation codes from P^1 and elliptic chains, labelled.

    Levels are skipped when q^k would exceed ``max_words``.
    """
    for p, k in PROJECTIVE_LINE_FIELDS:
        F = field_new(p, k)
        curve = CurveSpec.projective_line(F)
        pts = affine_points(curve)[:max_n]
        gamma = EvaluationSet(curve, tuple(pts))
        for m in range(gamma.n):
            basis = rr_basis(curve, m)
            if F.q**basis.dim > max_words:
                break
            yield f"p1/GF({F.q})/n={gamma.n}/m={m}", eval_code(basis, gamma)
    for p, k, a, b in ELLIPTIC_CURVES:
        F = field_new(p, k)
        curve = CurveSpec.elliptic(F, a, b)
        pts = affine_points(curve)[:max_n]
        gamma = EvaluationSet(curve, tuple(pts))
        for m in range(gamma.n):
            basis = rr_basis(curve, m)
            if F.q**basis.dim > max_words:
                break
            yield f"elliptic/GF({F.q})/a={a},b={b}/n={gamma.n}/m={m}", eval_code(basis, gamma)
    curve = reference_curve()
    pts = affine_points(curve)
    for start in range(0, len(pts) - 5):
        gamma = EvaluationSet(curve, tuple(pts[start:start + 6]))
        for m in range(6):
            yield f"elliptic/GF(5)/window={start}/m={m}", eval_code(rr_basis(curve, m), gamma)


def arc_corpus(max_q: int = 9, max_r: int = 3) -> Iterator[tuple[str, FieldSpec, int, list[ProjPoint]]]:
    """Normal rational curves and their greedy completions in P^r(F_q)."""
    for p, k in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]:
        F = field_new(p, k)
        if F.q > max_q:
            continue
        for r in range(1, max_r + 1):
            nrc = normal_rational_curve(F, r)
            yield f"nrc/GF({F.q})/r={r}", F, r, nrc
            yield f"nrc-completed/GF({F.q})/r={r}", F, r, greedy_complete(nrc, r, F)
            frame = projective_points(F, r)[:1]
            yield f"greedy/GF({F.q})/r={r}", F, r, greedy_complete(frame, r, F)
