"""Monomial bases of the Riemann-Roch spaces L(m * P_inf).

On P^1 the space is the polynomials in x of degree <= m.  On an elliptic
curve in short Weierstrass form x has a double pole and y a triple pole at
infinity, so the monomials x^i y^j with j in {0, 1} and 2i + 3j <= m form a
basis.  Bases are sorted by pole order, which makes basis(m) a prefix of
basis(m + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .curve import CurvePoint, CurveSpec, on_curve
from .errors import EvaluationAtPole, NegativeDegree, PointNotOnCurve
from .gf import FieldElement

Monomial = tuple[int, int]


def pole_order(curve: CurveSpec, mono: Monomial) -> int:
    i, j = mono
    return i if not curve.is_elliptic else 2 * i + 3 * j


@dataclass(frozen=True)
class RRBasis:
    curve: CurveSpec
    m: int
    monomials: tuple[Monomial, ...]

    @property
    def dim(self) -> int:
        return len(self.monomials)

    @property
    def pole_orders(self) -> list[int]:
        return [pole_order(self.curve, mono) for mono in self.monomials]

    def function(self, coeffs: Sequence) -> dict[Monomial, FieldElement]:
        """The span element sum(coeffs[i] * basis[i]) as a sparse x,y polynomial."""
        if len(coeffs) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients, got {len(coeffs)}")
        F = self.curve.field
        return {mono: F(c) for mono, c in zip(self.monomials, coeffs) if not F(c).is_zero()}

    def values_at(self, pt: CurvePoint) -> list[FieldElement]:
        """Every basis function evaluated at an affine point."""
        _check_affine(self.curve, pt)
        return [monomial_value(mono, pt) for mono in self.monomials]

    def matrix(self, points: Sequence[CurvePoint]) -> list[list[FieldElement]]:
        """dim x n matrix [basis_i(P_j)]."""
        cols = [self.values_at(pt) for pt in points]
        return [[col[r] for col in cols] for r in range(self.dim)]

    def to_json(self) -> list:
        return [list(mono) for mono in self.monomials]


def _check_affine(curve: CurveSpec, pt: CurvePoint) -> None:
    if pt.is_infinity:
        raise EvaluationAtPole("basis functions have their poles at infinity")
    if not on_curve(curve, pt):
        raise PointNotOnCurve(f"{pt} is not on {curve}")


def monomial_value(mono: Monomial, pt: CurvePoint) -> FieldElement:
    i, j = mono
    val = pt.x**i
    if j:
        val = val * pt.y**j
    return val


def rr_basis(curve: CurveSpec, m: int) -> RRBasis:
    if m < 0:
        raise NegativeDegree(f"pole order must be >= 0, got {m}")
    if curve.is_elliptic:
        monos = [(i, j) for j in (0, 1) for i in range(m // 2 + 1) if 2 * i + 3 * j <= m]
    else:
        monos = [(i, 0) for i in range(m + 1)]
    monos.sort(key=lambda mono: pole_order(curve, mono))
    return RRBasis(curve, m, tuple(monos))


def rr_dimension(genus: int, degree: int) -> int:
    """Riemann-Roch prediction for l(m * P) when H^1 vanishes or degree is 0."""
    if degree < 0:
        return 0
    if degree == 0:
        return 1
    if degree >= 2 * genus - 1:
        return degree - genus + 1
    raise ValueError("dimension not determined by degree alone")  # pragma: no cover


def evaluate(basis: RRBasis, f: Sequence, pt: CurvePoint) -> FieldElement:
    """sum(f_i * basis_i(pt)) computed exactly."""
    if len(f) != basis.dim:
        raise ValueError(f"expected {basis.dim} coefficients, got {len(f)}")
    F = basis.curve.field
    total = F.zero
    for c, v in zip(f, basis.values_at(pt)):
        total = total + F(c) * v
    return total
