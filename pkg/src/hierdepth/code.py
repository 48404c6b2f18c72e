"""Evaluation codes: generator matrices, exact dimension and minimum distance.

Minimum distance and weight distribution are computed by an exhaustive scan
of the message space, vectorised through the field's add/mul lookup tables.
The scan is exact; it refuses to start when q^k exceeds ``cap``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .curve import CurvePoint, CurveSpec, on_curve
from .errors import EmptyCode, FieldMismatch, PointAtPole, PointNotOnCurve, SearchTooLarge
from .gf import FieldElement, FieldSpec
from .rrspace import RRBasis

DEFAULT_DISTANCE_CAP = 10**8
_HEAD_ROWS_LIMIT = 1 << 18

Matrix = list[list[FieldElement]]


# -- linear algebra over GF(q) ---------------------------------------------

def rref(rows: Sequence[Sequence[FieldElement]], field: FieldSpec) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with zero rows dropped, plus pivot columns."""
    mat = [[field(v) for v in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if not mat[i][c].is_zero()), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c].inv()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence[FieldElement]], field: FieldSpec) -> int:
    return len(rref(rows, field)[0])


def determinant(rows: Sequence[Sequence[FieldElement]], field: FieldSpec) -> FieldElement:
    """Determinant of a square matrix by Gaussian elimination."""
    mat = [[field(v) for v in row] for row in rows]
    n = len(mat)
    det = field.one
    for c in range(n):
        pivot = next((i for i in range(c, n) if not mat[i][c].is_zero()), None)
        if pivot is None:
            return field.zero
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            det = -det
        det = det * mat[c][c]
        inv = mat[c][c].inv()
        for i in range(c + 1, n):
            if not mat[i][c].is_zero():
                f = mat[i][c] * inv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[c])]
    return det


# -- codes -------------------------------------------------------------------

@dataclass(frozen=True)
class EvaluationSet:
    curve: CurveSpec
    points: tuple[CurvePoint, ...]

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        if len(set(pts)) != len(pts):
            raise ValueError("evaluation points must be distinct")
        for pt in pts:
            if pt.is_infinity:
                raise PointAtPole("the evaluation set must avoid the pole at infinity")
            if not on_curve(self.curve, pt):
                raise PointNotOnCurve(f"{pt} is not on {self.curve}")

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def to_json(self) -> list:
        return [pt.to_json() for pt in self.points]


@dataclass(frozen=True)
class LinearCode:
    """Row space of ``gen`` (stored in reduced row echelon form).

    ``deg`` is the degree of the divisor the code was evaluated from, if any;
    it feeds the Goppa bound and takes no part in equality.
    """

    field: FieldSpec
    n: int
    gen: tuple[tuple[FieldElement, ...], ...]
    deg: int | None = field(default=None, compare=False)

    @classmethod
    def from_matrix(cls, fld: FieldSpec, rows: Sequence[Sequence], deg: int | None = None) -> LinearCode:
        rows = [list(r) for r in rows]
        n = len(rows[0]) if rows else 0
        if any(len(r) != n for r in rows):
            raise ValueError("ragged generator matrix")
        red, _ = rref(rows, fld)
        return cls(fld, n, tuple(tuple(r) for r in red), deg)

    @property
    def k(self) -> int:
        return len(self.gen)

    @property
    def d(self) -> int:
        return min_distance(self)

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    def index_matrix(self) -> np.ndarray:
        return np.array([[v.index for v in row] for row in self.gen], dtype=np.int64).reshape(self.k, self.n)

    def contains(self, other: LinearCode) -> bool:
        """True when other's row space lies inside this code."""
        if other.n != self.n or other.field != self.field:
            return False
        if other.k == 0:
            return True
        return rank(list(self.gen) + list(other.gen), self.field) == self.k

    def to_json(self, cap: int = DEFAULT_DISTANCE_CAP) -> dict:
        d = min_distance(self, cap) if self.k else None
        return {
            "n": self.n,
            "k": self.k,
            "d": d,
            "goppa": goppa_value(self),
            "singleton": singleton_bound(self),
            "mds": None if d is None else d == singleton_bound(self),
            "gen": [[v.to_json() for v in row] for row in self.gen],
        }

    def csv_row(self, cap: int = DEFAULT_DISTANCE_CAP) -> str:
        rec = self.to_json(cap)
        return ",".join(str(rec[key]) for key in ("n", "k", "d", "goppa", "singleton", "mds"))


def eval_code(basis: RRBasis, gamma: EvaluationSet) -> LinearCode:
    """Row space of [basis_i(P_j)]; k may fall below dim when n is small."""
    if gamma.curve != basis.curve:
        raise FieldMismatch("basis and evaluation set live on different curves")
    for pt in gamma.points:
        if pt.is_infinity:
            raise PointAtPole("cannot evaluate at the pole of the divisor")
    return LinearCode.from_matrix(basis.curve.field, basis.matrix(gamma.points), deg=basis.m)


def _weight_chunks(code: LinearCode, cap: int) -> Iterator[np.ndarray]:
    """Hamming weights of all q^k codewords, in chunks, zero word included once."""
    if code.k == 0:
        raise EmptyCode("code has dimension 0")
    q = code.field.q
    if q**code.k > cap:
        raise SearchTooLarge(f"q^k = {q}^{code.k} exceeds cap {cap}")
    add, mul = code.field.tables()
    G = code.index_matrix()
    n = code.n
    head = 1
    while head < code.k and q ** (head + 1) <= _HEAD_ROWS_LIMIT:
        head += 1
    words = np.zeros((1, n), dtype=add.dtype)
    for row in G[:head]:
        scaled = mul[:, row]
        words = add[words[:, None, :], scaled[None, :, :]].reshape(-1, n)
    tail = G[head:]
    if not len(tail):
        yield np.count_nonzero(words, axis=1)
        return
    scaled_tail = [mul[:, row] for row in tail]
    for coeffs in itertools.product(range(q), repeat=len(tail)):
        offset = np.zeros(n, dtype=add.dtype)
        for c, sc in zip(coeffs, scaled_tail):
            if c:
                offset = add[offset, sc[c]]
        yield np.count_nonzero(add[words, offset], axis=1)


def min_distance(code: LinearCode, cap: int = DEFAULT_DISTANCE_CAP) -> int:
    """Exact minimum weight over all nonzero codewords."""
    cached = code.__dict__.get("_d")
    if cached is not None:
        return cached
    best = code.n + 1
    for w in _weight_chunks(code, cap):
        pos = w[w > 0]
        if pos.size:
            best = min(best, int(pos.min()))
    object.__setattr__(code, "_d", best)
    return best


def weight_distribution(code: LinearCode, cap: int = DEFAULT_DISTANCE_CAP) -> dict[int, int]:
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for w in _weight_chunks(code, cap):
        counts += np.bincount(w, minlength=code.n + 1)
    return {w: int(c) for w, c in enumerate(counts) if c}


def goppa_bound(basis: RRBasis, gamma: EvaluationSet) -> int:
    """Designed distance n - deg(m * P_inf)."""
    return gamma.n - basis.m


def goppa_value(code: LinearCode) -> int | None:
    return None if code.deg is None else code.n - code.deg


def singleton_bound(code: LinearCode) -> int:
    return code.n - code.k + 1


def is_mds(code: LinearCode, cap: int = DEFAULT_DISTANCE_CAP) -> bool:
    return min_distance(code, cap) == singleton_bound(code)
