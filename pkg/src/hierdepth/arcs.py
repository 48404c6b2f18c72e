"""Projective arcs and the MDS <-> arc correspondence.

The columns of a k x n generator matrix, read as points of P^(k-1), form an
arc (every k of them independent) exactly when the code is MDS.  Both sides
are decided here by independent brute force: determinants over all
k-subsets of columns on one side, the exhaustive distance scan on the other.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .code import DEFAULT_DISTANCE_CAP, LinearCode, determinant, min_distance, rank, rref, singleton_bound
from .errors import TooManySubsets, ZeroColumn
from .gf import FieldElement, FieldSpec, enumerate_field

DEFAULT_SUBSET_CAP = 10**7


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^r; coordinates scaled so the first nonzero one is 1."""

    coords: tuple[FieldElement, ...]

    @classmethod
    def from_vector(cls, vec: Sequence[FieldElement]) -> ProjPoint:
        lead = next((v for v in vec if not v.is_zero()), None)
        if lead is None:
            raise ZeroColumn("the zero vector is not a projective point")
        inv = lead.inv()
        return cls(tuple(v * inv for v in vec))

    @property
    def r(self) -> int:
        return len(self.coords) - 1

    def __repr__(self):
        return "(" + ":".join(repr(c) for c in self.coords) + ")"

    def to_json(self) -> list:
        return [c.to_json() for c in self.coords]


@dataclass(frozen=True)
class ArcReport:
    points: tuple[ProjPoint, ...]
    r: int
    is_arc: bool
    witness: tuple[int, ...] | None

    def to_json(self) -> dict:
        return {
            "n": len(self.points),
            "r": self.r,
            "is_arc": self.is_arc,
            "witness": None if self.witness is None else list(self.witness),
        }


def columns_as_points(source: LinearCode | Sequence[Sequence[FieldElement]]) -> list[ProjPoint]:
    """Normalised generator columns, from a code or from an explicit matrix."""
    rows = source.gen if isinstance(source, LinearCode) else source
    if not rows:
        raise ValueError("generator matrix has no rows")
    cols = list(zip(*rows))
    out = []
    for j, col in enumerate(cols):
        try:
            out.append(ProjPoint.from_vector(col))
        except ZeroColumn:
            raise ZeroColumn(f"column {j} is zero") from None
    return out


def is_k_arc(points: Sequence[ProjPoint], r: int, cap: int = DEFAULT_SUBSET_CAP) -> ArcReport:
    """Every (r+1)-subset independent; first dependent subset (lex order) as witness."""
    pts = tuple(points)
    if any(pt.r != r for pt in pts):
        raise ValueError(f"all points must lie in P^{r}")
    if math.comb(len(pts), r + 1) > cap:
        raise TooManySubsets(f"C({len(pts)}, {r + 1}) subsets exceed cap {cap}")
    if not pts:
        return ArcReport(pts, r, True, None)
    field = pts[0].coords[0].spec
    for subset in itertools.combinations(range(len(pts)), r + 1):
        rows = [pts[i].coords for i in subset]
        if determinant(rows, field).is_zero():
            return ArcReport(pts, r, False, subset)
    return ArcReport(pts, r, True, None)


def arc_size_bound(r: int, q: int) -> int:
    """q + r, the ceiling used for arcs in P^r(F_q)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return q + r


class MdsArc(NamedTuple):
    mds: bool
    arc: bool
    equivalent: bool


def mds_iff_arc(
    code: LinearCode,
    distance_cap: int = DEFAULT_DISTANCE_CAP,
    subset_cap: int = DEFAULT_SUBSET_CAP,
) -> MdsArc:
    mds = min_distance(code, distance_cap) == singleton_bound(code)
    try:
        arc = is_k_arc(columns_as_points(code), code.k - 1, subset_cap).is_arc
    except ZeroColumn:
        arc = False
    return MdsArc(mds, arc, mds == arc)


# -- constructing arcs ----------------------------------------------------------

def projective_points(field: FieldSpec, r: int) -> list[ProjPoint]:
    """All (q^(r+1) - 1)/(q - 1) points of P^r(F_q) in canonical order."""
    return list(_projective_points(field, r))


@functools.lru_cache(maxsize=None)
def _projective_points(field: FieldSpec, r: int) -> tuple[ProjPoint, ...]:
    els = enumerate_field(field)
    out = []
    for lead_pos in range(r + 1):
        for tail in itertools.product(els, repeat=r - lead_pos):
            out.append(ProjPoint((field.zero,) * lead_pos + (field.one,) + tail))
    return tuple(out)


def normal_rational_curve(field: FieldSpec, r: int) -> list[ProjPoint]:
    """(1 : t : ... : t^r) for t in F_q, plus (0 : ... : 0 : 1)."""
    pts = [ProjPoint(tuple(t**e for e in range(r + 1))) for t in enumerate_field(field)]
    pts.append(ProjPoint((field.zero,) * r + (field.one,)))
    return pts


def _independent(vectors: Sequence[Sequence[FieldElement]], field: FieldSpec) -> bool:
    return rank(vectors, field) == len(vectors)


def _hyperplane_normal(vectors: Sequence[Sequence[FieldElement]], field: FieldSpec) -> list[FieldElement] | None:
    """Normal of the hyperplane spanned by r independent vectors in F^(r+1)."""
    red, pivots = rref(vectors, field)
    if len(red) != len(vectors):
        return None
    free = next(c for c in range(len(red[0])) if c not in pivots)
    h = [field.zero] * len(red[0])
    h[free] = field.one
    for row, pc in zip(red, pivots):
        h[pc] = -row[free]
    return h


def arc_extensions(points: Sequence[ProjPoint], r: int, field: FieldSpec) -> list[ProjPoint]:
    """Points of P^r that can be added to an arc without breaking it.

    A candidate is blocked when it lies on a hyperplane spanned by r points of
    the arc; hyperplane membership is tested for all candidates at once.
    """
    cands = projective_points(field, r)
    have = set(points)
    if len(points) < r:
        return [
            c for c in cands
            if c not in have and _independent([p.coords for p in points] + [c.coords], field)
        ]
    add, mul = field.tables()
    coords = np.array([[v.index for v in c.coords] for c in cands], dtype=np.int64)
    blocked = np.zeros(len(cands), dtype=bool)
    for subset in itertools.combinations(points, r):
        h = _hyperplane_normal([p.coords for p in subset], field)
        if h is None:
            raise ValueError("input points do not form an arc")
        acc = np.zeros(len(cands), dtype=add.dtype)
        for i, hi in enumerate(h):
            acc = add[acc, mul[hi.index, coords[:, i]]]
        blocked |= acc == 0
    return [c for c, b in zip(cands, blocked) if not b and c not in have]


def greedy_complete(points: Sequence[ProjPoint], r: int, field: FieldSpec) -> list[ProjPoint]:
    """Extend an arc by the first admissible point until it is complete."""
    arc = list(points)
    while True:
        ext = arc_extensions(arc, r, field)
        if not ext:
            return arc
        arc.append(ext[0])


def max_arc_size(field: FieldSpec, r: int = 2) -> int:
    """Largest arc in P^r(F_q) by exhaustive backtracking (small q only).

    Projective transformations act transitively on ordered frames, so the
    search starts from the r + 2 standard frame points.
    """
    pts = projective_points(field, r)
    frame = [ProjPoint(tuple(field.one if i == j else field.zero for i in range(r + 1))) for j in range(r + 1)]
    frame.append(ProjPoint((field.one,) * (r + 1)))
    start = [pts.index(p) for p in frame]
    best = len(frame)

    def grow(arc: list[int], candidates: list[int]):
        nonlocal best
        best = max(best, len(arc))
        for pos, c in enumerate(candidates):
            if len(arc) + len(candidates) - pos <= best:
                return
            new_arc = arc + [c]
            rest = [
                d for d in candidates[pos + 1:]
                if all(
                    _independent([pts[x].coords for x in sub] + [pts[c].coords, pts[d].coords], field)
                    for sub in itertools.combinations(arc, r - 1)
                )
            ]
            grow(new_arc, rest)

    initial = [
        idx for idx, p in enumerate(pts)
        if idx not in start
        and all(
            _independent([pts[x].coords for x in sub] + [p.coords], field)
            for sub in itertools.combinations(start, r)
        )
    ]
    grow(start, initial)
    return best
