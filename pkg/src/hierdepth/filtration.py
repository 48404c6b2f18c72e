"""Divisor towers 0 < P_inf < 2 P_inf < ... < m P_inf and their code chains.

Every level is computed exactly (dimension by rank, distance by exhaustive
scan), so claims about the chain can be checked against ground truth rather
than assumed.  Rates and Q-scores are ``Fraction`` values so that ties such
as Q_2 = Q_3 are detected exactly.
"""

from __future__ import annotations

import enum
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .code import (
    DEFAULT_DISTANCE_CAP,
    EvaluationSet,
    LinearCode,
    eval_code,
    goppa_bound,
    min_distance,
    singleton_bound,
)
from .curve import INFINITY, CurveSpec, Divisor
from .errors import DegreeTooLarge, HypothesisUnmet, LengthMismatch, NotASubset, SearchTooLarge
from .rrspace import RRBasis, rr_basis

CSV_HEADER = "i,deg,k,d,goppa,singleton,mds,R_num,R_den,Q_num,Q_den,rs_class"


class RSClass(str, enum.Enum):
    RS_EQUIVALENT = "RS_equivalent"
    NON_RS = "NonRS"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ChainLevel:
    i: int
    divisor: Divisor
    basis: RRBasis
    code: LinearCode

    @property
    def deg(self) -> int:
        return self.divisor.degree

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def d(self) -> int:
        return self.code.d


@dataclass(frozen=True)
class FiltrationChain:
    curve: CurveSpec
    gamma: EvaluationSet
    levels: tuple[ChainLevel, ...]
    cap: int = DEFAULT_DISTANCE_CAP

    @property
    def n(self) -> int:
        return self.gamma.n

    @property
    def g(self) -> int:
        return self.curve.genus

    @property
    def m(self) -> int:
        return self.levels[-1].i

    def distances(self) -> list[int]:
        return [min_distance(lv.code, self.cap) for lv in self.levels]

    def is_nested(self) -> bool:
        """Divisors strictly increase and each code contains its predecessor."""
        for lo, hi in zip(self.levels, self.levels[1:]):
            if not lo.divisor.precedes(hi.divisor) or not hi.code.contains(lo.code):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "curve": self.curve.to_json(),
            "gamma": self.gamma.to_json(),
            "genus": self.g,
            "levels": [
                {"i": lv.i, "deg": lv.deg, "basis": lv.basis.to_json(), "code": lv.code.to_json(self.cap)}
                for lv in self.levels
            ],
            "tradeoff": tradeoff(self).to_json(),
            "optimum": optimal_index(self)._asdict(),
            "mds_profile": mds_profile(self),
            "discrepancies": discrepancies(self),
        }


def build_chain(curve: CurveSpec, gamma: EvaluationSet, m: int, cap: int = DEFAULT_DISTANCE_CAP) -> FiltrationChain:
    if m < 0:
        raise DegreeTooLarge(f"maximal degree must be >= 0, got {m}")
    if m >= gamma.n:
        raise DegreeTooLarge(f"need m < n, got m = {m}, n = {gamma.n}")
    top = rr_basis(curve, m)
    if curve.field.q ** top.dim > cap:
        raise SearchTooLarge(f"q^{top.dim} codewords at the top level exceed cap {cap}")
    levels = []
    for i in range(m + 1):
        basis = rr_basis(curve, i)
        levels.append(ChainLevel(i, Divisor.at(INFINITY, i), basis, eval_code(basis, gamma)))
    return FiltrationChain(curve, gamma, tuple(levels), cap)


# -- rate/distance trade-off -------------------------------------------------

@dataclass(frozen=True)
class TradeoffRow:
    i: int
    deg: int
    k: int
    d: int
    goppa: int
    singleton: int
    mds: bool
    R: Fraction
    Q: Fraction
    rs_class: RSClass

    def csv(self) -> str:
        return ",".join(
            str(v)
            for v in (
                self.i, self.deg, self.k, self.d, self.goppa, self.singleton, str(self.mds).lower(),
                self.R.numerator, self.R.denominator, self.Q.numerator, self.Q.denominator, self.rs_class,
            )
        )


@dataclass(frozen=True)
class TradeoffTable:
    rows: tuple[TradeoffRow, ...]

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write(CSV_HEADER + "\n")
        for row in self.rows:
            out.write(row.csv() + "\n")
        return out.getvalue()

    def to_json(self) -> list[dict]:
        return [
            {
                "i": r.i, "deg": r.deg, "k": r.k, "d": r.d, "goppa": r.goppa, "singleton": r.singleton,
                "mds": r.mds, "R": [r.R.numerator, r.R.denominator], "Q": [r.Q.numerator, r.Q.denominator],
                "rs_class": str(r.rs_class),
            }
            for r in self.rows
        ]

    @classmethod
    def from_csv(cls, text: str) -> TradeoffTable:
        lines = [ln for ln in text.strip().splitlines() if ln]
        if lines[0] != CSV_HEADER:
            raise ValueError("unexpected tradeoff CSV header")
        rows = []
        for ln in lines[1:]:
            f = ln.split(",")
            rows.append(
                TradeoffRow(
                    int(f[0]), int(f[1]), int(f[2]), int(f[3]), int(f[4]), int(f[5]), f[6] == "true",
                    Fraction(int(f[7]), int(f[8])), Fraction(int(f[9]), int(f[10])), RSClass(f[11]),
                )
            )
        return cls(tuple(rows))


def tradeoff(chain: FiltrationChain) -> TradeoffTable:
    rows = []
    n = chain.n
    q = chain.curve.field.q
    for lv in chain.levels:
        d = min_distance(lv.code, chain.cap)
        R = Fraction(lv.k, n)
        mds = d == singleton_bound(lv.code)
        rows.append(
            TradeoffRow(
                lv.i, lv.deg, lv.k, d, goppa_bound(lv.basis, chain.gamma), singleton_bound(lv.code),
                mds, R, R * d, classify_rs(lv.code, q, cap=chain.cap),
            )
        )
    return TradeoffTable(tuple(rows))


class Optimum(NamedTuple):
    i_star_formula: int
    i_star_empirical: int
    agrees: bool


def formula_index(n: int, g: int, m: int) -> int:
    """min(m, floor((n + g - 1) / 2))."""
    return min(m, (n + g - 1) // 2)


def optimal_index(chain: FiltrationChain) -> Optimum:
    """Predicted vs observed Q-maximiser; agreement is judged on Q values.

    The empirical index is the smallest argmax, which favours the larger
    distance among equally scored levels.
    """
    qs = [row.Q for row in tradeoff(chain).rows]
    best = max(qs)
    emp = qs.index(best)
    formula = formula_index(chain.n, chain.g, chain.m)
    return Optimum(formula, emp, qs[formula] == best)


def distance_premise_breaks(chain: FiltrationChain) -> list[int]:
    """Levels where the assumed distance d_i = n - i fails."""
    return [lv.i for lv, d in zip(chain.levels, chain.distances()) if d != chain.n - lv.deg]


# -- MDS depth -----------------------------------------------------------------

def _aligned_levels(chain: FiltrationChain) -> dict[int, ChainLevel]:
    # index j = k - 1; for repeated k keep the largest bundle
    aligned: dict[int, ChainLevel] = {}
    for lv in chain.levels:
        aligned[lv.k - 1] = lv
    return aligned


def mds_depth(chain: FiltrationChain) -> int:
    """Largest aligned index j with deg = j + g and vanishing H^1.

    Levels are re-indexed by j = dim C - 1; H^1 = 0 is detected as
    l(D) = deg D - g + 1.
    """
    g = chain.g
    hits = [
        j
        for j, lv in _aligned_levels(chain).items()
        if lv.deg == j + g and lv.basis.dim == lv.deg - g + 1
    ]
    if not hits:
        raise HypothesisUnmet("no level satisfies dim C_j = j + 1 with deg = j + g")
    return max(hits)


def mds_profile(chain: FiltrationChain) -> list[dict]:
    """Per-level MDS status alongside the claim 'MDS iff g = 0'."""
    aligned = {id(lv): j for j, lv in _aligned_levels(chain).items()}
    out = []
    for lv in chain.levels:
        d = min_distance(lv.code, chain.cap)
        mds = d == singleton_bound(lv.code)
        out.append(
            {
                "i": lv.i,
                "deg": lv.deg,
                "aligned_index": aligned.get(id(lv)),
                "dim": lv.basis.dim,
                "k": lv.k,
                "d": d,
                "singleton": singleton_bound(lv.code),
                "mds": mds,
                "h1_zero": lv.basis.dim == lv.deg - chain.g + 1,
                "mds_iff_genus0_holds": mds == (chain.g == 0),
            }
        )
    return out


# -- comparisons and classification -------------------------------------------

def dominates(a: LinearCode, b: LinearCode, cap: int = DEFAULT_DISTANCE_CAP) -> bool:
    """a is at least as good in rate and distance and strictly better in one."""
    if a.n != b.n:
        raise LengthMismatch(f"lengths differ: {a.n} vs {b.n}")
    da, db = min_distance(a, cap), min_distance(b, cap)
    return a.k >= b.k and da >= db and (a.k > b.k or da > db)


def classify_rs(code: LinearCode, q: int | None = None, cap: int = DEFAULT_DISTANCE_CAP) -> RSClass:
    """Decidable length/dimension criteria only; no equivalence search."""
    q = code.field.q if q is None else q
    if code.k == 0 or min_distance(code, cap) != singleton_bound(code):
        return RSClass.UNKNOWN
    if code.n > q + 1 or code.k > q:
        return RSClass.NON_RS
    return RSClass.RS_EQUIVALENT


@dataclass(frozen=True)
class PuncturedFamily:
    sub: FiltrationChain
    full: FiltrationChain

    def classification(self) -> dict[str, list[str]]:
        return {
            "sub": [str(row.rs_class) for row in tradeoff(self.sub).rows],
            "full": [str(row.rs_class) for row in tradeoff(self.full).rows],
        }

    def to_json(self) -> dict:
        return {
            "sub": tradeoff(self.sub).to_json(),
            "full": tradeoff(self.full).to_json(),
            "classification": self.classification(),
        }


def punctured_family(
    curve: CurveSpec,
    gamma_full: EvaluationSet,
    gamma_sub: EvaluationSet,
    m: int,
    cap: int = DEFAULT_DISTANCE_CAP,
) -> PuncturedFamily:
    """Chains over a short evaluation set and the full one, same divisor tower.

    The short chain stops at min(m, |sub| - 1) so that it stays below length.
    """
    if not set(gamma_sub.points) <= set(gamma_full.points):
        raise NotASubset("gamma_sub must be contained in gamma_full")
    sub = build_chain(curve, gamma_sub, min(m, gamma_sub.n - 1), cap)
    full = build_chain(curve, gamma_full, m, cap)
    return PuncturedFamily(sub, full)


# -- discrepancy report ---------------------------------------------------------

def discrepancies(chain: FiltrationChain) -> list[dict]:
    """Structured list of levels where computed parameters contradict the
    idealised chain (d_i = n - i, MDS iff g = 0, predicted optimum)."""
    out = []
    for lv, d in zip(chain.levels, chain.distances()):
        if d != chain.n - lv.deg:
            out.append({"kind": "distance_premise", "i": lv.i, "computed_d": d, "expected_d": chain.n - lv.deg})
    for rec in mds_profile(chain):
        if not rec["mds_iff_genus0_holds"]:
            out.append({"kind": "mds_iff_genus0", "i": rec["i"], "mds": rec["mds"], "genus": chain.g})
    opt = optimal_index(chain)
    if not opt.agrees:
        out.append({"kind": "optimum", **opt._asdict()})
    return out


def select_points(gamma: EvaluationSet, indices: Sequence[int]) -> EvaluationSet:
    return EvaluationSet(gamma.curve, tuple(gamma.points[i] for i in indices))
