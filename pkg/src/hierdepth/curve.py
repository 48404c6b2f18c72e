"""Rational points on P^1 and short-Weierstrass elliptic curves over GF(q)."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import FieldMismatch, PointNotOnCurve, SingularCurve
from .gf import FieldElement, FieldSpec, element_from_json, enumerate_field, square_roots

P1 = "p1"
ELLIPTIC = "elliptic"


@dataclass(frozen=True)
class CurveSpec:
    kind: str
    field: FieldSpec
    a: FieldElement | None = None
    b: FieldElement | None = None

    def __post_init__(self):
        if self.kind == P1:
            object.__setattr__(self, "a", None)
            object.__setattr__(self, "b", None)
            return
        if self.kind != ELLIPTIC:
            raise ValueError(f"unknown curve kind {self.kind!r}")
        if self.field.p in (2, 3):
            raise SingularCurve("short Weierstrass form needs characteristic other than 2 and 3")
        if self.a is None or self.b is None:
            raise ValueError("elliptic curves need coefficients a and b")
        object.__setattr__(self, "a", self.field(self.a))
        object.__setattr__(self, "b", self.field(self.b))
        if (4 * self.a**3 + 27 * self.b**2).is_zero():
            raise SingularCurve(f"4a^3 + 27b^2 = 0 for a={self.a}, b={self.b}")

    @classmethod
    def projective_line(cls, field: FieldSpec) -> CurveSpec:
        return cls(P1, field)

    @classmethod
    def elliptic(cls, field: FieldSpec, a, b) -> CurveSpec:
        return cls(ELLIPTIC, field, field(a), field(b))

    @property
    def genus(self) -> int:
        return 0 if self.kind == P1 else 1

    @property
    def is_elliptic(self) -> bool:
        return self.kind == ELLIPTIC

    def rhs(self, x: FieldElement) -> FieldElement:
        """x^3 + a x + b."""
        return x * x * x + self.a * x + self.b

    def point(self, x, y=None) -> CurvePoint:
        """Build an affine point from ints or elements; checks membership."""
        pt = CurvePoint(self.field(x), None if y is None else self.field(y))
        if not on_curve(self, pt):
            raise PointNotOnCurve(f"{pt} is not on {self}")
        return pt

    def __str__(self):
        if self.kind == P1:
            return f"P1/{self.field!r}"
        return f"y^2 = x^3 + {self.a}x + {self.b} over {self.field!r}"

    def to_json(self) -> dict:
        out = {"kind": self.kind, **self.field.to_json()}
        if self.is_elliptic:
            out["a"] = self.a.to_json()
            out["b"] = self.b.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict) -> CurveSpec:
        field = FieldSpec.from_json(data)
        if data["kind"] == P1:
            return cls(P1, field)
        return cls(ELLIPTIC, field, element_from_json(field, data["a"]), element_from_json(field, data["b"]))


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y), affine point x of P^1 (y is None), or the point at infinity."""

    x: FieldElement | None = None
    y: FieldElement | None = None

    @classmethod
    def infinity(cls) -> CurvePoint:
        return INFINITY

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def sort_key(self) -> tuple:
        if self.x is None:
            return (0,)
        return (1, self.x.index, -1 if self.y is None else self.y.index)

    def __lt__(self, other: CurvePoint):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if self.is_infinity:
            return "inf"
        if self.y is None:
            return f"({self.x})"
        return f"({self.x},{self.y})"

    __repr__ = __str__

    def to_json(self):
        if self.is_infinity:
            return "inf"
        return {"x": self.x.to_json(), "y": None if self.y is None else self.y.to_json()}


INFINITY = CurvePoint()


def point_from_json(curve: CurveSpec, data) -> CurvePoint:
    if data == "inf":
        return INFINITY
    x = element_from_json(curve.field, data["x"])
    y = None if data.get("y") is None else element_from_json(curve.field, data["y"])
    return CurvePoint(x, y)


def on_curve(spec: CurveSpec, pt: CurvePoint) -> bool:
    if pt.is_infinity:
        return True
    for c in (pt.x, pt.y):
        if c is not None and c.spec != spec.field:
            raise FieldMismatch(f"{pt} has coordinates outside {spec.field!r}")
    if spec.kind == P1:
        return pt.y is None
    if pt.y is None:
        return False
    return pt.y * pt.y == spec.rhs(pt.x)


@functools.lru_cache(maxsize=None)
def _rational_points(spec: CurveSpec) -> tuple[CurvePoint, ...]:
    xs = enumerate_field(spec.field)
    if spec.kind == P1:
        return (INFINITY,) + tuple(CurvePoint(x) for x in xs)
    roots = square_roots(spec.field)
    pts = [INFINITY]
    for x in xs:
        for y in roots.get(spec.rhs(x), ()):
            pts.append(CurvePoint(x, y))
    return tuple(pts)


def rational_points(spec: CurveSpec) -> list[CurvePoint]:
    """All GF(q)-points: infinity first, then affine points ordered by (x, y)."""
    return list(_rational_points(spec))


def affine_points(spec: CurveSpec) -> list[CurvePoint]:
    return [pt for pt in _rational_points(spec) if not pt.is_infinity]


def ec_neg(spec: CurveSpec, P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    return CurvePoint(P.x, -P.y)


def ec_add(spec: CurveSpec, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Chord-tangent addition with infinity as the identity."""
    if not spec.is_elliptic:
        raise ValueError("group law is defined for elliptic curves only")
    for pt in (P, Q):
        if not on_curve(spec, pt):
            raise PointNotOnCurve(f"{pt} is not on {spec}")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if (P.y + Q.y).is_zero():
            return INFINITY
        lam = (3 * P.x * P.x + spec.a) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return CurvePoint(x3, y3)


class Divisor:
    """Finite formal sum of rational points with integer multiplicities."""

    __slots__ = ("_support",)

    def __init__(self, support: Mapping[CurvePoint, int] | Iterable[tuple[CurvePoint, int]] = ()):
        items = support.items() if isinstance(support, Mapping) else support
        acc: dict[CurvePoint, int] = {}
        for pt, m in items:
            acc[pt] = acc.get(pt, 0) + int(m)
        self._support = tuple(sorted(((pt, m) for pt, m in acc.items() if m), key=lambda t: t[0].sort_key()))

    @classmethod
    def at(cls, pt: CurvePoint, m: int = 1) -> Divisor:
        return cls({pt: m})

    @property
    def support(self) -> dict[CurvePoint, int]:
        return dict(self._support)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self._support)

    def multiplicity(self, pt: CurvePoint) -> int:
        return self.support.get(pt, 0)

    def is_effective(self) -> bool:
        return all(m > 0 for _, m in self._support)

    def is_zero(self) -> bool:
        return not self._support

    def __add__(self, other: Divisor) -> Divisor:
        return Divisor(list(self._support) + list(other._support))

    def __neg__(self) -> Divisor:
        return Divisor([(pt, -m) for pt, m in self._support])

    def __sub__(self, other: Divisor) -> Divisor:
        return self + (-other)

    def __rmul__(self, n: int) -> Divisor:
        return Divisor([(pt, n * m) for pt, m in self._support])

    def precedes(self, other: Divisor) -> bool:
        """D < D' iff D' - D is effective and nonzero."""
        diff = other - self
        return not diff.is_zero() and diff.is_effective()

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._support == other._support

    def __hash__(self):
        return hash(self._support)

    def __repr__(self):
        if not self._support:
            return "0"
        return " + ".join(f"{m}*{pt}" for pt, m in self._support)

    def to_json(self) -> list:
        return [{"point": pt.to_json(), "mult": m} for pt, m in self._support]
