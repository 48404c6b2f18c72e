"""Truncated formal arcs on P^1 and elliptic curves.

An arc centred at an affine point is a pair of power series (x(t), y(t))
modulo t^N satisfying the curve equation modulo t^N.  One coordinate is
prescribed (by default x(t) = x0 + t) and the other is Hensel-lifted one
coefficient at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .curve import CurvePoint, CurveSpec, affine_points, on_curve
from .errors import PointNotOnCurve, VerticalTangent
from .gf import FieldElement, FieldSpec

DEFAULT_N = 8

Series = tuple[FieldElement, ...]
Function = Mapping[tuple[int, int], object]


# -- truncated series -------------------------------------------------------------

def s_add(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> list[FieldElement]:
    return [x + y for x, y in zip(a, b)]


def s_mul(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> list[FieldElement]:
    N = len(a)
    F = a[0].spec
    out = [F.zero] * N
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j in range(N - i):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def s_pow(a: Sequence[FieldElement], e: int) -> list[FieldElement]:
    F = a[0].spec
    out = [F.one] + [F.zero] * (len(a) - 1)
    for _ in range(e):
        out = s_mul(out, a)
    return out


def s_scale(a: Sequence[FieldElement], c: FieldElement) -> list[FieldElement]:
    return [c * x for x in a]


def valuation(a: Sequence[FieldElement]) -> int:
    """Index of the first nonzero coefficient; len(a) when all vanish."""
    return next((i for i, c in enumerate(a) if not c.is_zero()), len(a))


def _pad(field: FieldSpec, coeffs: Sequence, N: int) -> list[FieldElement]:
    out = [field(c) for c in coeffs][:N]
    return out + [field.zero] * (N - len(out))


def _hensel(
    apply: Callable[[list[FieldElement]], list[FieldElement]],
    slope: FieldElement,
    z0: FieldElement,
    target: Sequence[FieldElement],
) -> list[FieldElement]:
    """Solve apply(z) = target mod t^N with z(0) = z0, given apply'(z0) = slope != 0.

    The t^n coefficient of apply(z) is slope * z_n plus terms in z_0..z_{n-1},
    so each z_n is fixed by one linear equation.
    """
    N = len(target)
    F = z0.spec
    z = [z0] + [F.zero] * (N - 1)
    inv = slope.inv()
    for n in range(1, N):
        partial = apply(z)[n]
        z[n] = (target[n] - partial) * inv
    return z


@dataclass(frozen=True)
class TruncatedArc:
    curve: CurveSpec
    center: CurvePoint
    N: int
    x_series: Series
    y_series: Series | None = None

    def to_json(self) -> dict:
        return {
            "center": self.center.to_json(),
            "N": self.N,
            "x_series": [c.to_json() for c in self.x_series],
            "y_series": None if self.y_series is None else [c.to_json() for c in self.y_series],
        }

    def residual(self) -> list[FieldElement]:
        """y^2 - x^3 - a x - b along the arc (all zero for a valid arc)."""
        if not self.curve.is_elliptic:
            return [self.curve.field.zero] * self.N
        x, y = list(self.x_series), list(self.y_series)
        lhs = s_mul(y, y)
        rhs = s_add(s_add(s_mul(s_mul(x, x), x), s_scale(x, self.curve.a)),
                    [self.curve.b] + [self.curve.field.zero] * (self.N - 1))
        return [u - v for u, v in zip(lhs, rhs)]


def lift_arc(
    curve: CurveSpec,
    center: CurvePoint,
    N: int = DEFAULT_N,
    x_jet: Sequence | None = None,
    y_jet: Sequence | None = None,
) -> TruncatedArc:
    """Arc through ``center``: x(t) prescribed (default x0 + t), y(t) lifted.

    At points with y0 = 0 the x coordinate is not a local parameter; pass
    ``y_jet`` instead and x(t) is lifted from it.
    """
    if N < 2:
        raise ValueError("truncation order must be >= 2")
    if center.is_infinity:
        raise ValueError("arcs centred at infinity are not supported")
    if not on_curve(curve, center):
        raise PointNotOnCurve(f"{center} is not on {curve}")
    F = curve.field
    x0 = center.x
    if not curve.is_elliptic:
        xs = _pad(F, x_jet, N) if x_jet is not None else _pad(F, [x0, 1], N)
        if xs[0] != x0:
            raise ValueError("x_jet must start at the center")
        return TruncatedArc(curve, center, N, tuple(xs))

    y0 = center.y
    cubic = lambda x: s_add(  # noqa: E731
        s_add(s_mul(s_mul(x, x), x), s_scale(x, curve.a)), [curve.b] + [F.zero] * (N - 1)
    )
    if y_jet is not None:
        ys = _pad(F, y_jet, N)
        if ys[0] != y0:
            raise ValueError("y_jet must start at the center")
        slope = 3 * x0 * x0 + curve.a
        if slope.is_zero():
            raise VerticalTangent(f"y is not a local parameter at {center}")
        xs = _hensel(cubic, slope, x0, s_mul(ys, ys))
        return TruncatedArc(curve, center, N, tuple(xs), tuple(ys))

    if (2 * y0).is_zero():
        raise VerticalTangent(f"x is not a local parameter at {center}; supply y_jet")
    xs = _pad(F, x_jet, N) if x_jet is not None else _pad(F, [x0, 1], N)
    if xs[0] != x0:
        raise ValueError("x_jet must start at the center")
    ys = _hensel(lambda y: s_mul(y, y), 2 * y0, y0, cubic(xs))
    return TruncatedArc(curve, center, N, tuple(xs), tuple(ys))


def default_arc(curve: CurveSpec, center: CurvePoint, N: int = DEFAULT_N) -> TruncatedArc:
    """x-led arc, or y-led at points where the tangent is vertical."""
    if curve.is_elliptic and (2 * center.y).is_zero():
        return lift_arc(curve, center, N, y_jet=[center.y, 1])
    return lift_arc(curve, center, N)


# -- vanishing orders ---------------------------------------------------------------

def compose(arc: TruncatedArc, f: Function) -> list[FieldElement]:
    """Pull back a polynomial function sum c_ij x^i y^j along the arc."""
    F = arc.curve.field
    total = [F.zero] * arc.N
    powers: dict[tuple[int, int], list[FieldElement]] = {}

    def power(which: int, e: int) -> list[FieldElement]:
        if (which, e) not in powers:
            base = list(arc.x_series if which == 0 else arc.y_series)
            powers[which, e] = [F.one] + [F.zero] * (arc.N - 1) if e == 0 else s_mul(power(which, e - 1), base)
        return powers[which, e]

    for (i, j), c in f.items():
        c = F(c)
        if c.is_zero():
            continue
        if j and arc.y_series is None:
            raise ValueError("y is not a coordinate on P^1")
        term = power(0, i)
        if j:
            term = s_mul(term, power(1, j))
        total = s_add(total, s_scale(term, c))
    return total


def ord_along(arc: TruncatedArc, f: Function) -> int:
    """t-adic order of f along the arc; the value N stands for '>= N'."""
    return valuation(compose(arc, f))


def is_truncated(arc: TruncatedArc, order: int) -> bool:
    return order >= arc.N


def mul_functions(f: Function, g: Function, field: FieldSpec) -> dict[tuple[int, int], FieldElement]:
    out: dict[tuple[int, int], FieldElement] = {}
    for (i1, j1), c1 in f.items():
        for (i2, j2), c2 in g.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, field.zero) + field(c1) * field(c2)
    return out


def local_equation(curve: CurveSpec, pt: CurvePoint) -> tuple[dict, list[CurvePoint]]:
    """A uniformiser at ``pt`` and the other affine points where it also vanishes.

    x - c on P^1 and at points with 2d != 0; y - d at points of order two.
    """
    F = curve.field
    c = pt.x
    if not curve.is_elliptic or not (2 * pt.y).is_zero():
        eq = {(1, 0): F.one, (0, 0): -c}
        others = [p for p in affine_points(curve) if p.x == c and p != pt]
        return eq, others
    eq = {(0, 1): F.one, (0, 0): -pt.y}
    others = [p for p in affine_points(curve) if p.y == pt.y and p != pt]
    return eq, others


def ord_of_point(arc: TruncatedArc, pt: CurvePoint) -> int:
    """Contact order of the arc with the degree-one divisor ``pt``."""
    eq, others = local_equation(arc.curve, pt)
    if arc.center in others:
        return 0
    return ord_along(arc, eq)


@dataclass(frozen=True)
class ContactProfile:
    center: CurvePoint
    N: int
    orders: tuple[tuple[CurvePoint, int], ...]

    @property
    def count(self) -> int:
        return sum(1 for _, o in self.orders if o >= 1)

    @property
    def truncated(self) -> bool:
        return any(o >= self.N for _, o in self.orders)

    def to_json(self) -> dict:
        return {
            "center": self.center.to_json(),
            "N": self.N,
            "orders": [{"point": p.to_json(), "ord": o, "at_least": o >= self.N} for p, o in self.orders],
            "count": self.count,
        }


def contact_profile(arc: TruncatedArc, divisor_points: Sequence[CurvePoint]) -> ContactProfile:
    for pt in divisor_points:
        if pt.is_infinity:
            raise ValueError("divisor points must be affine")
    return ContactProfile(arc.center, arc.N, tuple((pt, ord_of_point(arc, pt)) for pt in divisor_points))


def contact_count(arc: TruncatedArc, divisor_points: Sequence[CurvePoint]) -> int:
    """#{i : ord(D_i) >= 1} for degree-one divisors D_i = P_i."""
    return contact_profile(arc, divisor_points).count


def max_contact(
    curve: CurveSpec, divisor_points: Sequence[CurvePoint], N: int = DEFAULT_N
) -> tuple[int, CurvePoint | None]:
    """Best contact count over arcs centred at every affine rational point.

    For orders >= 1 only the centre matters, so one arc per point suffices.
    The witness is the first centre (canonical order) attaining the maximum.
    """
    if not divisor_points:
        return 0, None
    best, witness = -1, None
    for center in affine_points(curve):
        cnt = contact_count(default_arc(curve, center, N), divisor_points)
        if cnt > best:
            best, witness = cnt, center
    return best, witness


def max_multiplicity(divisor_points: Sequence[CurvePoint]) -> int:
    counts: dict[CurvePoint, int] = {}
    for pt in divisor_points:
        counts[pt] = counts.get(pt, 0) + 1
    return max(counts.values(), default=0)


# -- randomized sweeps ------------------------------------------------------------------

def random_function(rng, field: FieldSpec, elliptic: bool, max_deg: int = 3) -> dict[tuple[int, int], FieldElement]:
    monos = [(i, j) for i in range(max_deg + 1) for j in ((0, 1) if elliptic else (0,))]
    f = {mono: field.from_index(rng.randrange(field.q)) for mono in monos if rng.random() < 0.6}
    return {k: v for k, v in f.items() if not v.is_zero()}


def random_arc(rng, curve: CurveSpec, N: int = DEFAULT_N) -> TruncatedArc:
    """Arc at a random affine point with a random jet in the led coordinate."""
    F = curve.field
    center = rng.choice(affine_points(curve))
    tail = [F.from_index(rng.randrange(F.q)) for _ in range(N - 2)]
    lead = F.from_index(rng.randrange(1, F.q))
    if curve.is_elliptic and (2 * center.y).is_zero():
        return lift_arc(curve, center, N, y_jet=[center.y, lead] + tail)
    return lift_arc(curve, center, N, x_jet=[center.x, lead] + tail)


def lift_sweep(rng, curve: CurveSpec, trials: int = 100, N: int = DEFAULT_N) -> int:
    """Number of random lifts whose residual is nonzero (0 means all valid)."""
    return sum(1 for _ in range(trials) if any(not c.is_zero() for c in random_arc(rng, curve, N).residual()))


def additivity_sweep(rng, curve: CurveSpec, pairs: int = 100, N: int = DEFAULT_N) -> tuple[int, int]:
    """(pairs tested, failures) of ord(fg) = ord(f) + ord(g) with both orders < N/2."""
    F = curve.field
    tested = failures = 0
    while tested < pairs:
        arc = random_arc(rng, curve, N)
        f = random_function(rng, F, curve.is_elliptic)
        g = random_function(rng, F, curve.is_elliptic)
        # shift by the value at the center so that orders >= 1 occur too
        if rng.random() < 0.5 and f:
            f = dict(f)
            f[(0, 0)] = F(f.get((0, 0), 0)) - compose(arc, f)[0]
        of, og = ord_along(arc, f), ord_along(arc, g)
        if 2 * of >= N or 2 * og >= N:
            continue
        tested += 1
        if ord_along(arc, mul_functions(f, g, F)) != of + og:
            failures += 1
    return tested, failures
