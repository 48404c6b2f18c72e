"""Depth arithmetic for line bundles on surfaces, and the monomial chain on P^2."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParityViolation


@dataclass(frozen=True)
class SurfaceNumerics:
    """c1(L)^2, c1(L).c1(K_S) and chi(O_S) as plain integers.

    Positivity of L is the caller's hypothesis; nothing here checks it.
    """

    c1_sq: int
    c1_dot_K: int
    chi: int

    @classmethod
    def p2(cls, d: int) -> SurfaceNumerics:
        """O(d) on P^2: H^2 = 1, K = -3H, chi = 1."""
        return cls(d * d, -3 * d, 1)

    def dual(self) -> SurfaceNumerics:
        return SurfaceNumerics(self.c1_sq, -self.c1_dot_K, self.chi)

    def to_json(self) -> dict:
        return {"c1_sq": self.c1_sq, "c1_dot_K": self.c1_dot_K, "chi": self.chi}


def _half(value: int) -> int:
    if value % 2:
        raise ParityViolation(f"c1^2 -/+ c1.K = {value} is odd; intersection numbers are inconsistent")
    return value // 2


def depth_formula(n: SurfaceNumerics) -> int:
    """(c1^2 - c1.K) / 2 + chi."""
    return _half(n.c1_sq - n.c1_dot_K) + n.chi


def dual_depth_formula(n: SurfaceNumerics) -> int:
    """(c1^2 + c1.K) / 2 + chi; a value <= 0 reads as 'no sections'."""
    return _half(n.c1_sq + n.c1_dot_K) + n.chi


def formula_report(n: SurfaceNumerics) -> dict:
    return {"inputs": n.to_json(), "h": depth_formula(n), "h_dual": dual_depth_formula(n)}


@dataclass(frozen=True)
class MonomialFiltration:
    d: int
    monomials: tuple[tuple[int, int, int], ...]

    def __len__(self):
        return len(self.monomials)

    def names(self) -> list[str]:
        return [monomial_name(m) for m in self.monomials]

    def to_json(self) -> dict:
        return {"d": self.d, "h": len(self), "monomials": [list(m) for m in self.monomials]}


def monomial_name(mono: tuple[int, int, int]) -> str:
    parts = []
    for var, e in zip("xyz", mono):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "".join(parts) or "1"


def p2_filtration(d: int) -> MonomialFiltration:
    """Degree-d monomials in graded lex order x > y > z; one step per monomial."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    monos = [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]
    return MonomialFiltration(d, tuple(monos))


@dataclass(frozen=True)
class Restriction:
    restricted_dim: int
    depth: int
    inequality_holds: bool
    dead_steps: tuple[int, ...]

    @property
    def equality(self) -> bool:
        return self.restricted_dim == self.depth

    def to_json(self) -> dict:
        return {
            "restricted_dim": self.restricted_dim,
            "depth": self.depth,
            "inequality_holds": self.inequality_holds,
            "equality": self.equality,
            "dead_steps": list(self.dead_steps),
        }


def restrict_to_line(filtration: MonomialFiltration) -> Restriction:
    """Restrict to the line z = 0.

    Monomials containing z vanish identically on the line, so their steps
    die; the survivors x^i y^(d-i) are independent there.
    """
    dead = tuple(idx for idx, (_, _, k) in enumerate(filtration.monomials) if k > 0)
    restricted = len(filtration) - len(dead)
    return Restriction(restricted, len(filtration), restricted <= len(filtration), dead)
