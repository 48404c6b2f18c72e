"""Exact arithmetic in GF(p) and GF(p^k).

An element of GF(p^k) is stored as its coefficient tuple ``rep`` of length k,
lowest degree first, with respect to a monic irreducible ``modulus`` (also
lowest degree first, length k + 1).  Every element also has an integer
``index`` = sum(rep[i] * p**i); the canonical element order is by index, so
GF(4) enumerates as 0, 1, a, a + 1.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CompositeModulus, DivisionByZero, ReducibleModulus, SpecMismatch

MAX_P = 2**31
MAX_Q = 2**16


def is_prime(n: int) -> bool:
    """Trial division; adequate for p <= 2**31."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# -- dense polynomials over GF(p), lowest degree first ----------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo m over GF(p); m must have a nonzero leading coefficient."""
    a = _trim([c % p for c in a])
    m = _trim([c % p for c in m])
    dm = len(m) - 1
    lead_inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= k/2."""
    k = len(modulus) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not poly_mod(modulus, list(low) + [1], p):
                return False
    return True


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible polynomial of degree k.

    Candidates are ordered by their integer code sum(c_i p^i) over the low
    coefficients, the same order used for field elements.
    """
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        cand = low + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise ReducibleModulus(f"no irreducible polynomial of degree {k} over GF({p})")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^k) given by a prime p and a monic irreducible modulus of degree k."""

    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p) or self.p > MAX_P:
            raise CompositeModulus(f"p = {self.p} is not a prime <= 2**31")
        if self.k < 1:
            raise ValueError("extension degree must be >= 1")
        if self.p**self.k > MAX_Q:
            raise ValueError(f"q = {self.p}^{self.k} exceeds the supported maximum {MAX_Q}")
        if self.k == 1:
            object.__setattr__(self, "modulus", None)
            return
        if self.modulus is None:
            object.__setattr__(self, "modulus", default_modulus(self.p, self.k))
            return
        mod = tuple(int(c) % self.p for c in self.modulus)
        if len(mod) != self.k + 1 or mod[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {self.k}")
        if not is_irreducible(mod, self.p):
            raise ReducibleModulus(f"modulus {mod} is reducible over GF({self.p})")
        object.__setattr__(self, "modulus", mod)

    @property
    def q(self) -> int:
        return self.p**self.k

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}, modulus={self.modulus})"

    def __call__(self, value: int | Sequence[int] | FieldElement) -> FieldElement:
        """Coerce an int (prime-subfield constant) or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise SpecMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, (int(value) % self.p,) + (0,) * (self.k - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.k:
            coeffs = poly_mod(coeffs, self.modulus, self.p) if self.k > 1 else [sum(coeffs) % self.p]
        coeffs += [0] * (self.k - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def from_index(self, index: int) -> FieldElement:
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} out of range for {self!r}")
        return FieldElement(self, tuple((index // self.p**i) % self.p for i in range(self.k)))

    @property
    def zero(self) -> FieldElement:
        return self.from_index(0)

    @property
    def one(self) -> FieldElement:
        return self.from_index(1)

    @property
    def gen(self) -> FieldElement:
        """The class of x modulo the defining polynomial (equals 1 when k = 1)."""
        if self.k == 1:
            return self.one
        return self.from_index(self.p)

    def elements(self) -> list[FieldElement]:
        return enumerate_field(self)

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(add, mul) lookup tables indexed by element index."""
        return _tables(self)

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus) if self.modulus else None}

    @classmethod
    def from_json(cls, data: dict) -> FieldSpec:
        return cls(data["p"], data.get("k", 1), tuple(data["modulus"]) if data.get("modulus") else None)


def field_new(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    return FieldSpec(p, k, tuple(modulus) if modulus is not None else None)


@dataclass(frozen=True, order=False)
class FieldElement:
    spec: FieldSpec
    rep: tuple[int, ...]

    # ints from the prime subfield mix freely with elements
    def _other(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")
            return other
        if isinstance(other, (int, np.integer)):
            return self.spec(int(other))
        return NotImplemented

    @property
    def index(self) -> int:
        p = self.spec.p
        return sum(c * p**i for i, c in enumerate(self.rep))

    def is_zero(self) -> bool:
        return not any(self.rep)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.rep, o.rep)))

    __radd__ = __add__

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple(-a % p for a in self.rep))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        s = self.spec
        p = s.p
        if s.k == 1:
            return FieldElement(s, (self.rep[0] * o.rep[0] % p,))
        prod = [0] * (2 * s.k - 1)
        for i, a in enumerate(self.rep):
            if a:
                for j, b in enumerate(o.rep):
                    prod[i + j] += a * b
        red = poly_mod(prod, s.modulus, p)
        return FieldElement(s, tuple(red) + (0,) * (s.k - len(red)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.spec.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> FieldElement:
        if self.is_zero():
            raise DivisionByZero(f"0 has no inverse in {self.spec!r}")
        return self ** (self.spec.q - 2)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.rep == self.spec(int(other)).rep
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec == other.spec and self.rep == other.rep

    def __hash__(self):
        return hash((self.spec, self.rep))

    def __lt__(self, other: FieldElement):
        return self.index < other.index

    def __repr__(self):
        if self.spec.k == 1:
            return str(self.rep[0])
        terms = []
        for i in reversed(range(self.spec.k)):
            c = self.rep[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mon = "a" if i == 1 else f"a^{i}"
                terms.append(mon if c == 1 else f"{c}{mon}")
        return "+".join(terms) or "0"

    def to_json(self):
        return self.rep[0] if self.spec.k == 1 else list(self.rep)


def element_from_json(spec: FieldSpec, value) -> FieldElement:
    return spec(value) if isinstance(value, list) else spec(int(value))


@functools.lru_cache(maxsize=None)
def _enumerate(spec: FieldSpec) -> tuple[FieldElement, ...]:
    return tuple(spec.from_index(i) for i in range(spec.q))


def enumerate_field(spec: FieldSpec) -> list[FieldElement]:
    """All q elements in canonical (index) order."""
    return list(_enumerate(spec))


@functools.lru_cache(maxsize=None)
def _tables(spec: FieldSpec) -> tuple[np.ndarray, np.ndarray]:
    q = spec.q
    els = _enumerate(spec)
    dtype = np.uint8 if q <= 256 else np.uint16
    add = np.empty((q, q), dtype=dtype)
    mul = np.empty((q, q), dtype=dtype)
    if spec.k == 1:
        r = np.arange(q, dtype=np.int64)
        add[:] = (r[:, None] + r[None, :]) % q
        mul[:] = (r[:, None] * r[None, :]) % q
    else:
        for a in els:
            for b in els:
                add[a.index, b.index] = (a + b).index
                mul[a.index, b.index] = (a * b).index
    add.setflags(write=False)
    mul.setflags(write=False)
    return add, mul


def square_roots(spec: FieldSpec) -> dict[FieldElement, list[FieldElement]]:
    """Map each square to its roots, roots listed in canonical order."""
    roots: dict[FieldElement, list[FieldElement]] = {}
    for y in enumerate_field(spec):
        roots.setdefault(y * y, []).append(y)
    return roots


def as_elements(spec: FieldSpec, values: Iterable) -> list[FieldElement]:
    return [spec(v) for v in values]
