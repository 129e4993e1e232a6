"""Dense univariate polynomials over a finite field, and the ring S = F[y]/<y^l - 1>.

A :class:`Poly` stores integer field codes low-degree-first with no trailing
zeros; the zero polynomial has empty coefficients and degree ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import FieldElem, FieldError, FieldSpec


@dataclass(frozen=True, repr=False)
class Poly:
    field: FieldSpec
    codes: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        codes = tuple(self.codes)
        end = len(codes)
        while end and codes[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "codes", codes[:end])

    @classmethod
    def from_coeffs(cls, field: FieldSpec, coeffs: Iterable) -> Poly:
        """Build from integers, m-vectors or FieldElems, low-degree-first."""
        codes = []
        for c in coeffs:
            if isinstance(c, FieldElem):
                if c.field != field:
                    raise FieldError(f"field mismatch: {c.field} vs {field}")
                codes.append(c.value)
            else:
                codes.append(field(c).value)
        return cls(field, tuple(codes))

    @classmethod
    def zero(cls, field: FieldSpec) -> Poly:
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> Poly:
        return cls(field, (1,))

    @classmethod
    def monomial(cls, field: FieldSpec, k: int, coef: int = 1) -> Poly:
        return cls(field, (0,) * k + (coef,))

    @property
    def coeffs(self) -> list[FieldElem]:
        return [FieldElem(self.field, c) for c in self.codes]

    @property
    def deg(self) -> int | None:
        return len(self.codes) - 1 if self.codes else None

    @property
    def is_zero(self) -> bool:
        return not self.codes

    @property
    def lead(self) -> int:
        return self.codes[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.codes) and self.codes[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.codes)

    def _same(self, other: Poly) -> None:
        if self.field != other.field:
            raise FieldError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: Poly) -> Poly:
        self._same(other)
        return Poly(self.field, _add(self.field, self.codes, other.codes))

    def __sub__(self, other: Poly) -> Poly:
        self._same(other)
        return Poly(self.field, _sub(self.field, self.codes, other.codes))

    def __neg__(self) -> Poly:
        F = self.field
        return Poly(F, tuple(F.neg(c) for c in self.codes))

    def __mul__(self, other: Poly) -> Poly:
        self._same(other)
        return Poly(self.field, _mul(self.field, self.codes, other.codes))

    def scale(self, c: int) -> Poly:
        F = self.field
        return Poly(F, tuple(F.mul(c, x) for x in self.codes))

    def shift(self, k: int) -> Poly:
        """Multiply by y^k."""
        if not self.codes:
            return self
        return Poly(self.field, (0,) * k + self.codes)

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._same(other)
        q, r = _divmod(self.field, self.codes, other.codes)
        return Poly(self.field, q), Poly(self.field, r)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if not self.codes:
            return self
        return self.scale(self.field.inv(self.codes[-1]))

    def __call__(self, x: int) -> int:
        """Evaluate at a field code (Horner)."""
        F = self.field
        acc = 0
        for c in reversed(self.codes):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def to_literal(self) -> list:
        """Coefficient list low-degree-first: ints for m = 1, m-lists otherwise."""
        F = self.field
        if F.m == 1:
            return list(self.codes)
        return [list(F.rep(c)) for c in self.codes]

    def __str__(self) -> str:
        return format_poly(self, "y")

    def __repr__(self) -> str:
        return f"Poly({self.to_literal()})"


def format_poly(a: Poly, var: str = "y") -> str:
    if a.is_zero:
        return "0"
    F = a.field
    terms = []
    for k, c in enumerate(a.codes):
        if c == 0:
            continue
        if F.m == 1:
            coef = str(c)
        else:
            rep = F.rep(c)
            parts = [
                (str(v) if i == 0 else ("t" if i == 1 else f"t^{i}") if v == 1
                 else f"{v}*" + ("t" if i == 1 else f"t^{i}"))
                for i, v in enumerate(rep) if v
            ]
            coef = parts[0] if len(parts) == 1 else "(" + " + ".join(parts) + ")"
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            terms.append(coef)
        elif coef == "1":
            terms.append(mono)
        else:
            terms.append(f"{coef}*{mono}")
    return " + ".join(terms)


# -- code-level kernels ----------------------------------------------------

def _add(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return tuple(out)


def _sub(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = F.sub(out[i], c)
    return tuple(out)


def _mul(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return tuple(out)


def _divmod(F: FieldSpec, a: Sequence[int], b: Sequence[int]):
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    while r and r[-1] == 0:
        r.pop()
    db = len(b) - 1
    if len(r) - 1 < db:
        return (), tuple(r)
    inv_lead = F.inv(b[-1])
    q = [0] * (len(r) - db)
    while len(r) - 1 >= db:
        shift = len(r) - 1 - db
        coef = F.mul(r[-1], inv_lead)
        q[shift] = coef
        for i, bc in enumerate(b):
            if bc:
                r[shift + i] = F.sub(r[shift + i], F.mul(coef, bc))
        while r and r[-1] == 0:
            r.pop()
    return tuple(q), tuple(r)


# -- gcd -----------------------------------------------------------------

def gcd_monic(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    a._same(b)
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, u, v) with g = gcd_monic(a, b) and u*a + v*b = g."""
    a._same(b)
    F = a.field
    if a.is_zero and b.is_zero:
        raise ZeroDivisionError("xgcd(0, 0) is undefined")
    r0, r1 = a, b
    u0, u1 = Poly.one(F), Poly.zero(F)
    v0, v1 = Poly.zero(F), Poly.one(F)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    k = F.inv(r0.lead)
    return r0.scale(k), u0.scale(k), v0.scale(k)


# -- the ring S ------------------------------------------------------------

def cyclic_modulus(field: FieldSpec, ell: int) -> Poly:
    """y^l - 1."""
    return Poly(field, (field.neg(1),) + (0,) * (ell - 1) + (1,))


def fold(a: Poly, ell: int) -> Poly:
    """Canonical representative of a modulo y^l - 1 (degree < l)."""
    if ell < 1:
        raise ValueError(f"ring length must be >= 1, got {ell}")
    if len(a.codes) <= ell:
        return a
    F = a.field
    out = list(a.codes[:ell])
    for k in range(ell, len(a.codes)):
        c = a.codes[k]
        if c:
            out[k % ell] = F.add(out[k % ell], c)
    return Poly(F, tuple(out))


@dataclass(frozen=True)
class SElem:
    """A residue in S = F[y]/<y^l - 1>; ``poly`` always has degree < ``ell``."""

    poly: Poly
    ell: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "poly", fold(self.poly, self.ell))

    @property
    def field(self) -> FieldSpec:
        return self.poly.field

    def _same(self, other: SElem) -> None:
        if self.ell != other.ell:
            raise ValueError(f"ring mismatch: l={self.ell} vs l={other.ell}")

    def __add__(self, other: SElem) -> SElem:
        self._same(other)
        return SElem(self.poly + other.poly, self.ell)

    def __sub__(self, other: SElem) -> SElem:
        self._same(other)
        return SElem(self.poly - other.poly, self.ell)

    def __mul__(self, other: SElem) -> SElem:
        self._same(other)
        return SElem(self.poly * other.poly, self.ell)

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __str__(self) -> str:
        return str(self.poly)


def s_reduce(a: Poly, ell: int) -> SElem:
    return SElem(a, ell)


def s_ideal_generator(gens: Sequence[SElem], ell: int, field: FieldSpec | None = None) -> Poly:
    """Monic generator of the ideal <gens> of S, as a divisor of y^l - 1.

    The zero ideal (including an empty ``gens``) is generated by y^l - 1.
    """
    if field is None:
        if not gens:
            raise ValueError("field required for an empty generator list")
        field = gens[0].field
    g = cyclic_modulus(field, ell)
    for e in gens:
        if e.ell != ell:
            raise ValueError(f"ring mismatch: l={e.ell} vs l={ell}")
        g = gcd_monic(g, e.poly)
    return g
