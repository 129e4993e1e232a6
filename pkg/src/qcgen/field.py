"""Exact arithmetic in GF(p) and GF(p^m).

Elements are handled internally as integer codes: the residue
c_0 + c_1 t + ... + c_{m-1} t^{m-1} modulo the field modulus is the integer
c_0 + c_1 p + ... + c_{m-1} p^{m-1}.  For prime fields the code is just the
residue mod p.  :class:`FieldElem` wraps a code with its field and supplies
the usual operators; the hot paths in :mod:`qcgen.poly` work on bare codes.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Sequence

MAX_SEARCH_DEGREE = 4
_TABLE_LIMIT = 1024


class FieldError(ValueError):
    """Invalid field description or mismatched field operands."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# Plain coefficient-list arithmetic over GF(p), low-degree-first, used only
# to build and validate extension moduli.

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    r = [x % p for x in a]
    _trim(r)
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(r) - 1 >= db:
        coef = r[-1] * inv_lead % p
        shift = len(r) - 1 - db
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - coef * bc) % p
        _trim(r)
    return r


def _monic_polys(p: int, degree: int):
    """Monic polynomials of the given degree, in increasing integer-code order."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(reversed(low)) + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    modulus = _trim([c % p for c in modulus])
    deg = len(modulus) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for cand in _monic_polys(p, d):
            if not _zp_mod(modulus, cand, p):
                return False
    return True


def find_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree m over GF(p).

    "Smallest" means smallest integer code, i.e. coefficients compared from
    the highest non-leading degree downwards.  Returned low-degree-first.
    """
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if not 2 <= m <= MAX_SEARCH_DEGREE:
        raise FieldError(
            f"modulus search supports 2 <= m <= {MAX_SEARCH_DEGREE}, got m={m}"
        )
    for cand in _monic_polys(p, m):
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p^m); ``modulus`` is low-degree-first, None for m = 1."""

    p: int
    m: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise FieldError(f"p={self.p} is not prime")
        if not isinstance(self.m, int) or self.m < 1:
            raise FieldError(f"m must be a positive integer, got {self.m}")
        if self.m == 1:
            if self.modulus is not None:
                raise FieldError("modulus must be omitted for a prime field")
            return
        if self.modulus is None:
            raise FieldError("extension field requires a modulus")
        mod = tuple(self.modulus)
        object.__setattr__(self, "modulus", mod)
        if any(not isinstance(c, int) or not 0 <= c < self.p for c in mod):
            raise FieldError(f"modulus coefficients must lie in [0, {self.p})")
        if len(mod) != self.m + 1 or mod[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {self.m}")
        if not is_irreducible(mod, self.p):
            raise FieldError(f"modulus {list(mod)} is reducible over GF({self.p})")

    @property
    def order(self) -> int:
        return self.p ** self.m

    def __str__(self) -> str:
        return f"GF({self.p})" if self.m == 1 else f"GF({self.p}^{self.m})"

    # -- conversions -----------------------------------------------------

    def rep(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            code, c = divmod(code, self.p)
            out.append(c)
        return tuple(out)

    def code(self, rep: Sequence[int]) -> int:
        if len(rep) != self.m:
            raise FieldError(f"element of {self} needs {self.m} coordinates")
        value = 0
        for c in reversed(rep):
            if not 0 <= c < self.p:
                raise FieldError(f"coordinate {c} outside [0, {self.p})")
            value = value * self.p + c
        return value

    def __call__(self, value: int | Sequence[int]) -> FieldElem:
        """Build an element from an integer (reduced mod p) or an m-vector."""
        if isinstance(value, int):
            if self.m == 1:
                return FieldElem(self, value % self.p)
            return FieldElem(self, self.code([value % self.p] + [0] * (self.m - 1)))
        return FieldElem(self, self.code(list(value)))

    def elements(self) -> list[FieldElem]:
        return [FieldElem(self, c) for c in range(self.order)]

    # -- arithmetic on codes ----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self._tables is not None:
            return self._tables[0][a][b]
        return self.code([(x + y) % self.p for x, y in zip(self.rep(a), self.rep(b))])

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        return self.code([-x % self.p for x in self.rep(a)])

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if self._tables is not None:
            return self._tables[1][a][b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        if self.m == 1:
            return pow(a, -1, self.p)
        # a^(q-2) = a^-1 in the multiplicative group
        return self.pow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def _mul_slow(self, a: int, b: int) -> int:
        ra, rb = self.rep(a), self.rep(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(ra):
            if x:
                for j, y in enumerate(rb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _zp_mod(prod, self.modulus, self.p)
        return self.code(rem + [0] * (self.m - len(rem)))

    @functools.cached_property
    def _tables(self):
        q = self.order
        if self.m == 1 or q > _TABLE_LIMIT:
            return None
        add = [
            [self.code([(x + y) % self.p for x, y in zip(self.rep(a), self.rep(b))])
             for b in range(q)]
            for a in range(q)
        ]
        mul = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        return add, mul

    def add_table(self) -> list[list[int]]:
        """Full addition table on codes (small fields only)."""
        return [[self.add(a, b) for b in range(self.order)] for a in range(self.order)]

    def mul_table(self) -> list[list[int]]:
        return [[self.mul(a, b) for b in range(self.order)] for a in range(self.order)]


def build_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validated GF(p^m); searches for a modulus when m > 1 and none is given."""
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if not isinstance(m, int) or m < 1:
        raise FieldError(f"m must be a positive integer, got {m}")
    if m > 1 and modulus is None:
        if m > MAX_SEARCH_DEGREE:
            raise FieldError(
                f"m={m} > {MAX_SEARCH_DEGREE} requires an explicit modulus"
            )
        modulus = find_irreducible(p, m)
    return FieldSpec(p, m, tuple(modulus) if modulus is not None else None)


@dataclass(frozen=True)
class FieldElem:
    """An element of a :class:`FieldSpec`, stored as its integer code."""

    field: FieldSpec
    value: int

    @property
    def rep(self) -> tuple[int, ...]:
        return self.field.rep(self.value)

    def _check(self, other: object) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldError(f"field mismatch: {self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field(other).value
        return NotImplemented

    def __add__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.mul(self.value, self.field.inv(b)))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElem:
        return FieldElem(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        if self.field.m == 1:
            return f"{self.value}"
        return f"{list(self.rep)}"
