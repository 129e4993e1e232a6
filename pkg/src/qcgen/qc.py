"""Quasi-cyclic codes as F[y]-submodules of R = F[x,y]/<x^s - 1, y^l - 1>.

A word (c_0, ..., c_{n-1}) of length n = s*l is read as l blocks of s symbols;
block k holds the x-coefficients of y^k.  An element of R is stored as its s
components f_0(y), ..., f_{s-1}(y) in S, f_i being the coefficient of x^i.
Shifting a word by s positions is multiplication by y.

:func:`staircase_basis` computes the canonical generators p_0, ..., p_{s-1} of
a submodule: row i vanishes before position i and has the monic divisor
p_i^i of y^l - 1 at position i.  The rows y^j p_i, 0 <= j < l - deg p_i^i,
form an F-basis, which :func:`generator_matrix` lays out.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .field import FieldElem, FieldError, FieldSpec
from .poly import Poly, SElem, cyclic_modulus, fold, xgcd


class ParamsMismatch(ValueError):
    pass


@dataclass(frozen=True)
class CodeParams:
    field: FieldSpec
    s: int
    ell: int

    def __post_init__(self) -> None:
        if self.s < 1 or self.ell < 1:
            raise ValueError(f"need s >= 1 and l >= 1, got s={self.s}, l={self.ell}")

    @property
    def n(self) -> int:
        return self.s * self.ell


@dataclass(frozen=True)
class RElem:
    """Element of R as s components in S (canonical lifts of degree < l)."""

    params: CodeParams
    comps: tuple[Poly, ...]

    def __post_init__(self) -> None:
        P = self.params
        comps = tuple(self.comps)
        if len(comps) != P.s:
            raise ParamsMismatch(f"expected {P.s} components, got {len(comps)}")
        for c in comps:
            if c.field != P.field:
                raise FieldError(f"component over {c.field}, expected {P.field}")
        object.__setattr__(self, "comps", tuple(fold(c, P.ell) for c in comps))

    @classmethod
    def zero(cls, params: CodeParams) -> RElem:
        return cls(params, (Poly.zero(params.field),) * params.s)

    @classmethod
    def from_literals(cls, params: CodeParams, polys: Sequence[Sequence]) -> RElem:
        return cls(params, tuple(Poly.from_coeffs(params.field, p) for p in polys))

    @classmethod
    def x_power(cls, params: CodeParams, i: int) -> RElem:
        comps = [Poly.zero(params.field)] * params.s
        comps[i] = Poly.one(params.field)
        return cls(params, tuple(comps))

    def component(self, i: int) -> SElem:
        return SElem(self.comps[i], self.params.ell)

    def _same(self, other: RElem) -> None:
        if self.params != other.params:
            raise ParamsMismatch("elements belong to different rings")

    def __add__(self, other: RElem) -> RElem:
        self._same(other)
        return RElem(self.params, tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other: RElem) -> RElem:
        self._same(other)
        return RElem(self.params, tuple(a - b for a, b in zip(self.comps, other.comps)))

    def scale_poly(self, q: Poly) -> RElem:
        """Multiply by q(y) in R."""
        return RElem(self.params, tuple(c * q for c in self.comps))

    def __bool__(self) -> bool:
        return any(self.comps)

    def to_literal(self) -> list:
        return [c.to_literal() for c in self.comps]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.comps):
            if c.is_zero:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            body = str(c)
            if not mono:
                terms.append(body)
            elif body == "1":
                terms.append(mono)
            else:
                terms.append(f"({body})*{mono}")
        return " + ".join(terms) if terms else "0"


# -- the correspondence between words and R -------------------------------

def _codes(v: Sequence, field: FieldSpec) -> list[int]:
    out = []
    for c in v:
        if isinstance(c, FieldElem):
            if c.field != field:
                raise FieldError(f"field mismatch: {c.field} vs {field}")
            out.append(c.value)
        else:
            out.append(int(c))
    return out


def mu_encode(v: Sequence, params: CodeParams) -> RElem:
    """Word of length s*l -> element of R; f_i(y) = sum_k v[k*s + i] y^k.

    Accepts FieldElems or integer codes.
    """
    if len(v) != params.n:
        raise ParamsMismatch(f"word has length {len(v)}, expected n={params.n}")
    codes = _codes(v, params.field)
    s = params.s
    return RElem(
        params,
        tuple(Poly(params.field, tuple(codes[i::s])) for i in range(s)),
    )


def mu_decode_codes(f: RElem) -> tuple[int, ...]:
    s, ell = f.params.s, f.params.ell
    out = [0] * (s * ell)
    for i, c in enumerate(f.comps):
        for k, a in enumerate(c.codes):
            out[k * s + i] = a
    return tuple(out)


def mu_decode(f: RElem) -> list[FieldElem]:
    F = f.params.field
    return [FieldElem(F, c) for c in mu_decode_codes(f)]


def qc_shift(v: Sequence, params: CodeParams) -> list:
    """(c_0, ..., c_{n-1}) -> (c_{n-s}, ..., c_{n-1}, c_0, ..., c_{n-s-1})."""
    if len(v) != params.n:
        raise ParamsMismatch(f"word has length {len(v)}, expected n={params.n}")
    s = params.s
    v = list(v)
    return v[-s:] + v[:-s]


def y_mul(f: RElem) -> RElem:
    return RElem(f.params, tuple(c.shift(1) for c in f.comps))


# -- staircase construction -----------------------------------------------

@dataclass(frozen=True)
class StaircaseRow:
    pivot: int
    pcols: RElem
    diag: Poly
    cofactor: Poly

    @property
    def a(self) -> int:
        return self.diag.deg

    @property
    def is_placeholder(self) -> bool:
        return self.a == self.pcols.params.ell


@dataclass(frozen=True)
class StaircaseBasis:
    params: CodeParams
    rows: tuple[StaircaseRow, ...]

    @property
    def degrees(self) -> list[int]:
        return [r.a for r in self.rows]

    def generators(self) -> list[RElem]:
        return [r.pcols for r in self.rows]


def _row_combine(u: Poly, r1: list[Poly], v: Poly, r2: list[Poly]) -> list[Poly]:
    return [u * a + v * b for a, b in zip(r1, r2)]


def _reduce_tail(row: list[Poly], start: int, ell: int) -> list[Poly]:
    return row[:start] + [fold(c, ell) for c in row[start:]]


def staircase_basis(gens: Sequence[RElem], params: CodeParams) -> StaircaseBasis:
    """Canonical staircase generators of the F[y]-submodule spanned by ``gens``.

    Hermite reduction over F[y] of the generator lifts together with the
    relation rows (y^l - 1) e_i.  Column c is processed once every row still
    in play vanishes before c; at that point the relation row for c is still
    intact, so entries from column c on may be folded mod y^l - 1.
    """
    for g in gens:
        if g.params != params:
            raise ParamsMismatch("generator does not match code parameters")
    F, s, ell = params.field, params.s, params.ell
    modulus = cyclic_modulus(F, ell)
    zero = Poly.zero(F)

    active = [list(g.comps) for g in gens]
    pivots: list[list[Poly]] = []
    for c in range(s):
        active = [_reduce_tail(r, c, ell) for r in active]
        active = [r for r in active if any(r)]
        relation = [zero] * s
        relation[c] = modulus
        pivot = relation
        rest = []
        for row in active:
            if row[c].is_zero:
                rest.append(row)
                continue
            a, b = pivot[c], row[c]
            g, u, v = xgcd(a, b)
            a_g, b_g = a // g, b // g
            new_pivot = _reduce_tail(_row_combine(u, pivot, v, row), c + 1, ell)
            other = _reduce_tail(_row_combine(a_g, row, -b_g, pivot), c + 1, ell)
            pivot = new_pivot
            if any(other):
                rest.append(other)
        if not pivot[c].is_monic:
            pivot = [e.scale(F.inv(pivot[c].lead)) for e in pivot]
        pivots.append(pivot)
        active = rest

    diags = [p[i] for i, p in enumerate(pivots)]
    for i, row in enumerate(pivots):
        for j in range(i + 1, s):
            q, _ = divmod(row[j], diags[j])
            if q:
                row = [e - q * pj for e, pj in zip(row, pivots[j])]
        pivots[i] = row

    rows = []
    for i, row in enumerate(pivots):
        rows.append(
            StaircaseRow(
                pivot=i,
                pcols=RElem(params, tuple(row)),
                diag=diags[i],
                cofactor=modulus // diags[i],
            )
        )
    return StaircaseBasis(params, tuple(rows))


# -- reduction chain ------------------------------------------------------

@dataclass(frozen=True)
class ReductionTrace:
    quotients: tuple[Poly, ...]
    remainders: tuple[RElem, ...]  # h_1, ..., h_{s-1}
    final_remainder: RElem

    @property
    def is_member(self) -> bool:
        return not self.final_remainder


def normal_form(f: RElem, basis: StaircaseBasis) -> ReductionTrace:
    """Cancel components of f left to right with multiples of the staircase rows.

    Component k of the running remainder is divided by p_k^k in F[y]; on an
    exact division the quotient is recorded and q_k * p_k subtracted, otherwise
    q_k = 0 and the component stays in the remainder.
    """
    if f.params != basis.params:
        raise ParamsMismatch("element does not match basis parameters")
    F = f.params.field
    h = f
    quotients = []
    chain = []
    for k, row in enumerate(basis.rows):
        q, r = divmod(h.comps[k], row.diag)
        if r.is_zero and q:
            h = h - row.pcols.scale_poly(q)
        else:
            q = Poly.zero(F)
        quotients.append(q)
        chain.append(h)
    return ReductionTrace(tuple(quotients), tuple(chain[:-1]), chain[-1])


def is_member(f: RElem, basis: StaircaseBasis) -> bool:
    return normal_form(f, basis).is_member


def reconstruct(basis: StaircaseBasis, quotients: Sequence[Poly]) -> RElem:
    """sum_i q_i * p_i in R."""
    acc = RElem.zero(basis.params)
    for row, q in zip(basis.rows, quotients):
        acc = acc + row.pcols.scale_poly(q)
    return acc


# -- generator matrix -----------------------------------------------------

def dimension(basis: StaircaseBasis) -> int:
    ell = basis.params.ell
    return sum(ell - r.a for r in basis.rows)


@dataclass(frozen=True)
class GeneratorMatrix:
    params: CodeParams
    rows: tuple[tuple[int, ...], ...]  # field codes
    row_labels: tuple[tuple[int, int], ...] = dc_field(default=())

    @property
    def k(self) -> int:
        return len(self.rows)

    def elements(self) -> list[list[FieldElem]]:
        F = self.params.field
        return [[FieldElem(F, c) for c in row] for row in self.rows]


def generator_matrix(basis: StaircaseBasis) -> GeneratorMatrix:
    """Rows mu^{-1}(y^j p_i) for j < l - a_i, ordered by (i, j)."""
    ell = basis.params.ell
    rows, labels = [], []
    for row in basis.rows:
        g = row.pcols
        for j in range(ell - row.a):
            rows.append(mu_decode_codes(g))
            labels.append((row.pivot, j))
            g = y_mul(g)
    return GeneratorMatrix(basis.params, tuple(rows), tuple(labels))


def encode_message(msg: Sequence, gm: GeneratorMatrix) -> list[FieldElem]:
    F = gm.params.field
    if len(msg) != gm.k:
        raise ValueError(f"message has length {len(msg)}, expected k={gm.k}")
    codes = _codes(msg, F)
    out = [0] * gm.params.n
    for a, row in zip(codes, gm.rows):
        if a:
            out = [F.add(o, F.mul(a, r)) for o, r in zip(out, row)]
    return [FieldElem(F, c) for c in out]
