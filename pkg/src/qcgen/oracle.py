"""Brute-force ground truth for small instances.

Everything here works on plain words in F^n (tuples of field codes) and uses
only vector addition, scalar multiplication and the s-position shift, so it
stays independent of the polynomial machinery in :mod:`qcgen.qc`.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .field import FieldSpec
from .poly import Poly, cyclic_modulus, gcd_monic
from .qc import (
    CodeParams,
    GeneratorMatrix,
    ParamsMismatch,
    RElem,
    StaircaseBasis,
    mu_decode_codes,
)

DEFAULT_CAP = 1 << 20

Word = tuple[int, ...]


class CapExceeded(RuntimeError):
    """The instance is too large for exhaustive treatment."""


@dataclass(frozen=True)
class CodewordSet:
    params: CodeParams
    words: frozenset[Word]

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: Sequence[int]) -> bool:
        return tuple(w) in self.words

    @property
    def dimension(self) -> int:
        """log_|F| of the size; raises if the size is not a power of |F|."""
        q, size, k = self.params.field.order, len(self.words), 0
        while size > 1:
            size, rem = divmod(size, q)
            if rem:
                raise ValueError("closure size is not a power of the field order")
            k += 1
        return k


def _shift(w: Word, s: int) -> Word:
    return w[-s:] + w[:-s]


def span_closure(
    gens: Iterable[RElem | Sequence[int]], params: CodeParams, cap: int = DEFAULT_CAP
) -> CodewordSet:
    """Smallest set of words containing ``gens`` closed under +, scalars and the shift.

    Worklist closure: each popped word not yet in the set is adjoined by
    forming every w + a*g, and its shift is queued.
    """
    F = params.field
    n, s = params.n, params.s
    add, mul = F.add, F.mul
    scalars = range(1, F.order)
    words: set[Word] = {(0,) * n}
    queue: list[Word] = []
    for g in gens:
        if isinstance(g, RElem):
            if g.params != params:
                raise ParamsMismatch("generator does not match code parameters")
            queue.append(mu_decode_codes(g))
        else:
            if len(g) != n:
                raise ParamsMismatch(f"word has length {len(g)}, expected n={n}")
            queue.append(tuple(g))
    while queue:
        g = queue.pop()
        if g in words:
            continue
        if len(words) * F.order > cap:
            raise CapExceeded(f"closure would exceed cap={cap}")
        multiples = [tuple(mul(a, x) for x in g) for a in scalars]
        fresh = [
            tuple(add(x, y) for x, y in zip(w, m)) for w in words for m in multiples
        ]
        words.update(fresh)
        queue.append(_shift(g, s))
    return CodewordSet(params, frozenset(words))


def f_rank(rows: Sequence[Sequence[int]], field: FieldSpec) -> int:
    """Rank over F by Gaussian elimination on field codes."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged matrix")
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, x) for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


# -- minimum distance -------------------------------------------------------

def _min_weight_range(field: FieldSpec, rows: np.ndarray, lo: int, hi: int) -> int:
    """Least weight of msg*G over message indices [lo, hi), skipping index 0.

    Message index i has base-q digits (low-first) as its coordinates.
    """
    q = field.order
    k, n = rows.shape
    idx = np.arange(max(lo, 1), hi, dtype=np.int64)
    if idx.size == 0:
        return n + 1
    digits = np.empty((idx.size, k), dtype=np.int64)
    rest = idx.copy()
    for r in range(k):
        digits[:, r] = rest % q
        rest //= q
    if field.m == 1:
        cw = (digits @ rows) % q
    else:
        add = np.array(field.add_table(), dtype=np.int64)
        mul = np.array(field.mul_table(), dtype=np.int64)
        cw = np.zeros((idx.size, n), dtype=np.int64)
        for r in range(k):
            cw = add[cw, mul[digits[:, r, None], rows[r][None, :]]]
    return int(np.count_nonzero(cw, axis=1).min())


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _chunk_task(args):
    return _min_weight_range(*args)


def min_distance(
    gm: GeneratorMatrix, cap: int = DEFAULT_CAP, workers: int = 1, chunks: int | None = None
) -> int:
    """Minimum Hamming weight over all nonzero messages, exhaustively.

    With ``chunks`` (or ``workers`` > 1) the message space is split into
    disjoint index ranges whose minima are combined; ``workers`` > 1 runs
    the ranges in separate processes.
    """
    F = gm.params.field
    if gm.k == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    total = F.order ** gm.k
    if total > cap:
        raise CapExceeded(f"{total} messages exceed cap={cap}")
    rows = np.array(gm.rows, dtype=np.int64)
    if chunks is None:
        chunks = 4 * workers if workers > 1 else 1
    ranges = _chunks(total, max(chunks, 1))
    tasks = [(F, rows, lo, hi) for lo, hi in ranges]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_chunk_task, tasks))
    else:
        results = [_chunk_task(t) for t in tasks]
    return min(results)


# -- module comparisons ------------------------------------------------------

def verify_equal_modules(basis: StaircaseBasis, reference: CodewordSet, cap: int = DEFAULT_CAP) -> bool:
    if reference.params != basis.params:
        raise ParamsMismatch("basis and reference have different parameters")
    mine = span_closure(basis.generators(), basis.params, cap)
    return mine.words == reference.words


def projected_ideal(closure: CodewordSet, i: int) -> Poly:
    """Monic generator of {component i of w : components < i of w vanish}.

    Reads components straight off the word layout and takes the gcd with
    y^l - 1 of every projected polynomial.
    """
    P = closure.params
    F, s = P.field, P.s
    g = cyclic_modulus(F, P.ell)
    for w in closure.words:
        if any(w[k * s + j] for k in range(P.ell) for j in range(i)):
            continue
        comp = Poly(F, tuple(w[i::s]))
        if comp:
            g = gcd_monic(g, comp)
            if g.deg == 0:
                break
    return g


def all_words(params: CodeParams) -> Iterable[Word]:
    return itertools.product(range(params.field.order), repeat=params.n)
