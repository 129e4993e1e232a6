import itertools
import random

import pytest
from hypothesis import given, strategies as st

from qcgen.field import build_field
from qcgen.instances import InstanceConfig, random_generators, random_instance, random_member, random_relem
from qcgen.poly import Poly, SElem, cyclic_modulus, gcd_monic
from qcgen.qc import (
    CodeParams,
    ParamsMismatch,
    RElem,
    dimension,
    encode_message,
    generator_matrix,
    is_member,
    mu_decode,
    mu_decode_codes,
    mu_encode,
    normal_form,
    qc_shift,
    reconstruct,
    staircase_basis,
    y_mul,
)

GF2 = build_field(2)
EX = CodeParams(GF2, 2, 3)
EX_GEN = RElem.from_literals(EX, [[1, 1], [1]])  # (y+1) + x


def multiples(gen: RElem):
    """All u(y) * gen for u in S, by direct enumeration."""
    P = gen.params
    out = set()
    for u in itertools.product(range(P.field.order), repeat=P.ell):
        out.add(gen.scale_poly(Poly(P.field, u)))
    return out


# -- mu and the shift ---------------------------------------------------------

def test_mu_encode_layout():
    P = CodeParams(GF2, 2, 2)
    f = mu_encode([1, 0, 1, 1], P)
    assert f.comps == (Poly(GF2, (1, 1)), Poly(GF2, (0, 1)))
    assert [c.value for c in mu_decode(f)] == [1, 0, 1, 1]
    assert not mu_encode([0] * 4, P)
    assert mu_decode_codes(RElem.zero(P)) == (0, 0, 0, 0)


def test_mu_length_error():
    with pytest.raises(ParamsMismatch):
        mu_encode([0] * 5, EX)
    with pytest.raises(ParamsMismatch):
        qc_shift([0] * 5, EX)


def test_qc_shift_block_rotation():
    P = CodeParams(GF2, 2, 2)
    assert qc_shift(["c0", "c1", "c2", "c3"], P) == ["c2", "c3", "c0", "c1"]


@pytest.mark.parametrize("q,s,ell", [(2, 2, 3), (3, 3, 2), (4, 2, 4), (5, 1, 5), (2, 4, 6)])
def test_shift_is_multiplication_by_y(q, s, ell):
    F = build_field(2, 2) if q == 4 else build_field(q)
    P = CodeParams(F, s, ell)
    rng = random.Random(q * 100 + s * 10 + ell)
    for _ in range(100):
        v = [rng.randrange(F.order) for _ in range(P.n)]
        assert mu_encode(qc_shift(v, P), P) == y_mul(mu_encode(v, P))
        assert [c.value for c in mu_decode(mu_encode(v, P))] == v
        w = list(v)
        for _ in range(ell):
            w = qc_shift(w, P)
        assert w == v


def test_y_mul():
    P = CodeParams(GF2, 1, 2)
    f = RElem.from_literals(P, [[1, 1]])
    assert y_mul(f) == f  # y + y^2 = y + 1
    g = RElem.from_literals(EX, [[1, 0, 1], [0, 1]])
    h = g
    for _ in range(3):
        h = y_mul(h)
    assert h == g
    assert not y_mul(RElem.zero(EX))


def test_relem_rejects_wrong_component_count():
    with pytest.raises(ParamsMismatch):
        RElem(EX, (Poly.zero(GF2),))


# -- staircase ------------------------------------------------------------------

def test_worked_example_against_enumeration():
    members = multiples(EX_GEN)
    assert len(members) == 8
    # ideal of x^0-components, and of x^1-components among members with zero x^0-part
    ideal0 = gcd_monic(cyclic_modulus(GF2, 3), Poly(GF2, (1, 1)))
    comps1 = [m.comps[1] for m in members if m.comps[0].is_zero]
    ideal1 = cyclic_modulus(GF2, 3)
    for c in comps1:
        ideal1 = gcd_monic(ideal1, c)
    assert (ideal0, ideal1) == (Poly(GF2, (1, 1)), Poly(GF2, (1, 1, 1)))

    basis = staircase_basis([EX_GEN], EX)
    r0, r1 = basis.rows
    assert r0.diag == ideal0 and r1.diag == ideal1
    assert r0.pcols == EX_GEN
    assert r1.pcols == RElem.from_literals(EX, [[], [1, 1, 1]])
    assert basis.degrees == [1, 2]
    assert dimension(basis) == 3


def test_single_x_generator_has_zero_ideal_column():
    P = CodeParams(GF2, 2, 2)
    g = RElem.from_literals(P, [[1], [1]])
    assert len(multiples(g)) == 4
    basis = staircase_basis([g], P)
    r0, r1 = basis.rows
    assert r0.diag == Poly.one(GF2) and r0.pcols == g
    assert r1.diag == cyclic_modulus(GF2, 2) and r1.is_placeholder
    assert not r1.pcols


def test_whole_module(small_field):
    P = CodeParams(small_field, 3, 4)
    gens = [RElem.x_power(P, i) for i in range(3)]
    basis = staircase_basis(gens, P)
    for i, row in enumerate(basis.rows):
        assert row.diag == Poly.one(small_field)
        assert row.pcols == RElem.x_power(P, i)
    assert dimension(basis) == P.n
    gm = generator_matrix(basis)
    identity = tuple(tuple(int(i == j) for j in range(P.n)) for i in range(P.n))
    assert sorted(gm.rows, reverse=True) == sorted(identity, reverse=True)
    assert len(gm.rows) == P.n


def test_zero_module():
    for gens in ([], [RElem.zero(EX)]):
        basis = staircase_basis(gens, EX)
        assert all(r.is_placeholder for r in basis.rows)
        assert dimension(basis) == 0
        assert generator_matrix(basis).k == 0


def test_params_mismatch():
    with pytest.raises(ParamsMismatch):
        staircase_basis([RElem.zero(CodeParams(GF2, 2, 2))], EX)


def _check_staircase(basis):
    P = basis.params
    mod = cyclic_modulus(P.field, P.ell)
    for i, row in enumerate(basis.rows):
        assert row.pivot == i
        assert row.diag.is_monic
        assert row.cofactor * row.diag == mod
        assert 0 <= row.a <= P.ell
        assert all(c.is_zero for c in row.pcols.comps[:i])
        if row.is_placeholder:
            assert not row.pcols
        else:
            assert row.pcols.comps[i] == row.diag
        for j in range(i + 1, P.s):
            aj = basis.rows[j].a
            c = row.pcols.comps[j]
            if aj < P.ell:
                assert c.is_zero or c.deg < aj


@given(st.integers(0, 2**32))
def test_staircase_invariants_random(seed):
    rng = random.Random(seed)
    inst = random_instance(rng)
    basis = staircase_basis(inst.gens, inst.params)
    _check_staircase(basis)
    for g in inst.gens:
        assert is_member(g, basis)


@given(st.integers(0, 2**32))
def test_canonicity_random(seed):
    rng = random.Random(seed)
    inst = random_instance(rng)
    basis = staircase_basis(inst.gens, inst.params)
    shuffled = list(inst.gens)
    rng.shuffle(shuffled)
    assert staircase_basis(shuffled, inst.params) == basis
    extra = list(inst.gens) + [random_member(rng, inst.gens)]
    assert staircase_basis(extra, inst.params) == basis
    assert staircase_basis(basis.generators(), inst.params) == basis


def test_cyclic_specialization():
    rng = random.Random(5)
    for F in (GF2, build_field(3), build_field(2, 2)):
        for ell in range(1, 8):
            P = CodeParams(F, 1, ell)
            for _ in range(20):
                gens = [random_relem(rng, P) for _ in range(rng.randint(1, 3))]
                expected = cyclic_modulus(F, ell)
                for g in gens:
                    expected = gcd_monic(expected, g.comps[0])
                basis = staircase_basis(gens, P)
                assert basis.rows[0].diag == expected
                assert dimension(basis) == ell - expected.deg


@pytest.mark.parametrize("p,m,ell", [(2, 1, 4), (3, 1, 6), (2, 1, 6), (2, 2, 4), (3, 1, 3)])
def test_repeated_roots(p, m, ell):
    F = build_field(p, m)
    assert ell % p == 0
    rng = random.Random(ell)
    for s in (1, 2, 3):
        P = CodeParams(F, s, ell)
        for _ in range(10):
            gens = random_generators(rng, P, rng.randint(1, 3))
            basis = staircase_basis(gens, P)
            _check_staircase(basis)
            for _ in range(10):
                m_ = random_member(rng, gens)
                tr = normal_form(m_, basis)
                assert tr.is_member and reconstruct(basis, tr.quotients) == m_


# -- normal form ------------------------------------------------------------------

def test_normal_form_of_basis_row():
    basis = staircase_basis([EX_GEN], EX)
    tr = normal_form(basis.rows[0].pcols, basis)
    assert tr.quotients == (Poly.one(GF2), Poly.zero(GF2))
    assert not tr.final_remainder


def test_x_is_not_a_member():
    basis = staircase_basis([EX_GEN], EX)
    x = RElem.x_power(EX, 1)
    assert x not in multiples(EX_GEN)
    tr = normal_form(x, basis)
    assert tr.quotients[0].is_zero
    assert tr.remainders[0].comps[1] == Poly.one(GF2)
    assert tr.final_remainder == x
    assert not is_member(x, basis)


def test_membership_basics():
    basis = staircase_basis([EX_GEN], EX)
    assert is_member(RElem.zero(EX), basis)
    for row in basis.rows:
        g = row.pcols
        for _ in range(EX.ell):
            assert is_member(g, basis)
            g = y_mul(g)


def test_chain_shape_and_reconstruction():
    rng = random.Random(3)
    cfg = InstanceConfig()
    for _ in range(40):
        inst = random_instance(rng, cfg)
        basis = staircase_basis(inst.gens, inst.params)
        for _ in range(100):
            r = [random_relem(rng, CodeParams(inst.params.field, 1, inst.params.ell)).comps[0]
                 for _ in basis.rows]
            member = reconstruct(basis, r)
            tr = normal_form(member, basis)
            assert not tr.final_remainder
            assert reconstruct(basis, tr.quotients) == member
            for k, h in enumerate(tr.remainders, start=1):
                assert all(c.is_zero for c in h.comps[:k])


# -- generator matrix ---------------------------------------------------------------

def test_worked_example_matrix():
    gm = generator_matrix(staircase_basis([EX_GEN], EX))
    # hand expansion: p_0 = (1+y) + x, y p_0 = (y + y^2) + yx, p_1 = (1+y+y^2) x
    expected = [(1, 1, 1, 0, 0, 0), (0, 0, 1, 1, 1, 0), (0, 1, 0, 1, 0, 1)]
    assert list(gm.rows) == expected
    assert gm.row_labels == ((0, 0), (0, 1), (1, 0))


def test_encode_message():
    gm = generator_matrix(staircase_basis([EX_GEN], EX))
    assert [c.value for c in encode_message([1, 0, 0], gm)] == list(gm.rows[0])
    assert [c.value for c in encode_message([0, 0, 0], gm)] == [0] * 6
    word = [c.value for c in encode_message([1, 1, 1], gm)]
    assert word == [1, 0, 0, 0, 1, 1] and sum(word) == 3
    with pytest.raises(ValueError):
        encode_message([1], gm)


def test_selem_view():
    assert EX_GEN.component(0) == SElem(Poly(GF2, (1, 1)), 3)
