"""Random small instances for tests and experiment scripts."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .field import FieldSpec, build_field
from .poly import Poly, cyclic_modulus, fold, gcd_monic
from .qc import CodeParams, RElem

SMALL_FIELDS: dict[str, tuple[int, int]] = {
    "GF(2)": (2, 1),
    "GF(3)": (3, 1),
    "GF(4)": (2, 2),
    "GF(5)": (5, 1),
}


@dataclass(frozen=True)
class InstanceConfig:
    fields: tuple[str, ...] = tuple(SMALL_FIELDS)
    s_values: tuple[int, ...] = (1, 2, 3, 4)
    ell_values: tuple[int, ...] = (2, 3, 4, 5, 6)
    max_gens: int = 4
    # chance that a generator is multiplied by a factor of y^l - 1 / has zeroed components
    structured: float = 0.6
    zero_component: float = 0.25


@dataclass(frozen=True)
class Instance:
    params: CodeParams
    gens: tuple[RElem, ...]

    def __str__(self) -> str:
        P = self.params
        return f"{P.field} s={P.s} l={P.ell} gens={len(self.gens)}"


def small_field(name: str) -> FieldSpec:
    return build_field(*SMALL_FIELDS[name])


def random_poly(rng: random.Random, field: FieldSpec, length: int) -> Poly:
    return Poly(field, tuple(rng.randrange(field.order) for _ in range(length)))


def random_relem(rng: random.Random, params: CodeParams) -> RElem:
    return RElem(params, tuple(random_poly(rng, params.field, params.ell) for _ in range(params.s)))


def random_factor(rng: random.Random, field: FieldSpec, ell: int) -> Poly:
    """A random monic divisor of y^l - 1 (gcd with a random polynomial)."""
    g = gcd_monic(cyclic_modulus(field, ell), random_poly(rng, field, ell))
    return g if g else Poly.one(field)


def random_generators(
    rng: random.Random, params: CodeParams, count: int, cfg: InstanceConfig = InstanceConfig()
) -> tuple[RElem, ...]:
    F, ell = params.field, params.ell
    out = []
    for _ in range(count):
        g = random_relem(rng, params)
        if rng.random() < cfg.structured:
            d = random_factor(rng, F, ell)
            comps = [fold(c * d, ell) for c in g.comps]
            lead = rng.randrange(params.s)
            for i in range(lead):
                if rng.random() < 0.7:
                    comps[i] = Poly.zero(F)
            for i in range(params.s):
                if rng.random() < cfg.zero_component:
                    comps[i] = Poly.zero(F)
            g = RElem(params, tuple(comps))
        out.append(g)
    return tuple(out)


def random_instance(rng: random.Random, cfg: InstanceConfig = InstanceConfig()) -> Instance:
    field = small_field(rng.choice(cfg.fields))
    params = CodeParams(field, rng.choice(cfg.s_values), rng.choice(cfg.ell_values))
    count = rng.randint(1, cfg.max_gens)
    return Instance(params, random_generators(rng, params, count, cfg))


def random_member(rng: random.Random, gens) -> RElem:
    """sum_i r_i(y) * g_i with random r_i in S."""
    gens = list(gens)
    params = gens[0].params
    acc = RElem.zero(params)
    for g in gens:
        acc = acc + g.scale_poly(random_poly(rng, params.field, params.ell))
    return acc
