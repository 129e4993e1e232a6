"""Search single-generator QC codes for the best minimum distance.

Draws random generators g(x, y) for fixed (field, s, l), builds the
staircase basis of the module g generates, and keeps the best [n, k, d]
found for each dimension k.

    python scripts/search_best_distance.py --p 2 --s 2 --l 7 --trials 300
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from qcgen import oracle
from qcgen.field import build_field
from qcgen.instances import random_relem
from qcgen.qc import CodeParams, dimension, generator_matrix, staircase_basis


@dataclass(frozen=True)
class SearchConfig:
    p: int = 2
    m: int = 1
    s: int = 2
    ell: int = 7
    trials: int = 200
    seed: int = 0
    cap: int = 1 << 16


def search(cfg: SearchConfig) -> dict[int, tuple[int, str]]:
    field = build_field(cfg.p, cfg.m)
    params = CodeParams(field, cfg.s, cfg.ell)
    rng = random.Random(cfg.seed)
    best: dict[int, tuple[int, str]] = {}
    for _ in range(cfg.trials):
        g = random_relem(rng, params)
        basis = staircase_basis([g], params)
        k = dimension(basis)
        if k == 0 or field.order**k > cfg.cap:
            continue
        d = oracle.min_distance(generator_matrix(basis), cap=cfg.cap)
        if d > best.get(k, (0, ""))[0]:
            best[k] = (d, str(g))
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--m", type=int, default=1)
    ap.add_argument("--s", type=int, default=2)
    ap.add_argument("--l", dest="ell", type=int, default=7)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--cap", type=int, default=1 << 16)
    cfg = SearchConfig(**vars(ap.parse_args()))
    n = cfg.s * cfg.ell
    for k, (d, g) in sorted(search(cfg).items()):
        print(f"[{n}, {k}, {d}]  g = {g}")


if __name__ == "__main__":
    main()
