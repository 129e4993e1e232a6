"""Command-line front end: ``qc <command> --spec FILE [...]``.

Exit status is 0 on success (member / verify pass), 1 for a negative
verdict (non-member / verify fail), 2 for usage, parse or capacity errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from . import oracle
from .poly import cyclic_modulus
from .qc import (
    RElem,
    StaircaseBasis,
    dimension,
    generator_matrix,
    is_member,
    mu_encode,
    normal_form,
    qc_shift,
    reconstruct,
    staircase_basis,
)
from .spec_io import (
    CodeSpec,
    SpecError,
    dumps,
    element_to_obj,
    field_to_obj,
    parse_element_text,
    parse_spec,
    relem_to_obj,
)

COMMANDS = ("gens", "matrix", "dim", "member", "nf", "mindist", "verify")


@dataclass
class Report:
    command: str
    data: dict
    lines: list[str] = dc_field(default_factory=list)
    status: int = 0


def _header(spec: CodeSpec) -> str:
    return f"over {spec.field}, s={spec.s}, l={spec.ell}, n={spec.s * spec.ell}"


def _basis_obj(spec: CodeSpec, basis: StaircaseBasis) -> dict:
    return {
        "field": field_to_obj(spec.field),
        "s": spec.s,
        "l": spec.ell,
        "generators": [relem_to_obj(r.pcols) for r in basis.rows],
    }


def _gens(spec: CodeSpec, basis: StaircaseBasis) -> Report:
    rows = [
        {
            "pivot": r.pivot,
            "polys": r.pcols.to_literal(),
            "diag": r.diag.to_literal(),
            "a": r.a,
            "cofactor": r.cofactor.to_literal(),
        }
        for r in basis.rows
    ]
    lines = [f"staircase basis {_header(spec)}"]
    for r in basis.rows:
        i = r.pivot
        lines.append(f"p_{i} = {r.pcols}")
        lines.append(f"  diag p_{i}^{i} = {r.diag}  (a_{i} = {r.a})")
        lines.append(f"  cofactor = {r.cofactor}")
    data = {"command": "gens", "basis": _basis_obj(spec, basis), "rows": rows}
    return Report("gens", data, lines)


def _matrix(spec: CodeSpec, basis: StaircaseBasis) -> Report:
    gm = generator_matrix(basis)
    F, n = spec.field, spec.s * spec.ell
    rows = [
        {"label": list(lab), "row": [element_to_obj(c, F) for c in row]}
        for lab, row in zip(gm.row_labels, gm.rows)
    ]
    if gm.k == 0:
        lines = [f"0 x {n} matrix (zero code)"]
    else:
        lines = [f"{gm.k} x {n} generator matrix {_header(spec)}"]
        for (i, j), row in zip(gm.row_labels, gm.rows):
            cells = " ".join(
                str(c) if F.m == 1 else "".join(map(str, F.rep(c))) for c in row
            )
            lines.append(f"({i},{j})  {cells}")
    data = {"command": "matrix", "n": n, "k": gm.k, "rows": rows}
    return Report("matrix", data, lines)


def _trace(spec: CodeSpec, basis: StaircaseBasis, f: RElem, command: str) -> Report:
    tr = normal_form(f, basis)
    verdict = tr.is_member
    data = {
        "command": command,
        "element": relem_to_obj(f),
        "quotients": [q.to_literal() for q in tr.quotients],
        "final_remainder": relem_to_obj(tr.final_remainder),
        "member": verdict,
    }
    lines = [f"element: {f}"]
    if command == "nf":
        data["chain"] = [relem_to_obj(h) for h in tr.remainders]
        for k, h in enumerate(tr.remainders, start=1):
            lines.append(f"h_{k} = {h}")
    for k, q in enumerate(tr.quotients):
        lines.append(f"q_{k} = {q}")
    lines.append(f"remainder = {tr.final_remainder}")
    lines.append(f"member = {'yes' if verdict else 'no'}")
    return Report(command, data, lines, status=0 if verdict else 1)


def _mindist(spec: CodeSpec, basis: StaircaseBasis, cap: int, workers: int) -> Report:
    gm = generator_matrix(basis)
    d = oracle.min_distance(gm, cap=cap, workers=workers)
    n = spec.s * spec.ell
    data = {"command": "mindist", "n": n, "k": gm.k, "d": d}
    return Report("mindist", data, [f"[{n}, {gm.k}, {d}]"])


def verify_checks(spec: CodeSpec, basis: StaircaseBasis, cap: int) -> list[tuple[str, bool]]:
    """The oracle invariant suite for one instance, as (name, passed) pairs."""
    P = spec.params
    F, ell = P.field, P.ell
    modulus = cyclic_modulus(F, ell)
    gm = generator_matrix(basis)
    dim = dimension(basis)
    checks = []

    checks.append((
        "diagonals monic and divide y^l - 1",
        all(r.diag.is_monic and (modulus % r.diag).is_zero
            and r.cofactor * r.diag == modulus for r in basis.rows),
    ))
    checks.append((
        "staircase shape",
        all(all(c.is_zero for c in r.pcols.comps[: r.pivot])
            and (r.is_placeholder or r.pcols.comps[r.pivot] == r.diag)
            for r in basis.rows),
    ))
    checks.append(("rank of generator matrix = dimension", oracle.f_rank(gm.rows, F) == dim))
    checks.append((
        "shifted matrix rows are members",
        all(is_member(mu_encode(qc_shift(list(row), P), P), basis) for row in gm.rows),
    ))
    checks.append((
        "generators reconstruct from quotients",
        all((tr := normal_form(g, basis)).is_member and reconstruct(basis, tr.quotients) == g
            for g in spec.generators),
    ))
    ref = oracle.span_closure(spec.generators, P, cap)
    checks.append(("span of basis = span of generators", oracle.verify_equal_modules(basis, ref, cap)))
    checks.append(("closure size = |F|^dimension", len(ref) == F.order ** dim))
    checks.append((
        "every closure word is a member",
        all(is_member(mu_encode(w, P), basis) for w in ref.words),
    ))
    checks.append((
        "projected ideals match diagonals",
        all(oracle.projected_ideal(ref, r.pivot) == r.diag for r in basis.rows),
    ))
    return checks


def _verify(spec: CodeSpec, basis: StaircaseBasis, cap: int) -> Report:
    checks = verify_checks(spec, basis, cap)
    ok = all(passed for _, passed in checks)
    lines = [f"{'PASS' if passed else 'FAIL'}  {name}" for name, passed in checks]
    lines.append(f"verify: {'pass' if ok else 'fail'}")
    data = {
        "command": "verify",
        "checks": [{"name": name, "pass": passed} for name, passed in checks],
        "pass": ok,
    }
    return Report("verify", data, lines, status=0 if ok else 1)


def run_command(
    command: str,
    spec: CodeSpec,
    element: RElem | None = None,
    cap: int = oracle.DEFAULT_CAP,
    workers: int = 1,
) -> Report:
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    basis = staircase_basis(spec.generators, spec.params)
    if command == "gens":
        return _gens(spec, basis)
    if command == "matrix":
        return _matrix(spec, basis)
    if command == "dim":
        d = dimension(basis)
        return Report("dim", {"command": "dim", "dimension": d}, [f"dimension = {d}"])
    if command in ("member", "nf"):
        if element is None:
            raise ValueError(f"{command} requires an element")
        return _trace(spec, basis, element, command)
    if command == "mindist":
        return _mindist(spec, basis, cap, workers)
    return _verify(spec, basis, cap)


def emit(report: Report, fmt: str = "text") -> str:
    if fmt == "structured":
        return dumps(report.data) + "\n"
    return "\n".join(report.lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qc", description="Generator polynomials and matrices of quasi-cyclic codes."
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--spec", required=True, type=Path, help="code specification (JSON)")
    parser.add_argument("--element", type=Path, help="element file for member/nf")
    parser.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    parser.add_argument("--workers", type=int, default=1, help="processes for mindist")
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        spec = parse_spec(args.spec.read_text(encoding="utf-8"))
        element = None
        if args.command in ("member", "nf"):
            if args.element is None:
                raise SpecError("--element", f"required for {args.command}")
            element = parse_element_text(args.element.read_text(encoding="utf-8"), spec.params)
        report = run_command(args.command, spec, element, cap=args.cap, workers=args.workers)
    except (SpecError, OSError, oracle.CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(emit(report, args.format))
    return report.status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
