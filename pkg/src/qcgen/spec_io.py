"""Reading and writing code specification files.

A spec file is JSON::

    {"field": {"p": 2, "m": 1},
     "s": 2, "l": 3,
     "generators": [[1, 1, 1, 0, 0, 0], {"polys": [[1, 1], [1]]}]}

A generator is either a flat word of n = s*l field elements or an object
``{"polys": [...]}`` holding s coefficient lists (low-degree-first, each of
degree < l).  Elements of GF(p) are integers; elements of GF(p^m), m > 1,
are m-length coordinate lists.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .field import FieldError, FieldSpec, build_field
from .poly import Poly
from .qc import CodeParams, RElem, mu_encode

SPEC_KEYS = ("field", "s", "l", "generators")


class SpecError(ValueError):
    """A malformed spec; ``path`` names the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


@dataclass(frozen=True)
class CodeSpec:
    field: FieldSpec
    s: int
    ell: int
    generators: tuple[RElem, ...]

    @property
    def params(self) -> CodeParams:
        return CodeParams(self.field, self.s, self.ell)


def _int(value: Any, path: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(path, f"expected an integer, got {json.dumps(value)}")
    if minimum is not None and value < minimum:
        raise SpecError(path, f"must be >= {minimum}, got {value}")
    return value


def parse_field(obj: Any, path: str = "field") -> FieldSpec:
    if not isinstance(obj, dict):
        raise SpecError(path, "expected an object with keys p, m, modulus")
    unknown = set(obj) - {"p", "m", "modulus"}
    if unknown:
        raise SpecError(f"{path}.{sorted(unknown)[0]}", "unknown key")
    if "p" not in obj:
        raise SpecError(f"{path}.p", "missing")
    p = _int(obj["p"], f"{path}.p")
    m = _int(obj.get("m", 1), f"{path}.m", 1)
    modulus = obj.get("modulus")
    if modulus is not None:
        if not isinstance(modulus, list):
            raise SpecError(f"{path}.modulus", "expected a coefficient list")
        modulus = [_int(c, f"{path}.modulus[{i}]") for i, c in enumerate(modulus)]
    try:
        return build_field(p, m, modulus)
    except FieldError as exc:
        sub = "p" if "prime" in str(exc) else ("modulus" if modulus is not None else "m")
        raise SpecError(f"{path}.{sub}", str(exc)) from None


def parse_element(value: Any, field: FieldSpec, path: str) -> int:
    """Field element literal -> integer code."""
    if field.m == 1:
        c = _int(value, path)
        if not 0 <= c < field.p:
            raise SpecError(path, f"element {c} outside [0, {field.p})")
        return c
    if not isinstance(value, list) or len(value) != field.m:
        raise SpecError(path, f"expected a list of {field.m} coordinates")
    coords = [_int(c, f"{path}[{i}]") for i, c in enumerate(value)]
    try:
        return field.code(coords)
    except FieldError as exc:
        raise SpecError(path, str(exc)) from None


def parse_poly(value: Any, field: FieldSpec, path: str) -> Poly:
    if not isinstance(value, list):
        raise SpecError(path, "expected a coefficient list")
    return Poly(field, tuple(parse_element(c, field, f"{path}[{i}]") for i, c in enumerate(value)))


def parse_relem(value: Any, params: CodeParams, path: str) -> RElem:
    """A generator literal: flat word, or {"polys": [...]}."""
    F = params.field
    if isinstance(value, dict):
        if set(value) != {"polys"}:
            raise SpecError(path, 'expected exactly the key "polys"')
        polys = value["polys"]
        if not isinstance(polys, list) or len(polys) != params.s:
            raise SpecError(f"{path}.polys", f"expected {params.s} polynomials")
        comps = []
        for i, lit in enumerate(polys):
            poly = parse_poly(lit, F, f"{path}.polys[{i}]")
            if poly.deg is not None and poly.deg >= params.ell:
                raise SpecError(
                    f"{path}.polys[{i}]", f"degree {poly.deg} >= l={params.ell}"
                )
            comps.append(poly)
        return RElem(params, tuple(comps))
    if isinstance(value, list):
        if len(value) != params.n:
            raise SpecError(path, f"length mismatch: {len(value)} symbols, expected n={params.n}")
        return mu_encode([parse_element(c, F, f"{path}[{i}]") for i, c in enumerate(value)], params)
    raise SpecError(path, "expected a word (list) or an object with \"polys\"")


def spec_from_obj(obj: Any) -> CodeSpec:
    if not isinstance(obj, dict):
        raise SpecError("", "top level must be an object")
    for key in obj:
        if key not in SPEC_KEYS:
            raise SpecError(key, "unknown key")
    for key in SPEC_KEYS:
        if key not in obj:
            raise SpecError(key, "missing")
    field = parse_field(obj["field"])
    s = _int(obj["s"], "s", 1)
    ell = _int(obj["l"], "l", 1)
    params = CodeParams(field, s, ell)
    gens = obj["generators"]
    if not isinstance(gens, list):
        raise SpecError("generators", "expected a list")
    parsed = tuple(parse_relem(g, params, f"generators[{i}]") for i, g in enumerate(gens))
    return CodeSpec(field, s, ell, parsed)


def parse_spec(text: str) -> CodeSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError("", f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return spec_from_obj(obj)


def parse_element_text(text: str, params: CodeParams) -> RElem:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError("element", f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_relem(obj, params, "element")


# -- output --------------------------------------------------------------

def field_to_obj(field: FieldSpec) -> dict:
    obj: dict = {"p": field.p, "m": field.m}
    if field.m > 1:
        obj["modulus"] = list(field.modulus)
    return obj


def element_to_obj(code: int, field: FieldSpec):
    return code if field.m == 1 else list(field.rep(code))


def relem_to_obj(f: RElem) -> dict:
    return {"polys": f.to_literal()}


def spec_to_obj(spec: CodeSpec) -> dict:
    return {
        "field": field_to_obj(spec.field),
        "s": spec.s,
        "l": spec.ell,
        "generators": [relem_to_obj(g) for g in spec.generators],
    }


def dumps(obj: Any) -> str:
    """Canonical compact JSON used for every structured output."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)
