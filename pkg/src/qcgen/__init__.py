"""Generator polynomials and generator matrices for quasi-cyclic codes."""

from .field import FieldElem, FieldError, FieldSpec, build_field, find_irreducible
from .poly import Poly, SElem, gcd_monic, s_ideal_generator, s_reduce, xgcd
from .qc import (
    CodeParams,
    GeneratorMatrix,
    ReductionTrace,
    RElem,
    StaircaseBasis,
    StaircaseRow,
    dimension,
    encode_message,
    generator_matrix,
    is_member,
    mu_decode,
    mu_encode,
    normal_form,
    qc_shift,
    staircase_basis,
    y_mul,
)

__all__ = [
    "CodeParams",
    "FieldElem",
    "FieldError",
    "FieldSpec",
    "GeneratorMatrix",
    "Poly",
    "RElem",
    "ReductionTrace",
    "SElem",
    "StaircaseBasis",
    "StaircaseRow",
    "build_field",
    "dimension",
    "encode_message",
    "find_irreducible",
    "gcd_monic",
    "generator_matrix",
    "is_member",
    "mu_decode",
    "mu_encode",
    "normal_form",
    "qc_shift",
    "s_ideal_generator",
    "s_reduce",
    "staircase_basis",
    "xgcd",
    "y_mul",
]
