"""Exact arithmetic: finite fields, polynomials, series, rational functions."""

from .fq import (
    FqField,
    Value,
    canonical_nonresidue,
    field_make,
    parse_gf_descriptor,
    power_residue_class,
    pth_root_fq,
    roots_of_unity_depth,
    try_pth_root,
    vp,
    zeta_p,
    zeta_ppow,
)
from .laurent import LaurentElem, LaurentField
from .linalg import nullspace_mod, rank_mod, rref_mod, solve_mod
from .poly import (
    Poly,
    ResidueField,
    factorize,
    find_roots,
    is_irreducible,
    pstr,
    resultant,
)
from .ratfunc import INF, Place, RatFuncElem, RatFuncField
from .embed import FieldEmbedding, embed_field

__all__ = [
    "FqField",
    "Value",
    "canonical_nonresidue",
    "field_make",
    "parse_gf_descriptor",
    "power_residue_class",
    "pth_root_fq",
    "roots_of_unity_depth",
    "try_pth_root",
    "vp",
    "zeta_p",
    "zeta_ppow",
    "LaurentElem",
    "LaurentField",
    "nullspace_mod",
    "rank_mod",
    "rref_mod",
    "solve_mod",
    "Poly",
    "ResidueField",
    "factorize",
    "find_roots",
    "is_irreducible",
    "pstr",
    "resultant",
    "INF",
    "Place",
    "RatFuncElem",
    "RatFuncField",
    "FieldEmbedding",
    "embed_field",
]
