"""Symbol computations, rigidity verdicts, towers, and certificates."""

from .context import DEFAULT_SEED, LAURENT_DEFAULT_PREC, FieldContext, make_context
from .extensions import RootExtension, extend_by_pth_root, scalar_root_extension
from .hereditary import hereditary_probe, line_reps
from .oracle import norm_class_enumeration, norm_oracle_cross_check
from .symbols import (
    laurent_class_coords,
    laurent_symbol,
    laurent_symbol_matrix,
    steinberg_vector,
    symbol_vector,
    tame_symbol_local,
)
from .towers import (
    TOWER_MAX_LEVEL,
    certificate_verdict,
    galois_criterion,
    kummer_tower,
    tower_galois_group,
    tower_rho,
    tower_sigma,
    zeta_chain,
)
from .verdicts import (
    class_coords_ratfunc,
    default_basis,
    is_element_rigid,
    is_field_rigid,
    lambda2_injectivity,
    rigidity_profile,
    steinberg_witness,
    support_basis,
)
from .witness import WitnessAlgebra, hilbert90_witness

__all__ = [
    "DEFAULT_SEED",
    "LAURENT_DEFAULT_PREC",
    "FieldContext",
    "make_context",
    "RootExtension",
    "extend_by_pth_root",
    "scalar_root_extension",
    "hereditary_probe",
    "line_reps",
    "norm_class_enumeration",
    "norm_oracle_cross_check",
    "laurent_class_coords",
    "laurent_symbol",
    "laurent_symbol_matrix",
    "steinberg_vector",
    "symbol_vector",
    "tame_symbol_local",
    "TOWER_MAX_LEVEL",
    "certificate_verdict",
    "galois_criterion",
    "kummer_tower",
    "tower_galois_group",
    "tower_rho",
    "tower_sigma",
    "zeta_chain",
    "class_coords_ratfunc",
    "default_basis",
    "is_element_rigid",
    "is_field_rigid",
    "lambda2_injectivity",
    "rigidity_profile",
    "steinberg_witness",
    "support_basis",
    "WitnessAlgebra",
    "hilbert90_witness",
]
