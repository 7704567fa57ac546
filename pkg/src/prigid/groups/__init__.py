"""Finite p-group models and subgroup machinery."""

from .models import (
    GroupModel,
    SemidirectModel,
    TableModel,
    ThetaModel,
    ThetaSpec,
    UtModel,
    UtSpec,
    parse_group_descriptor,
)
from .subgroups import (
    DEFAULT_CLOSURE_BOUND,
    Subgroup,
    closure_codes,
    commutator_subgroup,
    dimension_subgroups,
    frattini,
    full_group,
    gamma_series,
    is_powerful,
    j_module_test,
    lambda_series,
    locally_powerful_probe,
    maximal_subgroups,
    power_subgroup,
    rank,
    series_indices,
    series_orders,
    subgroup_from_gens,
    theorem_A_group_test,
    tower_group_model,
    trivial_subgroup,
    uniform_check,
)

__all__ = [
    "GroupModel",
    "SemidirectModel",
    "TableModel",
    "ThetaModel",
    "ThetaSpec",
    "UtModel",
    "UtSpec",
    "parse_group_descriptor",
    "DEFAULT_CLOSURE_BOUND",
    "Subgroup",
    "closure_codes",
    "commutator_subgroup",
    "dimension_subgroups",
    "frattini",
    "full_group",
    "gamma_series",
    "is_powerful",
    "j_module_test",
    "lambda_series",
    "locally_powerful_probe",
    "maximal_subgroups",
    "power_subgroup",
    "rank",
    "series_indices",
    "series_orders",
    "subgroup_from_gens",
    "theorem_A_group_test",
    "tower_group_model",
    "trivial_subgroup",
    "uniform_check",
]
