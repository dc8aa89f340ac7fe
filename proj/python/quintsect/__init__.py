"""pFq / Fox-Wright evaluation and fifth-root multisection identity checks."""

from ._core import (
    ConvergenceDiagnostics,
    DomainError,
    FoxWrightSpec,
    IdentityResidual,
    PFQSpec,
    PoleError,
    SeriesEvaluation,
    SpecError,
    ToleranceConfig,
    UndefinedQuotientError,
    catalog_case_ids,
    check_identity,
    classify_fox_wright,
    classify_pfq,
    dump_catalog,
    eval_by_representation,
    eval_fox_wright,
    eval_fox_wright_normalized,
    eval_oracle,
    eval_pfq,
    fifth_root,
    gamma,
    gauss_multiplication_residual,
    identity_one_sum,
    identity_two_sum,
    log_gamma,
    pochhammer,
    special_functions,
    sum_power_series,
    theorem21_lhs,
    theorem21_rhs,
    theorem22_lhs,
    theorem22_rhs,
    theorem_lhs,
    theorem_rhs,
    verify_all,
    verify_case,
)

__all__ = [
    "ConvergenceDiagnostics",
    "DomainError",
    "FoxWrightSpec",
    "IdentityResidual",
    "PFQSpec",
    "PoleError",
    "SeriesEvaluation",
    "SpecError",
    "ToleranceConfig",
    "UndefinedQuotientError",
    "catalog_case_ids",
    "check_identity",
    "classify_fox_wright",
    "classify_pfq",
    "dump_catalog",
    "eval_by_representation",
    "eval_fox_wright",
    "eval_fox_wright_normalized",
    "eval_oracle",
    "eval_pfq",
    "fifth_root",
    "gamma",
    "gauss_multiplication_residual",
    "identity_one_sum",
    "identity_two_sum",
    "log_gamma",
    "pochhammer",
    "special_functions",
    "sum_power_series",
    "theorem21_lhs",
    "theorem21_rhs",
    "theorem22_lhs",
    "theorem22_rhs",
    "theorem_lhs",
    "theorem_rhs",
    "verify_all",
    "verify_case",
]

__version__ = "0.1.0"
