"""Odd-harmonic-series approximations of ln, factorial and gamma."""

from .cnr import (
    ApproxValue,
    CnrMethod,
    CnrTag,
    approx_cnr_pow2,
    approx_lemma11,
    approx_number_exp,
    approx_number_large,
    approx_number_scaled,
    nbb_decompose,
)
from .constants import (
    NrKind,
    NrVariant,
    euler_gamma,
    gamma_definition_check,
    nr_direct_series,
    nr_empirical_limit,
    nr_integral,
)
from .errors import (
    DomainError,
    HarmlogError,
    NegativeInputError,
    OracleIntegrityError,
    OverflowLimitError,
    ZeroOrInfiniteError,
)
from .factorial import (
    FactorialEstimate,
    FactorialMethod,
    factorial_corrected,
    factorial_raw,
    ln_factorial_series,
    s_sum_closed,
    s_sum_exact,
)
from .harmonic import (
    LogVariant,
    OddHarmonicRange,
    ScaledRational,
    correction_sum,
    exp_form,
    ln_auto,
    ln_integer,
    ln_product,
    ln_quotient,
    ln_rational,
    odd_harmonic_sum,
)
from .oracle import (
    ReferenceValue,
    factorial_exact_ln,
    ln_ref,
    ln_value,
    percent_error,
)
from .tables import TableId, TableReport, generate

__all__ = [
    "ApproxValue",
    "CnrMethod",
    "CnrTag",
    "DomainError",
    "FactorialEstimate",
    "FactorialMethod",
    "HarmlogError",
    "LogVariant",
    "NegativeInputError",
    "NrKind",
    "NrVariant",
    "OddHarmonicRange",
    "OracleIntegrityError",
    "OverflowLimitError",
    "ReferenceValue",
    "ScaledRational",
    "TableId",
    "TableReport",
    "ZeroOrInfiniteError",
    "approx_cnr_pow2",
    "approx_lemma11",
    "approx_number_exp",
    "approx_number_large",
    "approx_number_scaled",
    "correction_sum",
    "euler_gamma",
    "exp_form",
    "factorial_corrected",
    "factorial_exact_ln",
    "factorial_raw",
    "gamma_definition_check",
    "generate",
    "ln_auto",
    "ln_factorial_series",
    "ln_integer",
    "ln_product",
    "ln_quotient",
    "ln_rational",
    "ln_ref",
    "ln_value",
    "nbb_decompose",
    "nr_direct_series",
    "nr_empirical_limit",
    "nr_integral",
    "odd_harmonic_sum",
    "percent_error",
    "s_sum_closed",
    "s_sum_exact",
]

__version__ = "0.1.0"
