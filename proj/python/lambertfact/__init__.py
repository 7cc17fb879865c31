"""Lambert series factorization theorems.

Exact factorization matrices, their inverses, verification suites and the
analytic applications (exotic sums, zeta series, omega(n)). Exact values
come back as ``fractions.Fraction`` or ``int``; real values as
``decimal.Decimal``.
"""

from ._core import (
    DivergenceError,
    DomainError,
    IdentityViolation,
    NonInvertibleError,
    SingularMatrixError,
    ZeroDivisorSumError,
    a_t,
    divisors,
    exotic_reference,
    exotic_sum,
    function_names,
    matrix,
    matrix_kinds,
    mobius,
    omega_exact,
    omega_inner_sum,
    partition_identity_check,
    partition_p,
    sigma,
    suite_names,
    totient,
    verify,
    zeta_partial,
    zeta_term,
)

__all__ = [
    "DivergenceError",
    "DomainError",
    "IdentityViolation",
    "NonInvertibleError",
    "SingularMatrixError",
    "ZeroDivisorSumError",
    "a_t",
    "divisors",
    "exotic_reference",
    "exotic_sum",
    "function_names",
    "matrix",
    "matrix_kinds",
    "mobius",
    "omega_exact",
    "omega_inner_sum",
    "partition_identity_check",
    "partition_p",
    "sigma",
    "suite_names",
    "totient",
    "verify",
    "zeta_partial",
    "zeta_term",
]
