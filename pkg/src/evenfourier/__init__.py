"""Exact discrete Fourier analysis of r-even arithmetic functions."""

from .arith import (
    ArithFunction,
    EPSILON,
    IDENTITY,
    MOBIUS,
    ONE,
    PHI,
    SIGMA,
    TAU,
    TWO_OMEGA,
    Factorization,
    LogCombination,
    classical,
    constant,
    dirichlet_convolve,
    divisors,
    factorize,
    mobius_transform,
    ramanujan_sum,
    ramanujan_sum_exponential,
    ramanujan_sum_holder,
)
from .even import (
    EvenFunction,
    FourierCoefficients,
    PeriodicTable,
    cauchy_convolve,
    completely_even,
    evaluate,
    expand_from_coefficients,
    fourier_coefficients,
    from_periodic,
    make_even,
    mobius_core,
    rho,
)
from .transform import (
    SequenceSpec,
    SghSpec,
    alternating_dft,
    anderson_apostol,
    check_sequence_multiplicativity,
    classify_completely_even_dft,
    cohen_invert,
    count_congruence_solutions,
    dft,
    dft_naive,
    dft_via_core,
    divisor_sum_identities,
    holder_closed_form,
    idft,
)

__version__ = "0.1.0"

__all__ = [
    "ArithFunction",
    "EPSILON",
    "IDENTITY",
    "MOBIUS",
    "ONE",
    "PHI",
    "SIGMA",
    "TAU",
    "TWO_OMEGA",
    "Factorization",
    "LogCombination",
    "classical",
    "constant",
    "dirichlet_convolve",
    "divisors",
    "factorize",
    "mobius_transform",
    "ramanujan_sum",
    "ramanujan_sum_exponential",
    "ramanujan_sum_holder",
    "EvenFunction",
    "FourierCoefficients",
    "PeriodicTable",
    "cauchy_convolve",
    "completely_even",
    "evaluate",
    "expand_from_coefficients",
    "fourier_coefficients",
    "from_periodic",
    "make_even",
    "mobius_core",
    "rho",
    "SequenceSpec",
    "SghSpec",
    "alternating_dft",
    "anderson_apostol",
    "check_sequence_multiplicativity",
    "classify_completely_even_dft",
    "cohen_invert",
    "count_congruence_solutions",
    "dft",
    "dft_naive",
    "dft_via_core",
    "divisor_sum_identities",
    "holder_closed_form",
    "idft",
]
