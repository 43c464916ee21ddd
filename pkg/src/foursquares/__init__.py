"""Exact four-square decompositions of nonnegative integers.

The library combines three pieces of machinery: a norm-multiplicative
integer quaternion product, a per-prime descent that shrinks a multiplier
m < p of a represented multiple m*p down to 1, and a matrix-factorization
witness that turns "m*A is a sum of four squares" into constructive
decompositions of the factors.  Everything runs on Python's
arbitrary-precision integers; there is no floating point anywhere.
"""

from .decompose import (
    Decomposition,
    DescentState,
    Witness,
    canonicalize,
    cofactor,
    four_squares,
    halve,
    halve_quad,
    prime_descent,
    trace_descent,
    witness,
)
from .modular import (
    CenteredResidue,
    FactorizationError,
    PrimeFactorization,
    centered_residue,
    crt,
    factorize,
    is_prime,
    primes_below,
    solve_two_square_minus_one,
)
from .quaternion import Quad, conj, matrix_of, quat_mul, transpose_product

__version__ = "0.1.0"

__all__ = [
    "CenteredResidue",
    "Decomposition",
    "DescentState",
    "FactorizationError",
    "PrimeFactorization",
    "Quad",
    "Witness",
    "canonicalize",
    "centered_residue",
    "cofactor",
    "conj",
    "crt",
    "factorize",
    "four_squares",
    "halve",
    "halve_quad",
    "is_prime",
    "matrix_of",
    "prime_descent",
    "primes_below",
    "quat_mul",
    "solve_two_square_minus_one",
    "trace_descent",
    "transpose_product",
    "witness",
    "__version__",
]
