"""Constructive four-square decomposition.

The production path factors the input and decomposes each odd prime p by
descent: starting from x^2 + y^2 + 1 = m*p with m < p, every step replaces
the multiplier m by a strictly smaller one (halving when m is even,
centered-residue reduction when m is odd) until m = 1.  Prime-power and
cross-prime recombination goes through the multiplicative quaternion
product, so every intermediate value is exact.

The module also exhibits constructive certificates: witness(d, q, F)
factors the matrix of any quadruple F of norm d*q as
matrix_of(L)^T @ matrix_of(R) with norm(L) = d and norm(R) = q, which is
the induction engine behind cofactor().
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .modular import centered_residue, crt, factorize, solve_two_square_minus_one
from .quaternion import ONE, ZERO, Quad, _mat_mul, _mat_transpose, conj, matrix_of, quat_mul

__all__ = [
    "Decomposition",
    "DescentState",
    "Witness",
    "canonicalize",
    "cofactor",
    "four_squares",
    "halve",
    "halve_quad",
    "prime_descent",
    "trace_descent",
    "witness",
]


def canonicalize(quad: Quad) -> Quad:
    """The representative with a >= b >= c >= d >= 0 (signs and order are free)."""
    return Quad(*sorted((abs(t) for t in quad), reverse=True))


@dataclass(frozen=True, slots=True)
class Decomposition:
    """An integer n together with a canonical quadruple of norm n."""

    n: int
    quad: Quad

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"expected a nonnegative integer, got {self.n}")
        a, b, c, d = self.quad
        if not (a >= b >= c >= d >= 0):
            raise ValueError(f"{self.quad} is not in canonical order")
        if self.quad.norm() != self.n:
            raise ValueError(f"{self.quad} has norm {self.quad.norm()}, not {self.n}")


@dataclass(frozen=True, slots=True)
class DescentState:
    """One step of the descent loop: norm(quad) == multiplier * prime."""

    prime: int
    multiplier: int
    quad: Quad

    def __post_init__(self) -> None:
        if not 1 <= self.multiplier < self.prime:
            raise ValueError(f"multiplier {self.multiplier} outside [1, {self.prime})")
        if self.quad.norm() != self.multiplier * self.prime:
            raise ValueError(
                f"{self.quad} has norm {self.quad.norm()}, "
                f"not {self.multiplier} * {self.prime}"
            )


@dataclass(frozen=True, slots=True)
class Witness:
    """Certificate that divisor and quotient are both sums of four squares.

    matrix_of(product) == matrix_of(left)^T @ matrix_of(right), with
    norm(left) == divisor and norm(right) == quotient; construction always
    verifies the matrix relation by exact multiplication.
    """

    divisor: int
    quotient: int
    product: Quad
    left: Quad
    right: Quad

    def __post_init__(self) -> None:
        if self.left.norm() != self.divisor:
            raise ValueError(f"left factor norm {self.left.norm()} != {self.divisor}")
        if self.right.norm() != self.quotient:
            raise ValueError(f"right factor norm {self.right.norm()} != {self.quotient}")
        lhs = matrix_of(self.product)
        rhs = _mat_mul(_mat_transpose(matrix_of(self.left)), matrix_of(self.right))
        if lhs != rhs:
            raise ValueError("matrix relation does not hold for this witness")


def halve_quad(quad: Quad) -> Quad:
    """A quadruple of half the norm, for any quad of even norm.

    An even norm forces 0, 2, or 4 odd components, so sorting the
    components by (parity, value) pairs them with even differences and
    ((a+b)/2, (a-b)/2, (c+d)/2, (c-d)/2) is integral.

    Raises:
        ValueError: if norm(quad) is odd.
    """
    if quad.norm() % 2:
        raise ValueError(f"{quad} has odd norm {quad.norm()}")
    a, b, c, d = sorted(quad, key=lambda t: (t % 2, t))
    assert (a - b) % 2 == 0 and (c - d) % 2 == 0
    return Quad((a + b) // 2, (a - b) // 2, (c + d) // 2, (c - d) // 2)


def halve(dec: Decomposition) -> Decomposition:
    """Decomposition of n/2 from a decomposition of an even n."""
    if dec.n % 2:
        raise ValueError(f"{dec.n} is odd; halving needs an even input")
    return Decomposition(dec.n // 2, canonicalize(halve_quad(dec.quad)))


def _centered_quads(quad: Quad, modulus: int) -> tuple[Quad, Quad]:
    """Componentwise centered residues and quotients: quad == res + modulus * quo."""
    parts = [centered_residue(t, modulus) for t in quad]
    return Quad(*(p.value for p in parts)), Quad(*(p.quotient for p in parts))


def _descent_states(p: int) -> Iterator[DescentState]:
    x, y = solve_two_square_minus_one(p)
    quad = Quad(x, y, 1, 0)
    norm = quad.norm()
    assert norm % p == 0
    multiplier = norm // p
    yield DescentState(p, multiplier, quad)
    while multiplier > 1:
        if multiplier % 2 == 0:
            quad = halve_quad(quad)
            multiplier //= 2
        else:
            residues, _ = _centered_quads(quad, multiplier)
            reduced = residues.norm()
            assert reduced % multiplier == 0
            # reduced > 0: otherwise multiplier | every component, forcing
            # multiplier^2 | multiplier * p and so multiplier | p.
            product = quat_mul(quad, conj(residues))
            assert all(t % multiplier == 0 for t in product)
            quad = Quad(*(t // multiplier for t in product))
            multiplier = reduced // multiplier
        yield DescentState(p, multiplier, quad)


def trace_descent(p: int) -> list[DescentState]:
    """All descent states for an odd prime p, from the initial multiplier
    (always < p) strictly down to 1."""
    return list(_descent_states(p))


@lru_cache(maxsize=None)
def _prime_quad(p: int) -> Quad:
    for state in _descent_states(p):
        quad = state.quad
    return canonicalize(quad)


def prime_descent(p: int) -> Decomposition:
    """Four-square decomposition of an odd prime by multiplier descent."""
    return Decomposition(p, _prime_quad(p))


def four_squares(n: int) -> Decomposition:
    """Canonical four-square decomposition of any nonnegative integer.

    Factors n, decomposes 2 as (1,1,0,0) and each odd prime by descent,
    pulls even prime-power parts out as perfect squares, and recombines
    with the norm-multiplicative product.  Deterministic for fixed n.

    Raises:
        ValueError: if n < 0.
        FactorizationError: if n exceeds the factorization capability.
    """
    if n < 0:
        raise ValueError(f"expected a nonnegative integer, got {n}")
    if n == 0:
        return Decomposition(0, ZERO)
    quad = ONE
    for p, exponent in factorize(n):
        root = p ** (exponent // 2)
        if root > 1:
            quad = quat_mul(quad, Quad(root, 0, 0, 0))
        if exponent % 2:
            quad = quat_mul(quad, Quad(1, 1, 0, 0) if p == 2 else _prime_quad(p))
    return Decomposition(n, canonicalize(quad))


# Norm-2 quadruples used to peel one factor of 2 off a witness product; the
# right one makes quat_mul(peeler, F) divisible by 2 in every component.
_PEELERS = (Quad(1, 1, 0, 0), Quad(1, 0, 1, 0), Quad(1, 0, 0, 1))


def _peel_two(quad: Quad) -> Quad:
    a, b, c, d = quad
    if (a - b) % 2 == 0 and (c - d) % 2 == 0:
        return _PEELERS[0]
    if (a - c) % 2 == 0 and (b - d) % 2 == 0:
        return _PEELERS[1]
    return _PEELERS[2]


def witness(divisor: int, quotient: int, product: Quad) -> Witness:
    """Factor matrix_of(product) as matrix_of(L)^T @ matrix_of(R).

    Args:
        divisor: integer >= 1.
        quotient: integer >= 0.
        product: quadruple with norm(product) == divisor * quotient.

    Returns:
        A verified Witness with norm(L) == divisor and norm(R) == quotient.
        The factors are not unique; this returns one deterministic choice.

    Raises:
        ValueError: if divisor < 1, quotient < 0, or the norm precondition
            fails.

    The construction descends on (divisor, quotient): swap the pair (via
    conjugation, which transposes the relation) whenever quotient < divisor,
    peel factors of 2 off an even divisor, and otherwise reduce product
    centered mod divisor, which strictly shrinks the quotient.  Each rewind
    step recombines the child factors; the assembled relation is verified
    exactly on construction.
    """
    if divisor < 1:
        raise ValueError(f"divisor must be >= 1, got {divisor}")
    if quotient < 0:
        raise ValueError(f"quotient must be >= 0, got {quotient}")
    if product.norm() != divisor * quotient:
        raise ValueError(
            f"norm {product.norm()} != {divisor} * {quotient}; nothing to witness"
        )
    top = (divisor, quotient, product)

    frames: list[tuple[str, Quad | None]] = []
    while True:
        if divisor == 1:
            left, right = ONE, product
            break
        if quotient == 0:
            # product is the zero quad; any norm-divisor factor works.
            left, right = four_squares(divisor).quad, ZERO
            break
        if quotient < divisor:
            frames.append(("swap", None))
            divisor, quotient, product = quotient, divisor, conj(product)
            continue
        if divisor % 2 == 0:
            peeler = _peel_two(product)
            peeled = quat_mul(peeler, product)
            assert all(t % 2 == 0 for t in peeled)
            frames.append(("peel", peeler))
            divisor, product = divisor // 2, Quad(*(t // 2 for t in peeled))
            continue
        # Odd divisor >= 3: centered reduction strictly shrinks the quotient.
        residues, quotients = _centered_quads(product, divisor)
        reduced = residues.norm()
        assert reduced % divisor == 0
        frames.append(("reduce", quotients))
        quotient, product = reduced // divisor, residues

    for tag, payload in reversed(frames):
        if tag == "swap":
            left, right = right, left
        elif tag == "peel":
            left = quat_mul(left, payload)
        else:  # reduce
            right = right + quat_mul(left, payload)

    return Witness(top[0], top[1], top[2], left, right)


def cofactor(divisor: Decomposition, product: Decomposition) -> Decomposition:
    """Given decompositions of d and of d*q, produce a decomposition of q.

    The output quadruple is the witness right factor; it need not relate
    componentwise to the divisor's quadruple.

    Raises:
        ValueError: if the divisor's n does not divide the product's n.
    """
    if divisor.n < 1 or product.n % divisor.n:
        raise ValueError(f"{divisor.n} does not divide {product.n}")
    quotient = product.n // divisor.n
    built = witness(divisor.n, quotient, product.quad)
    return Decomposition(quotient, canonicalize(built.right))


def _squarefree_seed(m: int) -> tuple[int, Quad]:
    """The CRT route: a quadruple (F, G, 1, 0) of norm m*q with q < m.

    For squarefree m >= 2, solve f^2 + g^2 ≡ -1 modulo every prime factor
    (with (1, 0) for the factor 2), recombine by CRT, and center modulo m
    so the norm drops below m^2.  Kept as the test-exercised alternative
    to the per-prime production path.
    """
    if m < 2:
        raise ValueError(f"expected a squarefree integer >= 2, got {m}")
    factors = factorize(m)
    if any(e > 1 for _, e in factors):
        raise ValueError(f"{m} is not squarefree")
    pairs = [(1, 0) if p == 2 else solve_two_square_minus_one(p) for p, _ in factors]
    first = crt([(x, p) for (x, _), (p, _) in zip(pairs, factors)])
    second = crt([(y, p) for (_, y), (p, _) in zip(pairs, factors)])
    quad = Quad(
        centered_residue(first, m).value,
        centered_residue(second, m).value,
        1,
        0,
    )
    norm = quad.norm()
    assert norm % m == 0
    quotient = norm // m
    assert 1 <= quotient < m
    return quotient, quad
