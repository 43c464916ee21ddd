"""Modular machinery: the x^2 + y^2 + 1 ≡ 0 (mod p) solver, CRT, centered
residues, and integer factorization support.

Everything here is deterministic.  The factor-splitting stage draws its
starting points from a per-call RNG with a fixed default seed, so repeated
calls with equal arguments always produce identical results.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "CenteredResidue",
    "FactorizationError",
    "PrimeFactorization",
    "centered_residue",
    "crt",
    "factorize",
    "is_prime",
    "primes_below",
    "solve_two_square_minus_one",
]

# Ordered (prime, exponent) pairs with strictly increasing primes whose
# product recomposes the factored integer.
PrimeFactorization = list[tuple[int, int]]


class FactorizationError(Exception):
    """An input exceeded the configured factorization capability."""


@dataclass(frozen=True, slots=True)
class CenteredResidue:
    """A residue moved into the half-open interval (-m/2, m/2].

    original == value + modulus * quotient, exactly.
    """

    value: int
    quotient: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if not (-self.modulus < 2 * self.value <= self.modulus):
            raise ValueError(f"{self.value} is not centered modulo {self.modulus}")


def centered_residue(value: int, modulus: int) -> CenteredResidue:
    """Reduce value into (-m/2, m/2]; for even m the boundary +m/2 is kept.

    Raises:
        ValueError: if modulus < 1.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    rem = value % modulus
    if 2 * rem > modulus:
        rem -= modulus
    return CenteredResidue(rem, (value - rem) // modulus, modulus)


def crt(congruences: list[tuple[int, int]]) -> int:
    """Solve x ≡ r_i (mod m_i) for pairwise coprime moduli.

    Args:
        congruences: (residue, modulus) pairs, each modulus >= 1.

    Returns:
        The unique solution in [0, product of the moduli).

    Raises:
        ValueError: if a modulus is < 1 or the moduli are not pairwise coprime.
    """
    solution, product = 0, 1
    for residue, modulus in congruences:
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        if math.gcd(product, modulus) != 1:
            raise ValueError(f"moduli are not pairwise coprime at modulus {modulus}")
        # Lift: solution + product * t ≡ residue (mod modulus).
        t = ((residue - solution) * pow(product, -1, modulus)) % modulus if modulus > 1 else 0
        solution += product * t
        product *= modulus
    return solution % product


def primes_below(bound: int) -> list[int]:
    """All primes < bound by a plain sieve of Eratosthenes."""
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, bound, p)))
    return [i for i in range(bound) if sieve[i]]


@lru_cache(maxsize=8)
def _prime_table(bound: int) -> tuple[int, ...]:
    return tuple(primes_below(bound))


_SMALL_PRIMES = primes_below(1000)

# Witnesses proving deterministic Miller-Rabin correctness below 3.317e24
# (comfortably past 2^64); larger inputs reuse the same fixed witness set.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Correctness is proven for n below 3.317e24 (fixed Miller-Rabin witness
    set); above that the same witnesses are used and no counterexample is
    known.  Always deterministic.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    # n has no factor below 1000 here; write n - 1 = 2^s * d.
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random, budget: list[int]) -> int | None:
    """Brent-cycle Pollard rho; returns a nontrivial factor of composite n.

    Decrements the shared step budget; returns None once it is exhausted.
    """
    if n % 2 == 0:
        return 2
    while budget[0] > 0:
        y = rng.randrange(1, n)
        shift = rng.randrange(1, n)
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1 and budget[0] > 0:
            x = y
            for _ in range(r):
                y = (y * y + shift) % n
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(128, r - k)
                for _ in range(steps):
                    y = (y * y + shift) % n
                    q = q * abs(x - y) % n
                budget[0] -= steps
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            # Backtrack one probe at a time to split the batched gcd.
            g = 1
            while g == 1:
                ys = (ys * ys + shift) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
        # g == n means the cycle collapsed; retry with a fresh polynomial.
    return None


def factorize(
    n: int,
    *,
    trial_bound: int = 10_000,
    max_split_steps: int = 10_000_000,
    seed: int = 0,
) -> PrimeFactorization:
    """Factor n into ordered (prime, exponent) pairs.

    Trial division by all primes below trial_bound, then deterministic
    Miller-Rabin plus fixed-seed Pollard-Brent splitting for whatever
    cofactor remains.  Deterministic for fixed arguments.

    Args:
        n: integer >= 1.
        trial_bound: trial division covers primes below this bound.
        max_split_steps: total rho step budget for one factorize call.
        seed: seed for the splitting stage's starting points.

    Raises:
        ValueError: if n < 1.
        FactorizationError: if the step budget runs out before n is fully
            factored (the capability limit; never a silent wrong answer).
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}; expected an integer >= 1")
    factors: dict[int, int] = {}
    for p in _prime_table(trial_bound):
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n > 1:
        if n < trial_bound * trial_bound:
            factors[n] = factors.get(n, 0) + 1
        else:
            rng = random.Random(seed)
            budget = [max_split_steps]
            pending = [n]
            while pending:
                m = pending.pop()
                if is_prime(m):
                    factors[m] = factors.get(m, 0) + 1
                    continue
                divisor = _pollard_brent(m, rng, budget)
                if divisor is None:
                    raise FactorizationError(
                        f"failed to factor {m} within {max_split_steps} steps"
                    )
                pending.extend((divisor, m // divisor))
    return sorted(factors.items())


def _sqrt_mod_prime(n: int, p: int) -> int:
    """A square root of n modulo an odd prime p; n must be a QR (or 0)."""
    n %= p
    if n == 0:
        return 0
    if p % 4 == 3:
        root = pow(n, (p + 1) // 4, p)
    else:
        # Tonelli-Shanks with the smallest quadratic non-residue as generator.
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, root = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
        while t != 1:
            i, probe = 0, t
            while probe != 1:
                probe = probe * probe % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            root = root * b % p
            c = b * b % p
            t = t * c % p
            m = i
    if root * root % p != n:
        raise ArithmeticError(f"{n} is not a quadratic residue modulo {p}")
    return root


def solve_two_square_minus_one(p: int) -> tuple[int, int]:
    """Smallest (y, then x) solution of x^2 + y^2 + 1 ≡ 0 (mod p).

    For every odd prime p a solution with 0 <= x, y <= (p-1)/2 exists: the
    values -1 - y^2 and the squares x^2 each range over (p+1)/2 residues,
    so the two sets intersect.  The returned pair is the one with minimal
    y and, for that y, minimal x, which makes the output deterministic.

    Raises:
        ValueError: if p is not an odd prime.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    half, legendre_exp = (p - 1) // 2, (p - 1) // 2
    for y in range(half + 1):
        target = (-1 - y * y) % p
        if target == 0:
            return 0, y
        if pow(target, legendre_exp, p) == 1:
            root = _sqrt_mod_prime(target, p)
            return min(root, p - root), y
    raise ArithmeticError(f"no solution found modulo {p}; {p} cannot be prime")
