"""Brute-force reference implementations, used only by tests.

Nothing here shares code with the production modules, on purpose: these
are the independent second route that convention errors have to disagree
with.  They are naive and desk-scale only.
"""

from __future__ import annotations

import math

from .decompose import Decomposition
from .quaternion import Quad

__all__ = ["brute_four_squares", "brute_solve_two_square_minus_one", "matrix_mul"]

_MAX_BRUTE_N = 10**6


def brute_four_squares(n: int) -> Decomposition:
    """Lexicographically greatest (a, b, c, d) with a >= b >= c >= d >= 0
    and a^2 + b^2 + c^2 + d^2 == n, by bounded descending search.

    Reuses the Decomposition container but none of the production search.

    Raises:
        ValueError: if n is outside [0, 10^6].
    """
    if not 0 <= n <= _MAX_BRUTE_N:
        raise ValueError(f"{n} outside the supported range [0, {_MAX_BRUTE_N}]")
    for a in range(math.isqrt(n), -1, -1):
        rest_a = n - a * a
        if rest_a > 3 * a * a:
            break  # b, c, d <= a cannot cover the remainder
        for b in range(min(a, math.isqrt(rest_a)), -1, -1):
            rest_b = rest_a - b * b
            if rest_b > 2 * b * b:
                break
            for c in range(min(b, math.isqrt(rest_b)), -1, -1):
                rest_c = rest_b - c * c
                if rest_c > c * c:
                    break
                d = math.isqrt(rest_c)
                if d * d == rest_c:
                    return Decomposition(n, Quad(a, b, c, d))
    raise AssertionError(f"search space exhausted for {n}")  # unreachable


def matrix_mul(
    m1: tuple[tuple[int, ...], ...], m2: tuple[tuple[int, ...], ...]
) -> tuple[tuple[int, ...], ...]:
    """Exact schoolbook 4x4 integer matrix product."""
    assert len(m1) == len(m2) == 4 and all(len(row) == 4 for row in (*m1, *m2))
    return tuple(
        tuple(sum(m1[i][k] * m2[k][j] for k in range(4)) for j in range(4))
        for i in range(4)
    )


def brute_solve_two_square_minus_one(p: int) -> tuple[int, int] | None:
    """Scan for the smallest (y, then x) with x^2 + y^2 + 1 ≡ 0 (mod p).

    Matches the production solver for odd primes; for odd composites a
    solution may or may not exist, hence the optional result.

    Raises:
        ValueError: if p is even or not below 10^4.
    """
    if p % 2 == 0 or not 0 < p < 10**4:
        raise ValueError(f"expected an odd integer below 10^4, got {p}")
    half = (p - 1) // 2
    smallest_root: dict[int, int] = {}
    for x in range(half, -1, -1):
        smallest_root[x * x % p] = x
    for y in range(half + 1):
        x = smallest_root.get((-1 - y * y) % p)
        if x is not None:
            return (x, y)
    return None
