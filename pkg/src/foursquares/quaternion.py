"""Exact integer quaternion arithmetic.

Quadruples of Python ints are closed under a multiplication whose norm
(the sum of the four squares) is multiplicative, which is what makes
"sum of four squares" a multiplicative property.  Each quadruple also
has a faithful 4x4 integer matrix representation; all identities in
this module are stated against that representation.

Convention, fixed once and checked by the matrix oracle in the tests:

    matrix_of(quat_mul(p, q)) == matrix_of(p) @ matrix_of(q)

Under this convention (1,0,0,0) is the two-sided identity, conjugation
realizes the matrix transpose (matrix_of(conj(q)) == matrix_of(q)^T),
and transpose_product(p, q) == quat_mul(conj(p), q).  The classical
product formula in its textbook component form is quat_mul(p, conj(q));
see the tests for the explicit mapping.

All arithmetic is on arbitrary-precision ints, so there is no overflow
at any input size.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["Quad", "ZERO", "ONE", "quat_mul", "conj", "transpose_product", "matrix_of"]

Matrix = tuple[tuple[int, int, int, int], ...]


@dataclass(frozen=True, slots=True)
class Quad:
    """An integer quadruple (a, b, c, d) with norm a^2 + b^2 + c^2 + d^2."""

    a: int
    b: int
    c: int
    d: int

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def __add__(self, other: "Quad") -> "Quad":
        return Quad(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c},{self.d})"


ZERO = Quad(0, 0, 0, 0)
ONE = Quad(1, 0, 0, 0)


def quat_mul(p: Quad, q: Quad) -> Quad:
    """Product with matrix_of(result) == matrix_of(p) @ matrix_of(q).

    The norm of the result is exactly norm(p) * norm(q).
    """
    a, b, c, d = p.a, p.b, p.c, p.d
    x, y, z, v = q.a, q.b, q.c, q.d
    return Quad(
        a * x - b * y - c * z - d * v,
        a * y + b * x - c * v + d * z,
        a * z + b * v + c * x - d * y,
        a * v - b * z + c * y + d * x,
    )


def conj(q: Quad) -> Quad:
    """Conjugate (a,-b,-c,-d); realizes the transpose of matrix_of(q)."""
    return Quad(q.a, -q.b, -q.c, -q.d)


def transpose_product(p: Quad, q: Quad) -> Quad:
    """The quadruple r with matrix_of(r) == matrix_of(p)^T @ matrix_of(q).

    Equal to quat_mul(conj(p), q).  In particular transpose_product(q, q)
    is (norm(q), 0, 0, 0).
    """
    return quat_mul(conj(p), q)


def matrix_of(q: Quad) -> Matrix:
    """The faithful 4x4 integer matrix representation of q.

    Satisfies matrix_of(q)^T @ matrix_of(q) == norm(q) * identity.
    """
    a, b, c, d = q.a, q.b, q.c, q.d
    return (
        (a, b, c, d),
        (-b, a, d, -c),
        (-c, -d, a, b),
        (-d, c, -b, a),
    )


def _mat_mul(m1: Matrix, m2: Matrix) -> Matrix:
    # In-package 4x4 multiply for self-checks; the test oracle has its own.
    return tuple(
        tuple(sum(m1[i][k] * m2[k][j] for k in range(4)) for j in range(4))
        for i in range(4)
    )


def _mat_transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))
