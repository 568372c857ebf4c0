"""Tiny exact linear algebra over Cyclotomic, on tuples of tuples."""

from __future__ import annotations

from typing import Callable, Sequence

from .cyclotomic import Cyclotomic, ONE, ZERO, Scalar, sum_cyclotomics

Matrix = tuple[tuple[Cyclotomic, ...], ...]


def as_matrix(rows: Sequence[Sequence[Scalar]]) -> Matrix:
    return tuple(tuple(Cyclotomic._coerce(v) for v in row) for row in rows)


def eye(r: int) -> Matrix:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(r)) for i in range(r)
    )


def matmul(a: Matrix, b: Matrix) -> Matrix:
    r, mid, c = len(a), len(b), len(b[0])
    out = []
    for i in range(r):
        row = []
        for j in range(c):
            row.append(
                sum_cyclotomics(
                    a[i][k] * b[k][j] for k in range(mid) if a[i][k] and b[k][j]
                )
            )
        out.append(tuple(row))
    return tuple(out)


def mat_pow(a: Matrix, k: int) -> Matrix:
    out = eye(len(a))
    for _ in range(k):
        out = matmul(out, a)
    return out


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def entrywise(a: Matrix, f: Callable[[Cyclotomic], Cyclotomic]) -> Matrix:
    return tuple(tuple(f(v) for v in row) for row in a)


def conj(a: Matrix) -> Matrix:
    return entrywise(a, lambda v: v.conjugate())


def scale(a: Matrix, s: Scalar) -> Matrix:
    s = Cyclotomic._coerce(s)
    return entrywise(a, lambda v: v * s)


def scale_cols(a: Matrix, diag: Sequence[Scalar]) -> Matrix:
    """a @ diag(d) without materializing the diagonal matrix."""
    return tuple(
        tuple(v * Cyclotomic._coerce(d) for v, d in zip(row, diag)) for row in a
    )


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_symmetric(a: Matrix) -> bool:
    r = len(a)
    return all(a[i][j] == a[j][i] for i in range(r) for j in range(i + 1, r))
