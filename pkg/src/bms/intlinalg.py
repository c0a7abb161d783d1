"""Exact integer linear algebra: Smith reduction and system solving.

Everything works on plain Python integers, so there is no precision loss.
The solver decides whether A c = b has an integer solution; on failure it
returns a separating functional w (a row of the left transform) with
w . A = 0 modulo some d while w . b is not, which any reader can re-check
without repeating the reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

__all__ = ["smith_decomposition", "solve_integer_system", "Certificate", "certificate_holds"]


def _swap_rows(m: list[list[int]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: list[list[int]], i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m: list[list[int]], dst: int, src: int, factor: int) -> None:
    m[dst] = [a + factor * b for a, b in zip(m[dst], m[src])]


def _add_col(m: list[list[int]], dst: int, src: int, factor: int) -> None:
    for row in m:
        row[dst] += factor * row[src]


def _negate_row(m: list[list[int]], i: int) -> None:
    m[i] = [-a for a in m[i]]


def smith_decomposition(
    matrix: Sequence[Sequence[int]],
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return (D, U, V) with U * A * V = D, U and V unimodular.

    D is diagonal with nonnegative entries satisfying d0 | d1 | ... ; U
    collects the row operations, V the column operations.
    """
    d = [list(row) for row in matrix]
    m = len(d)
    n = len(d[0]) if m else 0
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    t = 0
    while t < min(m, n):
        # pick the nonzero entry of least magnitude as pivot
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = d[i][j]
                if a != 0 and (best is None or abs(a) < best):
                    best, piv = abs(a), (i, j)
        if piv is None:
            break
        _swap_rows(d, t, piv[0])
        _swap_rows(u, t, piv[0])
        _swap_cols(d, t, piv[1])
        _swap_cols(v, t, piv[1])

        while True:
            # clear the pivot column by euclidean steps
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    _add_row(d, i, t, -q)
                    _add_row(u, i, t, -q)
                    if d[i][t]:
                        _swap_rows(d, t, i)
                        _swap_rows(u, t, i)
                        dirty = True
            if dirty:
                continue
            # then the pivot row
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    _add_col(d, j, t, -q)
                    _add_col(v, j, t, -q)
                    if d[t][j]:
                        _swap_cols(d, t, j)
                        _swap_cols(v, t, j)
                        dirty = True
            if not dirty:
                break

        if d[t][t] < 0:
            _negate_row(d, t)
            _negate_row(u, t)

        # enforce the divisibility chain: fold any bad entry into the pivot
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % d[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            _add_row(d, t, bad, 1)
            _add_row(u, t, bad, 1)
            continue  # redo this pivot position
        t += 1

    return d, u, v


@dataclass(frozen=True)
class Certificate:
    """Witness that an integer system A c = b has no solution.

    ``functional`` is an integer row vector w.  Every column a of A
    satisfies w . a = 0 modulo ``modulus`` (exactly 0 when the modulus is
    0), yet w . b = ``value`` does not.
    """

    functional: tuple[int, ...]
    modulus: int
    value: int


def certificate_holds(
    matrix: Sequence[Sequence[int]], rhs: Sequence[int], cert: Certificate
) -> bool:
    """Independently re-check a non-solvability certificate."""
    w = cert.functional
    m = len(rhs)
    if len(w) != m:
        return False
    n = len(matrix[0]) if matrix and matrix[0] else 0
    dots = [sum(w[i] * matrix[i][j] for i in range(m)) for j in range(n)]
    wb = sum(w[i] * rhs[i] for i in range(m))
    if wb != cert.value:
        return False
    if cert.modulus == 0:
        return all(x == 0 for x in dots) and wb != 0
    return all(x % cert.modulus == 0 for x in dots) and wb % cert.modulus != 0


def solve_integer_system(
    matrix: Sequence[Sequence[int]], rhs: Sequence[int]
) -> tuple[Optional[list[int]], Optional[Certificate]]:
    """Solve A c = b over the integers.

    Returns (coefficients, None) on success and (None, certificate) when no
    integer solution exists.
    """
    m = len(rhs)
    n = len(matrix[0]) if m and matrix and matrix[0] else 0
    if m == 0:
        return [0] * n, None

    # prefer a single-coordinate certificate when one row already refutes
    for i in range(m):
        g = 0
        for a in matrix[i]:
            g = math.gcd(g, a)
        if (g == 0 and rhs[i] != 0) or (g > 0 and rhs[i] % g != 0):
            w = tuple(1 if k == i else 0 for k in range(m))
            return None, Certificate(w, g, rhs[i])
    if n == 0:
        return [], None

    d, u, v = smith_decomposition(matrix)
    ub = [sum(u[i][k] * rhs[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(m):
        di = d[i][i] if i < n else 0
        if di != 0:
            if ub[i] % di != 0:
                return None, Certificate(tuple(u[i]), di, ub[i])
            y[i] = ub[i] // di
        elif ub[i] != 0:
            return None, Certificate(tuple(u[i]), 0, ub[i])
    coeffs = [sum(v[j][k] * y[k] for k in range(n)) for j in range(n)]
    return coeffs, None
