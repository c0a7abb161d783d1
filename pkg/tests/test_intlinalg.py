import itertools
import random
from fractions import Fraction

import pytest

from bms.intlinalg import (
    Certificate,
    certificate_holds,
    smith_decomposition,
    solve_integer_system,
)


def _det(matrix):
    """Exact determinant by fraction-free Gaussian elimination (oracle)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [[Fraction(v) for v in row] for row in matrix]
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            factor = m[r][c] / m[c][c]
            m[r] = [a - factor * b for a, b in zip(m[r], m[c])]
    return det


def _mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def _check_smith(matrix):
    d, u, v = smith_decomposition(matrix)
    m, n = len(matrix), len(matrix[0]) if matrix else 0
    assert abs(_det(u)) == 1
    assert abs(_det(v)) == 1
    if m and n:
        assert _mat_mul(_mat_mul(u, [list(r) for r in matrix]), v) == d
    diag = [d[i][i] for i in range(min(m, n))]
    for i in range(m):
        for j in range(n):
            if i != j:
                assert d[i][j] == 0
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        if a:
            assert b % a == 0
        else:
            assert b == 0
    return diag


def test_smith_known_matrix():
    # classic worked example with invariant factors 2, 6, 12
    diag = _check_smith([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert diag == [2, 6, 12]


def test_smith_random_matrices():
    rng = random.Random(7)
    for _ in range(60):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        matrix = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
        _check_smith(matrix)


def test_solve_simple():
    coeffs, cert = solve_integer_system([[1], [0]], [3, 0])
    assert coeffs == [3] and cert is None
    coeffs, cert = solve_integer_system([[2]], [3])
    assert coeffs is None
    assert certificate_holds([[2]], [3], cert)


def test_solve_gcd_structure():
    # 2x + 3y = 1 is solvable; 2x + 4y = 1 is not (parity)
    coeffs, cert = solve_integer_system([[2, 3]], [1])
    assert cert is None and 2 * coeffs[0] + 3 * coeffs[1] == 1
    coeffs, cert = solve_integer_system([[2, 4]], [1])
    assert coeffs is None
    assert cert.modulus == 2
    assert certificate_holds([[2, 4]], [1], cert)


def test_solve_no_generators():
    coeffs, cert = solve_integer_system([[], []], [0, 0])
    assert coeffs == [] and cert is None
    coeffs, cert = solve_integer_system([[], []], [0, 5])
    assert coeffs is None
    assert certificate_holds([[], []], [0, 5], cert)


def test_solve_zero_rows():
    coeffs, cert = solve_integer_system([[1, 2], [0, 0]], [5, 1])
    assert coeffs is None
    assert certificate_holds([[1, 2], [0, 0]], [5, 1], cert)


def _brute_force_solvable(matrix, rhs, bound=4):
    n = len(matrix[0]) if matrix and matrix[0] else 0
    for combo in itertools.product(range(-bound, bound + 1), repeat=n):
        if all(
            sum(a * c for a, c in zip(row, combo)) == b
            for row, b in zip(matrix, rhs)
        ):
            return True
    return False


def test_solver_against_brute_force():
    rng = random.Random(11)
    for _ in range(150):
        m = rng.randint(1, 3)
        n = rng.randint(1, 3)
        matrix = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        if rng.random() < 0.5:
            true_c = [rng.randint(-3, 3) for _ in range(n)]
            rhs = [sum(a * c for a, c in zip(row, true_c)) for row in matrix]
        else:
            rhs = [rng.randint(-4, 4) for _ in range(m)]
        coeffs, cert = solve_integer_system(matrix, rhs)
        if coeffs is not None:
            assert all(
                sum(a * c for a, c in zip(row, coeffs)) == b
                for row, b in zip(matrix, rhs)
            )
        else:
            assert certificate_holds(matrix, rhs, cert)
            assert not _brute_force_solvable(matrix, rhs)


def test_certificate_rejects_tampering():
    _, cert = solve_integer_system([[2]], [3])
    bad = Certificate(cert.functional, cert.modulus, cert.value + 1)
    assert not certificate_holds([[2]], [3], bad)
