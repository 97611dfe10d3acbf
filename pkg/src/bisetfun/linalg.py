"""Exact linear algebra over the rationals (Fraction-based elimination)."""

from __future__ import annotations

from fractions import Fraction


def _as_fraction_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def solve_exact(matrix, rhs):
    """Solve A x = b exactly; None if inconsistent.

    For underdetermined consistent systems the free variables are set to 0,
    which is enough for the invertibility and lattice-membership uses here.
    """
    a = _as_fraction_matrix(matrix)
    b = [Fraction(x) for x in rhs]
    m = len(a)
    n = len(a[0]) if m else 0
    if len(b) != m:
        raise ValueError("rhs length does not match matrix")
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, m) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        b[row], b[piv] = b[piv], b[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        b[row] *= inv
        for r in range(m):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
                b[r] -= f * b[row]
        pivots.append((row, col))
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if b[r] != 0:
            return None
    x = [Fraction(0)] * n
    for r, c in pivots:
        x[c] = b[r]
    # reduced echelon form: verify (catches inconsistency from free columns)
    for r in range(m):
        acc = sum((matrix[r][j] if isinstance(matrix[r][j], Fraction)
                   else Fraction(matrix[r][j])) * x[j] for j in range(n))
        if acc != Fraction(rhs[r]):
            return None
    return x


def invert_exact(matrix):
    """Exact inverse of a square matrix; None if singular."""
    n = len(matrix)
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        sol = solve_exact(matrix, e)
        if sol is None:
            return None
        cols.append(sol)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def kernel_is_trivial(matrix):
    """True iff A x = 0 has only the zero solution (column rank full)."""
    a = _as_fraction_matrix(matrix)
    m = len(a)
    n = len(a[0]) if m else 0
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, m) if a[r][col] != 0), None)
        if piv is None:
            return False
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for r in range(m):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        row += 1
    return True


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def mat_vec(a, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]
