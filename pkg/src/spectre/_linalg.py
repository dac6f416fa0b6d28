# Exact linear algebra over Fraction for the tiny systems used here.
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def rref(rows: list) -> tuple:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def solve_affine(a: list, b: list):
    """Solve a x = b.

    Returns ``(particular, kernel_basis)`` or ``None`` when inconsistent.
    """
    n = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    if not aug:
        return [Fraction(0)] * n, [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    m, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, c in zip(m, pivots):
        x[c] = row[n]
    free = [c for c in range(n) if c not in pivots]
    kernel = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for row, c in zip(m, pivots):
            v[c] = -row[fc]
        kernel.append(v)
    return x, kernel


def nullspace(a: list) -> list:
    return solve_affine(a, [0] * len(a))[1]


def primitive_integer(v: list) -> tuple:
    """Scale a rational vector to the primitive integer vector on the same ray."""
    den = lcm(*(Fraction(x).denominator for x in v))
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)
