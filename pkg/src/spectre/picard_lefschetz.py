"""Integer Picard-Lefschetz monodromy for morsifications of curve singularities.

Matrices are tuples of row tuples acting on column vectors of coordinates in
the vanishing basis; column ``j`` of ``T`` is the image of ``delta_j``.
Indices into a basis are 1-based, matching the numbering of critical values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import NotFiniteWithinCap
from .spectrum import EigenvalueSet, eigenvalues_from_charpoly

Matrix = tuple


@dataclass(frozen=True)
class VanishingBasis:
    rank: int
    intersection: Matrix  # intersection[i][j] = <delta_i, delta_j>
    path_order: tuple = field(default=())

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        J = self.intersection
        if len(J) != self.rank or any(len(row) != self.rank for row in J):
            raise ValueError("intersection matrix has the wrong shape")
        for i in range(self.rank):
            if J[i][i] != 0:
                raise ValueError("curve intersection form has zero diagonal")
            for j in range(self.rank):
                if J[i][j] != -J[j][i]:
                    raise ValueError("curve intersection form must be skew-symmetric")
        if not self.path_order:
            object.__setattr__(self, "path_order", tuple(range(1, self.rank + 1)))
        if sorted(self.path_order) != list(range(1, self.rank + 1)):
            raise ValueError("path_order must be a permutation of 1..rank")


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def ak_chain(k: int) -> VanishingBasis:
    """Distinguished basis of an A_k morsification: a chain with <delta_i, delta_i+1> = 1."""
    if k < 1:
        raise ValueError("k must be positive")
    J = [[0] * k for _ in range(k)]
    for i in range(k - 1):
        J[i][i + 1] = 1
        J[i + 1][i] = -1
    return VanishingBasis(k, tuple(map(tuple, J)))


def local_monodromy(b: VanishingBasis, i: int) -> Matrix:
    """Transvection T_i(x) = x - <x, delta_i> delta_i around the i-th critical value."""
    if not 1 <= i <= b.rank:
        raise IndexError(f"index {i} outside 1..{b.rank}")
    J = b.intersection
    i -= 1
    rows = [list(r) for r in identity(b.rank)]
    for col in range(b.rank):
        rows[i][col] -= J[col][i]
    return tuple(map(tuple, rows))


def total_monodromy(b: VanishingBasis) -> Matrix:
    """Product of local monodromies along the path order, later paths on the left."""
    t = identity(b.rank)
    for i in b.path_order:
        t = matmul(local_monodromy(b, i), t)
    return t


def matrix_order(m: Matrix, cap: int = 1000) -> int:
    """Least q <= cap with m^q = I; raises NotFiniteWithinCap otherwise."""
    if cap < 1:
        raise ValueError("cap must be positive")
    ident = identity(len(m))
    power = tuple(map(tuple, m))
    for q in range(1, cap + 1):
        if power == ident:
            return q
        power = matmul(power, m)
    raise NotFiniteWithinCap(cap)


def determinant(m: Matrix) -> Fraction:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def charpoly(m: Matrix) -> list:
    """Characteristic polynomial det(tI - m) by Faddeev-LeVerrier, lowest degree first."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        mk = prod
        am = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    return [int(c) for c in coeffs]


def monodromy_eigenvalues(m: Matrix) -> EigenvalueSet:
    """Eigenvalue fractions read off the cyclotomic factorisation of the characteristic polynomial."""
    return eigenvalues_from_charpoly(charpoly(m))


def preserves_form(t: Matrix, J: Sequence) -> bool:
    return matmul(matmul(transpose(t), J), t) == tuple(map(tuple, J))
