# Dense univariate integer polynomials as coefficient lists, lowest degree first.
from __future__ import annotations

from collections import Counter
from functools import lru_cache


def trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def divmod_monic(num: list, den: list) -> tuple:
    """Exact long division by a polynomial with leading coefficient +-1."""
    num = trim(num)
    den = trim(den)
    if not den or abs(den[-1]) != 1:
        raise ValueError("divisor must have leading coefficient +-1")
    lead = den[-1]
    rem = list(num)
    if len(rem) < len(den):
        return [], rem
    quot = [0] * (len(rem) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(den) - 1] * lead
        quot[k] = c
        if c:
            for j, d in enumerate(den):
                rem[k + j] -= c * d
    return trim(quot), trim(rem)


@lru_cache(maxsize=None)
def cyclotomic(q: int) -> tuple:
    """Coefficients of the q-th cyclotomic polynomial."""
    if q < 1:
        raise ValueError("q must be positive")
    p = [-1] + [0] * (q - 1) + [1]
    for d in range(1, q):
        if q % d == 0:
            p, r = divmod_monic(p, list(cyclotomic(d)))
            assert not r
    return tuple(p)


def cyclotomic_factorization(p: list) -> Counter:
    """Multiplicities m_q with p = prod Phi_q^m_q; ValueError if p is not such a product."""
    p = trim(p)
    if not p or p[-1] != 1:
        raise ValueError("not a monic polynomial")
    out: Counter = Counter()
    q = 1
    deg = len(p) - 1
    while deg > 0:
        if q > 4 * deg * deg + 10:
            raise ValueError("polynomial is not a product of cyclotomic polynomials")
        phi = list(cyclotomic(q))
        quot, rem = divmod_monic(p, phi)
        if not rem and quot:
            out[q] += 1
            p = quot
            deg = len(p) - 1
        else:
            q += 1
    return out

