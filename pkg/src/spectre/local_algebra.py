"""Local standard bases and the Milnor number.

Standard bases are computed in the localisation of Q[x] at the origin with
Mora's tangent-cone normal form (ecart-driven reduction). The leading ideal
of the Jacobian ideal then gives ``dim O/J_f`` by counting the monomials
under the staircase.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import NotACriticalGerm, ResourceLimit
from .poly import Poly, partials

DEFAULT_MAX_STAIRCASE = 10_000
INFINITE = math.inf


class OrderKind(enum.Enum):
    NEGDEGLEX = "negdeglex"
    NEGDEGREVLEX = "negdegrevlex"


@dataclass(frozen=True)
class LocalOrder:
    """A local monomial order: lower total degree is larger, so 1 is the largest monomial."""

    kind: OrderKind = OrderKind.NEGDEGREVLEX
    nvars: int = 0

    def key(self, exp: tuple):
        # larger key == larger monomial
        if self.kind is OrderKind.NEGDEGLEX:
            return (-sum(exp), exp)
        return (-sum(exp), tuple(-e for e in reversed(exp)))


@dataclass(frozen=True)
class StandardBasis:
    generators: tuple
    staircase: tuple  # minimal generators of the leading ideal
    order: LocalOrder

    def in_leading_ideal(self, exp: tuple) -> bool:
        return any(_divides(s, exp) for s in self.staircase)


@dataclass(frozen=True)
class MilnorData:
    mu: float  # int, or INFINITE for a non-isolated critical point
    basis: tuple = ()

    @property
    def is_isolated(self) -> bool:
        return self.mu != INFINITE


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


# -- dict-based polynomial kernels -------------------------------------
# A term map is dict[exp -> Fraction]; all helpers below treat it as immutable.


class _LPoly:
    __slots__ = ("terms", "lm", "lc", "ecart")

    def __init__(self, terms: dict, key):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]
        self.ecart = max(sum(e) for e in terms) - sum(self.lm)


def _sub_multiple(h: dict, c: Fraction, shift: tuple, g: dict) -> dict:
    out = dict(h)
    for e, v in g.items():
        e2 = tuple(a + b for a, b in zip(e, shift))
        nv = out.get(e2, 0) - c * v
        if nv:
            out[e2] = nv
        else:
            out.pop(e2, None)
    return out


def _spoly(f: _LPoly, g: _LPoly, key) -> dict:
    lcm_ = tuple(max(a, b) for a, b in zip(f.lm, g.lm))
    sf = tuple(a - b for a, b in zip(lcm_, f.lm))
    sg = tuple(a - b for a, b in zip(lcm_, g.lm))
    left = {tuple(a + b for a, b in zip(e, sf)): v / f.lc for e, v in f.terms.items()}
    return _sub_multiple(left, 1 / g.lc, sg, g.terms)


def _monic(terms: dict, key) -> _LPoly:
    p = _LPoly(terms, key)
    if p.lc != 1:
        inv = 1 / p.lc
        p = _LPoly({e: v * inv for e, v in terms.items()}, key)
    return p


def _truncate(terms: dict, corner) -> dict:
    if corner is None:
        return terms
    return {e: v for e, v in terms.items() if sum(e) < corner}


class _TailTooLong(Exception):
    """A normal form grew a term beyond the degree guard."""


def _mora_normal_form(h: dict, basis: Sequence[_LPoly], key, corner=None, guard=None) -> dict:
    """Mora's weak normal form of h with respect to basis (local order).

    With a known corner degree every term of that degree or higher lies in
    the ideal and is dropped along the way. Without one, ``guard`` bounds the
    degree of intermediate terms.
    """
    reducers = list(basis)
    h = _truncate(h, corner)
    while h:
        if corner is None and guard is not None and max(sum(e) for e in h) > guard:
            raise _TailTooLong
        hp = _LPoly(h, key)
        candidates = [g for g in reducers if _divides(g.lm, hp.lm)]
        if not candidates:
            break
        g = min(candidates, key=lambda p: p.ecart)
        if g.ecart > hp.ecart:
            reducers.append(hp)
        shift = tuple(a - b for a, b in zip(hp.lm, g.lm))
        h = _truncate(_sub_multiple(h, hp.lc / g.lc, shift, g.terms), corner)
    return h


def _corner_degree(leading: Sequence[tuple], nvars: int):
    """Least D with every monomial of degree D in the monomial ideal, or None.

    None when some axis has no pure power yet, or the complement is too large
    to enumerate. For a local degree order, m^D inside the leading ideal of an
    ideal I forces m^D inside I, so higher terms can be discarded.
    """
    for i in range(nvars):
        if not any(all(e == 0 for k, e in enumerate(m) if k != i) for m in leading):
            return None
    ideal = StandardBasis((), tuple(_minimal_monomials(leading)), LocalOrder(nvars=nvars))
    try:
        below = staircase_complement(ideal, nvars)
    except ResourceLimit:
        return None
    return max((sum(e) for e in below), default=-1) + 1


def standard_basis(
    gens: Sequence[Poly],
    order: LocalOrder | None = None,
    modulo_degree: int | None = None,
    _guard: int | None = None,
) -> StandardBasis:
    """Standard basis of the ideal generated by ``gens`` in the local ring.

    Buchberger's pair loop with Mora's normal form; the result is deterministic
    for a given input order. Once the leading ideal has finite colength, terms
    beyond its highest corner are truncated, which keeps tails from growing.
    With ``modulo_degree=D`` the basis is computed for the ideal plus m^D.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        order = order or LocalOrder(nvars=0)
        return StandardBasis((), (), order)
    variables = gens[0].variables
    n = len(variables)
    if order is None:
        order = LocalOrder(nvars=n)
    key = order.key

    corner = modulo_degree
    basis = [_monic(t, key) for t in (_truncate(g.terms, corner) for g in gens) if t]

    def update_corner():
        nonlocal basis, corner
        d = _corner_degree([p.lm for p in basis], n)
        if d is None or (corner is not None and d >= corner):
            return False
        corner = d
        kept = []
        for p in basis:
            t = _truncate(p.terms, corner)
            if t:
                kept.append(p if len(t) == len(p.terms) else _monic(t, key))
        basis = kept
        return True

    update_corner()
    pairs = list(combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop(0)
        f, g = basis[i], basis[j]
        if all(a == 0 or b == 0 for a, b in zip(f.lm, g.lm)):
            # coprime leading monomials: the s-polynomial reduces to zero
            continue
        h = _mora_normal_form(_spoly(f, g, key), basis, key, corner, _guard)
        if h:
            basis.append(_monic(h, key))
            if update_corner():
                # truncation may drop elements, so restart the pair queue
                pairs = list(combinations(range(len(basis)), 2))
            else:
                k = len(basis) - 1
                pairs.extend((m, k) for m in range(k))

    leading = [p.lm for p in basis]
    if corner is not None:
        # truncated terms were reduced by the corner monomials; keep them
        corner_monos = [m for m in _monomials_of_degree(n, corner) if not any(_divides(e, m) for e in leading)]
        basis += [_LPoly({m: Fraction(1)}, key) for m in corner_monos]
        leading += corner_monos
    staircase = _minimal_monomials(leading)
    kept = []
    seen = set()
    for p in basis:
        if p.lm in staircase and p.lm not in seen:
            seen.add(p.lm)
            kept.append(Poly(variables, p.terms))
    return StandardBasis(tuple(kept), tuple(sorted(staircase, key=key, reverse=True)), order)


def _monomials_of_degree(n: int, d: int):
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def _minimal_monomials(monos) -> set:
    monos = set(monos)
    return {m for m in monos if not any(o != m and _divides(o, m) for o in monos)}


def _max_staircase(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("SPECTRE_MAX_STAIRCASE")
    return int(env) if env else DEFAULT_MAX_STAIRCASE


def staircase_complement(sb: StandardBasis, nvars: int, cap: int | None = None):
    """Monomials outside the leading ideal, or None when there are infinitely many."""
    cap = _max_staircase(cap)
    for i in range(nvars):
        if not any(all(e == 0 for k, e in enumerate(s) if k != i) for s in sb.staircase):
            return None
    zero = (0,) * nvars
    if sb.in_leading_ideal(zero):
        return []
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(nvars):
                e = m[:i] + (m[i] + 1,) + m[i + 1:]
                if e not in seen and not sb.in_leading_ideal(e):
                    seen.add(e)
                    nxt.append(e)
                    if len(seen) > cap:
                        raise ResourceLimit(f"staircase exceeds {cap} monomials")
        frontier = nxt
    return sorted(seen, key=lambda e: (sum(e), tuple(-x for x in e)))


def milnor_number(f: Poly, order: LocalOrder | None = None, cap: int | None = None) -> MilnorData:
    """Milnor number and a monomial basis of the Milnor algebra O/J_f.

    >>> from spectre.poly import parse_polynomial
    >>> milnor_number(parse_polynomial("x^3+y^4")).mu
    6
    """
    n = f.nvars
    if f.coefficient((0,) * n):
        raise NotACriticalGerm("f(0) != 0")
    if any(sum(e) == 1 for e, _ in f.items()):
        return MilnorData(0, ())
    if order is None:
        order = LocalOrder(nvars=n)
    cap = _max_staircase(cap)
    jac = partials(f)
    guard = 2 * f.degree() + 4
    try:
        sb = standard_basis(jac, order, _guard=guard)
    except _TailTooLong:
        return _milnor_by_truncation(jac, order, n, cap, max(f.degree(), 2), guard)
    basis = staircase_complement(sb, n, cap)
    if basis is None:
        return MilnorData(INFINITE, ())
    return MilnorData(len(basis), tuple(basis))


def _milnor_by_truncation(
    jac, order: LocalOrder, n: int, cap: int, degree: int, limit: int
) -> MilnorData:
    """mu from J + m^D for growing D up to ``limit``.

    Below degree D the leading ideals of J and J + m^D agree. Once all
    monomials of degree D - 1 are leading monomials, m^(D-1) lies in J and
    the complement found is the whole basis. Non-isolated germs never
    settle, so the search gives up past ``limit``.
    """
    while True:
        sb = standard_basis(jac, order, modulo_degree=degree)
        basis = staircase_complement(sb, n, cap)
        if not any(sum(e) == degree - 1 for e in basis):
            return MilnorData(len(basis), tuple(basis))
        if len(basis) >= cap:
            raise ResourceLimit(f"staircase exceeds {cap} monomials")
        if degree >= limit:
            raise ResourceLimit(f"Milnor algebra not settled below degree {degree}")
        degree = min(2 * degree, limit)
