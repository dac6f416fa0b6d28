"""Newton polyhedra, Newton weights and spectra of Newton-nondegenerate germs.

Facets are found by exact enumeration: every facet of the Newton polyhedron
``conv(supp + R^n_{>=0})`` is spanned by support points together with some
coordinate directions, and the inputs here are small enough to try every
such spanning set.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from ._linalg import nullspace, primitive_integer
from .errors import BasisIncompatible, NotConvenient, NotIsolated
from .local_algebra import milnor_number, staircase_complement, standard_basis
from .poly import Poly, partials, support
from .spectrum import SpectralSet, check_range, check_symmetry


class Facet(NamedTuple):
    normal: tuple  # primitive, non-negative integer vector
    level: int  # the facet lies on {v : normal . v = level}

    def value(self, v) -> Fraction:
        return sum((Fraction(a) * b for a, b in zip(self.normal, v)), Fraction(0))


@dataclass(frozen=True)
class NewtonPolyhedron:
    vertices: tuple
    facets: tuple  # compact facets only
    num_vars: int
    convenient: bool

    def weight(self, v) -> Fraction:
        return newton_weight(self, v)


def _affinely_independent(points: list) -> bool:
    if len(points) <= 1:
        return True
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    # rank of the difference vectors must be len(points) - 1
    return len(nullspace(list(map(list, zip(*diffs))))) == 0


def _all_facets(points: list, n: int) -> set:
    """Every facet of conv(points) + R^n_{>=0}, including the unbounded ones."""
    facets = set()
    for nzero in range(n):
        for zero in itertools.combinations(range(n), nzero):
            free = [i for i in range(n) if i not in zero]
            r = len(free)
            projected = sorted({tuple(p[i] for i in free) for p in points})
            for chosen in itertools.combinations(projected, r):
                if not _affinely_independent(list(chosen)):
                    continue
                # hyperplane l . x = c through the chosen points: kernel of [p | -1]
                kernel = nullspace([list(p) + [-1] for p in chosen])
                if len(kernel) != 1:
                    continue
                vec = primitive_integer(kernel[0])
                normal, c = vec[:-1], vec[-1]
                if all(x < 0 for x in normal):
                    normal, c = tuple(-x for x in normal), -c
                if not all(x > 0 for x in normal):
                    continue
                if min(sum(a * b for a, b in zip(normal, p)) for p in projected) != c:
                    continue
                full = [0] * n
                for i, x in zip(free, normal):
                    full[i] = x
                facets.add(Facet(tuple(full), c))
    return facets


def _vertices(points: list, facets: set) -> list:
    verts = []
    for p in points:
        through = [f for f in facets if f.value(p) == f.level]
        total = [sum(f.normal[i] for f in through) for i in range(len(p))]
        if not through or not all(x > 0 for x in total):
            continue
        value = sum(a * b for a, b in zip(total, p))
        if all(sum(a * b for a, b in zip(total, q)) > value for q in points if q != p):
            verts.append(p)
    return verts


def newton_polyhedron(supp: Iterable) -> NewtonPolyhedron:
    """Newton polyhedron of a support set; keeps the compact facets."""
    points = sorted({tuple(int(x) for x in v) for v in supp})
    if not points:
        raise ValueError("empty support")
    n = len(points[0])
    if any(len(p) != n for p in points):
        raise ValueError("support vectors have different lengths")
    if any(sum(p) == 0 for p in points):
        raise ValueError("support contains the zero vector")
    facets = _all_facets(points, n)
    compact = sorted((f for f in facets if all(x > 0 for x in f.normal)), key=lambda f: (f.level, f.normal))
    convenient = all(
        any(p[i] > 0 and sum(p) == p[i] for p in points) for i in range(n)
    )
    return NewtonPolyhedron(tuple(_vertices(points, facets)), tuple(compact), n, convenient)


def _require_convenient(p: NewtonPolyhedron):
    if not p.convenient:
        raise NotConvenient("the Newton diagram does not meet every coordinate axis")


def newton_weight(p: NewtonPolyhedron, v) -> Fraction:
    """min over compact facets of (normal . v) / level; equals 1 on the diagram."""
    _require_convenient(p)
    v = tuple(Fraction(x) for x in v)
    if len(v) != p.num_vars:
        raise ValueError("vector has the wrong length")
    if any(x < 1 for x in v):
        raise ValueError("Newton weights are taken at shifted exponents k + 1 >= 1")
    return min(f.value(v) / f.level for f in p.facets)


def lct(p: NewtonPolyhedron) -> Fraction:
    """Newton weight of (1, ..., 1): the log canonical threshold for nondegenerate f."""
    return newton_weight(p, (1,) * p.num_vars)


def spectrum_unit_part(p: NewtonPolyhedron) -> SpectralSet:
    """Multiset of Newton weights of k + 1 that are <= 1, over all lattice points k >= 0.

    In one variable the spectrum lies in (0, 1), so there the bound is strict.
    """
    _require_convenient(p)
    n = p.num_vars
    strict = n == 1
    counts: Counter = Counter()
    start = (0,) * n
    seen = {start}
    stack = [start]
    while stack:
        k = stack.pop()
        w = newton_weight(p, tuple(x + 1 for x in k))
        if w > 1 or (strict and w == 1):
            continue
        counts[w] += 1
        for i in range(n):
            nxt = k[:i] + (k[i] + 1,) + k[i + 1:]
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return SpectralSet.from_counts(counts, n)


def _monomials_up_to(n: int, degree: int):
    for total in range(degree + 1):
        for cut in itertools.combinations(range(total + n - 1), n - 1):
            # stars and bars
            parts, prev = [], -1
            for c in cut:
                parts.append(c - prev - 1)
                prev = c
            parts.append(total + n - 2 - prev)
            yield tuple(parts)


def newton_graded_spectrum(f: Poly, p: NewtonPolyhedron | None = None, cap: int | None = None) -> SpectralSet:
    """Graded dimensions of the Newton filtration on the Milnor algebra.

    The multiplicity of beta is dim O/(J + N_{>beta}) - dim O/(J + N_{>=beta}),
    where N_{>=beta} is the monomial ideal spanned by x^k with Newton weight
    of k + 1 at least beta. Each dimension is a local standard basis count.
    """
    if p is None:
        p = newton_polyhedron(support(f))
    _require_convenient(p)
    data = milnor_number(f, cap=cap)
    if not data.is_isolated:
        raise NotIsolated(f"{f} does not have an isolated critical point")
    n = f.nvars
    if data.mu == 0:
        return SpectralSet.empty(n)
    top = max(sum(m) for m in data.basis) + 1  # m^top lies in J
    monos = list(_monomials_up_to(n, top))
    weight = {k: newton_weight(p, tuple(x + 1 for x in k)) for k in monos}
    levels = sorted({w for k, w in weight.items() if sum(k) < top})
    jac = partials(f)
    cache: dict = {}

    def quotient_dim(i: int) -> int:
        # dim O/(J + N_{>=levels[i]}); i == len(levels) means N is m^top only
        if i not in cache:
            beta = levels[i] if i < len(levels) else None
            gens = {k for k in monos if sum(k) == top}
            if beta is not None:
                gens |= {k for k in monos if weight[k] >= beta}
            gens = [k for k in gens if not any(o != k and all(a <= b for a, b in zip(o, k)) for o in gens)]
            ideal = jac + [Poly.monomial(f.variables, k) for k in gens]
            basis = staircase_complement(standard_basis(ideal), n, cap)
            cache[i] = len(basis)
        return cache[i]

    counts: Counter = Counter()

    def scan(lo: int, hi: int):
        # record jumps of quotient_dim between level indices lo < hi
        if quotient_dim(lo) == quotient_dim(hi):
            return
        if hi == lo + 1:
            counts[levels[lo]] += quotient_dim(hi) - quotient_dim(lo)
            return
        mid = (lo + hi) // 2
        scan(lo, mid)
        scan(mid, hi)

    if quotient_dim(0) != 0 or quotient_dim(len(levels)) != data.mu:
        raise ArithmeticError("Newton filtration does not exhaust the Milnor algebra")
    scan(0, len(levels))
    return SpectralSet.from_counts(counts, n)


def _problems(raw: SpectralSet, mu, unit: SpectralSet) -> list:
    problems = []
    if not check_symmetry(raw):
        problems.append("not symmetric")
    if not check_range(raw):
        problems.append(f"outside (0, {raw.num_vars})")
    if raw.mu != mu:
        problems.append("cardinality differs from mu")
    if raw.mu and raw.restrict(0, 1) != unit:
        problems.append("(0, 1] part disagrees with the Newton lattice count")
    return problems


def nondegenerate_spectrum(f: Poly) -> SpectralSet:
    """Spectrum of a convenient, Newton-nondegenerate germ from Newton weights.

    Nondegeneracy is the caller's responsibility. First the Newton weights of
    the monomial basis of the Milnor algebra are tried; if they fail
    validation (symmetry, range, agreement of the part in (0, 1] with
    :func:`spectrum_unit_part`) the graded dimensions of the Newton filtration
    are used instead. :class:`BasisIncompatible` is raised when that fails too,
    which happens for degenerate input.
    """
    p = newton_polyhedron(support(f))
    _require_convenient(p)
    data = milnor_number(f)
    if not data.is_isolated:
        raise NotIsolated(f"{f} does not have an isolated critical point")
    unit = spectrum_unit_part(p)
    weights = Counter(newton_weight(p, tuple(x + 1 for x in m)) for m in data.basis)
    raw = SpectralSet.from_counts(weights, f.nvars)
    if not _problems(raw, data.mu, unit):
        return raw
    graded = newton_graded_spectrum(f, p)
    problems = _problems(graded, data.mu, unit)
    if problems:
        raise BasisIncompatible(
            "Newton weights do not form a spectrum (is f degenerate?): " + "; ".join(problems), graded
        )
    return graded
