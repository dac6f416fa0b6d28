"""Spectral sets and the operations on them.

A :class:`SpectralSet` is a multiset of rationals together with the number of
variables of the germ it belongs to, so that range and symmetry can be
checked without extra arguments.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, NamedTuple

from . import _intpoly
from .errors import GaloisUnstable
from .poly import Poly


class IntervalKind(enum.Enum):
    OPEN = "open"  # (a, a+1)
    HALF_OPEN_RIGHT = "halfopen"  # (a, a+1]


@dataclass(frozen=True)
class SpectralSet:
    entries: tuple  # ((alpha, multiplicity), ...) strictly increasing in alpha
    num_vars: int

    def __post_init__(self):
        prev = None
        for alpha, mult in self.entries:
            if not isinstance(alpha, Fraction):
                raise TypeError("spectral numbers must be Fractions")
            if mult < 1:
                raise ValueError(f"multiplicity of {alpha} must be positive")
            if prev is not None and alpha <= prev:
                raise ValueError("entries must be strictly increasing")
            prev = alpha
        if self.num_vars < 0:
            raise ValueError("num_vars must be non-negative")

    @classmethod
    def from_counts(cls, counts: Mapping, num_vars: int) -> SpectralSet:
        items = sorted((Fraction(a), int(m)) for a, m in counts.items() if m)
        return cls(tuple(items), num_vars)

    @classmethod
    def from_values(cls, values: Iterable, num_vars: int) -> SpectralSet:
        return cls.from_counts(Counter(Fraction(v) for v in values), num_vars)

    @classmethod
    def empty(cls, num_vars: int = 0) -> SpectralSet:
        return cls((), num_vars)

    @property
    def mu(self) -> int:
        return sum(m for _, m in self.entries)

    def __len__(self):
        return self.mu

    def counts(self) -> dict:
        return dict(self.entries)

    def values(self) -> list:
        """Expanded sorted list alpha_1 <= ... <= alpha_mu."""
        return [a for a, m in self.entries for _ in range(m)]

    def multiplicity(self, alpha) -> int:
        return self.counts().get(Fraction(alpha), 0)

    def restrict(self, low=None, high=None) -> SpectralSet:
        """Sub-multiset with low < alpha <= high (either bound may be None)."""
        kept = {
            a: m
            for a, m in self.entries
            if (low is None or a > low) and (high is None or a <= high)
        }
        return SpectralSet.from_counts(kept, self.num_vars)

    def shift(self, delta) -> SpectralSet:
        return SpectralSet(tuple((a + delta, m) for a, m in self.entries), self.num_vars)

    def to_json(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "spectrum": [{"alpha": str(a), "mult": m} for a, m in self.entries],
        }

    @classmethod
    def from_json(cls, data) -> SpectralSet:
        if isinstance(data, str):
            data = json.loads(data)
        counts = Counter()
        for row in data["spectrum"]:
            counts[Fraction(row["alpha"])] += int(row["mult"])
        return cls.from_counts(counts, int(data["num_vars"]))

    def table(self) -> str:
        return render_table(self)

    def __str__(self):
        inner = ", ".join(str(a) if m == 1 else f"{a}x{m}" for a, m in self.entries)
        return "{" + inner + "}"


def render_table(s: SpectralSet) -> str:
    """Two-row box: multiplicities above the spectral numbers."""
    if not s.entries:
        return "(empty spectrum)"
    cols = [(str(m), str(a)) for a, m in s.entries]
    widths = [max(len(top), len(bot)) for top, bot in cols]
    rule = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
    top = "|" + "|".join(f" {t:^{w}} " for (t, _), w in zip(cols, widths)) + "|"
    bot = "|" + "|".join(f" {b:^{w}} " for (_, b), w in zip(cols, widths)) + "|"
    return "\n".join([rule, top, rule, bot, rule])


def monomial_spectrum(m: int) -> SpectralSet:
    """Spectrum of the one-variable germ x^m: {1/m, ..., (m-1)/m}."""
    if m < 2:
        raise ValueError("m must be at least 2")
    return SpectralSet(tuple((Fraction(k, m), 1) for k in range(1, m)), 1)


def thom_sebastiani(a: SpectralSet, b: SpectralSet) -> SpectralSet:
    """Spectrum of f(x) + g(y): all pairwise sums, multiplicities multiplied."""
    counts: Counter = Counter()
    for x, m in a.entries:
        for y, n in b.entries:
            counts[x + y] += m * n
    if a.num_vars == 0 and not a.entries:
        return b
    if b.num_vars == 0 and not b.entries:
        return a
    return SpectralSet.from_counts(counts, a.num_vars + b.num_vars)


def suspension(s: SpectralSet, m: int) -> SpectralSet:
    """Spectrum of f + z^m: m-1 copies of s shifted by i/m."""
    return thom_sebastiani(s, monomial_spectrum(m))


def check_symmetry(s: SpectralSet) -> bool:
    counts = s.counts()
    return all(counts.get(s.num_vars - a) == m for a, m in counts.items())


def check_range(s: SpectralSet) -> bool:
    return all(0 < a < s.num_vars for a, _ in s.entries)


def interval_count(s: SpectralSet, alpha, kind: IntervalKind = IntervalKind.OPEN) -> int:
    alpha = Fraction(alpha)
    upper = alpha + 1
    if kind is IntervalKind.OPEN:
        return sum(m for a, m in s.entries if alpha < a < upper)
    return sum(m for a, m in s.entries if alpha < a <= upper)


# -- monodromy eigenvalues ---------------------------------------------


@dataclass(frozen=True)
class EigenvalueSet:
    """Roots of unity exp(2 pi i q) stored as fractions q in [0, 1)."""

    entries: tuple

    @classmethod
    def from_fractions(cls, fractions: Iterable) -> EigenvalueSet:
        counts = Counter(Fraction(q) % 1 for q in fractions)
        return cls(tuple(sorted(counts.items())))

    @property
    def size(self) -> int:
        return sum(m for _, m in self.entries)

    def counts(self) -> dict:
        return dict(self.entries)

    def __str__(self):
        return "{" + ", ".join(str(q) if m == 1 else f"{q}x{m}" for q, m in self.entries) + "}"


def eigenvalues(s: SpectralSet) -> EigenvalueSet:
    """Monodromy eigenvalues exp(2 pi i alpha), as alpha mod 1."""
    counts: Counter = Counter()
    for a, m in s.entries:
        counts[a % 1] += m
    return EigenvalueSet(tuple(sorted(counts.items())))


def characteristic_polynomial(e: EigenvalueSet, variable: str = "t") -> Poly:
    """prod Phi_q(t)^m_q when the eigenvalues are Galois-stable.

    Raises :class:`GaloisUnstable` otherwise.
    """
    counts = e.counts()
    by_den: dict = {}
    for q, m in counts.items():
        by_den.setdefault(q.denominator, set()).add(m)
    coeffs = [1]
    for den, mults in sorted(by_den.items()):
        primitive = [Fraction(k, den) for k in range(den) if gcd(k, den) == 1]
        if len(mults) != 1 or any(p not in counts for p in primitive):
            raise GaloisUnstable(q for q, m in e.entries for _ in range(m))
        phi = list(_intpoly.cyclotomic(den))
        for _ in range(mults.pop()):
            coeffs = _intpoly.mul(coeffs, phi)
    return Poly((variable,), {(k,): c for k, c in enumerate(coeffs)})


def eigenvalues_from_charpoly(p) -> EigenvalueSet:
    """Inverse of :func:`characteristic_polynomial` for products of cyclotomic polynomials.

    ``p`` is a one-variable :class:`Poly` or a coefficient list, lowest degree first.
    """
    if isinstance(p, Poly):
        deg = p.degree()
        coeffs = [int(p.coefficient((k,))) for k in range(deg + 1)]
    else:
        coeffs = [int(c) for c in p]
    fractions = []
    for q, m in _intpoly.cyclotomic_factorization(coeffs).items():
        for k in range(q):
            if gcd(k, q) == 1:
                fractions.extend([Fraction(k, q)] * m)
    return EigenvalueSet.from_fractions(fractions)


def monodromy_order(e: EigenvalueSet) -> int:
    """Order of the semisimple part: lcm of the denominators."""
    return lcm(1, *(q.denominator for q, _ in e.entries))


class VarianceCheck(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    holds: bool


def variance_check(s: SpectralSet) -> VarianceCheck:
    """Compare (1/mu) sum (alpha - center)^2 against (alpha_max - alpha_min)/12."""
    if s.mu < 1:
        raise ValueError("variance needs a nonempty spectrum")
    center = Fraction(s.num_vars, 2)
    lhs = sum(m * (a - center) ** 2 for a, m in s.entries) / s.mu
    rhs = (s.entries[-1][0] - s.entries[0][0]) / 12
    return VarianceCheck(lhs, rhs, lhs <= rhs)
