"""Arnold numbers, classical node bounds and the spectral bound for projective hypersurfaces.

The spectral bound compares, for every unit interval, the spectral numbers of
a configuration of local singularities against those of the Fermat germ
``x_1^d + ... + x_n^d``. Interval counts are piecewise constant in the left
endpoint, so a finite scan over breakpoints and midpoints replaces the
quantifier over all real alpha.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import NamedTuple, Sequence

from .errors import DomainError
from .quasihomogeneous import bp_spectrum
from .spectrum import IntervalKind, SpectralSet, interval_count


@dataclass(frozen=True)
class BoundProblem:
    """Hypersurface of degree d in P^n; its singular germs live in n variables."""

    n: int
    d: int
    kind: IntervalKind = IntervalKind.OPEN

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.d < 1:
            raise ValueError("d must be at least 1")


class BoundRow(NamedTuple):
    alpha: Fraction
    fermat: int
    config: int


@dataclass(frozen=True)
class BoundReport:
    feasible: bool
    worst_alpha: Fraction
    fermat_count: int
    config_count: int
    table: tuple = field(default=())

    def to_json(self) -> dict:
        return {
            "feasible": self.feasible,
            "worst_alpha": str(self.worst_alpha),
            "fermat_count": self.fermat_count,
            "config_count": self.config_count,
            "table": [
                {"alpha": str(r.alpha), "fermat": r.fermat, "config": r.config} for r in self.table
            ],
        }

    @classmethod
    def from_json(cls, data) -> BoundReport:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            feasible=bool(data["feasible"]),
            worst_alpha=Fraction(data["worst_alpha"]),
            fermat_count=int(data["fermat_count"]),
            config_count=int(data["config_count"]),
            table=tuple(
                BoundRow(Fraction(r["alpha"]), int(r["fermat"]), int(r["config"])) for r in data["table"]
            ),
        )


def _sum_distribution(n: int, d: int) -> Counter:
    """How many k in {1..d-1}^n have each coordinate sum."""
    dist = Counter({0: 1})
    for _ in range(n):
        nxt: Counter = Counter()
        for s, c in dist.items():
            for k in range(1, d):
                nxt[s + k] += c
        dist = nxt
    return dist


def arnold_number(n: int, d: int) -> int:
    """#{k in (0,d)^n integer : nd/2 - d + 1 < sum k <= nd/2}."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    half = Fraction(n * d, 2)
    low = half - d + 1
    return sum(c for s, c in _sum_distribution(n, d).items() if low < s <= half)


def arnold_closed_form_3(d: int) -> Fraction:
    """Parity-split cubic for A_3(d)."""
    d = Fraction(d)
    if d % 2 == 0:
        return Fraction(23, 48) * d**3 - Fraction(9, 8) * d**2 + Fraction(5, 6) * d
    return Fraction(23, 48) * d**3 - Fraction(23, 16) * d**2 + Fraction(73, 48) * d - Fraction(9, 16)


def fermat_spectrum(n: int, d: int) -> SpectralSet:
    """Spectrum of x_1^d + ... + x_n^d."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    return bp_spectrum([d] * n)


def breakpoints(sets: Sequence[SpectralSet]) -> list:
    """Entries and entries minus one of all sets, plus the midpoints between neighbours."""
    points = set()
    for s in sets:
        for a, _ in s.entries:
            points.add(a)
            points.add(a - 1)
    points = sorted(points)
    mids = [(x + y) / 2 for x, y in zip(points, points[1:])]
    return sorted(points + mids)


def _check_vars(gs, p: BoundProblem):
    for g in gs:
        if g.num_vars != p.n:
            raise ValueError(
                f"germ spectrum has {g.num_vars} variables; surfaces in P^{p.n} need {p.n}"
            )


def max_copies(g: SpectralSet, p: BoundProblem):
    """Largest N with N * count_g <= count_Fermat on every unit interval.

    Returns None (unbounded) only if no interval captures an entry of g,
    which cannot happen for a nonempty g.
    """
    if not g.entries:
        raise ValueError("germ spectrum must be nonempty")
    _check_vars([g], p)
    fermat = fermat_spectrum(p.n, p.d) if p.d >= 2 else SpectralSet.empty(p.n)
    best = None
    for alpha in breakpoints([g, fermat]):
        cg = interval_count(g, alpha, p.kind)
        if cg > 0:
            q = interval_count(fermat, alpha, p.kind) // cg
            best = q if best is None else min(best, q)
    return best


def check_configuration(gs: Sequence[SpectralSet], p: BoundProblem) -> BoundReport:
    """Test a configuration of singularities against the Fermat spectrum.

    The worst alpha maximises config - fermat; among ties a true breakpoint is
    preferred over a midpoint, then the smallest alpha.
    """
    _check_vars(gs, p)
    fermat = fermat_spectrum(p.n, p.d) if p.d >= 2 else SpectralSet.empty(p.n)
    candidates = breakpoints(list(gs) + [fermat])
    exact = set()
    for s in list(gs) + [fermat]:
        for a, _ in s.entries:
            exact.update((a, a - 1))
    rows = []
    for alpha in candidates:
        cf = interval_count(fermat, alpha, p.kind)
        cg = sum(interval_count(g, alpha, p.kind) for g in gs)
        rows.append(BoundRow(alpha, cf, cg))
    if not rows:
        return BoundReport(True, Fraction(0), 0, 0, ())
    worst = min(rows, key=lambda r: (r.fermat - r.config, r.alpha not in exact, r.alpha))
    feasible = all(r.config <= r.fermat for r in rows)
    return BoundReport(feasible, worst.alpha, worst.fermat, worst.config, tuple(rows))


# -- classical bounds ---------------------------------------------------


def plane_curve_bound(d: int) -> int:
    """Maximal number of nodes on a plane curve of degree d: d(d-1)/2."""
    if d < 1:
        raise DomainError("plane_curve", "needs d >= 1")
    return d * (d - 1) // 2


def basset_bound(d: int) -> int:
    """floor of (d(d-1)^2 - 5 - sqrt(d(d-1)(3d-14) + 25)) / 2, computed exactly."""
    radicand = d * (d - 1) * (3 * d - 14) + 25
    if d < 3 or radicand < 0:
        raise DomainError("basset", f"radicand {radicand} is negative for d = {d}")
    a = d * (d - 1) ** 2 - 5
    r = isqrt(radicand)
    if r * r == radicand:
        return (a - r) // 2
    # sqrt lies strictly between r and r + 1
    return (a - r - 1) // 2


def miyaoka_yau_bound(d: int) -> Fraction:
    """4/9 d (d-1)^2, valid for d >= 4."""
    if d < 4:
        raise DomainError("miyaoka_yau", "needs d >= 4")
    return Fraction(4, 9) * d * (d - 1) ** 2


class ClassicalBounds(NamedTuple):
    basset: int | None
    miyaoka_yau: Fraction | None
    plane_curve: int | None


def classical_bounds(d: int) -> ClassicalBounds:
    """All classical bounds for degree d; None where a bound does not apply."""

    def attempt(fn):
        try:
            return fn(d)
        except DomainError:
            return None

    return ClassicalBounds(attempt(basset_bound), attempt(miyaoka_yau_bound), attempt(plane_curve_bound))
