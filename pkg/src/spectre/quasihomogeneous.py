"""Weights and exact spectra of quasi-homogeneous singularities."""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from math import lcm, prod
from typing import Sequence

from . import _intpoly
from ._linalg import solve_affine
from .errors import (
    NonIntegralMu,
    NotQuasiHomogeneous,
    UnderdeterminedWeights,
    WeightOutOfRange,
)
from .poly import Poly, support
from .spectrum import SpectralSet


class WeightVector(tuple):
    """Rational weights w_i, one per variable, each in (0, 1)."""

    def __new__(cls, weights):
        weights = tuple(Fraction(w) for w in weights)
        if not all(0 < w < 1 for w in weights):
            raise WeightOutOfRange(weights)
        return super().__new__(cls, weights)

    def weight(self, exp) -> Fraction:
        return sum((w * e for w, e in zip(self, exp)), Fraction(0))

    def form_weight(self, exp) -> Fraction:
        """Weight of the form x^k dx_0 ^ ... ^ dx_n, i.e. sum w_i (k_i + 1)."""
        return sum((w * (e + 1) for w, e in zip(self, exp)), Fraction(0))

    def __repr__(self):
        return "WeightVector(" + ", ".join(str(w) for w in self) + ")"


def detect_weights(f: Poly) -> WeightVector:
    """Solve sum_i w_i nu_i = 1 over the support of f.

    Raises NotQuasiHomogeneous, UnderdeterminedWeights or WeightOutOfRange.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no weights")
    supp = sorted(support(f))
    if any(sum(e) == 0 for e in supp):
        raise ValueError("f has a constant term")
    solution = solve_affine([list(e) for e in supp], [1] * len(supp))
    if solution is None:
        raise NotQuasiHomogeneous(f"support of {f} does not lie on one weighted hyperplane")
    weights, kernel = solution
    if kernel:
        raise UnderdeterminedWeights(
            f"support of {f} leaves {len(kernel)} degree(s) of freedom in the weights"
        )
    return WeightVector(weights)


def milnor_from_weights(w: Sequence) -> Fraction:
    return prod(((1 - Fraction(x)) / Fraction(x) for x in w), start=Fraction(1))


def qh_spectrum(w: Sequence) -> SpectralSet:
    """Expand prod_i (s - s^w_i) / (s^w_i - 1) into a spectral set.

    Works with u = s^(1/N), N the common denominator, so the product becomes a
    quotient of integer polynomials in u; the division must be exact.
    """
    w = WeightVector(w)
    mu = milnor_from_weights(w)
    if mu.denominator != 1 or mu < 0:
        raise NonIntegralMu(f"prod (1 - w_i)/w_i = {mu} is not a non-negative integer")
    if not w:
        return SpectralSet.empty(0)
    den = lcm(*(x.denominator for x in w))
    num_poly = [1]
    den_poly = [1]
    for x in w:
        p = int(x * den)
        top = [0] * (den + 1)
        top[den] += 1
        top[p] -= 1
        bottom = [-1] + [0] * (p - 1) + [1]
        num_poly = _intpoly.mul(num_poly, top)
        den_poly = _intpoly.mul(den_poly, bottom)
    quot, rem = _intpoly.divmod_monic(num_poly, den_poly)
    if rem:
        raise ArithmeticError(f"Poincare series for weights {w} is not a polynomial")
    if any(c < 0 for c in quot):
        raise ArithmeticError(f"Poincare series for weights {w} has negative coefficients")
    counts = {Fraction(k, den): c for k, c in enumerate(quot) if c}
    result = SpectralSet.from_counts(counts, len(w))
    if result.mu != mu:
        raise ArithmeticError("Poincare series total does not match the Milnor number")
    return result


def bp_spectrum(exponents: Sequence[int]) -> SpectralSet:
    """Spectrum of x_0^a_0 + ... + x_n^a_n by direct enumeration of sum (k_i+1)/a_i."""
    exponents = [int(a) for a in exponents]
    if not exponents:
        raise ValueError("need at least one exponent")
    if any(a < 2 for a in exponents):
        raise ValueError("Brieskorn-Pham exponents must be >= 2")
    counts: Counter = Counter()
    for ks in itertools.product(*(range(a - 1) for a in exponents)):
        counts[sum((Fraction(k + 1, a) for k, a in zip(ks, exponents)), Fraction(0))] += 1
    return SpectralSet.from_counts(counts, len(exponents))
