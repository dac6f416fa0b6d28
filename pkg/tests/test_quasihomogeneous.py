from fractions import Fraction
from functools import reduce

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spectre.errors import (
    NonIntegralMu,
    NotQuasiHomogeneous,
    UnderdeterminedWeights,
    WeightOutOfRange,
)
from spectre.poly import parse_polynomial
from spectre.quasihomogeneous import WeightVector, bp_spectrum, detect_weights, qh_spectrum
from spectre.spectrum import SpectralSet, check_range, check_symmetry, thom_sebastiani
from strategies import bp_exponents

F = Fraction


def test_weights_of_cusp():
    assert detect_weights(parse_polynomial("x^2+y^3")) == (F(1, 2), F(1, 3))


def test_weights_of_fermat():
    f = parse_polynomial("x^4+y^4+z^4")
    assert detect_weights(f) == (F(1, 4),) * 3


def test_acampo_is_not_quasihomogeneous():
    with pytest.raises(NotQuasiHomogeneous):
        detect_weights(parse_polynomial("x^2*y^2+x^5+y^5"))


def test_underdetermined_weights():
    with pytest.raises(UnderdeterminedWeights):
        detect_weights(parse_polynomial("x*y"))


def test_weight_out_of_range():
    with pytest.raises(WeightOutOfRange):
        detect_weights(parse_polynomial("x + y^2"))
    with pytest.raises(WeightOutOfRange):
        WeightVector([F(1, 2), F(3, 2)])


def test_monomial_spectrum():
    assert qh_spectrum([F(1, 5)]).values() == [F(k, 5) for k in range(1, 5)]


def test_cusp_spectrum():
    assert qh_spectrum([F(1, 2), F(1, 3)]).values() == [F(5, 6), F(7, 6)]


def test_x4_y4_spectrum():
    s = qh_spectrum([F(1, 4), F(1, 4)])
    assert s.entries == ((F(1, 2), 1), (F(3, 4), 2), (F(1), 3), (F(5, 4), 2), (F(3, 2), 1))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_node_sits_at_the_centre(n):
    assert qh_spectrum([F(1, 2)] * n).entries == ((F(n, 2), 1),)


def test_non_integral_mu():
    with pytest.raises(NonIntegralMu):
        qh_spectrum([F(2, 5), F(2, 5)])


def test_non_diagonal_weights():
    # E7: x^3 + x*y^3 has weights (1/3, 2/9) and mu = 7
    s = qh_spectrum(detect_weights(parse_polynomial("x^3+x*y^3")))
    assert s.mu == 7
    assert s.values()[0] == F(1, 3) + F(2, 9)


@pytest.mark.parametrize(
    "exponents, mults, first",
    [
        ((3, 3, 3), [1, 3, 3, 1], F(1)),
        ((4, 4, 4), [1, 3, 6, 7, 6, 3, 1], F(3, 4)),
    ],
)
def test_fermat_tables(exponents, mults, first):
    s = bp_spectrum(exponents)
    assert [m for _, m in s.entries] == mults
    assert s.entries[0][0] == first


def test_fermat_555_prefix():
    s = bp_spectrum((5, 5, 5))
    assert [m for _, m in s.entries][:7] == [1, 3, 6, 10, 12, 12, 10]
    assert [a for a, _ in s.entries][:3] == [F(3, 5), F(4, 5), F(1)]


def test_bp_rejects_bad_exponents():
    with pytest.raises(ValueError):
        bp_spectrum([])
    with pytest.raises(ValueError):
        bp_spectrum([1, 3])


@given(bp_exponents(max_len=4, max_exp=7))
def test_bp_equals_thom_sebastiani_fold(exponents):
    fold = reduce(
        thom_sebastiani, (qh_spectrum([F(1, a)]) for a in exponents), SpectralSet.empty(0)
    )
    assert bp_spectrum(exponents) == fold
    assert qh_spectrum([F(1, a) for a in exponents]) == fold


@given(st.lists(st.integers(2, 7), min_size=1, max_size=3))
def test_qh_spectrum_symmetric_and_in_range(inverse_weights):
    s = qh_spectrum([F(1, a) for a in inverse_weights])
    assert check_symmetry(s) and check_range(s)
    mu = 1
    for a in inverse_weights:
        mu *= a - 1
    assert s.mu == mu


weighted_germs = st.sampled_from(
    ["x^2+y^3", "x^3+x*y^3", "x^2*y+y^5", "x^3+y^5+z^2", "x^4+y^4+x^2*y^2", "x^3*y+y^4+z^2"]
)


@given(weighted_germs, st.data())
def test_detect_weights_invariance(text, data):
    f = parse_polynomial(text)
    w = detect_weights(f)
    c = data.draw(st.sampled_from([F(-3), F(2, 7), F(5)]))
    assert detect_weights(f * c) == w
    perm = data.draw(st.permutations(range(f.nvars)))
    assert detect_weights(f.permute(perm)) == tuple(w[i] for i in perm)
