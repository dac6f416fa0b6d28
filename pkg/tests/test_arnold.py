import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_force_arnold
from spectre.arnold import (
    BoundProblem,
    BoundReport,
    arnold_closed_form_3,
    arnold_number,
    basset_bound,
    breakpoints,
    check_configuration,
    classical_bounds,
    fermat_spectrum,
    max_copies,
    miyaoka_yau_bound,
    plane_curve_bound,
)
from spectre.errors import DomainError
from spectre.quasihomogeneous import qh_spectrum
from spectre.spectrum import IntervalKind, SpectralSet, interval_count, monomial_spectrum, suspension

F = Fraction
OPEN = IntervalKind.OPEN


def ade_a(k, n):
    s = monomial_spectrum(k + 1)
    for _ in range(n - 1):
        s = suspension(s, 2)
    return s


def test_arnold_numbers_for_surfaces():
    assert [arnold_number(3, d) for d in range(3, 8)] == [4, 16, 31, 68, 104]


def test_closed_form_examples():
    assert arnold_closed_form_3(4) == 16
    assert arnold_closed_form_3(5) == 31
    assert arnold_closed_form_3(6) == 68


@pytest.mark.parametrize("d", range(2, 41))
def test_closed_form_agrees_with_count(d):
    value = arnold_closed_form_3(d)
    assert value.denominator == 1
    assert arnold_number(3, d) == value


@pytest.mark.parametrize("n", range(2, 11))
def test_cubic_formula(n):
    assert arnold_number(n, 3) == comb(n + 1, n // 2)


def test_one_variable_row():
    assert [arnold_number(1, d) for d in range(1, 9)] == [0, 1, 1, 2, 2, 3, 3, 4]


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("d", range(1, 9))
def test_count_matches_brute_force(n, d):
    assert arnold_number(n, d) == brute_force_arnold(n, d)


def test_fermat_spectra():
    assert [m for _, m in fermat_spectrum(3, 3).entries] == [1, 3, 3, 1]
    assert [m for _, m in fermat_spectrum(3, 4).entries] == [1, 3, 6, 7, 6, 3, 1]
    for d in range(2, 8):
        s = fermat_spectrum(2, d)
        assert s.mu == (d - 1) ** 2
        assert s.multiplicity(1) == d - 1


def test_breakpoint_examples():
    assert breakpoints([SpectralSet.from_values([F(3, 2)], 3)]) == [F(1, 2), F(1), F(3, 2)]
    assert breakpoints([]) == []
    points = breakpoints([fermat_spectrum(3, 3)])
    exact = {F(k, 3) for k in range(7)}
    assert exact <= set(points)
    assert set(points) - exact == {F(2 * k + 1, 6) for k in range(6)}


@pytest.mark.parametrize("d, nodes", [(3, 4), (4, 16), (5, 31)])
def test_node_bounds_on_surfaces(d, nodes):
    assert max_copies(SpectralSet.from_values([F(3, 2)], 3), BoundProblem(3, d)) == nodes


def test_a2_surface_germ_on_cubic():
    g = suspension(suspension(monomial_spectrum(3), 2), 2)
    assert g == SpectralSet.from_values([F(4, 3), F(5, 3)], 3)
    assert max_copies(g, BoundProblem(3, 3)) == 3


@pytest.mark.parametrize("n", range(2, 5))
@pytest.mark.parametrize("d", range(1, 9))
def test_node_bound_equals_arnold_number(n, d):
    a1 = qh_spectrum([F(1, 2)] * n)
    assert max_copies(a1, BoundProblem(n, d)) == arnold_number(n, d)


@pytest.mark.parametrize("n", range(2, 5))
@pytest.mark.parametrize("d", range(2, 9))
def test_arnold_number_is_tightest_interval_around_centre(n, d):
    # the binding interval is the one around n/2 holding the fewest Fermat numbers
    fermat = fermat_spectrum(n, d)
    centre = F(n, 2)
    best = min(
        interval_count(fermat, a, OPEN)
        for a in breakpoints([fermat, SpectralSet.from_values([centre], n)])
        if a < centre < a + 1
    )
    assert best == arnold_number(n, d)


def test_a6_on_cubic_is_excluded():
    report = check_configuration([ade_a(6, 3)], BoundProblem(3, 3))
    assert not report.feasible
    assert report.worst_alpha == F(1, 3)
    assert (report.config_count, report.fermat_count) == (2, 1)


def test_a5_plus_a1_is_allowed():
    assert check_configuration([ade_a(5, 3), ade_a(1, 3)], BoundProblem(3, 3)).feasible


def test_four_nodes_but_not_five():
    a1 = ade_a(1, 3)
    assert check_configuration([a1] * 4, BoundProblem(3, 3)).feasible
    assert not check_configuration([a1] * 5, BoundProblem(3, 3)).feasible


def test_feasibility_matches_table():
    report = check_configuration([ade_a(4, 3), ade_a(1, 3)], BoundProblem(3, 3))
    assert report.feasible == all(r.config <= r.fermat for r in report.table)


def test_half_open_bound_is_never_smaller():
    for n in (2, 3):
        for d in range(2, 8):
            for k in (1, 2, 3):
                g = ade_a(k, n)
                open_ = max_copies(g, BoundProblem(n, d, OPEN))
                half = max_copies(g, BoundProblem(n, d, IntervalKind.HALF_OPEN_RIGHT))
                assert half >= open_


def test_variable_count_mismatch():
    with pytest.raises(ValueError):
        max_copies(ade_a(1, 2), BoundProblem(3, 3))
    with pytest.raises(ValueError):
        BoundProblem(1, 3)


@given(st.integers(2, 4), st.integers(2, 8), st.integers(1, 4))
def test_fermat_counts_are_symmetric(n, d, k):
    report = check_configuration([ade_a(k, n)], BoundProblem(n, d))
    by_alpha = {r.alpha: r.fermat for r in report.table}
    fermat = fermat_spectrum(n, d)
    for alpha, count in by_alpha.items():
        assert interval_count(fermat, n - 1 - alpha, OPEN) == count


@given(st.integers(2, 4), st.integers(1, 5))
def test_max_copies_is_monotone_in_degree(n, k):
    g = ade_a(k, n)
    values = [max_copies(g, BoundProblem(n, d)) for d in range(1, 9)]
    assert values == sorted(values)


@given(st.integers(2, 4), st.integers(2, 6), st.lists(st.integers(1, 6), min_size=1, max_size=4))
def test_report_json_round_trip(n, d, ks):
    report = check_configuration([ade_a(k, n) for k in ks], BoundProblem(n, d))
    text = json.dumps(report.to_json())
    assert BoundReport.from_json(text) == report
    assert set(json.loads(text)) == {"feasible", "worst_alpha", "fermat_count", "config_count", "table"}


def test_classical_bounds():
    assert plane_curve_bound(4) == 6
    assert plane_curve_bound(1) == 0
    assert miyaoka_yau_bound(14) == F(4, 9) * 14 * 169 == F(9464, 9)
    assert basset_bound(4) == 15
    assert basset_bound(5) == 34
    with pytest.raises(DomainError):
        miyaoka_yau_bound(3)
    with pytest.raises(DomainError):
        basset_bound(3)
    bounds = classical_bounds(3)
    assert bounds.basset is None and bounds.miyaoka_yau is None and bounds.plane_curve == 3


@pytest.mark.parametrize("d", range(4, 30))
def test_basset_floor_is_exact(d):
    radicand = d * (d - 1) * (3 * d - 14) + 25
    value = basset_bound(d)
    twice = d * (d - 1) ** 2 - 5
    # value <= (twice - sqrt(radicand)) / 2 < value + 1
    assert (twice - 2 * value) ** 2 >= radicand or twice - 2 * value < 0
    assert twice - 2 * (value + 1) < 0 or (twice - 2 * (value + 1)) ** 2 < radicand
