from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spectre.errors import NegativeExponent, PolynomialSyntaxError, UnknownVariable
from spectre.poly import Poly, format_polynomial, parse_polynomial, partials, support
from strategies import polynomials, small_rationals

XY = ("x", "y")


def test_parse_reads_terms():
    f = parse_polynomial("x^3+y^4")
    assert f.variables == XY
    assert f.terms == {(3, 0): 1, (0, 4): 1}


def test_parse_acampo_polynomial():
    f = parse_polynomial("x^2*y^2+x^5+y^5")
    assert f.terms == {(2, 2): 1, (5, 0): 1, (0, 5): 1}


def test_cancellation_gives_zero():
    f = parse_polynomial("2*x - 2*x")
    assert f.is_zero()
    assert f.terms == {}
    assert format_polynomial(f) == "0"


def test_rational_coefficients_and_whitespace():
    f = parse_polynomial(" 3/6 * x ^ 2 - y")
    assert f.coefficient((2, 0)) == Fraction(1, 2)
    assert f.coefficient((0, 1)) == -1


def test_variable_order_is_first_appearance():
    assert parse_polynomial("y^2 + x^3").variables == ("y", "x")
    assert parse_polynomial("y^2 + x^3", ["x", "y"]).terms == {(0, 2): 1, (3, 0): 1}


def test_repeated_factors_multiply():
    assert parse_polynomial("x*x^2*y").terms == {(3, 1): 1}


def test_canonical_printing():
    f = parse_polynomial("x^2*y^2+x^5+y^5")
    assert format_polynomial(f) == "x^5 + y^5 + x^2*y^2"
    assert str(parse_polynomial("-1/2*x - 3")) == "-1/2*x - 3"


@pytest.mark.parametrize(
    "text",
    ["2x", "x^", "x^0", "x+", "*x", "1/0", "x^1.5", "(x)", "x y", "1/-2", ""],
)
def test_syntax_errors(text):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial(text)
    assert info.value.position >= 0
    assert info.value.expected


def test_negative_exponent():
    with pytest.raises(NegativeExponent):
        parse_polynomial("x^-2")


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        parse_polynomial("x + z", ["x", "y"])


def test_error_position_points_at_offending_token():
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial("x + 2y")
    assert info.value.position == 5


def test_partials():
    f = parse_polynomial("x^3+y^4")
    assert partials(f) == [Poly(XY, {(2, 0): 3}), Poly(XY, {(0, 3): 4})]
    assert all(p.is_zero() for p in partials(Poly.constant(XY, 5)))
    g = parse_polynomial("x0^2+x1^2")
    assert [str(p) for p in partials(g)] == ["2*x0", "2*x1"]


def test_support():
    assert support(parse_polynomial("x^2*y^2+x^5+y^5")) == {(2, 2), (5, 0), (0, 5)}
    assert support(Poly.zero(XY)) == set()
    assert support(parse_polynomial("x^3+y^4")) == {(3, 0), (0, 4)}


def test_equality_respects_variables():
    assert Poly(("x",), {(1,): 1}) != Poly(("y",), {(1,): 1})
    assert Poly(XY, {(1, 0): 1, (0, 1): 0}) == Poly(XY, {(1, 0): 1})


def test_mixing_variable_lists_is_an_error():
    with pytest.raises(ValueError):
        Poly(("x",), {(1,): 1}) + Poly(("y",), {(1,): 1})


@given(polynomials())
def test_print_parse_round_trip(p):
    text = format_polynomial(p)
    q = parse_polynomial(text, p.variables)
    assert q == p
    assert format_polynomial(q) == text


@given(small_rationals, small_rationals, small_rationals)
def test_rational_arithmetic_is_exact(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@given(polynomials(max_vars=3, max_exp=4, max_terms=3), polynomials(max_vars=3, max_exp=4, max_terms=3))
def test_ring_laws(p, q):
    if p.variables != q.variables:
        q = Poly(p.variables, {e[: p.nvars] + (0,) * (p.nvars - len(e)): c for e, c in q.items()})
    assert p * q == q * p
    assert p * (q + p) == p * q + p * p
    assert (p - q) + q == p


monomial_pairs = st.tuples(
    st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)),
    st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)),
    st.integers(-5, 5),
    st.integers(-5, 5),
)


@given(monomial_pairs)
def test_product_rule(data):
    a, b, ca, cb = data
    names = ("x", "y", "z")
    f = Poly.monomial(names, a, ca)
    g = Poly.monomial(names, b, cb)
    for i in range(3):
        assert (f * g).diff(i) == f.diff(i) * g + f * g.diff(i)
