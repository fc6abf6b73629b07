"""Polynomial and truncated-series layer.

The elementary series are pinned to hand-expanded leading terms and to each
other: the two arctangent-flavored maps must be mutual compositional
inverses, and the log-difference series must coincide termwise with the
doubled artanh expansion even though the two are built from different
formulas.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mlpoly.exactnum import GaussRational
from mlpoly.polyfps import Poly, PolySeries, X, elementary

_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=24)
_polys = st.lists(_fractions, max_size=6).map(Poly)


def test_poly_construction_trims_and_reports_degree():
    assert Poly([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert Poly().degree == -1
    assert Poly().is_zero()
    assert Poly([0, 0]).is_zero()
    assert Poly([5]).degree == 0
    assert X.degree == 1
    assert Poly([1, 2]).leading_coefficient == 2
    assert Poly().leading_coefficient == 0


def test_poly_is_immutable_and_hashable():
    p = Poly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = ()
    assert hash(Poly([1, 2])) == hash(p)
    assert {p: "v"}[Poly([1, 2])] == "v"


def test_poly_arithmetic_examples():
    assert (X + Poly([1])) * (X - Poly([1])) == Poly([-1, 0, 1])
    assert 2 * X == Poly([0, 2])
    assert X * Fraction(1, 2) == Poly([0, Fraction(1, 2)])
    assert (X**3).coefficient(3) == 1
    assert X**0 == Poly([1])
    assert Poly([1, 1]) ** 2 == Poly([1, 2, 1])
    assert Poly([2, 4]) / 2 == Poly([1, 2])
    with pytest.raises(ValueError):
        X ** (-1)


def test_poly_evaluation():
    p = Poly([Fraction(3, 2), 0, -5, 0, 1])
    assert p(Fraction(0)) == Fraction(3, 2)
    assert p(Fraction(1, 2)) == Fraction(5, 16)
    assert p(2.0) == pytest.approx(-2.5)
    # exact Gaussian evaluation: i is a root of x^2 + 1
    assert not (X * X + Poly([1]))(GaussRational(0, 1))


def test_poly_derivative():
    assert (X**3).derivative() == 3 * X**2
    assert (X**3).derivative(2) == 6 * X
    assert (X**3).derivative(4) == Poly()
    assert Poly([7]).derivative() == Poly()
    p = Poly([1, 2, 3])
    assert p.derivative(0) == p
    with pytest.raises(ValueError):
        p.derivative(-1)


def test_poly_shift_examples():
    assert (X**2).shift(1) == Poly([1, 2, 1])
    assert (2 * X).shift(Fraction(-1, 2)) == Poly([-1, 2])
    p = Poly([0, 0, 1]).shift(GaussRational(0, 1))  # (x + i)^2
    assert p == Poly([GaussRational(-1), GaussRational(0, 2), GaussRational(1)])


@given(_polys, _fractions, _fractions)
@settings(max_examples=60, deadline=None)
def test_poly_shift_is_evaluation_compatible(p, a, b):
    assert p.shift(a)(b) == p(a + b)
    assert p.shift(a).shift(-a) == p


@given(_polys, _polys, _polys)
@settings(max_examples=60, deadline=None)
def test_poly_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert p - p == Poly()


@given(_polys, _fractions)
@settings(max_examples=60, deadline=None)
def test_poly_evaluation_is_linear_and_multiplicative(p, x):
    q = Poly([1, -2, 3])
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)


def test_poly_string_forms():
    p = Poly([Fraction(-1, 2), 0, 1])
    assert str(p) == "x^2 - 1/2"
    assert str(Poly()) == "0"
    assert str(Poly([0, -1])) == "-x"
    assert p.to_strings() == ["-1/2", "0", "1"]
    assert Poly.from_strings(["-1/2", "0", "1"]) == p
    with pytest.raises(ValueError):
        Poly([GaussRational(0, 1)]).to_strings()


def test_series_constructor_enforces_order_invariant():
    s = PolySeries(3, [1, 2])
    assert s.coeffs == (Poly([1]), Poly([2]), Poly())
    with pytest.raises(ValueError):
        PolySeries(2, [1, 2, 3])
    with pytest.raises(ValueError):
        PolySeries(0)


def test_series_coeff_access_is_bounded():
    s = PolySeries.one(4)
    assert s.coeff(0) == Poly([1])
    with pytest.raises(IndexError):
        s.coeff(4)
    with pytest.raises(IndexError):
        s.coeff(-1)


def test_series_binary_ops_truncate_to_smaller_order():
    a = PolySeries(5, [1, 1, 1, 1, 1])
    b = PolySeries(3, [1, 2])
    assert (a + b).order == 3
    assert (a * b).order == 3
    assert (a * b).coeff(2) == Poly([3])  # 1*0 + 1*2 + 1*1
    with pytest.raises(ValueError):
        b.truncate(4)


def test_elementary_leading_terms():
    arctan = elementary("arctan_half", 7)
    assert [c.coefficient(0) for c in arctan] == [
        0, 1, 0, Fraction(-1, 12), 0, Fraction(1, 80), 0]
    tan = elementary("tan_half", 8)
    assert [c.coefficient(0) for c in tan] == [
        0, 1, 0, Fraction(1, 12), 0, Fraction(1, 120), 0, Fraction(17, 20160)]
    artanh = elementary("artanh", 6)
    assert [c.coefficient(0) for c in artanh] == [
        0, 2, 0, Fraction(2, 3), 0, Fraction(2, 5)]
    with pytest.raises(ValueError):
        elementary("exp", 4)


def test_log_ratio_equals_doubled_artanh_termwise():
    # independent constructions of the same function
    assert elementary("log_ratio", 40) == elementary("artanh", 40)


def test_arctan_and_tan_are_compositional_inverses():
    order = 12
    t = PolySeries(order, [Poly(), Poly([1])])
    arctan = elementary("arctan_half", order)
    tan = elementary("tan_half", order)
    assert arctan.compose(tan) == t
    assert tan.compose(arctan) == t


def test_scale_t_recovers_unhalved_arctan():
    # substituting t -> 2t in 2*arctan(t/2) gives 2*arctan(t)
    doubled = elementary("arctan_half", 6).scale_t(2)
    assert [c.coefficient(0) for c in doubled] == [
        0, 2, 0, Fraction(-2, 3), 0, Fraction(2, 5)]


def test_exp_reciprocal_and_division():
    u = PolySeries(8, [Poly(), X, Poly([Fraction(1, 3)])])
    e = u.exp()
    assert e.coeff(0) == Poly([1])
    assert e * (-u).exp() == PolySeries.one(8)
    assert e / e == PolySeries.one(8)
    r = e.reciprocal()
    assert r * e == PolySeries.one(8)
    with pytest.raises(ValueError):
        PolySeries(4, [1, 1]).exp()  # nonzero constant term
    with pytest.raises(ZeroDivisionError):
        PolySeries(4, [Poly(), Poly([1])]).reciprocal()
    with pytest.raises(ValueError):
        PolySeries(4, [X]).reciprocal()  # non-constant t^0 coefficient


@given(st.lists(_fractions, min_size=1, max_size=4))
@settings(max_examples=40, deadline=None)
def test_exp_inverse_property(cs):
    u = PolySeries(7, [Poly()] + [Poly([c]) for c in cs[:4]])
    assert u.exp() * (-u).exp() == PolySeries.one(7)


def test_series_exp_extracts_known_family_member():
    # [t^2] exp(x log((1+t)/(1-t))) = 2x^2
    series = (elementary("log_ratio", 4) * X).exp()
    assert series.coeff(0) == Poly([1])
    assert series.coeff(1) == 2 * X
    assert series.coeff(2) == Poly([0, 0, 2])


def test_divide_by_t_and_by_x():
    s = PolySeries(4, [Poly(), 2 * X, X * X])
    shifted = s.divide_by_t()
    assert shifted.order == 3
    assert shifted.coeff(0) == 2 * X
    reduced = s.divide_coeffs_by_x()
    assert reduced.coeff(1) == Poly([2])
    assert reduced.coeff(2) == X
    with pytest.raises(ValueError):
        PolySeries.one(4).divide_by_t()
    with pytest.raises(ValueError):
        PolySeries(3, [Poly([1])]).divide_coeffs_by_x()
    with pytest.raises(ValueError):
        PolySeries(1, [Poly()]).divide_by_t()


def test_series_dx():
    s = PolySeries(3, [X * X, 2 * X, Poly([5])])
    assert s.dx() == PolySeries(3, [2 * X, Poly([2]), Poly()])


def test_series_equality_and_iteration():
    a = PolySeries(3, [1, 2])
    assert a == PolySeries(3, [Poly([1]), Poly([2]), Poly()])
    assert a != PolySeries(4, [1, 2])
    assert list(a) == [Poly([1]), Poly([2]), Poly()]
    assert hash(a) == hash(PolySeries(3, [1, 2]))
    with pytest.raises(AttributeError):
        a.order = 5
