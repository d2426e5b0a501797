import pickle
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import nonzero_rfs, random_poly, random_rf
from ffrec.parse import parse
from ffrec.places import (
    INF,
    INFINITE,
    Divisor,
    Place,
    divisor,
    height,
    is_S_unit,
    minimal_S,
    place_count,
    valuation,
)
from ffrec.polyalg import Poly, RationalFunction, X, apply_poly


def P(text):
    return Place.finite(parse(text).num)


def test_valuation_examples():
    assert valuation(P("x"), parse("x^3/(x-1)")) == 3
    assert valuation(INFINITE, parse("(x^2+1)/x^5")) == 3
    assert valuation(P("x-1"), RationalFunction(0)) is INF
    assert valuation(P("x-1"), parse("x/(x-1)^4")) == -4
    assert valuation(P("x^2+1"), parse("(x^2+1)^2*(x+1)")) == 2


def test_divisor_examples():
    d = divisor(parse("(x^2+1)/x^5"))
    assert dict(d) == {P("x^2+1"): 1, P("x"): -5, INFINITE: 3}
    assert d.degree() == 0
    assert str(d) == "x:-5, inf:3, x^2+1:1"
    assert dict(divisor(parse("7"))) == {}
    assert dict(divisor(parse("x-1"))) == {P("x-1"): 1, INFINITE: -1}
    with pytest.raises(ValueError, match="zero has no divisor"):
        divisor(RationalFunction(0))


def test_height_examples():
    assert height(parse("(x^2+1)/x^5")) == 5
    assert height(parse("1/3")) == 0
    assert height(parse("(x+1)^3")) == 3
    assert height(RationalFunction(0)) is INF


def test_is_S_unit_examples():
    S = {P("x"), P("x+1"), INFINITE}
    assert is_S_unit(parse("x/(x+1)"), S)
    assert not is_S_unit(parse("x-2"), {P("x"), INFINITE})
    assert is_S_unit(parse("5"), set())
    with pytest.raises(ValueError):
        is_S_unit(RationalFunction(0), S)


def test_minimal_S_examples():
    assert minimal_S([parse("x"), parse("x+1")], {INFINITE}) == {P("x"), P("x+1"), INFINITE}
    assert minimal_S([parse("1")], set()) == frozenset()
    got = minimal_S([parse("(x^2+1)/x")], {P("x-1")})
    assert got == {P("x^2+1"), P("x"), INFINITE, P("x-1")}
    assert place_count(got) == 5
    with pytest.raises(ValueError):
        minimal_S([RationalFunction(0)], set())


def test_place_validation_and_order():
    with pytest.raises(ValueError):
        Place.finite(X ** 2 - 1)
    with pytest.raises(ValueError):
        Place.finite(2 * X)
    with pytest.raises(ValueError):
        Place.finite(Poly([3]))
    places = sorted([INFINITE, P("x^2+1"), P("x+1"), P("x")])
    assert [str(p) for p in places] == ["x", "x+1", "inf", "x^2+1"]
    assert P("x") == Place.finite(X) and hash(P("x")) == hash(Place.finite(X))


def test_extended_integer():
    assert INF + 3 is INF and 3 + INF is INF
    assert INF > 10**30 and min(INF, 5) == 5 and max(INF, -5) is INF
    assert pickle.loads(pickle.dumps(INF)) is INF
    with pytest.raises(ArithmeticError):
        INF - INF
    with pytest.raises(ArithmeticError):
        -INF


def test_sum_formula_500():
    rng = random.Random(3)
    for _ in range(500):
        f = random_rf(rng, 8, 40)
        d = divisor(f)
        assert sum(p.degree * e for p, e in d.items()) == 0
        assert d.degree() == 0
        assert height(f) == max(f.num.degree, f.den.degree)
        assert d.height() == height(f)


def _int_st():
    return st.integers(min_value=-6, max_value=6)


@given(nonzero_rfs, nonzero_rfs)
@settings(max_examples=150, deadline=None)
def test_height_properties_abc(f, g):
    assert height(f) >= 0 and height(f) == height(1 / f)
    s = f + g
    if not s.is_zero():
        assert height(f) - height(g) <= height(s) <= height(f) + height(g)
    assert height(f) - height(g) <= height(f * g) <= height(f) + height(g)


@given(nonzero_rfs, _int_st())
@settings(max_examples=150, deadline=None)
def test_height_power(f, n):
    assert height(f ** n) == abs(n) * height(f)


@given(nonzero_rfs)
@settings(max_examples=100, deadline=None)
def test_height_zero_iff_constant(f):
    assert (height(f) == 0) == f.is_constant()


def test_height_of_polynomial_image():
    rng = random.Random(5)
    for _ in range(150):
        f = random_rf(rng, 3, 9)
        A = random_poly(rng, 4, 9)
        assert height(apply_poly(A, f)) == A.degree * height(f)


@given(nonzero_rfs, nonzero_rfs)
@settings(max_examples=150, deadline=None)
def test_valuation_laws(f, g):
    for place in set(divisor(f)) | set(divisor(g)) | {INFINITE, Place.finite(X)}:
        vf, vg = valuation(place, f), valuation(place, g)
        assert valuation(place, f * g) == vf + vg
        vs = valuation(place, f + g)
        assert vs >= min(vf, vg)
        if vf != vg:
            assert vs == min(vf, vg)


def test_divisor_arithmetic():
    f, g = parse("x^2/(x+1)"), parse("(x+1)^3*(x^2+2)")
    assert divisor(f * g) == divisor(f) + divisor(g)
    assert divisor(f / g) == divisor(f) - divisor(g)
    assert divisor(f ** 3) == divisor(f) * 3
    assert isinstance(divisor(f), Divisor)
