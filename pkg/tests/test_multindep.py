import random
from fractions import Fraction

import pytest

from ffrec.multindep import (
    HypothesisError,
    MultRelation,
    directional_height,
    effective_Lprime,
    find_relation,
    min_directional_height,
    multiplicatively_independent,
)
from ffrec.parse import parse
from ffrec.places import divisor, height
from ffrec.polyalg import RationalFunction, X


def test_examples():
    assert multiplicatively_independent(parse("x"), parse("x+1"))
    assert find_relation(parse("x^2"), parse("x^3")) == MultRelation(3, -2)
    assert find_relation(parse("(x-1)/x"), parse("x/(x-1)")) == MultRelation(1, 1)
    assert str(MultRelation(3, -2)) == "r=3 s=-2"


def test_constants_are_dependent():
    assert find_relation(parse("5"), parse("x")) == MultRelation(1, 0)
    assert find_relation(parse("x"), parse("-2")) == MultRelation(0, 1)
    with pytest.raises(ValueError):
        find_relation(RationalFunction(0), parse("x"))


def _is_constant_by_sampling(values_at, r, s, h):
    # a rational function of height h that takes one value at h + 1 points is constant
    first = None
    for t in range(10, 10 + h + 2):
        g, d = values_at[t]
        v = g ** r * d ** s
        if first is None:
            first = v
        elif v != first:
            return False
    return True


def _brute_force(gamma, delta, bound=12):
    h = bound * (height(gamma) + height(delta))
    values_at = {t: (gamma(t), delta(t)) for t in range(10, 10 + h + 2)}
    for r in range(0, bound + 1):
        for s in range(-bound, bound + 1):
            if (r, s) == (0, 0) or (r == 0 and s < 0):
                continue
            if _is_constant_by_sampling(values_at, r, s, h):
                return True
    return False


def test_oracle_on_monomials_in_two_irreducibles():
    rng = random.Random(17)
    p, q = parse("x^2+1"), parse("x-3")
    for _ in range(150):
        e = [rng.randint(-4, 4) for _ in range(4)]
        if e[:2] == [0, 0] or e[2:] == [0, 0]:
            continue
        c1, c2 = rng.choice([1, 2, -3]), rng.choice([1, 5])
        gamma = p ** e[0] * q ** e[1] * c1
        delta = p ** e[2] * q ** e[3] * c2
        rel = find_relation(gamma, delta)
        assert (rel is not None) == _brute_force(gamma, delta)


def test_relation_soundness():
    rng = random.Random(19)
    bases = [parse(t) for t in ("x", "x+1", "x^2+2", "x-5")]
    for _ in range(150):
        base = RationalFunction(1)
        for b in bases:
            base = base * b ** rng.randint(-2, 2)
        if base.is_constant():
            continue
        r, s = rng.randint(1, 5), rng.randint(-5, 5) or 1
        gamma, delta = base ** s * 3, base ** r * Fraction(-1, 2)
        rel = find_relation(gamma, delta)
        assert rel is not None
        from math import gcd

        assert gcd(rel.r, rel.s) == 1 and rel.r >= 0
        assert not (divisor(gamma) * rel.r + divisor(delta) * rel.s)
        assert (gamma ** rel.r * delta ** rel.s).is_constant()


def test_directional_height_examples():
    gamma, delta = parse("x"), parse("x+1")
    assert directional_height(gamma, delta, 2, 3) == 3
    assert directional_height(gamma, gamma, 1, 1) == 0
    for t in (2, Fraction(7, 3), 5):
        assert directional_height(gamma, delta, 2 * t, 3 * t) == t * 3
    with pytest.raises(ValueError):
        directional_height(gamma, delta, 0, 0)


def _random_independent_pairs(count, seed, spread=2):
    rng = random.Random(seed)
    atoms = [parse(t) for t in ("x", "x+1", "x-2", "x^2+1", "x^2-3", "x+4")]
    out = []
    while len(out) < count:
        g = d = RationalFunction(1)
        for a in atoms:
            g = g * a ** rng.randint(-spread, spread)
            d = d * a ** rng.randint(-spread, spread)
        if g.is_constant() or d.is_constant() or find_relation(g, d) is not None:
            continue
        out.append((g, d))
    return out


def test_kappa_positive_and_lower_bound():
    for g, d in _random_independent_pairs(100, 23):
        kappa = min_directional_height(g, d)
        assert kappa > 0
    for g, d in _random_independent_pairs(6, 29):
        kappa = min_directional_height(g, d)
        for n in range(0, 51, 7):
            for m in range(0, 51, 5):
                if n or m:
                    assert directional_height(g, d, n, m) >= kappa * max(n, m)


def test_directional_height_is_actual_height():
    for g, d in _random_independent_pairs(10, 31):
        for n, m in ((1, 0), (0, 2), (3, 2), (5, 7)):
            assert directional_height(g, d, n, m) == height(g ** n / d ** m)


def _grid_min(g, d, steps=420):
    """Brute-force minimum on the boundary max(n, m) = 1, with an error bound."""
    u, v = divisor(g), divisor(d)
    rows = [(p.degree, u.get(p), v.get(p)) for p in set(u) | set(v)]
    best = None
    for k in range(steps + 1):
        t = Fraction(k, steps)
        for n, m in ((1, t), (t, 1)):
            val = sum(w * max(0, n * a - m * b) for w, a, b in rows)
            best = val if best is None else min(best, val)
    slope = sum(w * (abs(a) + abs(b)) for w, a, b in rows)
    return best, Fraction(slope, steps)


def _assert_kappa_matches_grid(g, d):
    kappa = min_directional_height(g, d)
    grid, tol = _grid_min(g, d)
    assert kappa <= grid <= kappa + tol


def test_effective_Lprime_examples():
    assert effective_Lprime(parse("x"), parse("x+1"), 10) == 10
    assert effective_Lprime(parse("x^2"), parse("x+1"), 10) == 10
    assert min_directional_height(parse("x^2"), parse("x+1")) == 1
    _assert_kappa_matches_grid(parse("x^2"), parse("x+1"))
    assert effective_Lprime(parse("x^3/(x+1)"), parse("x-1"), 0) == 0
    for g, d in _random_independent_pairs(15, 37):
        _assert_kappa_matches_grid(g, d)


def test_effective_Lprime_guarantee():
    for g, d in _random_independent_pairs(5, 41, spread=1):
        L = 6
        bound = effective_Lprime(g, d, L)
        for n in range(0, 11):
            for m in range(0, 11):
                if height(g ** n / d ** m) <= L:
                    assert max(n, m) <= bound


def test_effective_Lprime_rejects_bad_inputs():
    with pytest.raises(HypothesisError):
        effective_Lprime(parse("x^2"), parse("x^3"), 5)
    with pytest.raises(HypothesisError):
        effective_Lprime(parse("3"), X, 5)
