"""Multiplicative independence modulo constants, and the quotient bound L'.

gamma^r * delta^s is constant exactly when r*div(gamma) + s*div(delta) = 0,
so independence of two functions is non-proportionality of their divisors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from ffrec.places import Divisor, divisor
from ffrec.polyalg import RationalFunction, as_fraction

__all__ = [
    "HypothesisError",
    "MultRelation",
    "find_relation",
    "multiplicatively_independent",
    "DirectionalHeight",
    "directional_height",
    "min_directional_height",
    "effective_Lprime",
]


class HypothesisError(ValueError):
    """An input violates the hypotheses an operation relies on."""


@dataclass(frozen=True)
class MultRelation:
    r: int
    s: int

    def __post_init__(self):
        if self.r == 0 and self.s == 0:
            raise ValueError("trivial relation")

    def __str__(self):
        return f"r={self.r} s={self.s}"


def _relation_from_divisors(u: Divisor, v: Divisor) -> Optional[MultRelation]:
    if not u:
        return MultRelation(1, 0)
    if not v:
        return MultRelation(0, 1)
    place = next(iter(u))
    a, b = u[place], v.get(place)
    if b == 0:
        return None
    g = gcd(a, b)
    r, s = b // g, -a // g
    if r < 0:
        r, s = -r, -s
    if (u * r + v * s):
        return None
    return MultRelation(r, s)


def find_relation(gamma: RationalFunction, delta: RationalFunction) -> Optional[MultRelation]:
    """Primitive (r, s) with gamma^r delta^s constant, or None if independent."""
    if gamma.is_zero() or delta.is_zero():
        raise ValueError("multiplicative independence is undefined for zero")
    return _relation_from_divisors(divisor(gamma), divisor(delta))


def multiplicatively_independent(gamma: RationalFunction, delta: RationalFunction) -> bool:
    return find_relation(gamma, delta) is None


class DirectionalHeight:
    """(n, m) -> H(gamma^n / delta^m), extended to nonnegative rational (n, m).

    The divisors are computed once, so repeated evaluation is cheap.  The
    function is positively homogeneous of degree one.
    """

    def __init__(self, gamma: RationalFunction, delta: RationalFunction):
        if gamma.is_zero() or delta.is_zero():
            raise ValueError("zero has no divisor")
        u, v = divisor(gamma), divisor(delta)
        self.rows = tuple((p.degree, u.get(p), v.get(p)) for p in sorted(set(u) | set(v)))

    def __call__(self, n, m) -> Fraction:
        n, m = as_fraction(n), as_fraction(m)
        if n < 0 or m < 0:
            raise ValueError("directions must be nonnegative")
        if n == 0 and m == 0:
            raise ValueError("direction (0, 0) is undefined")
        return sum((w * max(Fraction(0), n * a - m * b) for w, a, b in self.rows), Fraction(0))

    def minimum(self) -> Fraction:
        """kappa = min over max(n, m) = 1, n, m >= 0.

        Along each edge of that boundary the function is piecewise linear, so
        the minimum sits at an endpoint or where some n*a - m*b changes sign.
        """
        one = Fraction(1)
        candidates = {(one, Fraction(0)), (one, one), (Fraction(0), one)}
        for _, a, b in self.rows:
            # edge n = 1, m = t: a - t*b = 0
            if b and 0 <= Fraction(a, b) <= 1:
                candidates.add((one, Fraction(a, b)))
            # edge m = 1, n = t: t*a - b = 0
            if a and 0 <= Fraction(b, a) <= 1:
                candidates.add((Fraction(b, a), one))
        return min(self(n, m) for n, m in sorted(candidates))


def directional_height(gamma: RationalFunction, delta: RationalFunction, n, m) -> Fraction:
    return DirectionalHeight(gamma, delta)(n, m)


def min_directional_height(gamma: RationalFunction, delta: RationalFunction) -> Fraction:
    return DirectionalHeight(gamma, delta).minimum()


def effective_Lprime(gamma: RationalFunction, delta: RationalFunction, L) -> Fraction:
    """Bound on max(n, m) whenever H(gamma^n / delta^m) <= L.

    Since H(gamma^n / delta^m) >= kappa * max(n, m) with kappa > 0 for
    independent nonconstant inputs, L / kappa works.
    """
    if gamma.is_zero() or delta.is_zero() or gamma.is_constant() or delta.is_constant():
        raise HypothesisError("quotient bound needs nonconstant gamma and delta")
    rel = find_relation(gamma, delta)
    if rel is not None:
        raise HypothesisError(
            f"quotient bound needs multiplicatively independent inputs ({rel})"
        )
    L = as_fraction(L)
    if L < 0:
        raise ValueError("L must be nonnegative")
    kappa = min_directional_height(gamma, delta)
    return L / kappa
