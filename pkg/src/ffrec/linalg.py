"""Exact Q-linear algebra on lists of rational functions.

Elements of Q(x) are linearly dependent over C exactly when they are
dependent over Q, so every decision here is made over Q: clear to a common
denominator and compare numerator coefficient vectors.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as igcd
from math import lcm as ilcm
from typing import Optional, Sequence

from ffrec.polyalg import RationalFunction, lcm

__all__ = [
    "coefficient_vectors",
    "rref",
    "dependency",
    "greedy_basis",
    "express",
    "integer_primitive",
]


def coefficient_vectors(values: Sequence[RationalFunction]) -> list[list[Fraction]]:
    """Column vectors (one per value) over a shared denominator."""
    D = reduce(lcm, (v.den for v in values))
    nums = [v.num * D.exact_div(v.den) for v in values]
    width = max((len(n) for n in nums), default=0)
    return [[n.coeff(i) for i in range(width)] for n in nums]


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = [list(r) for r in rows]
    pivots = []
    if not M:
        return M, pivots
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(M)) if M[i][c]), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                k = M[i][c]
                M[i] = [a - k * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def integer_primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale to coprime integers whose first nonzero entry is positive."""
    d = reduce(ilcm, (v.denominator for v in vec), 1)
    ints = [int(v * d) for v in vec]
    g = reduce(igcd, ints, 0) or 1
    first = next((v for v in ints if v), 1)
    if first < 0:
        g = -g
    return tuple(v // g for v in ints)


def dependency(values: Sequence[RationalFunction]) -> Optional[tuple[int, ...]]:
    """A nontrivial integer relation sum c_i v_i = 0, or None if independent."""
    cols = coefficient_vectors(values)
    n = len(cols)
    height = len(cols[0]) if cols else 0
    rows = [[cols[j][i] for j in range(n)] for i in range(height)]
    R, pivots = rref(rows)
    free = [j for j in range(n) if j not in pivots]
    if not free:
        return None
    f = free[0]
    vec = [Fraction(0)] * n
    vec[f] = Fraction(1)
    for row, pc in zip(R, pivots):
        vec[pc] = -row[f]
    return integer_primitive(vec)


def greedy_basis(values: Sequence[RationalFunction]) -> list[int]:
    """Indices of the earliest maximal independent subset, scanning in order."""
    kept: list[int] = []
    for i, v in enumerate(values):
        if v.is_zero():
            continue
        if dependency([values[j] for j in kept] + [v]) is None:
            kept.append(i)
    return kept


def express(target: RationalFunction, basis: Sequence[RationalFunction]) -> list[Fraction]:
    """Rational coordinates of target in an independent basis."""
    if target.is_zero():
        return [Fraction(0)] * len(basis)
    cols = coefficient_vectors(list(basis) + [target])
    n = len(basis)
    height = len(cols[0])
    aug = [[cols[j][i] for j in range(n + 1)] for i in range(height)]
    R, pivots = rref(aug)
    if n in pivots:
        raise ValueError(f"{target} is not in the span of the basis")
    coords = [Fraction(0)] * n
    for row, pc in zip(R, pivots):
        coords[pc] = row[n]
    return coords
