"""Linear recurrence sequences G_n = sum_i a_i(n) alpha_i^n over Q(x).

Sequences are always given in power-sum form: a list of terms, each a
polynomial-in-n coefficient (with values in Q(x)) and a characteristic root.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from ffrec import linalg
from ffrec.parse import parse
from ffrec.places import INF, Place, height, valuation
from ffrec.polyalg import Poly, RationalFunction

__all__ = [
    "Term",
    "LinearRecurrence",
    "PiForm",
    "GrowthProfile",
    "DegenerateError",
    "evaluate",
    "values",
    "is_nondegenerate",
    "has_constant_root",
    "pi_rewrite",
    "min_root_valuation",
    "dominant_root_ok",
    "growth_profile",
    "characteristic_coefficients",
]


class DegenerateError(ValueError):
    pass


def _rf(v) -> RationalFunction:
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, str):
        return parse(v)
    return RationalFunction(v)


@dataclass(frozen=True)
class Term:
    """a(n) * root^n with a(n) = sum_k coeff[k] * n^k."""

    coeff: tuple[RationalFunction, ...]
    root: RationalFunction

    def __init__(self, coeff, root):
        c = [_rf(v) for v in coeff]
        while c and c[-1].is_zero():
            c.pop()
        if not c:
            raise ValueError("term coefficient a(n) must be a nonzero polynomial in n")
        root = _rf(root)
        if root.is_zero():
            raise ValueError("characteristic roots must be nonzero")
        object.__setattr__(self, "coeff", tuple(c))
        object.__setattr__(self, "root", root)

    def coeff_at(self, n: int) -> RationalFunction:
        acc = RationalFunction(0)
        for c in reversed(self.coeff):
            acc = acc * n + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeff) - 1

    def to_dict(self) -> dict:
        return {"coeff": [str(c) for c in self.coeff], "root": str(self.root)}


@dataclass(frozen=True)
class LinearRecurrence:
    terms: tuple[Term, ...]

    def __init__(self, terms: Sequence):
        ts = tuple(t if isinstance(t, Term) else Term(*t) for t in terms)
        if not ts:
            raise ValueError("a recurrence needs at least one term")
        roots = [t.root for t in ts]
        if len(set(roots)) != len(roots):
            raise ValueError("characteristic roots must be pairwise distinct")
        object.__setattr__(self, "terms", ts)

    @classmethod
    def from_dict(cls, data: dict) -> "LinearRecurrence":
        return cls([Term(t["coeff"], t["root"]) for t in data["terms"]])

    def to_dict(self) -> dict:
        return {"terms": [t.to_dict() for t in self.terms]}

    @property
    def roots(self) -> tuple[RationalFunction, ...]:
        return tuple(t.root for t in self.terms)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        parts = []
        for t in self.terms:
            a = " + ".join(
                f"({c})" + ("" if k == 0 else ("*n" if k == 1 else f"*n^{k}"))
                for k, c in enumerate(t.coeff)
                if not c.is_zero()
            )
            parts.append(f"[{a}]*({t.root})^n")
        return " + ".join(parts)


def evaluate(G: LinearRecurrence, n: int) -> RationalFunction:
    if n < 0:
        raise ValueError("index must be nonnegative")
    acc = RationalFunction(0)
    for t in G.terms:
        a = t.coeff_at(n)
        if not a.is_zero():
            acc = acc + a * t.root ** n
    return acc


def values(G: LinearRecurrence, start: int, stop: int):
    """Yield (n, G_n) for start <= n < stop, reusing the running root powers."""
    if start < 0:
        raise ValueError("index must be nonnegative")
    powers = [t.root ** start for t in G.terms]
    for n in range(start, stop):
        acc = RationalFunction(0)
        for t, p in zip(G.terms, powers):
            a = t.coeff_at(n)
            if not a.is_zero():
                acc = acc + a * p
        yield n, acc
        powers = [p * t.root for t, p in zip(G.terms, powers)]


def is_nondegenerate(G: LinearRecurrence) -> tuple[bool, Optional[tuple[int, int]]]:
    """(True, None), or (False, (i, j)) with 1-based indices of a constant ratio."""
    roots = G.roots
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if height(roots[i] / roots[j]) == 0:
                return False, (i + 1, j + 1)
    return True, None


def has_constant_root(G: LinearRecurrence) -> bool:
    return any(r.is_constant() for r in G.roots)


def min_root_valuation(G: LinearRecurrence, mu: Place) -> int:
    return min(valuation(mu, r) for r in G.roots)


def dominant_root_ok(G: LinearRecurrence, mu: Place) -> bool:
    return valuation(mu, G.roots[0]) == min_root_valuation(G, mu)


# ---------------------------------------------------------------------------
# pi-form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PiGroup:
    """Per-root basis: a_i(n) = sum_g P_g(n) * pi_g with P_g in Q[n]."""

    root: RationalFunction
    pis: tuple[RationalFunction, ...]
    polys: tuple[Poly, ...]

    def __iter__(self):
        return iter(zip(self.polys, self.pis))


@dataclass(frozen=True)
class PiForm:
    groups: tuple[PiGroup, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(g.pis) for g in self.groups)

    @property
    def basis(self) -> list[RationalFunction]:
        return [pi for g in self.groups for pi in g.pis]

    def expand(self) -> LinearRecurrence:
        terms = []
        for g in self.groups:
            width = max(len(P) for P in g.polys)
            coeff = []
            for k in range(width):
                acc = RationalFunction(0)
                for P, pi in g:
                    if P.coeff(k):
                        acc = acc + pi * P.coeff(k)
                coeff.append(acc)
            terms.append(Term(coeff, g.root))
        return LinearRecurrence(terms)

    def summands(self, n: int) -> list[RationalFunction]:
        """P_g(n) * pi_g * root^n, group-major then basis order."""
        out = []
        for g in self.groups:
            power = g.root ** n
            for P, pi in g:
                out.append(pi * power * P(n))
        return out


def pi_rewrite(G: LinearRecurrence) -> PiForm:
    groups = []
    for t in G.terms:
        keep = linalg.greedy_basis(t.coeff)
        basis = [t.coeff[k] for k in keep]
        # P_g(n) = sum_k c_{k,g} n^k where a_k = sum_g c_{k,g} pi_g
        rows = [[Fraction(0)] * len(t.coeff) for _ in basis]
        for k, a in enumerate(t.coeff):
            for g, c in enumerate(linalg.express(a, basis)):
                rows[g][k] = c
        groups.append(PiGroup(t.root, tuple(basis), tuple(Poly(r) for r in rows)))
    return PiForm(tuple(groups))


# ---------------------------------------------------------------------------
# growth
# ---------------------------------------------------------------------------


@dataclass
class GrowthProfile:
    place: Place
    baseline_slope: int
    entries: list[tuple[int, int]] = field(default_factory=list)
    zeros: list[int] = field(default_factory=list)

    @property
    def c_minus(self) -> Optional[int]:
        return min((g for _, g in self.entries), default=None)

    @property
    def c_plus(self) -> Optional[int]:
        return max((g for _, g in self.entries), default=None)


def growth_profile(G: LinearRecurrence, mu: Place, n_max: int, n_min: int = 1) -> GrowthProfile:
    """gap(n) = mu(G_n) - n * min_i mu(alpha_i) for n_min <= n <= n_max."""
    ok, pair = is_nondegenerate(G)
    if not ok:
        raise DegenerateError(f"recurrence is degenerate: roots {pair[0]} and {pair[1]} have constant ratio")
    slope = min_root_valuation(G, mu)
    prof = GrowthProfile(mu, slope)
    for n, value in values(G, n_min, n_max + 1):
        v = valuation(mu, value)
        if v is INF:
            prof.zeros.append(n)
        else:
            prof.entries.append((n, v - n * slope))
    return prof


def characteristic_coefficients(G: LinearRecurrence) -> list[RationalFunction]:
    """c_0..c_D of prod_i (T - alpha_i)^(deg a_i + 1), lowest first."""
    coeffs = [RationalFunction(1)]
    for t in G.terms:
        for _ in range(t.degree + 1):
            shifted = [RationalFunction(0)] + coeffs
            for k, c in enumerate(coeffs):
                shifted[k] = shifted[k] - t.root * c
            coeffs = shifted
    return coeffs
