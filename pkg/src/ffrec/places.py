"""Places, valuations, divisors and heights of Q(x) inside C(x).

A finite place is a monic Q-irreducible polynomial p; it stands for the
deg(p) conjugate complex points, all of which see the same exponent.  Every
sum over places is therefore weighted by ``place.degree`` so that the numbers
agree with the corresponding sums over valuations of C(x).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from ffrec.polyalg import Poly, RationalFunction, factor

__all__ = [
    "GENUS",
    "INF",
    "Place",
    "INFINITE",
    "Divisor",
    "valuation",
    "divisor",
    "height",
    "is_S_unit",
    "minimal_S",
    "place_count",
    "format_places",
]

#: genus of Q(x); kept as a name so bounds can carry the max(0, 2g-2) term
GENUS = 0


class _PositiveInfinity:
    """Valuation of zero.

    Absorbs addition with integers, compares above every integer, and refuses
    any operation that would need inf - inf or a negative infinity.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (_PositiveInfinity, ())

    def __repr__(self):
        return "inf"

    __str__ = __repr__

    def __hash__(self):
        return hash("ExtInt.inf")

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        if other is self or isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("inf - inf is undefined")
        if isinstance(other, int):
            return self
        return NotImplemented

    def __rsub__(self, other):
        raise ArithmeticError("n - inf is not an extended integer")

    def __neg__(self):
        raise ArithmeticError("-inf is not an extended integer")

    def __mul__(self, other):
        if isinstance(other, int) and other > 0:
            return self
        raise ArithmeticError(f"inf * {other} is undefined")

    __rmul__ = __mul__


INF = _PositiveInfinity()


@dataclass(frozen=True)
class Place:
    """A place of Q(x): ``poly`` is None for the infinite place."""

    poly: Optional[Poly] = None

    @classmethod
    def finite(cls, p: Poly, check: bool = True) -> "Place":
        if check:
            if p.is_constant():
                raise ValueError(f"{p} is constant and defines no place")
            if not p.is_monic():
                raise ValueError(f"place polynomial {p} must be monic")
            fac = factor(p)
            if len(fac.factors) != 1 or fac.factors[0][1] != 1:
                raise ValueError(f"place polynomial {p} is reducible: {fac}")
        return cls(p)

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def sort_key(self):
        # by degree; the infinite place follows the degree-one finite places
        if self.poly is None:
            return (1, 1, ())
        return (self.poly.degree, 0, self.poly.coefficients)

    def __lt__(self, other: "Place"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "inf" if self.poly is None else str(self.poly)

    def __repr__(self):
        return f"Place({str(self)!r})"


INFINITE = Place()


def _multiplicity(p: Poly, q: Poly) -> int:
    k = 0
    while True:
        quo, rem = divmod(q, p)
        if rem:
            return k
        q = quo
        k += 1


def valuation(place: Place, f: RationalFunction):
    """Order of f at the place; ``INF`` for the zero function."""
    if f.is_zero():
        return INF
    if place.poly is None:
        return f.den.degree - f.num.degree
    p = place.poly
    k = _multiplicity(p, f.num)
    if k:
        return k
    return -_multiplicity(p, f.den)


class Divisor(Mapping):
    """Finite formal sum of places with nonzero integer exponents."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[Place, int] | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[Place, int] = {}
        for place, e in items:
            acc[place] = acc.get(place, 0) + e
        self._entries = {p: acc[p] for p in sorted(acc) if acc[p]}

    def __getitem__(self, place):
        return self._entries[place]

    def get(self, place, default=0):
        return self._entries.get(place, default)

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, Divisor):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    @property
    def support(self) -> frozenset:
        return frozenset(self._entries)

    def degree(self) -> int:
        """Degree-weighted exponent sum; zero for principal divisors."""
        return sum(p.degree * e for p, e in self._entries.items())

    def height(self) -> int:
        return sum(p.degree * e for p, e in self._entries.items() if e > 0)

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(list(self._entries.items()) + list(other._entries.items()))

    def __neg__(self) -> "Divisor":
        return Divisor({p: -e for p, e in self._entries.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __mul__(self, k: int) -> "Divisor":
        return Divisor({p: k * e for p, e in self._entries.items()})

    __rmul__ = __mul__

    def __str__(self):
        return ", ".join(f"{p}:{e}" for p, e in self._entries.items())

    def __repr__(self):
        return f"Divisor({{{self}}})"


def divisor(f: RationalFunction) -> Divisor:
    if f.is_zero():
        raise ValueError("zero has no divisor")
    entries = {}
    for p, e in factor(f.num).factors:
        entries[Place(p)] = e
    for p, e in factor(f.den).factors:
        entries[Place(p)] = -e
    inf = f.den.degree - f.num.degree
    if inf:
        entries[INFINITE] = inf
    return Divisor(entries)


def height(f: RationalFunction):
    """Number of zeros (equivalently poles) of f counted over C."""
    if f.is_zero():
        return INF
    return max(f.num.degree, f.den.degree)


def is_S_unit(f: RationalFunction, S: Iterable[Place]) -> bool:
    if f.is_zero():
        raise ValueError("zero is not an S-unit candidate")
    return divisor(f).support <= frozenset(S)


def minimal_S(fs: Iterable[RationalFunction], extra: Iterable[Place] = ()) -> frozenset:
    out = set(extra)
    for f in fs:
        if f.is_zero():
            raise ValueError("zero has no divisor")
        out |= divisor(f).support
    return frozenset(out)


def place_count(S: Iterable[Place]) -> int:
    """|S| as a set of valuations of C(x): each place counts its degree."""
    return sum(p.degree for p in S)


def format_places(S: Iterable[Place]) -> str:
    return "{" + ", ".join(str(p) for p in sorted(S)) + "}"
