"""Exact univariate polynomials and rational functions over the rationals.

Everything here is built on :class:`fractions.Fraction`; there is no floating
point anywhere.  Values are immutable and hashable.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd as igcd
from math import lcm as ilcm
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

__all__ = [
    "DivisionByZero",
    "ZERO_DEGREE",
    "Poly",
    "RationalFunction",
    "Factorization",
    "X",
    "as_fraction",
    "normalize",
    "gcd",
    "lcm",
    "squarefree_decomposition",
    "factor",
    "eval_at",
    "compose",
    "apply_poly",
]


class DivisionByZero(ZeroDivisionError):
    pass


class _ZeroDegree:
    """Degree of the zero polynomial.

    Orders below every integer but deliberately supports no arithmetic, so
    ``deg(0) + 1`` raises instead of silently producing a number.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("ZERO_DEGREE")

    def __reduce__(self):
        return (_ZeroDegree, ())


ZERO_DEGREE = _ZeroDegree()

Scalar = Union[int, Fraction]


def as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, _RationalABC):
        return Fraction(v.numerator, v.denominator)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


def _int_vector(coeffs: Sequence[Fraction]) -> tuple[int, list[int]]:
    """Return (d, ints) with coeffs[i] == ints[i] / d."""
    d = 1
    for c in coeffs:
        if c.denominator != 1:
            d = ilcm(d, c.denominator)
    if d == 1:
        return 1, [c.numerator for c in coeffs]
    return d, [c.numerator * (d // c.denominator) for c in coeffs]


def _convolve(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return out


class Poly:
    """Polynomial with rational coefficients, lowest degree first.

    >>> Poly([1, 0, 1])
    Poly('x^2+1')
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients: Iterable = ()):
        c = [as_fraction(v) for v in coefficients]
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)
        self._hash = None

    @classmethod
    def _raw(cls, c: tuple) -> "Poly":
        # c must already be trimmed tuple of Fractions
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def _from_list(cls, c: list) -> "Poly":
        while c and not c[-1]:
            c.pop()
        return cls._raw(tuple(c))

    @classmethod
    def constant(cls, v) -> "Poly":
        return cls([v])

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "Poly":
        return cls([0] * k + [coeff])

    # -- basic accessors ---------------------------------------------------
    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self):
        if not self._c:
            return ZERO_DEGREE
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    @property
    def lc(self) -> Fraction:
        if not self._c:
            return Fraction(0)
        return self._c[-1]

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._c):
            return self._c[i]
        return Fraction(0)

    def low_order(self) -> int:
        """Exponent of the lowest nonzero term (multiplicity of x)."""
        for i, c in enumerate(self._c):
            if c:
                return i
        raise ValueError("zero polynomial has no lowest term")

    def sort_key(self):
        return (len(self._c), self._c)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly([other])._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self._c))
        return self._hash

    # -- ring operations ---------------------------------------------------
    @staticmethod
    def _coerce(v) -> "Poly":
        if isinstance(v, Poly):
            return v
        if isinstance(v, (int, Fraction)):
            return Poly([v])
        return NotImplemented

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self._c))

    def __pos__(self):
        return self

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Poly._from_list(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, k) -> "Poly":
        k = as_fraction(k)
        if not k:
            return Poly._raw(())
        if k == 1:
            return self
        return Poly._raw(tuple(c * k for c in self._c))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._c or not other._c:
            return Poly._raw(())
        if len(self._c) == 1:
            return other.scale(self._c[0])
        if len(other._c) == 1:
            return self.scale(other._c[0])
        da, ia = _int_vector(self._c)
        db, ib = _int_vector(other._c)
        prod = _convolve(ia, ib)
        d = da * db
        if d == 1:
            return Poly._raw(tuple(Fraction(v) for v in prod))
        return Poly._raw(tuple(Fraction(v, d) for v in prod))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Poly._raw((Fraction(1),))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._c:
            raise DivisionByZero("division by zero")
        n = len(other._c)
        if len(self._c) < n:
            return Poly._raw(()), self
        rem = list(self._c)
        inv = 1 / other._c[-1]
        b = other._c
        q = [Fraction(0)] * (len(rem) - n + 1)
        for k in range(len(rem) - n, -1, -1):
            c = rem[k + n - 1] * inv
            q[k] = c
            if c:
                for j in range(n):
                    rem[k + j] -= c * b[j]
        return Poly._from_list(q), Poly._from_list(rem[: n - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        if not other._c:
            raise DivisionByZero("division by zero")
        if not self._c:
            return self
        # primitive / primitive stays in Z[x] when the division is exact
        cs, u = self.primitive()
        co, v = other.primitive()
        n = len(v)
        if len(u) < n:
            raise ArithmeticError(f"{other} does not divide {self}")
        q = [0] * (len(u) - n + 1)
        lc = v[-1]
        for k in range(len(u) - n, -1, -1):
            c, rem = divmod(u[k + n - 1], lc)
            if rem:
                raise ArithmeticError(f"{other} does not divide {self}")
            q[k] = c
            if c:
                for j in range(n):
                    u[k + j] -= c * v[j]
        if any(u[: n - 1]):
            raise ArithmeticError(f"{other} does not divide {self}")
        return Poly(q).scale(cs / co)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZero("division by zero")
            return self.scale(1 / as_fraction(other))
        if isinstance(other, Poly):
            return RationalFunction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction(Poly([other]), self)
        return NotImplemented

    # -- calculus and evaluation -------------------------------------------
    def __call__(self, v):
        if isinstance(v, Poly):
            return self.compose(v)
        if isinstance(v, RationalFunction):
            return apply_poly(self, v)
        v = as_fraction(v)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * v + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly._raw(())
        for c in reversed(self._c):
            acc = acc * inner + c
        return acc

    def derivative(self) -> "Poly":
        return Poly._from_list([c * i for i, c in enumerate(self._c)][1:])

    def monic(self) -> "Poly":
        if not self._c:
            raise DivisionByZero("zero polynomial has no monic associate")
        return self.scale(1 / self._c[-1])

    def primitive(self) -> tuple[Fraction, list[int]]:
        """Split into (content, primitive integer coefficients with positive lc)."""
        if not self._c:
            return Fraction(0), []
        d, ints = _int_vector(self._c)
        g = reduce(igcd, ints)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, d), [v // g for v in ints]

    # -- printing ----------------------------------------------------------
    def format(self, var: str = "x") -> str:
        if not self._c:
            return "0"
        parts = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        s0, b0 = parts[0]
        out = ("-" if s0 == "-" else "") + b0
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({self.format()!r})"


X = Poly([0, 1])
_ONE = Poly([1])


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if not a and not b:
        raise DivisionByZero("gcd(0, 0) is undefined")
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    if a.is_constant() or b.is_constant():
        return _ONE
    # x^k shortcuts keep repeated powers of monomial roots cheap
    if len(a) >= 2 and not any(a.coefficients[:-1]):
        k = min(a.degree, b.low_order())
        return Poly.monomial(k)
    if len(b) >= 2 and not any(b.coefficients[:-1]):
        k = min(b.degree, a.low_order())
        return Poly.monomial(k)
    if a.degree < b.degree:
        a, b = b, a
    from ffrec.factoring import gcd_modular

    return Poly(gcd_modular(a.primitive()[1], b.primitive()[1])).monic()


def lcm(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return Poly._raw(())
    return (a * b).exact_div(gcd(a, b)).monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm; returns monic squarefree, pairwise coprime parts."""
    if not p:
        raise DivisionByZero("zero polynomial has no squarefree decomposition")
    f = p.monic()
    if f.is_constant():
        return []
    df = f.derivative()
    g = gcd(f, df)
    c = f.exact_div(g)
    d = df.exact_div(g) - c.derivative()
    out = []
    i = 1
    while not c.is_constant():
        a = gcd(c, d)
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        if not a.is_constant():
            out.append((a, i))
        i += 1
    return out


@dataclass(frozen=True)
class Factorization:
    unit: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly([self.unit])
        for f, e in self.factors:
            out = out * f ** e
        return out

    def __str__(self):
        parts = [] if self.unit == 1 and self.factors else [str(self.unit)]
        for f, e in self.factors:
            # x is the only single-term monic irreducible
            body = str(f) if f == X else f"({f})"
            parts.append(body + (f"^{e}" if e != 1 else ""))
        return "*".join(parts)


def factor(p: Poly) -> Factorization:
    """Complete factorization into monic irreducibles over the rationals."""
    from ffrec.factoring import factor_squarefree_monic

    if not p:
        raise DivisionByZero("cannot factor the zero polynomial")
    factors = []
    for part, mult in squarefree_decomposition(p):
        for irr in factor_squarefree_monic(part):
            factors.append((irr, mult))
    factors.sort(key=lambda fe: fe[0].sort_key())
    return Factorization(p.lc, tuple(factors))


def eval_at(p: Poly, v) -> Fraction:
    return p(as_fraction(v))


def compose(outer: Poly, inner: Poly) -> Poly:
    return outer.compose(inner)


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """Reduced quotient num/den with monic denominator.

    Equality is syntactic equality of this canonical representative.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num=0, den=1):
        num = _to_poly(num)
        den = _to_poly(den)
        if not den:
            raise DivisionByZero("division by zero")
        if not num:
            self._num, self._den = Poly._raw(()), _ONE
        else:
            if not den.is_constant():
                g = gcd(num, den)
                if not g.is_constant():
                    num, den = num.exact_div(g), den.exact_div(g)
            lc = den.lc
            if lc != 1:
                inv = 1 / lc
                num, den = num.scale(inv), den.scale(inv)
            self._num, self._den = num, den
        self._hash = None

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RationalFunction":
        f = object.__new__(cls)
        f._num, f._den, f._hash = num, den, None
        return f

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalFunction":
        return cls._raw(p, _ONE)

    @property
    def num(self) -> Poly:
        return self._num

    @property
    def den(self) -> Poly:
        return self._den

    def is_zero(self) -> bool:
        return not self._num

    def __bool__(self):
        return bool(self._num)

    def is_polynomial(self) -> bool:
        return self._den.is_constant()

    def is_constant(self) -> bool:
        return self._num.is_constant() and self._den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._num.coeff(0)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction, Poly)):
            return self == RationalFunction(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("RF", self._num, self._den))
        return self._hash

    @staticmethod
    def _coerce(v):
        if isinstance(v, RationalFunction):
            return v
        if isinstance(v, Poly):
            return RationalFunction._raw(v, _ONE)
        if isinstance(v, (int, Fraction)):
            return RationalFunction._raw(Poly([v]), _ONE)
        return NotImplemented

    def __neg__(self):
        return RationalFunction._raw(-self._num, self._den)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = RationalFunction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        if self._den == other._den:
            if self._den.is_constant():
                return RationalFunction._raw(self._num + other._num, _ONE)
            return RationalFunction(self._num + other._num, self._den)
        return RationalFunction(
            self._num * other._den + other._num * self._den, self._den * other._den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = RationalFunction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = RationalFunction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = RationalFunction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._num or not other._num:
            return RationalFunction._raw(Poly._raw(()), _ONE)
        n1, d1, n2, d2 = self._num, self._den, other._num, other._den
        # cross-cancel so the product is already reduced
        if not d2.is_constant():
            g = gcd(n1, d2)
            if not g.is_constant():
                n1, d2 = n1.exact_div(g), d2.exact_div(g)
        if not d1.is_constant():
            g = gcd(n2, d1)
            if not g.is_constant():
                n2, d1 = n2.exact_div(g), d1.exact_div(g)
        num, den = n1 * n2, d1 * d2
        lc = den.lc
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        return RationalFunction._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self._num:
            raise DivisionByZero("division by zero")
        lc = self._num.lc
        return RationalFunction._raw(self._den.scale(1 / lc), self._num.scale(1 / lc))

    def __truediv__(self, other):
        other = RationalFunction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = RationalFunction._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return RationalFunction._raw(_ONE, _ONE)
        # powers of coprime polynomials stay coprime
        return RationalFunction._raw(self._num ** k, self._den ** k)

    def __call__(self, v):
        v = as_fraction(v)
        d = self._den(v)
        if not d:
            raise DivisionByZero(f"{self} has a pole at {v}")
        return self._num(v) / d

    def format(self, var: str = "x") -> str:
        n = self._num.format(var)
        if self._den.is_constant():
            return n
        if len([c for c in self._num.coefficients if c]) > 1:
            n = f"({n})"
        d = self._den.format(var)
        if len([c for c in self._den.coefficients if c]) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"RationalFunction({self.format()!r})"


def _to_poly(v) -> Poly:
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)) or isinstance(v, _RationalABC):
        return Poly([as_fraction(v)])
    raise TypeError(f"cannot interpret {v!r} as a polynomial")


def normalize(num: Poly, den: Poly) -> RationalFunction:
    return RationalFunction(num, den)


def apply_poly(A: Poly, f: RationalFunction) -> RationalFunction:
    """Evaluate A(f) for A in Q[T].

    With f = p/q reduced, A(f) = sum a_k p^k q^(d-k) / q^d, and that
    fraction is already reduced: modulo any factor of q the numerator is
    a_d p^d, which is nonzero.
    """
    coeffs = A.coefficients
    if not coeffs:
        return RationalFunction._raw(Poly._raw(()), _ONE)
    d = len(coeffs) - 1
    p, q = f.num, f.den
    if d == 0 or q.is_constant():
        acc = Poly._raw(())
        for c in reversed(coeffs):
            acc = acc * p + c
        return RationalFunction._raw(acc, _ONE)
    num = Poly._raw(())
    q_power = _ONE
    # Horner in p with a running power of q on the lower coefficients
    for c in reversed(coeffs):
        num = num * p + q_power * c
        q_power = q_power * q
    return RationalFunction._raw(num, q ** d)
