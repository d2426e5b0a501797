"""Zassenhaus factorization of squarefree polynomials over the integers.

Pipeline: pick a good odd prime p, factor modulo p (distinct-degree then
equal-degree splitting), Hensel-lift the factors to a modulus above the
coefficient bound, recombine subsets of lifted factors into true factors.

Polynomials in this module are plain ``list[int]``, lowest degree first.
The randomized equal-degree step draws from a locally seeded generator, and
the final factor list is sorted, so the output is deterministic.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from functools import lru_cache
from math import gcd, isqrt

from ffrec.polyalg import Poly

_SEED = 0x5EED
_PRIME_CANDIDATES = 4


# ---------------------------------------------------------------------------
# dense helpers over Z/M (any modulus)
# ---------------------------------------------------------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod(a, M):
    return _trim([c % M for c in a])


def _add(a, b, M):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _mod(out, M)


def _sub(a, b, M):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] -= c
    return _mod(out, M)


def _mul(a, b, M):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _mod(out, M)


def _divmod_monic(a, b, M):
    """Divide by a monic b modulo M."""
    n = len(b)
    if len(a) < n:
        return [], list(a)
    rem = list(a)
    q = [0] * (len(a) - n + 1)
    for k in range(len(a) - n, -1, -1):
        c = rem[k + n - 1] % M
        q[k] = c
        if c:
            for j in range(n):
                rem[k + j] = (rem[k + j] - c * b[j]) % M
    return _trim(q), _mod(rem[: n - 1], M)


def _scale(a, k, M):
    return _mod([c * k for c in a], M)


def _make_monic(a, p):
    inv = pow(a[-1], -1, p)
    return _scale(a, inv, p)


def _divmod_p(a, b, p):
    inv = pow(b[-1], -1, p)
    q, r = _divmod_monic(a, _scale(b, inv, p), p)
    return _scale(q, inv, p), r


def _gcd_p(a, b, p):
    a, b = _mod(a, p), _mod(b, p)
    while b:
        a, b = b, _divmod_p(a, b, p)[1]
    return _make_monic(a, p) if a else a


def _xgcd_p(a, b, p):
    """Return (g, s, t) with s*a + t*b = g monic, modulo p."""
    r0, r1 = _mod(a, p), _mod(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _divmod_p(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return _scale(r0, inv, p), _scale(s0, inv, p), _scale(t0, inv, p)


def _powmod(base, e, f, p):
    result = [1]
    base = _divmod_monic(base, f, p)[1]
    while e:
        if e & 1:
            result = _divmod_monic(_mul(result, base, p), f, p)[1]
        e >>= 1
        if e:
            base = _divmod_monic(_mul(base, base, p), f, p)[1]
    return result


def _derivative(a):
    return [i * c for i, c in enumerate(a)][1:]


# ---------------------------------------------------------------------------
# factoring modulo p
# ---------------------------------------------------------------------------

def _distinct_degree(f, p):
    """f monic squarefree mod p -> list of (product of degree-d factors, d)."""
    out = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, f, p)
        g = _gcd_p(f, _sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _divmod_monic(f, g, p)[0]
            h = _divmod_monic(h, f, p)[1]
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree(f, d, p, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    e = (p ** d - 1) // 2
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        g = _gcd_p(f, a, p)
        if 1 < len(g) < len(f):
            break
        b = _sub(_powmod(a, e, f, p), [1], p)
        g = _gcd_p(f, b, p)
        if 1 < len(g) < len(f):
            break
    rest = _divmod_monic(f, g, p)[0]
    return _equal_degree(g, d, p, rng) + _equal_degree(rest, d, p, rng)


def factor_mod_p(f, p):
    """Monic irreducible factors of a squarefree f modulo an odd prime p."""
    rng = random.Random(_SEED ^ p)
    f = _make_monic(_mod(f, p), p)
    out = []
    for g, d in _distinct_degree(f, p):
        out.extend(_equal_degree(g, d, p, rng))
    out.sort(key=lambda a: (len(a), a))
    return out


def _odd_primes():
    yield 3
    n = 5
    while True:
        if all(n % q for q in range(3, isqrt(n) + 1, 2)):
            yield n
        n += 2


def _choose_prime(f):
    """Among the first few usable primes, take the one giving fewest factors."""
    lc = f[-1]
    best = None
    found = 0
    for p in _odd_primes():
        if lc % p == 0:
            continue
        fp = _mod(f, p)
        if len(_gcd_p(fp, _derivative(fp), p)) > 1:
            continue
        facs = factor_mod_p(f, p)
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        found += 1
        if found >= _PRIME_CANDIDATES or len(facs) == 1:
            break
    return best


# ---------------------------------------------------------------------------
# Hensel lifting
# ---------------------------------------------------------------------------

def _hensel_step(f, g, h, s, t, m):
    """One quadratic lifting step from modulus m to m^2 (h monic)."""
    M = m * m
    e = _sub(f, _mul(g, h, M), M)
    q, r = _divmod_monic(_mul(s, e, M), h, M)
    g2 = _add(g, _add(_mul(t, e, M), _mul(q, g, M), M), M)
    h2 = _add(h, r, M)
    b = _sub(_add(_mul(s, g2, M), _mul(t, h2, M), M), [1], M)
    c, d = _divmod_monic(_mul(s, b, M), h2, M)
    s2 = _sub(s, d, M)
    t2 = _sub(_sub(t, _mul(t, b, M), M), _mul(c, g2, M), M)
    return g2, h2, s2, t2


def _prod(polys, M):
    out = [1]
    for a in polys:
        out = _mul(out, a, M)
    return out


def hensel_lift(f, factors, p, k):
    """Lift f = lc(f) * prod(factors) mod p to monic factors mod p**k."""
    pk = p ** k
    if len(factors) == 1:
        fk = _mod(f, pk)
        inv = pow(fk[-1], -1, pk)
        return [_scale(fk, inv, pk)]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = _scale(_prod(left, p), f[-1], p)
    h = _prod(right, p)
    _, s, t = _xgcd_p(g, h, p)
    m = p
    while m < pk:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    g, h = _mod(g, pk), _mod(h, pk)
    return hensel_lift(g, left, p, k) + hensel_lift(h, right, p, k)


# ---------------------------------------------------------------------------
# recombination
# ---------------------------------------------------------------------------

def _symmetric(a, M):
    half = M // 2
    return _trim([c - M if c > half else c for c in (x % M for x in a)])


def _primitive(a):
    g = 0
    for c in a:
        g = gcd(g, c)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n):
    """Miller-Rabin with bases that are deterministic below 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _large_prime(i):
    """The i-th prime below 2^61, counting downwards."""
    n = (1 << 61) - 1 if i == 0 else _large_prime(i - 1) - 2
    while not _is_prime(n):
        n -= 2
    return n


def _divides(g, u):
    """True when g divides u in Z[x] (g primitive with positive lc)."""
    n = len(g)
    if len(u) < n:
        return False
    u = list(u)
    lc = g[-1]
    for k in range(len(u) - n, -1, -1):
        c, rem = divmod(u[k + n - 1], lc)
        if rem:
            return False
        if c:
            for j in range(n):
                u[k + j] -= c * g[j]
    return not any(u[: n - 1])


def gcd_modular(u, v):
    """gcd of two nonzero primitive integer polynomials (low degree first).

    Images modulo word-sized primes are combined by CRT until the candidate
    stabilises and divides both inputs.  Returns a primitive polynomial
    with positive leading coefficient.
    """
    d = gcd(u[-1], v[-1])
    H = None
    M = 1
    deg = None
    i = 0
    while True:
        p = _large_prime(i)
        i += 1
        if u[-1] % p == 0 or v[-1] % p == 0:
            continue
        gp = _gcd_p(u, v, p)
        k = len(gp) - 1
        if k == 0:
            return [1]
        if deg is not None and k > deg:
            continue  # unlucky prime
        gp = _scale(gp, d % p, p)
        if deg is None or k < deg:
            H, M, deg = gp, p, k
            continue
        inv = pow(M, -1, p)
        combined = [h + M * ((g - h) * inv % p) for h, g in zip(H, gp)]
        before = _symmetric(H, M)
        H, M = combined, M * p
        after = _symmetric(H, M)
        if after == before:
            cand = _primitive(after)
            if _divides(cand, u) and _divides(cand, v):
                return cand


def _norm1(a):
    return sum(abs(c) for c in a)


def zassenhaus(f):
    """Irreducible factors of a primitive squarefree integer polynomial.

    ``f`` has positive leading coefficient and degree >= 1; returned factors
    are primitive with positive leading coefficient.
    """
    n = len(f) - 1
    if n == 1:
        return [f]
    p, modular = _choose_prime(f)
    if len(modular) == 1:
        return [f]
    b = f[-1]
    A = max(abs(c) for c in f)
    # |coefficients of b*g|_1 * |b*h|_1 stay below this for true factors
    B = (isqrt(n + 1) + 1) * (2 ** n) * A * b
    k = 1
    while p ** k <= 2 * B:
        k += 1
    M = p ** k
    lifted = hensel_lift(f, modular, p, k)

    found = []
    T = list(range(len(lifted)))
    fstar = f
    s = 1
    while 2 * s <= len(T):
        for S in combinations(T, s):
            rest = [i for i in T if i not in S]
            g = _symmetric(_scale(_prod([lifted[i] for i in S], M), b, M), M)
            h = _symmetric(_scale(_prod([lifted[i] for i in rest], M), b, M), M)
            if _norm1(g) * _norm1(h) <= B:
                T = rest
                found.append(_primitive(g))
                fstar = _primitive(h)
                b = fstar[-1]
                break
        else:
            s += 1
    found.append(fstar)
    return found


def factor_squarefree_monic(part: Poly) -> list[Poly]:
    """Monic irreducible factors over Q of a monic squarefree polynomial."""
    if part.degree == 1:
        return [part]
    _, ints = part.primitive()
    # x divides: strip it so the modular image stays squarefree-friendly
    out = []
    if ints[0] == 0:
        out.append(Poly([0, 1]))
        ints = ints[1:]
    if len(ints) > 1:
        for g in zassenhaus(ints):
            out.append(Poly([Fraction(c, g[-1]) for c in g]))
    return out
