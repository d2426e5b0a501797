"""Explicit constants from the proof of the both-indices-large bound.

All quantities are exact and recomputed from the instance on demand.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Union

from ffrec.multindep import HypothesisError, effective_Lprime, find_relation
from ffrec.places import Place, height, minimal_S, place_count, valuation
from ffrec.polyalg import Poly, RationalFunction
from ffrec.recurrence import (
    LinearRecurrence,
    PiForm,
    dominant_root_ok,
    has_constant_root,
    is_nondegenerate,
    pi_rewrite,
)

__all__ = [
    "VACUOUS",
    "TheoremInstance",
    "Hypothesis",
    "check_hypotheses",
    "require_hypotheses",
    "EffectiveConstants",
    "build_S",
    "compute_C_aux",
    "case3_bound",
    "case4_bound",
    "case5_bounds",
    "c0_initial",
    "compute_constants",
]

VACUOUS = "vacuous"


@dataclass(frozen=True)
class TheoremInstance:
    G: LinearRecurrence
    H: LinearRecurrence
    a: RationalFunction
    b: RationalFunction
    mu: Place
    genus: int = 0
    pi_G: PiForm = field(init=False, repr=False, compare=False)
    pi_H: PiForm = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        object.__setattr__(self, "pi_G", pi_rewrite(self.G))
        object.__setattr__(self, "pi_H", pi_rewrite(self.H))

    @property
    def alpha1(self) -> RationalFunction:
        return self.G.roots[0]


@dataclass(frozen=True)
class Hypothesis:
    name: str
    ok: bool
    detail: str = ""

    def __str__(self):
        mark = "ok" if self.ok else "FAILED"
        return f"[{mark}] {self.name}" + (f": {self.detail}" if self.detail else "")


def check_hypotheses(inst: TheoremInstance, theorem: int = 1) -> list[Hypothesis]:
    """Checklist of the assumptions of the chosen bound, in a fixed order."""
    out = []
    out.append(Hypothesis("a nonzero", not inst.a.is_zero()))
    out.append(Hypothesis("b nonzero", not inst.b.is_zero()))
    for name, rec in (("G", inst.G), ("H", inst.H)):
        ok, pair = is_nondegenerate(rec)
        detail = "" if ok else f"roots {pair[0]} and {pair[1]} have constant ratio"
        out.append(Hypothesis(f"{name} non-degenerate", ok, detail))
    if theorem == 2:
        # listed before independence: a constant beta_j is also dependent on alpha_1
        for name, rec in (("G", inst.G), ("H", inst.H)):
            bad = [str(r) for r in rec.roots if r.is_constant()]
            out.append(
                Hypothesis(
                    f"no constant characteristic root in {name}",
                    not bad,
                    f"constant characteristic root {', '.join(bad)}" if bad else "",
                )
            )
    out.append(Hypothesis("alpha_1 nonconstant", not inst.alpha1.is_constant(), str(inst.alpha1)))
    for j, beta in enumerate(inst.H.roots, start=1):
        rel = find_relation(inst.alpha1, beta)
        detail = "" if rel is None else f"(alpha_1, beta_{j}) multiplicatively dependent, {rel}"
        out.append(Hypothesis(f"(alpha_1, beta_{j}) multiplicatively independent", rel is None, detail))
    dom = dominant_root_ok(inst.G, inst.mu)
    out.append(Hypothesis(f"mu(alpha_1) minimal at mu = {inst.mu}", dom))
    return out


def require_hypotheses(inst: TheoremInstance, theorem: int = 1) -> list[Hypothesis]:
    checks = check_hypotheses(inst, theorem)
    for h in checks:
        if not h.ok:
            raise HypothesisError(h.detail or f"hypothesis failed: {h.name}")
    return checks


def build_S(inst: TheoremInstance) -> frozenset:
    values = list(inst.G.roots) + list(inst.H.roots) + inst.pi_G.basis + inst.pi_H.basis
    return minimal_S(values, extra=[inst.mu])


def compute_C_aux(inst: TheoremInstance, S: Optional[frozenset] = None) -> int:
    if S is None:
        S = build_S(inst)
    total = sum(inst.pi_G.sizes) + sum(inst.pi_H.sizes)
    return comb(total, 2) * (place_count(S) + max(0, 2 * inst.genus - 2))


def _same_side_bound(pi: PiForm, c_aux: int) -> Union[Fraction, str]:
    groups = pi.groups
    if len(groups) < 2:
        return VACUOUS
    ratio_h = 0
    root_h = None
    for i, gi in enumerate(groups):
        for j, gj in enumerate(groups):
            if i == j:
                continue
            for p in gi.pis:
                for q in gj.pis:
                    ratio_h = max(ratio_h, height(p / q))
            h = height(gi.root / gj.root)
            root_h = h if root_h is None else min(root_h, h)
    if root_h == 0:
        raise HypothesisError("recurrence is degenerate; the same-side bound needs non-degeneracy")
    return Fraction(c_aux + ratio_h, root_h)


def case3_bound(inst: TheoremInstance, c_aux: Optional[int] = None) -> Union[Fraction, str]:
    """Bound on n when a minimal vanishing subsum mixes two roots of G."""
    if c_aux is None:
        c_aux = compute_C_aux(inst)
    return _same_side_bound(inst.pi_G, c_aux)


def case4_bound(inst: TheoremInstance, c_aux: Optional[int] = None) -> Union[Fraction, str]:
    """Mirror of :func:`case3_bound` for the roots of H (bounds m)."""
    if c_aux is None:
        c_aux = compute_C_aux(inst)
    return _same_side_bound(inst.pi_H, c_aux)


def case5_bounds(
    inst: TheoremInstance, c_aux: Optional[int] = None
) -> tuple[Optional[Fraction], dict[int, Fraction]]:
    """Bounds when a minimal vanishing subsum mixes alpha_1 with some beta_j.

    Returns the bound on n for constant beta_j (None if no beta_j is
    constant) and, per nonconstant beta_j (1-based j), the bound L' on
    max(n, m).
    """
    if c_aux is None:
        c_aux = compute_C_aux(inst)
    first = inst.pi_G.groups[0]
    alpha1 = first.root
    per_j_ratio = {}
    for j, gj in enumerate(inst.pi_H.groups, start=1):
        per_j_ratio[j] = max(height(p / q) for p in first.pis for q in gj.pis)
    const_bound = None
    if any(g.root.is_constant() for g in inst.pi_H.groups):
        h_alpha = height(alpha1)
        if h_alpha == 0:
            raise HypothesisError("alpha_1 is constant")
        const_bound = Fraction(c_aux + max(per_j_ratio.values()), h_alpha)
    lprime = {}
    for j, gj in enumerate(inst.pi_H.groups, start=1):
        if gj.root.is_constant():
            continue
        lprime[j] = effective_Lprime(alpha1, gj.root, c_aux + per_j_ratio[j])
    return const_bound, lprime


def _nonneg_integer_roots(P: Poly) -> list[int]:
    """Nonnegative integer roots of a rational polynomial (P nonzero)."""
    if P.is_constant():
        return []
    _, ints = P.primitive()
    k = next(i for i, c in enumerate(ints) if c)
    roots = [0] if k else []
    c0 = abs(ints[k])
    for d in range(1, c0 + 1):
        if c0 % d == 0 and P(d) == 0:
            roots.append(d)
    return roots


def c0_initial(inst: TheoremInstance) -> int:
    """Largest nonnegative integer root among all P_ig and Q_jh (0 if none).

    Beyond it every coefficient polynomial is nonzero.
    """
    best = 0
    for pi in (inst.pi_G, inst.pi_H):
        for g in pi.groups:
            for P in g.polys:
                for r in _nonneg_integer_roots(P):
                    best = max(best, r)
    return best


@dataclass(frozen=True)
class EffectiveConstants:
    S: frozenset
    C_aux: int
    case3: Union[Fraction, str]
    case4: Union[Fraction, str]
    case5_const: Optional[Fraction]
    case5_Lprime: dict
    c0_initial: int

    def to_dict(self) -> dict:
        def q(v):
            if isinstance(v, Fraction):
                return v.numerator if v.denominator == 1 else str(v)
            return v

        return {
            "S": [str(p) for p in sorted(self.S)],
            "C_aux": self.C_aux,
            "case3": q(self.case3),
            "case4": q(self.case4),
            "case5_const": q(self.case5_const),
            "case5_Lprime": {str(j): q(v) for j, v in sorted(self.case5_Lprime.items())},
            "c0_initial": self.c0_initial,
        }


def compute_constants(inst: TheoremInstance) -> EffectiveConstants:
    S = build_S(inst)
    c_aux = compute_C_aux(inst, S)
    const, lprime = case5_bounds(inst, c_aux)
    return EffectiveConstants(
        S=S,
        C_aux=c_aux,
        case3=case3_bound(inst, c_aux),
        case4=case4_bound(inst, c_aux),
        case5_const=const,
        case5_Lprime=lprime,
        c0_initial=c0_initial(inst),
    )
