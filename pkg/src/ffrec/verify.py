"""Grid scans of mu(a G_n - b H_m) - mu(G_n) and the auxiliary inequality checks.

The scanner is a falsifier/estimator: it evaluates every cell exactly and
reports the largest gap it saw, it does not prove anything beyond the grid.
"""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Optional, Sequence

from ffrec import linalg
from ffrec.effective import (
    TheoremInstance,
    c0_initial,
    check_hypotheses,
    require_hypotheses,
)
from ffrec.multindep import HypothesisError
from ffrec.places import INF, INFINITE, Place, divisor, height, is_S_unit, place_count, valuation
from ffrec.polyalg import RationalFunction
from ffrec.recurrence import values

__all__ = [
    "Cell",
    "ScanReport",
    "scan_theorem1",
    "scan_theorem2",
    "CorollaryReport",
    "check_corollary_degrees",
    "InequalityCheck",
    "check_brownawell_masser",
    "check_zannier",
    "summand_values",
    "independence_check",
    "SubsumWitness",
    "minimal_vanishing_subsum",
    "SUBSUM_BUDGET",
]

SUBSUM_BUDGET = 20


@dataclass(frozen=True)
class Cell:
    n: int
    m: int
    mu_diff: object  # int or INF
    mu_Gn: object  # int or INF
    gap: object  # int, INF when the difference vanishes, None when G_n = 0

    def csv_row(self) -> list[str]:
        gap = "undefined" if self.gap is None else str(self.gap)
        return [str(self.n), str(self.m), str(self.mu_diff), str(self.mu_Gn), gap]


@dataclass
class ScanReport:
    theorem: int
    n_range: tuple[int, int]
    m_range: tuple[int, int]
    threshold: int
    cells: list[Cell]
    hypotheses: list = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    def in_region(self, n: int, m: int) -> bool:
        if self.theorem == 1:
            return min(n, m) > self.threshold
        return max(n, m) > self.threshold

    @property
    def grid(self) -> dict[tuple[int, int], object]:
        return {(c.n, c.m): c.gap for c in self.cells}

    @property
    def zeros(self) -> list[tuple[int, int]]:
        return [(c.n, c.m) for c in self.cells if c.mu_diff is INF]

    @property
    def anomalies(self) -> list[tuple[int, int]]:
        """Vanishing differences inside the region where the bound is claimed."""
        return [z for z in self.zeros if self.in_region(*z)]

    @property
    def undefined(self) -> list[tuple[int, int]]:
        return [(c.n, c.m) for c in self.cells if c.gap is None]

    def finite_gaps(self, region_only: bool = True):
        for c in self.cells:
            if isinstance(c.gap, int) and (not region_only or self.in_region(c.n, c.m)):
                yield c

    @property
    def empirical_C(self) -> Optional[int]:
        return max((c.gap for c in self.finite_gaps()), default=None)

    def restrict(self, n_max: int, m_max: int) -> "ScanReport":
        cells = [c for c in self.cells if c.n <= n_max and c.m <= m_max]
        return ScanReport(
            self.theorem,
            (self.n_range[0], n_max),
            (self.m_range[0], m_max),
            self.threshold,
            cells,
            list(self.hypotheses),
            [],
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "m", "mu_diff", "mu_Gn", "gap"])
        for c in self.cells:
            w.writerow(c.csv_row())
        return buf.getvalue()

    def summary(self) -> dict:
        region = "min(n,m) > threshold" if self.theorem == 1 else "max(n,m) > threshold"
        return {
            "theorem": self.theorem,
            "region": {
                "n_range": list(self.n_range),
                "m_range": list(self.m_range),
                "threshold": self.threshold,
                "certified_region": region,
            },
            "empirical_C": self.empirical_C,
            "empirical_C_label": "empirical",
            "cells": len(self.cells),
            "zeros": [list(z) for z in self.zeros],
            "anomalies": [list(z) for z in self.anomalies],
            "undefined": [list(z) for z in self.undefined],
            "violations": list(self.violations),
            "hypotheses": [{"name": h.name, "ok": h.ok, "detail": h.detail} for h in self.hypotheses],
        }

    def to_json(self) -> str:
        data = self.summary()
        data["grid"] = [
            {"n": c.n, "m": c.m, "mu_diff": str(c.mu_diff), "mu_Gn": str(c.mu_Gn),
             "gap": None if c.gap is None else (c.gap if isinstance(c.gap, int) else "inf")}
            for c in self.cells
        ]
        return json.dumps(data, indent=2)


def _cell(n, m, aG, bH, mu_aG, mu_bH, mu_G, mu):
    diff = aG - bH
    mu_diff = valuation(mu, diff)
    problems = []
    # ultrametric audit on every cell
    low = min(mu_aG, mu_bH)
    if mu_diff < low:
        problems.append(f"({n},{m}): mu(diff)={mu_diff} below min(mu(aG_n), mu(bH_m))={low}")
    if mu_aG != mu_bH and mu_diff != low:
        problems.append(f"({n},{m}): strict triangle equality fails")
    if mu_G is INF:
        gap = INF if mu_diff is INF else None
    else:
        gap = mu_diff - mu_G
    return Cell(n, m, mu_diff, mu_G, gap), problems


def _scan_rows(args):
    ns, m_values, aG_list, bH_list, mu_aG, mu_bH, mu_G, mu = args
    cells, problems = [], []
    for n, aG, va, vg in zip(ns, aG_list, mu_aG, mu_G):
        for m, bH, vb in zip(m_values, bH_list, mu_bH):
            c, p = _cell(n, m, aG, bH, va, vb, vg, mu)
            cells.append(c)
            problems.extend(p)
    return cells, problems


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("FFREC_THREADS", "1")))
    except ValueError:
        return 1


def _scan(inst: TheoremInstance, n_values, m_values, workers: Optional[int]):
    mu = inst.mu
    n_values = list(n_values)
    m_values = list(m_values)
    G_vals = [v for _, v in values(inst.G, n_values[0], n_values[-1] + 1)]
    aG = [inst.a * g for g in G_vals]
    bH = [inst.b * v for _, v in values(inst.H, m_values[0], m_values[-1] + 1)]
    mu_G = [valuation(mu, g) for g in G_vals]
    mu_aG = [valuation(mu, v) for v in aG]
    mu_bH = [valuation(mu, v) for v in bH]
    workers = workers or _workers()
    if workers <= 1 or len(n_values) < 2:
        return _scan_rows((n_values, m_values, aG, bH, mu_aG, mu_bH, mu_G, mu))
    chunks = []
    step = max(1, -(-len(n_values) // (workers * 4)))
    for s in range(0, len(n_values), step):
        sl = slice(s, s + step)
        chunks.append((n_values[sl], m_values, aG[sl], bH, mu_aG[sl], mu_bH, mu_G[sl], mu))
    cells, problems = [], []
    with ProcessPoolExecutor(max_workers=workers) as ex:
        # map preserves chunk order, so the report is schedule independent
        for c, p in ex.map(_scan_rows, chunks):
            cells.extend(c)
            problems.extend(p)
    return cells, problems


def scan_theorem1(
    inst: TheoremInstance, n_max: int, m_max: int, workers: Optional[int] = None
) -> ScanReport:
    """Scan 1..n_max x 1..m_max; the bound is claimed for min(n, m) > c0."""
    hyps = require_hypotheses(inst, theorem=1)
    cells, problems = _scan(inst, range(1, n_max + 1), range(1, m_max + 1), workers)
    return ScanReport(1, (1, n_max), (1, m_max), c0_initial(inst), cells, hyps, problems)


def scan_theorem2(
    inst: TheoremInstance, n_max: int, m_max: int, workers: Optional[int] = None
) -> ScanReport:
    """Scan 0..n_max x 0..m_max including the strips where one index is small."""
    hyps = require_hypotheses(inst, theorem=2)
    cells, problems = _scan(inst, range(0, n_max + 1), range(0, m_max + 1), workers)
    return ScanReport(2, (0, n_max), (0, m_max), c0_initial(inst), cells, hyps, problems)


# ---------------------------------------------------------------------------
# polynomial corollary
# ---------------------------------------------------------------------------


@dataclass
class CorollaryReport:
    holds: bool
    C: int
    checked: int
    failures: list[tuple[int, int]]


def _is_polynomial_instance(inst: TheoremInstance) -> bool:
    values = [inst.a, inst.b]
    for rec in (inst.G, inst.H):
        for t in rec.terms:
            values.append(t.root)
            values.extend(t.coeff)
    return all(v.is_polynomial() for v in values)


def check_corollary_degrees(
    inst: TheoremInstance, n_max: int, m_max: int, C: Optional[int] = None
) -> CorollaryReport:
    """deg(a G_n - b H_m) >= deg G_n - C on the region min(n, m) > c0."""
    if inst.mu != INFINITE:
        raise HypothesisError("the degree form needs mu = inf")
    if not _is_polynomial_instance(inst):
        raise HypothesisError("the degree form needs polynomial roots, coefficients, a and b")
    report = scan_theorem1(inst, n_max, m_max)
    if C is None:
        C = report.empirical_C
    failures = []
    checked = 0
    for c in report.cells:
        if not report.in_region(c.n, c.m):
            continue
        checked += 1
        if c.mu_diff is INF or c.mu_Gn is INF:
            failures.append((c.n, c.m))
            continue
        deg_diff, deg_G = -c.mu_diff, -c.mu_Gn
        if deg_diff < deg_G - C:
            failures.append((c.n, c.m))
    return CorollaryReport(not failures, C, checked, failures)


# ---------------------------------------------------------------------------
# unit equation and subspace inequalities
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InequalityCheck:
    lhs: int
    rhs: int
    holds: bool

    def __str__(self):
        return f"lhs={self.lhs} rhs={self.rhs} holds={'true' if self.holds else 'false'}"


def _vectors(values: Sequence[RationalFunction]) -> list[tuple[int, ...]]:
    cols = linalg.coefficient_vectors(values)
    d = lcm(1, *(v.denominator for col in cols for v in col))
    return [tuple(int(v * d) for v in col) for col in cols]


def _first_vanishing(vectors, sizes, exclude_full: bool = False):
    n = len(vectors)
    width = len(vectors[0]) if vectors else 0
    zero = (0,) * width
    for k in sizes:
        for idx in combinations(range(n), k):
            if exclude_full and k == n:
                continue
            acc = [0] * width
            for i in idx:
                for j, v in enumerate(vectors[i]):
                    acc[j] += v
            if tuple(acc) == zero:
                return idx
    return None


def check_brownawell_masser(
    units: Sequence[RationalFunction], S, genus: int = 0
) -> InequalityCheck:
    """max H(u_i) <= binom(k, 2) (|S| + max(0, 2g - 2)) for 1 + sum u_i = 0."""
    units = list(units)
    k = len(units)
    if k == 0:
        raise ValueError("need at least one unit")
    if k + 1 > SUBSUM_BUDGET:
        raise ValueError("enumeration budget")
    S = frozenset(S)
    total = RationalFunction(1)
    for u in units:
        total = total + u
    if not total.is_zero():
        raise HypothesisError("identity fails: 1 + sum(u) != 0")
    for i, u in enumerate(units, start=1):
        if u.is_zero() or not is_S_unit(u, S):
            raise HypothesisError(f"u_{i} = {u} is not an S-unit")
    terms = [RationalFunction(1)] + units
    vanishing = _first_vanishing(_vectors(terms), range(1, k + 1))
    if vanishing is not None:
        raise HypothesisError(f"proper subsum vanishes: indices {list(vanishing)}")
    lhs = max(height(u) for u in units)
    rhs = comb(k, 2) * (place_count(S) + max(0, 2 * genus - 2))
    return InequalityCheck(lhs, rhs, lhs <= rhs)


def check_zannier(
    phis: Sequence[RationalFunction], r: int, S, genus: int = 0
) -> InequalityCheck:
    """sum_{v in S} (v(sigma) - min_i v(phi_i)) <= binom(n,2)(|S| + 2g - 2) + sum_{i>r} H(phi_i)."""
    phis = list(phis)
    n = len(phis)
    if n == 0:
        raise ValueError("need at least one function")
    if not 0 <= r <= n:
        raise ValueError(f"r must lie in 0..{n}")
    S = frozenset(S)
    if any(p.is_zero() for p in phis) or linalg.dependency(phis) is not None:
        raise HypothesisError("not linearly independent")
    for i, phi in enumerate(phis, start=1):
        for place, e in divisor(phi).items():
            if e < 0 and place not in S:
                raise HypothesisError(f"S misses the pole {place} of phi_{i}")
            if e > 0 and i <= r and place not in S:
                raise HypothesisError(f"S misses the zero {place} of phi_{i}")
    sigma = RationalFunction(0)
    for phi in phis:
        sigma = sigma + phi
    if sigma.is_zero():
        raise HypothesisError("sigma vanishes")
    lhs = 0
    for place in S:
        lhs += place.degree * (valuation(place, sigma) - min(valuation(place, p) for p in phis))
    rhs = comb(n, 2) * (place_count(S) + 2 * genus - 2) + sum(height(p) for p in phis[r:])
    return InequalityCheck(lhs, rhs, lhs <= rhs)


# ---------------------------------------------------------------------------
# summands of G_n - H_m and their linear relations
# ---------------------------------------------------------------------------


def summand_values(inst: TheoremInstance, n: int, m: int) -> list[RationalFunction]:
    """a P_ig(n) pi_ig alpha_i^n for all (i, g), then -b Q_jh(m) psi_jh beta_j^m."""
    out = [inst.a * v for v in inst.pi_G.summands(n)]
    out.extend(-(inst.b * v) for v in inst.pi_H.summands(m))
    return out


def independence_check(values: Sequence[RationalFunction]) -> Optional[tuple[int, ...]]:
    """None when independent over the constants, else an integer relation."""
    values = list(values)
    if not values:
        raise ValueError("need at least one value")
    if any(v.is_zero() for v in values):
        raise ValueError("zero entry in independence check")
    return linalg.dependency(values)


@dataclass(frozen=True)
class SubsumWitness:
    indices: tuple[int, ...]
    values: tuple[RationalFunction, ...]

    @property
    def total(self) -> RationalFunction:
        acc = RationalFunction(0)
        for v in self.values:
            acc = acc + v
        return acc


def minimal_vanishing_subsum(values: Sequence[RationalFunction]) -> Optional[SubsumWitness]:
    """Smallest (then lexicographically first) nonempty vanishing subset."""
    values = list(values)
    if len(values) > SUBSUM_BUDGET:
        raise ValueError("enumeration budget")
    if not values:
        return None
    idx = _first_vanishing(_vectors(values), range(1, len(values) + 1))
    if idx is None:
        return None
    return SubsumWitness(idx, tuple(values[i] for i in idx))
