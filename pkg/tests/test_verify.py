import random
from itertools import combinations

import pytest
import sympy

from fixtures import binomial_pair, constant_beta, instance, monomial, place, polynomial_corpus, rec
from ffrec.multindep import HypothesisError
from ffrec.parse import parse
from ffrec.places import INF, INFINITE, valuation
from ffrec.polyalg import RationalFunction
from ffrec.recurrence import evaluate
from ffrec.verify import (
    SUBSUM_BUDGET,
    check_brownawell_masser,
    check_corollary_degrees,
    check_zannier,
    independence_check,
    minimal_vanishing_subsum,
    scan_theorem1,
    scan_theorem2,
    summand_values,
)


def S(*names):
    return {place(n) for n in names}


def _sympy_gap(n, m):
    x = sympy.Symbol("x")
    diff = sympy.Poly(x ** n - (x + 1) ** m, x)
    return n - diff.degree()


def test_monomial_scan_against_sympy():
    report = scan_theorem1(monomial(), 40, 40)
    assert report.empirical_C == 1
    assert report.zeros == [] and report.violations == []
    grid = report.grid
    for n in range(1, 41):
        for m in range(1, 41):
            expected = 1 if n == m else (0 if n > m else n - m)
            assert grid[(n, m)] == expected
    for n, m in random.Random(1).sample(sorted(grid), 40):
        assert grid[(n, m)] == _sympy_gap(n, m)


def test_dependent_instance_rejected():
    inst = instance(rec((["1"], "x")), rec((["1"], "x")), b="2")
    with pytest.raises(HypothesisError, match=r"\(alpha_1, beta_1\) multiplicatively dependent"):
        scan_theorem1(inst, 5, 5)


def test_binomial_pair_scan():
    report = scan_theorem1(binomial_pair(), 30, 30)
    assert report.zeros == [] and report.violations == []
    gaps = dict(report.grid)
    C = report.empirical_C
    assert all(g <= C for g in gaps.values())
    # deg G_n = n with lc 2, deg H_m = 2m with lc 1, so the top never cancels
    for (n, m), g in gaps.items():
        assert g == n - max(n, 2 * m)
    assert C == 0


def test_theorem2_scan_and_strips():
    report = scan_theorem2(monomial(), 30, 30)
    assert report.empirical_C == 1
    assert report.zeros == [(0, 0)] and report.anomalies == []
    strip = scan_theorem2(monomial(), 60, 1)
    assert max(c.gap for c in strip.finite_gaps()) <= 1


def test_theorem2_rejects_constant_root():
    with pytest.raises(HypothesisError, match="constant characteristic root"):
        scan_theorem2(instance(rec((["1"], "x"), (["1"], "1")), rec((["1"], "x+1"))), 4, 4)
    with pytest.raises(HypothesisError, match="constant characteristic root"):
        scan_theorem2(constant_beta(), 4, 4)


def test_double_evaluation_audit():
    for inst in polynomial_corpus()[:3]:
        report = scan_theorem1(inst, 20, 20)
        rng = random.Random(7)
        sample = rng.sample(report.cells, max(1, len(report.cells) // 20))
        for c in sample:
            G, H = evaluate(inst.G, c.n), evaluate(inst.H, c.m)
            diff = inst.a * G - inst.b * H
            mu_diff = valuation(inst.mu, diff)
            assert c.mu_diff == mu_diff
            assert c.mu_Gn == valuation(inst.mu, G)
            assert c.gap == mu_diff - c.mu_Gn
            lo = min(valuation(inst.mu, inst.a * G), valuation(inst.mu, inst.b * H))
            assert mu_diff >= lo


def test_scan_with_zero_difference_is_reported():
    # (x+1) x^n = x (x+1)^m exactly at n = m = 1
    inst = instance(rec((["1"], "x")), rec((["1"], "x+1")), a="x+1", b="x")
    report = scan_theorem1(inst, 6, 6)
    expected = [
        (n, m)
        for n in range(1, 7)
        for m in range(1, 7)
        if (inst.a * evaluate(inst.G, n) - inst.b * evaluate(inst.H, m)).is_zero()
    ]
    assert report.zeros == expected == [(1, 1)]
    assert report.grid[(1, 1)] is INF
    assert report.anomalies == [(1, 1)]


def test_empirical_C_stable_between_grids():
    for inst in polynomial_corpus():
        big = scan_theorem1(inst, 40, 40)
        small = big.restrict(20, 20)
        assert small.empirical_C == scan_theorem1(inst, 20, 20).empirical_C
        assert big.anomalies == []


def test_parallel_scan_matches_serial():
    serial = scan_theorem1(binomial_pair(), 16, 16, workers=1)
    parallel = scan_theorem1(binomial_pair(), 16, 16, workers=3)
    assert serial.to_csv() == parallel.to_csv()


def test_csv_layout():
    text = scan_theorem2(monomial(), 2, 2).to_csv().splitlines()
    assert text[0] == "n,m,mu_diff,mu_Gn,gap"
    assert text[1] == "0,0,inf,0,inf"
    assert text[2] == "0,1,-1,0,-1"
    assert len(text) == 1 + 9


def test_corollary():
    rep = check_corollary_degrees(monomial(), 30, 30)
    assert rep.holds and rep.C == 1 and rep.checked == 900
    for inst in polynomial_corpus():
        assert check_corollary_degrees(inst, 15, 15).holds
    with pytest.raises(HypothesisError):
        check_corollary_degrees(instance(rec((["1"], "x")), rec((["1"], "x")), b="2"), 5, 5)
    with pytest.raises(HypothesisError):
        check_corollary_degrees(instance(rec((["1"], "1/x")), rec((["1"], "x+1"))), 5, 5)
    # deg G_n = n for G = x^n
    assert all(-evaluate(monomial().G, n).num.degree == valuation(INFINITE, evaluate(monomial().G, n)) for n in range(8))


def test_brownawell_masser_examples():
    res = check_brownawell_masser([parse("x"), parse("-1-x")], S("x", "x+1", "inf"))
    assert (res.lhs, res.rhs, res.holds) == (1, 3, True)
    assert str(res) == "lhs=1 rhs=3 holds=true"

    # x^2-x+1 is one place of degree two, i.e. two places over C
    res = check_brownawell_masser([parse("x^3"), parse("-1-x^3")], S("x", "x+1", "x^2-x+1", "inf"))
    assert (res.lhs, res.rhs, res.holds) == (3, 5, True)

    with pytest.raises(HypothesisError, match="identity fails"):
        check_brownawell_masser([parse("x"), parse("-x")], S("x", "inf"))
    with pytest.raises(HypothesisError, match="not an S-unit"):
        check_brownawell_masser([parse("x"), parse("-1-x")], S("x", "inf"))
    # 1 + x - x - 1 = 0 but 1 + (-1) already vanishes
    with pytest.raises(HypothesisError, match="proper subsum vanishes"):
        check_brownawell_masser([parse("x"), parse("-x"), parse("-1")], S("x", "inf"))


def test_zannier_examples():
    res = check_zannier([parse("x"), parse("1")], 2, S("x", "inf"))
    assert (res.lhs, res.rhs, res.holds) == (0, 0, True)
    res = check_zannier([parse("x^2"), parse("x"), parse("1")], 3, S("x", "inf"))
    assert (res.lhs, res.rhs, res.holds) == (0, 0, True)
    with pytest.raises(HypothesisError, match="not linearly independent"):
        check_zannier([parse("x"), parse("2*x")], 2, S("x", "inf"))
    with pytest.raises(HypothesisError, match="pole"):
        check_zannier([parse("1/(x-1)"), parse("1")], 0, S("inf"))


def test_summand_values():
    assert summand_values(monomial(), 1, 1) == [parse("x"), parse("-(x+1)")]
    inst = instance(rec((["2*x+2", "x+1"], "x")), rec((["1"], "x+1")))
    assert summand_values(inst, 3, 0)[0] == parse("5*(x+1)*x^3")
    vals = summand_values(inst, 0, 0)
    assert all(v.is_constant() or v == parse("2*x+2") for v in vals)
    for n, m in ((0, 0), (2, 5), (4, 1)):
        total = sum(summand_values(inst, n, m), RationalFunction(0))
        assert total == evaluate(inst.G, n) - evaluate(inst.H, m)


def test_independence_check():
    assert independence_check([parse("x"), parse("x+1")]) is None
    assert independence_check([parse("x"), parse("2*x"), parse("x+1")]) == (2, -1, 0)
    assert independence_check([parse("1"), parse("x"), parse("x^2")]) is None
    with pytest.raises(ValueError):
        independence_check([parse("x"), RationalFunction(0)])


def test_minimal_vanishing_subsum_examples():
    w = minimal_vanishing_subsum([parse("1"), parse("x"), parse("-x"), parse("-1")])
    assert w.indices == (0, 3)
    assert minimal_vanishing_subsum([parse("x"), parse("x+1")]) is None
    w = minimal_vanishing_subsum([parse("x"), parse("1"), parse("-x-1")])
    assert w.indices == (0, 1, 2) and w.total.is_zero()
    with pytest.raises(ValueError, match="enumeration budget"):
        minimal_vanishing_subsum([parse("x")] * (SUBSUM_BUDGET + 1))


def _brute_minimal(values):
    for k in range(1, len(values) + 1):
        for idx in combinations(range(len(values)), k):
            if sum((values[i] for i in idx), RationalFunction(0)).is_zero():
                return idx
    return None


def test_minimal_vanishing_subsum_against_brute_force():
    rng = random.Random(59)
    atoms = [parse(t) for t in ("1", "x", "x^2", "1/(x+1)", "x-3")]
    for _ in range(150):
        length = rng.randint(1, 8)
        vals = []
        for _ in range(length):
            v = RationalFunction(0)
            while v.is_zero():
                v = sum((a * rng.randint(-2, 2) for a in rng.sample(atoms, 2)), RationalFunction(0))
            vals.append(v)
        expected = _brute_minimal(vals)
        got = minimal_vanishing_subsum(vals)
        assert (got.indices if got else None) == expected
        if got:
            sub = list(got.values)
            assert all(_brute_minimal([sub[i] for i in idx]) is None for k in range(1, len(sub)) for idx in combinations(range(len(sub)), k))
