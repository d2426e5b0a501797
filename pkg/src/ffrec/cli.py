"""Command-line front end.

Exit codes: 0 success, 2 parse or usage error, 3 domain error (hypothesis
failure, division by zero, invalid place, ...).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ffrec.effective import TheoremInstance, check_hypotheses, compute_constants
from ffrec.multindep import HypothesisError, find_relation
from ffrec.parse import ParseError, parse, parse_poly
from ffrec.places import INFINITE, Place, divisor, height, valuation
from ffrec.polyalg import DivisionByZero, factor
from ffrec.recurrence import DegenerateError, LinearRecurrence, evaluate, growth_profile
from ffrec.verify import (
    check_brownawell_masser,
    check_zannier,
    scan_theorem1,
    scan_theorem2,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3


class ConfigError(ValueError):
    pass


class DomainError(ValueError):
    pass


def parse_place(spec: str) -> Place:
    spec = spec.strip()
    if spec == "inf":
        return INFINITE
    p = parse_poly(spec)
    if p.is_constant():
        raise DomainError(f"place {spec!r} is constant")
    fac = factor(p.monic())
    if len(fac.factors) != 1 or fac.factors[0][1] != 1:
        raise DomainError(f"place {spec!r} is reducible: {fac}")
    return Place.finite(p.monic(), check=False)


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from exc


def _recurrence(data, what: str) -> LinearRecurrence:
    try:
        return LinearRecurrence.from_dict(data)
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"{what}: malformed recurrence config ({exc})") from exc


def load_instance(path: str) -> tuple[TheoremInstance, tuple[int, int]]:
    data = _load_json(path)
    for key in ("G", "H"):
        if key not in data:
            raise ConfigError(f"{path}: missing '{key}'")
    G = _recurrence(data["G"], "G")
    H = _recurrence(data["H"], "H")
    a = parse(str(data.get("a", "1")))
    b = parse(str(data.get("b", "1")))
    mu = parse_place(str(data.get("mu", "inf")))
    genus = int(data.get("genus", 0))
    grid = data.get("grid", [30, 30])
    return TheoremInstance(G, H, a, b, mu, genus), (int(grid[0]), int(grid[1]))


def _places(specs) -> frozenset:
    return frozenset(parse_place(str(s)) for s in specs)


# -- subcommands -------------------------------------------------------------


def cmd_factor(args):
    f = parse(args.expr)
    if f.is_zero():
        raise DomainError("cannot factor zero")
    if f.is_polynomial():
        print(factor(f.num))
    else:
        print(f"{factor(f.num)} / ({factor(f.den)})")


def cmd_val(args):
    f = parse(args.expr)
    if args.place is None:
        if f.is_zero():
            raise DomainError("zero has no divisor")
        print(divisor(f))
    else:
        print(valuation(parse_place(args.place), f))


def cmd_height(args):
    print(height(parse(args.expr)))


def cmd_indep(args):
    g, d = parse(args.gamma), parse(args.delta)
    if g.is_zero() or d.is_zero():
        raise DomainError("multiplicative independence is undefined for zero")
    rel = find_relation(g, d)
    print("independent" if rel is None else f"dependent {rel}")


def _sequence_from_file(path: str, which: str) -> LinearRecurrence:
    data = _load_json(path)
    if "terms" in data:
        return _recurrence(data, path)
    if which not in data:
        raise ConfigError(f"{path}: no recurrence '{which}'")
    return _recurrence(data[which], which)


def cmd_eval(args):
    G = _sequence_from_file(args.config, args.seq)
    for n in range(args.n, (args.to if args.to is not None else args.n) + 1):
        value = evaluate(G, n)
        print(value if args.to is None else f"{n}: {value}")


def cmd_growth(args):
    G = _sequence_from_file(args.config, args.seq)
    prof = growth_profile(G, parse_place(args.place), args.n_max)
    print("n,gap")
    for n, gap in prof.entries:
        print(f"{n},{gap}")
    print(f"# C-={prof.c_minus} C+={prof.c_plus} (empirical) zeros={prof.zeros}")


def cmd_constants(args):
    inst, _ = load_instance(args.config)
    print(json.dumps(compute_constants(inst).to_dict(), indent=2))


def cmd_scan(args):
    inst, (n_max, m_max) = load_instance(args.config)
    n_max = args.n_max if args.n_max is not None else n_max
    m_max = args.m_max if args.m_max is not None else m_max
    print(f"hypotheses (theorem {args.theorem}):")
    checks = check_hypotheses(inst, args.theorem)
    for h in checks:
        print(f"  {h}")
    failed = [h for h in checks if not h.ok]
    if failed:
        h = failed[0]
        raise HypothesisError(h.detail or f"hypothesis failed: {h.name}")
    scan = scan_theorem1 if args.theorem == 1 else scan_theorem2
    report = scan(inst, n_max, m_max)
    consts = compute_constants(inst)

    out_dir = Path(args.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"scan_theorem{args.theorem}"
    if args.out == "csv":
        path = out_dir / f"{stem}.csv"
        path.write_text(report.to_csv())
        (out_dir / f"{stem}_summary.json").write_text(json.dumps(report.summary(), indent=2) + "\n")
    else:
        path = out_dir / f"{stem}.json"
        path.write_text(report.to_json() + "\n")
    (out_dir / "constants.json").write_text(json.dumps(consts.to_dict(), indent=2) + "\n")

    label = "empirical_C" if args.theorem == 1 else "empirical_C'"
    print(f"{label} = {report.empirical_C} (empirical)")
    print(f"C_aux = {consts.C_aux}")
    print(f"|S| = {len(consts.S)} places, c0_initial = {consts.c0_initial}")
    print(f"zeros = {len(report.zeros)}, anomalies = {len(report.anomalies)}, violations = {len(report.violations)}")
    print(f"wrote {path}")
    if report.anomalies or report.violations:
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_check(args):
    data = _load_json(args.instance)
    genus = int(data.get("genus", 0))
    if args.bm:
        units = [parse(str(u)) for u in data["units"]]
        if "S" in data:
            S = _places(data["S"])
        else:
            from ffrec.places import minimal_S

            S = minimal_S([u for u in units if not u.is_zero()])
        result = check_brownawell_masser(units, S, genus)
    else:
        phis = [parse(str(p)) for p in data["phis"]]
        r = int(data.get("r", len(phis)))
        if "S" in data:
            S = _places(data["S"])
        else:
            S = _zannier_default_S(phis, r)
        result = check_zannier(phis, r, S, genus)
    print(result)
    return EXIT_OK if result.holds else EXIT_DOMAIN


def _zannier_default_S(phis, r):
    S = set()
    for i, phi in enumerate(phis):
        if phi.is_zero():
            continue
        for place, e in divisor(phi).items():
            if e < 0 or i < r:
                S.add(place)
    return frozenset(S)


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ffrec",
        description="Valuations, heights and recurrence-difference scans over Q(x).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("factor", help="factor a polynomial or rational function over Q")
    s.add_argument("expr")
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("val", help="valuation at a place, or the full divisor")
    s.add_argument("--place", help="'inf' or an irreducible polynomial; omit for the divisor")
    s.add_argument("expr")
    s.set_defaults(func=cmd_val)

    s = sub.add_parser("height", help="height max(deg num, deg den)")
    s.add_argument("expr")
    s.set_defaults(func=cmd_height)

    s = sub.add_parser("indep", help="multiplicative independence modulo constants")
    s.add_argument("gamma")
    s.add_argument("delta")
    s.set_defaults(func=cmd_indep)

    s = sub.add_parser("eval", help="evaluate a recurrence at n (or n..to)")
    s.add_argument("config")
    s.add_argument("n", type=int)
    s.add_argument("--to", type=int)
    s.add_argument("--seq", default="G", choices=["G", "H"])
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("growth", help="profile mu(G_n) - n * min mu(alpha_i)")
    s.add_argument("config")
    s.add_argument("--place", default="inf")
    s.add_argument("--n-max", type=int, default=40)
    s.add_argument("--seq", default="G", choices=["G", "H"])
    s.set_defaults(func=cmd_growth)

    s = sub.add_parser("constants", help="effective constants report (JSON)")
    s.add_argument("config")
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("scan", help="scan the valuation gap over an (n, m) grid")
    s.add_argument("config")
    s.add_argument("--theorem", type=int, choices=[1, 2], default=1)
    s.add_argument("--out", choices=["csv", "json"], default="csv")
    s.add_argument("--output-dir", default=".")
    s.add_argument("--n-max", type=int)
    s.add_argument("--m-max", type=int)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("check", help="Brownawell-Masser or Zannier inequality on an instance file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--bm", action="store_true")
    g.add_argument("--zannier", action="store_true")
    s.add_argument("instance")
    s.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc.render()}", file=sys.stderr)
        return EXIT_PARSE
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (HypothesisError, DegenerateError, DomainError, DivisionByZero, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
