"""Hand-built theorem instances shared by several test modules."""
from ffrec.effective import TheoremInstance
from ffrec.parse import parse
from ffrec.places import INFINITE, Place
from ffrec.recurrence import LinearRecurrence, Term


def rec(*terms):
    """rec((coeffs, root), ...) with string expressions."""
    return LinearRecurrence([Term(list(c), r) for c, r in terms])


def place(text):
    return INFINITE if text == "inf" else Place.finite(parse(text).num)


def instance(G, H, a="1", b="1", mu="inf", genus=0):
    return TheoremInstance(G, H, parse(a), parse(b), place(mu), genus)


def monomial():
    """x^n against (x+1)^m at infinity."""
    return instance(rec((["1"], "x")), rec((["1"], "x+1")))


def two_by_two(mu="x+3", genus=0):
    """Roots x^2, x against x+1, x+2; |S| = 5 with mu = x+3."""
    return instance(
        rec((["1"], "x^2"), (["1"], "x")),
        rec((["1"], "x+1"), (["1"], "x+2")),
        mu=mu,
        genus=genus,
    )


def constant_beta():
    """x^n against 2^m at the place x+1."""
    return instance(rec((["1"], "x")), rec((["1"], "2")), mu="x+1")


def shifted_coefficient():
    """(x-1) x^n against 2^m at infinity."""
    return instance(rec((["x-1"], "x")), rec((["1"], "2")))


def binomial_pair():
    """(x+1)^n + x^n against (x^2+x+1)^m at infinity."""
    return instance(rec((["1"], "x+1"), (["1"], "x")), rec((["1"], "x^2+x+1")))


def polynomial_corpus():
    return [
        monomial(),
        binomial_pair(),
        instance(rec((["1"], "x^2"), (["2"], "x")), rec((["1"], "x+1")), a="x", b="3"),
        instance(rec((["1", "1"], "x")), rec((["1"], "x^2+1"), (["-1"], "x-1"))),
    ]


def monomial_config():
    return {
        "G": {"terms": [{"coeff": ["1"], "root": "x"}]},
        "H": {"terms": [{"coeff": ["1"], "root": "x+1"}]},
        "a": "1",
        "b": "1",
        "mu": "inf",
        "grid": [30, 30],
    }
