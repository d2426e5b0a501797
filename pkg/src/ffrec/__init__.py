"""Exact valuations, heights, S-units and linear recurrences over Q(x)."""
from ffrec.parse import ParseError, parse
from ffrec.places import INF, INFINITE, Divisor, Place, divisor, height, valuation
from ffrec.polyalg import Poly, RationalFunction, X, factor, gcd

__version__ = "0.1.0"

__all__ = [
    "INF",
    "INFINITE",
    "Divisor",
    "ParseError",
    "Place",
    "Poly",
    "RationalFunction",
    "X",
    "divisor",
    "factor",
    "gcd",
    "height",
    "parse",
    "valuation",
]
