"""Hilbert series of Inc(N)-stable monomial ideals via regular languages."""
from .hilbert import Problem, SeriesResult, brute_counts, hilbert_series, verify
from .monomial import Monomial, decode, encode, in_ideal, orbit_divides, parse_monomial
from .polyrat import MultiPoly, RationalFn, rat_eq, taylor

__all__ = [
    "Monomial", "MultiPoly", "Problem", "RationalFn", "SeriesResult",
    "brute_counts", "decode", "encode", "hilbert_series", "in_ideal",
    "orbit_divides", "parse_monomial", "rat_eq", "taylor", "verify",
]
