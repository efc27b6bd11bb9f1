"""Regular expressions over {tau, xi_1..xi_r} and the languages built from them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence, Union as _U

from .monomial import TAU, Letter, Monomial, MonomialError, encode, is_standard, segments


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Lit:
    letter: Letter


@dataclass(frozen=True)
class Concat:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Union:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Star:
    inner: "Regex"


Regex = _U[Empty, Epsilon, Lit, Concat, Union, Star]

EMPTY = Empty()
EPSILON = Epsilon()


def concat(*parts: Regex) -> Regex:
    if not parts:
        return EPSILON
    return reduce(Concat, parts)


def union(*parts: Regex) -> Regex:
    if not parts:
        return EMPTY
    return reduce(Union, parts)


def any_word(r: int) -> Regex:
    """Sigma*: every word over the alphabet."""
    return Star(union(*(Lit(a) for a in range(r + 1))))


def simple_standard(r: int) -> Regex:
    """xi_1* xi_2* ... xi_r*"""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return concat(*(Star(Lit(i)) for i in range(1, r + 1)))


def standard(r: int) -> Regex:
    """All standard words: L (tau L)* with L the simple standard words."""
    simple = simple_standard(r)
    return Concat(simple, Star(Concat(Lit(TAU), simple)))


def dominance(wi: Sequence[Letter], r: int) -> Regex:
    """Simple standard words whose monomial is divisible by that of ``wi``."""
    if TAU in wi:
        raise MonomialError("dominance word must be simple (no tau)")
    if not is_standard(wi):
        raise MonomialError("dominance word must be standard")
    if any(not 1 <= a <= r for a in wi):
        raise MonomialError(f"letter outside alphabet for r={r}")
    parts = []
    for k in range(1, r + 1):
        parts.append(concat(*[Lit(k)] * wi.count(k), Star(Lit(k))))
    return concat(*parts)


def pattern(m: Monomial) -> Regex:
    """Sigma* L_0 Sigma* tau L_1 Sigma* ... tau L_n Sigma* for ``m``.

    ``L_j`` is the dominance language of the j-th simple segment of
    ``encode(m)``.  On standard words this recognises exactly the
    encodings of monomials in the Inc(N)-orbit ideal of ``m``.
    """
    r = m.rows
    sigma = any_word(r)
    segs = segments(encode(m))
    parts: list[Regex] = [sigma, dominance(segs[0], r)]
    for seg in segs[1:]:
        parts.extend([sigma, Lit(TAU), dominance(seg, r)])
    parts.append(sigma)
    return concat(*parts)


def ideal_regex(gens: Sequence[Monomial]) -> Regex:
    return union(*(pattern(g) for g in gens))




def matches(re_: Regex, word: Sequence[Letter]) -> bool:
    """Backtracking-free recursive matcher, independent of the automata code."""
    return len(word) in _ends(re_, tuple(word), 0)


def _ends(re_: Regex, w: tuple[int, ...], i: int) -> frozenset[int]:
    # set of positions j such that re_ matches w[i:j]
    if isinstance(re_, Empty):
        return frozenset()
    if isinstance(re_, Epsilon):
        return frozenset({i})
    if isinstance(re_, Lit):
        return frozenset({i + 1}) if i < len(w) and w[i] == re_.letter else frozenset()
    if isinstance(re_, Union):
        return _ends(re_.left, w, i) | _ends(re_.right, w, i)
    if isinstance(re_, Concat):
        out: set[int] = set()
        for j in _ends(re_.left, w, i):
            out |= _ends(re_.right, w, j)
        return frozenset(out)
    if isinstance(re_, Star):
        seen = {i}
        frontier = [i]
        while frontier:
            k = frontier.pop()
            for j in _ends(re_.inner, w, k):
                if j not in seen:
                    seen.add(j)
                    frontier.append(j)
        return frozenset(seen)
    raise TypeError(f"not a regex node: {re_!r}")


_PREC = {Union: 0, Concat: 1, Star: 2}


def render(re_: Regex) -> str:
    """Plain-text form: ``|``, juxtaposition, ``*``, ``@`` for tau, ``x1..`` for xi."""
    return _render(re_, 0)


def _render(re_: Regex, ctx: int) -> str:
    if isinstance(re_, Empty):
        return "{}"
    if isinstance(re_, Epsilon):
        return "()"
    if isinstance(re_, Lit):
        return "@" if re_.letter == TAU else f"x{re_.letter}"
    prec = _PREC[type(re_)]
    if isinstance(re_, Union):
        s = f"{_render(re_.left, 0)}|{_render(re_.right, 0)}"
    elif isinstance(re_, Concat):
        s = f"{_render(re_.left, 1)} {_render(re_.right, 1)}"
    else:
        s = f"{_render(re_.inner, 2)}*"
    return f"({s})" if prec < ctx else s
