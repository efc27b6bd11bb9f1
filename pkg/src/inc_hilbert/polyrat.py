"""Exact integer polynomials in s, t_1..t_k and quotients of them.

Variable 0 is always ``s``; variables ``1..k`` are the t-variables
(printed ``t`` when k == 1).
"""
from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import networkx as nx

Exp = tuple[int, ...]


class PolyError(ValueError):
    pass


def var_names(nvars: int) -> list[str]:
    if nvars == 2:
        return ["s", "t"]
    return ["s"] + [f"t{i}" for i in range(1, nvars)]


def _order_key(e: Exp) -> tuple:
    # graded, then lex with s first (s before t at equal degree)
    return (sum(e), tuple(-x for x in e))


class MultiPoly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exp, int] | None = None):
        self.nvars = nvars
        clean: dict[Exp, int] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise PolyError(f"exponent {e} has wrong length for {nvars} variables")
            if c:
                clean[tuple(e)] = c
        self.terms = clean
        self._hash: int | None = None

    @classmethod
    def const(cls, nvars: int, c: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], c: int = 1) -> "MultiPoly":
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def gen(cls, nvars: int, k: int) -> "MultiPoly":
        e = [0] * nvars
        e[k] = 1
        return cls(nvars, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def _check(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise PolyError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        return other

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        out = MultiPoly.const(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises if ``other`` does not divide."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = max(other.terms)
        lc = other.terms[lead]
        rest = [(e, c) for e, c in other.terms.items() if e != lead]
        rem = dict(self.terms)
        quo: dict[Exp, int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            q, r = divmod(c, lc)
            shift = tuple(a - b for a, b in zip(e, lead))
            if r or min(shift) < 0:
                raise PolyError("inexact polynomial division")
            quo[shift] = q
            del rem[e]
            for e2, c2 in rest:
                k = tuple(a + b for a, b in zip(shift, e2))
                v = rem.get(k, 0) - q * c2
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return MultiPoly(self.nvars, quo)

    def content(self) -> int:
        return math.gcd(*self.terms.values()) if self.terms else 0

    def __call__(self, *point) -> int | Fraction:
        if len(point) != self.nvars:
            raise PolyError(f"expected {self.nvars} values, got {len(point)}")
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                v *= x**k
            total += v
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self) -> list[tuple[Exp, int]]:
        return sorted(self.terms.items(), key=lambda ec: _order_key(ec[0]))

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = var_names(self.nvars)
        out = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            factors = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def latex(self) -> str:
        if not self.terms:
            return "0"
        names = var_names(self.nvars)
        names = [n if len(n) == 1 else f"{n[0]}_{{{n[1:]}}}" for n in names]
        out = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            factors = "".join(n if k == 1 else f"{n}^{{{k}}}" for n, k in zip(names, e) if k)
            mag = abs(c)
            body = factors if factors and mag == 1 else f"{mag}{factors}"
            sign = "-" if c < 0 else ("" if idx == 0 else "+")
            out.append(sign + body)
        return "".join(out)

    @classmethod
    def parse(cls, text: str, nvars: int) -> "MultiPoly":
        """Inverse of ``str``: sums of ``c*v^k*...`` terms."""
        names = {n: i for i, n in enumerate(var_names(nvars))}
        s = "".join(text.split())
        if not s:
            raise PolyError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        chunks = re.findall(r"[+-][^+-]+", s)
        if "".join(chunks) != s:
            raise PolyError(f"cannot parse polynomial {text!r}")
        out = MultiPoly(nvars)
        for chunk in chunks:
            coef = -1 if chunk[0] == "-" else 1
            exp = [0] * nvars
            for factor in chunk[1:].split("*"):
                if factor.isdigit():
                    coef *= int(factor)
                    continue
                name, _, k = factor.partition("^")
                if name not in names or (k and not k.isdigit()):
                    raise PolyError(f"bad factor {factor!r} in {text!r}")
                exp[names[name]] += int(k) if k else 1
            out = out + MultiPoly.monomial(exp, coef)
        return out


@dataclass(frozen=True, eq=False)
class RationalFn:
    """``num / den``, with joint integer content removed and a positive leading den term."""

    num: MultiPoly
    den: MultiPoly

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = MultiPoly.const(den.nvars, 1)
        else:
            g = math.gcd(num.content(), den.content())
            if g > 1:
                num = MultiPoly(num.nvars, {e: c // g for e, c in num.terms.items()})
                den = MultiPoly(den.nvars, {e: c // g for e, c in den.terms.items()})
        if den.sorted_terms()[0][1] < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def __add__(self, other: "RationalFn") -> "RationalFn":
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        return RationalFn(self.num * other.num, self.den * other.den)

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def latex(self) -> str:
        if self.den == 1:
            return self.num.latex()
        return rf"\frac{{{self.num.latex()}}}{{{self.den.latex()}}}"

    @classmethod
    def parse(cls, text: str, nvars: int) -> "RationalFn":
        s = text.strip()
        hit = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", s)
        if hit:
            return cls(MultiPoly.parse(hit.group(1), nvars), MultiPoly.parse(hit.group(2), nvars))
        return cls(MultiPoly.parse(s, nvars), MultiPoly.const(nvars, 1))


def rat_eq(f: RationalFn, g: RationalFn) -> bool:
    f.num._check(g.num)
    return f.num * g.den == g.num * f.den


@dataclass(frozen=True)
class WeightAssignment:
    """Letter weights: tau -> s, xi_i -> a monomial in the t-variables."""

    xi_degrees: tuple[tuple[int, ...], ...]  # one t-exponent vector per row

    def __post_init__(self) -> None:
        if not self.xi_degrees:
            raise PolyError("need at least one row")
        k = len(self.xi_degrees[0])
        for vec in self.xi_degrees:
            if len(vec) != k or k == 0:
                raise PolyError("weight vectors must share a positive length")
            if any(x < 0 for x in vec) or not any(vec):
                raise PolyError(f"weight vector {vec} must be nonnegative and nonzero")

    @classmethod
    def standard(cls, r: int) -> "WeightAssignment":
        return cls(((1,),) * r)

    @property
    def r(self) -> int:
        return len(self.xi_degrees)

    @property
    def nvars(self) -> int:
        return 1 + len(self.xi_degrees[0])

    def letter_weight(self, letter: int) -> MultiPoly:
        if letter == 0:
            return MultiPoly.gen(self.nvars, 0)
        return MultiPoly.monomial((0,) + tuple(self.xi_degrees[letter - 1]))


def _bareiss_solve(mat: list[list[MultiPoly]], rhs: list[MultiPoly]) -> tuple[MultiPoly, list[MultiPoly]]:
    """Fraction-free solve of ``mat @ x = rhs``.

    Returns ``(d, y)`` with ``x = y / d`` and ``d = +-det(mat)``; every
    division is exact.
    """
    k = len(mat)
    a = [list(row) + [b] for row, b in zip(mat, rhs)]
    nv = rhs[0].nvars
    prev = MultiPoly.const(nv, 1)
    for p in range(k):
        piv = next((i for i in range(p, k) if not a[i][p].is_zero()), None)
        if piv is None:
            raise ArithmeticError("singular transfer matrix")
        a[p], a[piv] = a[piv], a[p]
        app = a[p][p]
        for i in range(p + 1, k):
            aip = a[i][p]
            for j in range(p + 1, k + 1):
                v = app * a[i][j]
                if not aip.is_zero():
                    v = v - aip * a[p][j]
                a[i][j] = v.exact_div(prev) if prev != 1 else v
            a[i][p] = MultiPoly(nv)
        prev = app
    det = a[k - 1][k - 1]
    y: list[MultiPoly] = [MultiPoly(nv)] * k
    for i in reversed(range(k)):
        v = det * a[i][k]
        for j in range(i + 1, k):
            if not a[i][j].is_zero():
                v = v - a[i][j] * y[j]
        y[i] = v.exact_div(a[i][i])
    return det, y


def _expand(factors: Counter, nvars: int, cache: dict) -> MultiPoly:
    key = frozenset(factors.items())
    if key not in cache:
        out = MultiPoly.const(nvars, 1)
        for f, mult in factors.items():
            out = out * f**mult
        cache[key] = out
    return cache[key]


def genfunc(
    matrices: Sequence[Sequence[Sequence[int]]],
    e1: Sequence[int],
    u: Sequence[int],
    wt: WeightAssignment,
) -> RationalFn:
    """``u^T (I - sum_l rho(l) M_l)^{-1} e1`` as an exact rational function.

    Only states reachable from ``e1`` and co-reachable to ``u`` matter.
    The system is block triangular along strongly connected components, so
    each component is solved by fraction-free elimination on its own and
    denominators are carried as multisets of component determinants.
    """
    nv = wt.nvars
    n = len(e1)
    if len(u) != n or len(matrices) != wt.r + 1:
        raise PolyError("dimension mismatch between matrices, vectors and weights")
    for m in matrices:
        if len(m) != n or any(len(row) != n for row in m):
            raise PolyError("transition matrices must be square of the vector length")

    # a[i][j]: weight of the edge j -> i
    a: dict[tuple[int, int], MultiPoly] = {}
    for letter, m in enumerate(matrices):
        w = wt.letter_weight(letter)
        for i in range(n):
            for j, x in enumerate(m[i]):
                if x:
                    a[i, j] = a.get((i, j), MultiPoly(nv)) + w * x

    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from((j, i) for (i, j), w in a.items() if not w.is_zero())
    sources = [q for q in range(n) if e1[q]]
    sinks = [q for q in range(n) if u[q]]
    fwd = set(sources).union(*(nx.descendants(g, q) for q in sources))
    bwd = set(sinks).union(*(nx.ancestors(g, q) for q in sinks))
    live = fwd & bwd
    zero = RationalFn(MultiPoly(nv), MultiPoly.const(nv, 1))
    if not live:
        return zero

    sub = g.subgraph(live)
    dag = nx.condensation(sub)
    cache: dict = {}
    nums: dict[int, MultiPoly] = {}
    dens: dict[int, Counter] = {}
    for c in nx.lexicographical_topological_sort(dag):
        block = sorted(dag.nodes[c]["members"])
        inside = set(block)
        deps = {j for i in block for j in sub.predecessors(i) if j not in inside}
        common: Counter = Counter()
        for j in deps:
            common |= dens[j]
        scale = {j: _expand(common - dens[j], nv, cache) for j in deps}
        rhs = []
        for i in block:
            v = _expand(common, nv, cache) * e1[i]
            for j in sub.predecessors(i):
                if j in deps:
                    v = v + a[i, j] * nums[j] * scale[j]
            rhs.append(v)
        mat = [
            [(MultiPoly.const(nv, 1) if i == j else MultiPoly(nv)) - a.get((i, j), MultiPoly(nv)) for j in block]
            for i in block
        ]
        det, y = _bareiss_solve(mat, rhs)
        den = Counter(common)
        if det == -1:
            y = [-v for v in y]
        elif det != 1:
            den[det] += 1
        for i, v in zip(block, y):
            nums[i] = v
            dens[i] = den

    final: Counter = Counter()
    used = [q for q in live if u[q]]
    for q in used:
        final |= dens[q]
    num = MultiPoly(nv)
    for q in used:
        num = num + nums[q] * _expand(final - dens[q], nv, cache) * u[q]
    return RationalFn(num, _expand(final, nv, cache))


def series_box(nvars: int, smax: int, dmax: int) -> list[Exp]:
    """Exponents with s-degree <= smax and total t-degree <= dmax, graded order."""
    k = nvars - 1
    out = []
    for d in range(dmax + 1):
        for tvec in _compositions(d, k):
            for n in range(smax + 1):
                out.append((n,) + tvec)
    return sorted(out, key=lambda e: (sum(e), e))


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def taylor(f: RationalFn, smax: int, dmax: int) -> dict[Exp, int | Fraction]:
    """Power-series coefficients of ``f`` on the (smax, dmax) box, zeros included."""
    c0 = f.den.constant_term()
    if c0 == 0:
        raise PolyError("denominator vanishes at the origin; no power series")
    box = series_box(f.nvars, smax, dmax)
    tail = [(e, c) for e, c in f.den.terms.items() if any(e)]
    out: dict[Exp, int | Fraction] = {}
    for e in box:
        acc = f.num.terms.get(e, 0)
        for d, c in tail:
            prev = tuple(a - b for a, b in zip(e, d))
            if min(prev) >= 0:
                acc -= c * out[prev]
        q = Fraction(acc, c0)
        out[e] = q.numerator if q.denominator == 1 else q
    return out
