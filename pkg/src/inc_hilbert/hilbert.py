"""End-to-end Hilbert series of Inc(N)-orbit monomial ideals, plus a brute-force oracle."""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import automata
from .automata import DFA
from .lang import ideal_regex, standard
from .monomial import Monomial, MonomialError, in_ideal, monomials
from .polyrat import RationalFn, WeightAssignment, genfunc, series_box, taylor

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Problem:
    """``rows`` and orbit generators; ``weights`` is None for the standard grading.

    With ``weights``, row ``i`` contributes the t-multidegree ``weights[i-1]``.
    """

    rows: int
    gens: tuple[Monomial, ...] = ()
    weights: Optional[tuple[tuple[int, ...], ...]] = None

    def __post_init__(self) -> None:
        if self.rows < 1:
            raise MonomialError(f"rows must be >= 1, got {self.rows}")
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if g.rows != self.rows:
                raise MonomialError(f"generator {g} has rows={g.rows}, expected {self.rows}")
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(tuple(w) for w in self.weights))
            if len(self.weights) != self.rows:
                raise ValueError(f"need one weight vector per row ({self.rows})")
            self.weight_assignment()  # validates

    def weight_assignment(self) -> WeightAssignment:
        if self.weights is None:
            return WeightAssignment.standard(self.rows)
        return WeightAssignment(self.weights)

    def multidegree(self, m: Monomial) -> tuple[int, ...]:
        wts = self.weight_assignment().xi_degrees
        out = [0] * len(wts[0])
        for (i, _), e in m.exponents:
            for k, w in enumerate(wts[i - 1]):
                out[k] += e * w
        return tuple(out)


@dataclass
class SeriesResult:
    series: RationalFn
    dfa: DFA
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def dfa_states(self) -> int:
        return self.dfa.state_count


def ideal_dfa(rows: int, gens: Sequence[Monomial], reduce: bool = True,
              timings: Optional[dict[str, float]] = None) -> DFA:
    """Complete DFA for the standard words whose monomial lies in the ideal."""
    timings = {} if timings is None else timings
    clock = time.perf_counter()

    def lap(stage: str) -> None:
        nonlocal clock
        now = time.perf_counter()
        timings[stage] = timings.get(stage, 0.0) + now - clock
        clock = now

    re_ = ideal_regex(list(gens))
    lap("regex")
    nfa = automata.thompson(re_, rows)
    lap("thompson")
    ideal = automata.determinize(nfa)
    std = automata.determinize(automata.thompson(standard(rows), rows))
    if reduce:
        ideal, std = automata.minimize(ideal), automata.minimize(std)
    lap("determinize")
    d = automata.intersect(ideal, std)
    lap("intersect")
    d = automata.minimize(d) if reduce else automata.canonical(d)
    lap("minimize")
    return d


def hilbert_series(p: Problem, reduce: bool = True) -> SeriesResult:
    timings: dict[str, float] = {}
    d = ideal_dfa(p.rows, p.gens, reduce=reduce, timings=timings)
    t0 = time.perf_counter()
    mats, e1, u = automata.transition_matrices(d)
    series = genfunc(mats, e1, u, p.weight_assignment())
    timings["genfunc"] = time.perf_counter() - t0
    log.debug("rows=%d gens=%d states=%d timings=%s", p.rows, len(p.gens), d.state_count, timings)
    return SeriesResult(series, d, timings)


def brute_counts(p: Problem, nmax: int, dmax: int) -> dict[tuple[int, ...], int]:
    """Count ideal monomials in columns 0..n by multidegree, by plain enumeration."""
    nvars = p.weight_assignment().nvars
    table = {e: 0 for e in series_box(nvars, nmax, dmax)}
    for n in range(nmax + 1):
        # every letter weighs at least one t, so degree <= total t-degree
        for deg in range(dmax + 1):
            for m in monomials(p.rows, n + 1, deg):
                md = p.multidegree(m)
                if sum(md) <= dmax and in_ideal(m, p.gens):
                    table[(n,) + md] += 1
    return table


def verify(p: Problem, nmax: int = 4, dmax: int = 5, reduce: bool = True) -> bool:
    series = hilbert_series(p, reduce=reduce).series
    return taylor(series, nmax, dmax) == brute_counts(p, nmax, dmax)


def reduce_gens(gens: Sequence[Monomial]) -> list[Monomial]:
    """Drop generators that lie in the orbit ideal of the others."""
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=lambda m: (m.degree, str(m))):
        if not in_ideal(g, kept):
            kept.append(g)
    return kept
