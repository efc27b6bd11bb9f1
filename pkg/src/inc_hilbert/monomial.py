"""Monomials in K[x_{i,j}], their word encoding, and orbit divisibility.

Rows are 1-based (``1 <= i <= r``), columns 0-based (``j >= 0``).
Letters are plain ints: ``TAU == 0`` is the shift letter and ``i`` in
``1..r`` stands for xi_i.  A word is a tuple of letters.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

TAU = 0

Letter = int
Word = tuple[int, ...]


class MonomialError(ValueError):
    """Malformed monomial, word, or row/column index."""


@dataclass(frozen=True)
class Monomial:
    rows: int
    exponents: tuple[tuple[tuple[int, int], int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.rows < 1:
            raise MonomialError(f"rows must be >= 1, got {self.rows}")
        for (i, j), e in self.exponents:
            if not 1 <= i <= self.rows:
                raise MonomialError(f"row index {i} outside 1..{self.rows}")
            if j < 0:
                raise MonomialError(f"negative column index {j}")
            if e <= 0:
                raise MonomialError(f"stored exponent must be positive, got {e}")

    @classmethod
    def from_dict(cls, rows: int, exps: Mapping[tuple[int, int], int]) -> "Monomial":
        return cls(rows, tuple(sorted((k, e) for k, e in exps.items() if e)))

    @classmethod
    def one(cls, rows: int) -> "Monomial":
        return cls(rows)

    @classmethod
    def var(cls, rows: int, i: int, j: int, e: int = 1) -> "Monomial":
        return cls.from_dict(rows, {(i, j): e})

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.exponents)

    def exponent(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    def is_one(self) -> bool:
        return not self.exponents

    def column(self, j: int) -> tuple[int, ...]:
        """Exponent vector (rows 1..r) of the variables in column ``j``."""
        d = self.as_dict()
        return tuple(d.get((i, j), 0) for i in range(1, self.rows + 1))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_rows(self, other)
        d = self.as_dict()
        for k, e in other.exponents:
            d[k] = d.get(k, 0) + e
        return Monomial.from_dict(self.rows, d)

    def divides(self, other: "Monomial") -> bool:
        _check_rows(self, other)
        d = other.as_dict()
        return all(d.get(k, 0) >= e for k, e in self.exponents)

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        # column-major so the text reads like the word encoding
        keys = sorted(self.exponents, key=lambda kv: (kv[0][1], kv[0][0]))
        return "*".join(
            f"x[{i},{j}]" + (f"^{e}" if e != 1 else "") for (i, j), e in keys
        )


def _check_rows(a: Monomial, b: Monomial) -> None:
    if a.rows != b.rows:
        raise MonomialError(f"row count mismatch: {a.rows} vs {b.rows}")


def shift(m: Monomial) -> Monomial:
    """The shift operator T: x_{i,j} -> x_{i,j+1}."""
    return Monomial(m.rows, tuple(((i, j + 1), e) for (i, j), e in m.exponents))


def width(m: Monomial) -> int:
    """Largest column index in ``m``; -1 for the unit monomial."""
    return max((j for (_, j), _ in m.exponents), default=-1)


def decode(w: Sequence[Letter], rows: int) -> Monomial:
    """Evaluate the word map: xi_i -> x_{i,0}, tau -> shift of the remainder."""
    exps: dict[tuple[int, int], int] = {}
    col = 0
    # reading left to right, each tau pushes everything after it one column right
    for letter in w:
        if letter == TAU:
            col += 1
        elif 1 <= letter <= rows:
            exps[(letter, col)] = exps.get((letter, col), 0) + 1
        else:
            raise MonomialError(f"letter {letter} outside alphabet for r={rows}")
    return Monomial.from_dict(rows, exps)


def encode(m: Monomial) -> Word:
    """Shortest standard word decoding to ``m``."""
    out: list[int] = []
    for j in range(width(m) + 1):
        if j:
            out.append(TAU)
        for i, e in enumerate(m.column(j), start=1):
            out.extend([i] * e)
    return tuple(out)


def is_standard(w: Sequence[Letter]) -> bool:
    return all(
        not (a != TAU and b != TAU and a > b) for a, b in zip(w, w[1:])
    )


def segments(w: Sequence[Letter]) -> list[Word]:
    """Split a word at its taus into simple (tau-free) pieces."""
    out: list[list[int]] = [[]]
    for letter in w:
        if letter == TAU:
            out.append([])
        else:
            out[-1].append(letter)
    return [tuple(s) for s in out]


def _dominates(big: Sequence[int], small: Sequence[int]) -> bool:
    return all(b >= s for b, s in zip(big, small))


def orbit_divides(m: Monomial, mp: Monomial) -> bool:
    """True iff sigma(m) divides ``mp`` for some strictly increasing sigma.

    Column blocks of ``m`` are matched left to right, each to the earliest
    admissible column of ``mp`` after the previous match.  Leftmost choice
    never hurts later blocks, so greedy is exact.
    """
    _check_rows(m, mp)
    wp = width(mp)
    prev = -1
    for j in range(width(m) + 1):
        block = m.column(j)
        if not any(block):
            prev += 1
            continue
        c = prev + 1
        while c <= wp and not _dominates(mp.column(c), block):
            c += 1
        if c > wp:
            return False
        prev = c
    return True


def orbit_divides_bruteforce(m: Monomial, mp: Monomial) -> bool:
    """Exhaustive search over increasing column maps; a test oracle."""
    _check_rows(m, mp)
    n = width(m)
    if n < 0:
        return True
    # columns beyond width(mp) are empty, so n+1 of them past it suffice
    target = range(max(width(mp), 0) + n + 2)
    for sigma in itertools.combinations(target, n + 1):
        image = Monomial.from_dict(
            m.rows, {(i, sigma[j]): e for (i, j), e in m.exponents}
        )
        if image.divides(mp):
            return True
    return False


def in_ideal(mp: Monomial, gens: Iterable[Monomial]) -> bool:
    return any(orbit_divides(g, mp) for g in gens)


def monomials(rows: int, ncols: int, degree: int) -> Iterator[Monomial]:
    """All monomials of the given total degree in columns ``0..ncols-1``."""
    keys = [(i, j) for j in range(ncols) for i in range(1, rows + 1)]
    for combo in itertools.combinations_with_replacement(range(len(keys)), degree):
        exps: dict[tuple[int, int], int] = {}
        for k in combo:
            exps[keys[k]] = exps.get(keys[k], 0) + 1
        yield Monomial.from_dict(rows, exps)


_FACTOR = re.compile(r"x\[(\d+),(\d+)\](?:\^(\d+))?$")


def parse_monomial(text: str, rows: int) -> Monomial:
    """Parse ``x[i,j]^e * ...`` (or ``1``) into a monomial with ``rows`` rows."""
    s = "".join(text.split())
    if not s:
        raise MonomialError("empty monomial")
    if s == "1":
        return Monomial.one(rows)
    exps: dict[tuple[int, int], int] = {}
    for factor in s.split("*"):
        hit = _FACTOR.match(factor)
        if hit is None:
            raise MonomialError(f"malformed factor {factor!r} in {text!r}")
        i, j = int(hit.group(1)), int(hit.group(2))
        e = int(hit.group(3)) if hit.group(3) is not None else 1
        if i < 1 or i > rows:
            raise MonomialError(f"row index {i} exceeds r={rows} in {text!r}")
        if e < 1:
            raise MonomialError(f"exponent must be >= 1 in {text!r}")
        exps[(i, j)] = exps.get((i, j), 0) + e
    return Monomial.from_dict(rows, exps)


def letter_name(letter: Letter, tau: str = "@", xi: str = "x") -> str:
    return tau if letter == TAU else f"{xi}{letter}"


def format_word(w: Sequence[Letter]) -> str:
    return " ".join(letter_name(a, tau="t") for a in w) or "<empty>"
