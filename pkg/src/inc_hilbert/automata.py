"""Finite automata over the alphabet {0 = tau, 1..r = xi_i}.

Thompson construction, subset determinization to a complete DFA, product
intersection, Hopcroft minimization and 0-1 transition matrices.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .lang import Concat, Empty, Epsilon, Lit, Regex, Star, Union
from .monomial import Letter, letter_name


class AutomatonError(ValueError):
    pass


@dataclass(frozen=True)
class NFA:
    r: int
    state_count: int
    start: int
    accepts: frozenset[int]
    # label None is an epsilon move
    transitions: tuple[tuple[int, Optional[int], int], ...]

    @property
    def nletters(self) -> int:
        return self.r + 1


@dataclass(frozen=True)
class DFA:
    r: int
    start: int
    accepts: frozenset[int]
    delta: tuple[tuple[int, ...], ...]  # delta[state][letter]

    def __post_init__(self) -> None:
        n = len(self.delta)
        if not 0 <= self.start < n:
            raise AutomatonError("start state out of range")
        for row in self.delta:
            if len(row) != self.r + 1:
                raise AutomatonError("delta must be total over the alphabet")
            if any(not 0 <= q < n for q in row):
                raise AutomatonError("transition target out of range")
        if any(not 0 <= q < n for q in self.accepts):
            raise AutomatonError("accept state out of range")

    @property
    def state_count(self) -> int:
        return len(self.delta)

    @property
    def nletters(self) -> int:
        return self.r + 1


def thompson(re_: Regex, r: int) -> NFA:
    """Thompson's construction: one start, one accept, epsilon glue."""
    trans: list[tuple[int, Optional[int], int]] = []
    count = 0

    def new() -> int:
        nonlocal count
        count += 1
        return count - 1

    def build(node: Regex) -> tuple[int, int]:
        s, f = new(), new()
        if isinstance(node, Empty):
            pass
        elif isinstance(node, Epsilon):
            trans.append((s, None, f))
        elif isinstance(node, Lit):
            if not 0 <= node.letter <= r:
                raise AutomatonError(f"letter {node.letter} outside alphabet for r={r}")
            trans.append((s, node.letter, f))
        elif isinstance(node, Concat):
            s1, f1 = build(node.left)
            s2, f2 = build(node.right)
            trans.extend([(s, None, s1), (f1, None, s2), (f2, None, f)])
        elif isinstance(node, Union):
            for part in (node.left, node.right):
                s1, f1 = build(part)
                trans.extend([(s, None, s1), (f1, None, f)])
        elif isinstance(node, Star):
            s1, f1 = build(node.inner)
            trans.extend([(s, None, s1), (f1, None, s1), (f1, None, f), (s, None, f)])
        else:
            raise TypeError(f"not a regex node: {node!r}")
        return s, f

    # explicit stack would be nicer, but regex depth here is small
    start, final = build(re_)
    return NFA(r, count, start, frozenset({final}), tuple(trans))


def _closure(states: Iterable[int], eps: list[list[int]]) -> frozenset[int]:
    seen = set(states)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for p in eps[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return frozenset(seen)


def determinize(a: NFA) -> DFA:
    """Subset construction over live NFA states; the empty subset is the rejecting sink."""
    eps: list[list[int]] = [[] for _ in range(a.state_count)]
    moves: list[list[list[int]]] = [
        [[] for _ in range(a.nletters)] for _ in range(a.state_count)
    ]
    for p, label, q in a.transitions:
        if label is None:
            eps[p].append(q)
        else:
            moves[p][label].append(q)

    # states that cannot reach acceptance only split the sink into copies
    back: list[list[int]] = [[] for _ in range(a.state_count)]
    for p, _, q in a.transitions:
        back[q].append(p)
    live = _closure(a.accepts, back)

    start = _closure([a.start], eps) & live
    index = {start: 0}
    order = [start]
    delta: list[list[int]] = []
    i = 0
    while i < len(order):
        subset = order[i]
        row = []
        for letter in range(a.nletters):
            nxt = _closure((q for p in subset for q in moves[p][letter]), eps) & live
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        delta.append(row)
        i += 1
    accepts = frozenset(k for k, s in enumerate(order) if s & a.accepts)
    return DFA(a.r, 0, accepts, tuple(map(tuple, delta)))


def intersect(a: DFA, b: DFA) -> DFA:
    if a.r != b.r:
        raise AutomatonError(f"alphabet mismatch: r={a.r} vs r={b.r}")
    start = (a.start, b.start)
    index = {start: 0}
    order = [start]
    delta: list[tuple[int, ...]] = []
    i = 0
    while i < len(order):
        p, q = order[i]
        row = []
        for letter in range(a.nletters):
            nxt = (a.delta[p][letter], b.delta[q][letter])
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        delta.append(tuple(row))
        i += 1
    accepts = frozenset(
        k for k, (p, q) in enumerate(order) if p in a.accepts and q in b.accepts
    )
    return DFA(a.r, 0, accepts, tuple(delta))


def canonical(d: DFA) -> DFA:
    """Drop unreachable states and renumber breadth-first from the start."""
    index = {d.start: 0}
    order = [d.start]
    queue = deque([d.start])
    while queue:
        q = queue.popleft()
        for p in d.delta[q]:
            if p not in index:
                index[p] = len(order)
                order.append(p)
                queue.append(p)
    delta = tuple(tuple(index[p] for p in d.delta[q]) for q in order)
    accepts = frozenset(index[q] for q in d.accepts if q in index)
    return DFA(d.r, 0, accepts, delta)


def minimize(d: DFA) -> DFA:
    """Hopcroft partition refinement, then canonical numbering."""
    d = canonical(d)
    n, k = d.state_count, d.nletters
    inverse: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(k)]
    for q in range(n):
        for letter in range(k):
            inverse[letter][d.delta[q][letter]].append(q)

    acc = set(d.accepts)
    rej = set(range(n)) - acc
    partition = [blk for blk in (acc, rej) if blk]
    block_of = [0] * n
    for b, blk in enumerate(partition):
        for q in blk:
            block_of[q] = b
    work = deque((b, letter) for b in range(len(partition)) for letter in range(k))
    while work:
        b, letter = work.popleft()
        splitter = {p for q in partition[b] for p in inverse[letter][q]}
        touched: dict[int, set[int]] = {}
        for p in splitter:
            touched.setdefault(block_of[p], set()).add(p)
        for c, inside in touched.items():
            blk = partition[c]
            if len(inside) == len(blk):
                continue
            outside = blk - inside
            # keep the larger half in place, queue the smaller one
            small, large = (inside, outside) if len(inside) <= len(outside) else (outside, inside)
            partition[c] = large
            new = len(partition)
            partition.append(small)
            for q in small:
                block_of[q] = new
            for a in range(k):
                work.append((new, a))

    delta = tuple(
        tuple(block_of[d.delta[next(iter(blk))][a]] for a in range(k))
        for blk in partition
    )
    accepts = frozenset(b for b, blk in enumerate(partition) if blk & acc)
    return canonical(DFA(d.r, block_of[d.start], accepts, delta))


def accepts(d: DFA, w: Sequence[Letter]) -> bool:
    q = d.start
    for letter in w:
        q = d.delta[q][letter]
    return q in d.accepts


def transition_matrices(d: DFA) -> tuple[list[list[list[int]]], list[int], list[int]]:
    """Per-letter 0-1 matrices M[l][i][j] = [delta(j, l) == i], start and accept vectors.

    ``M[0]`` is the tau matrix, ``M[i]`` the xi_i matrix.
    """
    n = d.state_count
    mats = []
    for letter in range(d.nletters):
        m = [[0] * n for _ in range(n)]
        for j in range(n):
            m[d.delta[j][letter]][j] = 1
        mats.append(m)
    e1 = [int(q == d.start) for q in range(n)]
    u = [int(q in d.accepts) for q in range(n)]
    return mats, e1, u


def all_words(r: int) -> DFA:
    return DFA(r, 0, frozenset({0}), ((0,) * (r + 1),))


def no_words(r: int) -> DFA:
    return DFA(r, 0, frozenset(), ((0,) * (r + 1),))


def regex_dfa(re_: Regex, r: int, reduce: bool = True) -> DFA:
    d = determinize(thompson(re_, r))
    return minimize(d) if reduce else canonical(d)


def _dot_label(letters: Iterable[Optional[int]]) -> str:
    names = ["eps" if a is None else letter_name(a, tau="t") for a in letters]
    return ",".join(names)


def to_dot(a: DFA | NFA, name: str = "A") -> str:
    """Graphviz text, one edge per transition; accepting states double-circled."""
    if isinstance(a, DFA):
        n, start, acc = a.state_count, a.start, a.accepts
        edges = [(q, letter, p) for q in range(n) for letter, p in enumerate(a.delta[q])]
    else:
        n, start, acc = a.state_count, a.start, a.accepts
        edges = list(a.transitions)
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=none, label=""];']
    for q in range(n):
        shape = "doublecircle" if q in acc else "circle"
        lines.append(f'  {q} [shape={shape}, label="{q + 1}"];')
    lines.append(f"  __start -> {start};")
    for q, letter, p in edges:
        lines.append(f'  {q} -> {p} [label="{_dot_label([letter])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def paper_example_dfa() -> DFA:
    """The 3-state automaton for r=1 and the orbit ideal of x_{1,0}^2.

    State 0 is initial, state 2 accepting; tau loops at 0, returns 1 -> 0,
    and loops at 2; xi_1 advances 0 -> 1 -> 2 and loops at 2.
    """
    return DFA(1, 0, frozenset({2}), ((0, 1), (0, 2), (2, 2)))
