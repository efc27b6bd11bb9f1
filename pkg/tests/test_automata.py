import itertools
import random

import pytest

from conftest import all_words
from inc_hilbert.automata import (
    DFA, AutomatonError, accepts, all_words as all_words_dfa, canonical, determinize,
    intersect, minimize, no_words, paper_example_dfa, regex_dfa, thompson,
    to_dot, transition_matrices,
)
from inc_hilbert.lang import EMPTY, EPSILON, Lit, matches, pattern, standard, union
from inc_hilbert.monomial import TAU, Monomial, monomials

X1, X2 = 1, 2


def nfa_accepts(a, w):
    eps = {}
    moves = {}
    for p, label, q in a.transitions:
        (eps if label is None else moves).setdefault((p, label), []).append(q)

    def close(states):
        stack, seen = list(states), set(states)
        while stack:
            p = stack.pop()
            for q in eps.get((p, None), []):
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return seen

    cur = close({a.start})
    for letter in w:
        cur = close({q for p in cur for q in moves.get((p, letter), [])})
    return bool(cur & a.accepts)


def matvec(m, v):
    return [sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m))]


def path_value(d, w):
    mats, e1, u = transition_matrices(d)
    v = e1
    for letter in w:
        v = matvec(mats[letter], v)
    return sum(a * b for a, b in zip(u, v))


def distinguishable(d, p, q):
    """Brute force: some word of length < N separates p and q."""
    for w in all_words(d.r, d.state_count):
        a, b = p, q
        for letter in w:
            a, b = d.delta[a][letter], d.delta[b][letter]
        if (a in d.accepts) != (b in d.accepts):
            return True
    return False


def sample_regexes(r):
    gens = [g for deg in range(3) for g in monomials(r, 2, deg)]
    out = [EMPTY, EPSILON, Lit(X1), standard(r)] + [pattern(g) for g in gens]
    out.append(union(*(pattern(g) for g in gens[1:4])))
    return out


class TestThompson:
    def test_epsilon(self):
        a = thompson(EPSILON, 1)
        assert nfa_accepts(a, ())
        assert not nfa_accepts(a, (X1,))

    def test_lit(self):
        a = thompson(Lit(X1), 1)
        assert nfa_accepts(a, (X1,))
        assert not nfa_accepts(a, ())
        assert not nfa_accepts(a, (X1, X1))

    def test_pattern_x10_squared(self):
        a = thompson(pattern(Monomial.var(1, 1, 0, 2)), 1)
        assert nfa_accepts(a, (X1, X1))
        assert nfa_accepts(a, (TAU, X1, X1, TAU))
        assert not nfa_accepts(a, (X1, TAU, X1))

    def test_letter_out_of_range(self):
        with pytest.raises(AutomatonError):
            thompson(Lit(3), 2)


class TestDeterminize:
    def test_epsilon(self):
        d = determinize(thompson(EPSILON, 1))
        assert d.state_count == 2
        assert accepts(d, ())
        assert not accepts(d, (X1,))

    def test_empty(self):
        d = determinize(thompson(EMPTY, 1))
        assert d.state_count == 1
        assert not d.accepts

    def test_example_language(self):
        d = determinize(thompson(pattern(Monomial.var(1, 1, 0, 2)), 1))
        assert accepts(d, (X1, X1))
        assert accepts(d, (TAU, TAU, X1, X1, X1))
        assert not accepts(d, (X1, TAU, X1))


class TestIntersect:
    def test_identity_and_annihilator(self):
        x = regex_dfa(pattern(Monomial.var(2, 2, 1)), 2)
        same = intersect(x, all_words_dfa(2))
        none = intersect(x, no_words(2))
        for w in all_words(2, 6):
            assert accepts(same, w) == accepts(x, w)
            assert not accepts(none, w)

    def test_example_equals_three_state_automaton(self):
        d = intersect(regex_dfa(pattern(Monomial.var(1, 1, 0, 2)), 1), regex_dfa(standard(1), 1))
        ref = paper_example_dfa()
        for w in all_words(1, 8):
            assert accepts(d, w) == accepts(ref, w)

    def test_alphabet_mismatch(self):
        with pytest.raises(AutomatonError):
            intersect(all_words_dfa(1), all_words_dfa(2))


class TestMinimize:
    def test_idempotent(self):
        for re_ in sample_regexes(2):
            d = minimize(determinize(thompson(re_, 2)))
            assert minimize(d).state_count == d.state_count
            assert minimize(d) == d

    def test_example_has_three_states(self):
        d = minimize(intersect(determinize(thompson(pattern(Monomial.var(1, 1, 0, 2)), 1)),
                               determinize(thompson(standard(1), 1))))
        assert d.state_count == 3
        assert d == paper_example_dfa()

    def test_empty_language(self):
        assert minimize(determinize(thompson(EMPTY, 1))).state_count == 1

    @pytest.mark.parametrize("r", [1, 2])
    def test_no_equivalent_states(self, r):
        for re_ in sample_regexes(r):
            d = minimize(determinize(thompson(re_, r)))
            for p, q in itertools.combinations(range(d.state_count), 2):
                assert distinguishable(d, p, q)

    def test_canonical_numbering_is_bfs(self):
        d = DFA(1, 2, frozenset({0}), ((0, 0), (1, 1), (1, 0)))
        c = canonical(d)
        assert c.start == 0
        assert c.state_count == 3
        assert c.delta == ((1, 2), (1, 1), (2, 2))


class TestMatrices:
    def test_example_matrices(self):
        mats, e1, u = transition_matrices(paper_example_dfa())
        assert mats[TAU] == [[1, 1, 0], [0, 0, 0], [0, 0, 1]]
        assert mats[X1] == [[0, 0, 0], [1, 0, 0], [0, 1, 1]]
        assert e1 == [1, 0, 0]
        assert u == [0, 0, 1]

    def test_sink(self):
        mats, e1, u = transition_matrices(no_words(2))
        assert mats == [[[1]]] * 3
        assert u == [0]

    def test_example_accepts(self):
        d = paper_example_dfa()
        assert accepts(d, (X1, X1))
        assert not accepts(d, (X1, TAU, X1))
        assert accepts(d, ()) == (d.start in d.accepts)


class TestPipelineProperties:
    @pytest.mark.parametrize("r", [1, 2])
    def test_language_preserved(self, r):
        words = list(all_words(r, 6 if r == 1 else 5))
        std = determinize(thompson(standard(r), r))
        for re_ in sample_regexes(r):
            a = thompson(re_, r)
            d = determinize(a)
            prod = intersect(d, std)
            small = minimize(prod)
            for w in words:
                want = matches(re_, w)
                assert nfa_accepts(a, w) == want
                assert accepts(d, w) == want
                assert accepts(prod, w) == (want and accepts(std, w))
                assert accepts(small, w) == accepts(prod, w)

    @pytest.mark.parametrize("r", [1, 2])
    def test_left_stochastic(self, r):
        for re_ in sample_regexes(r):
            for d in (determinize(thompson(re_, r)), regex_dfa(re_, r)):
                mats, _, _ = transition_matrices(d)
                for m in mats:
                    assert all(sum(col) == 1 for col in zip(*m))

    @pytest.mark.parametrize("r", [1, 2])
    def test_matrix_path_identity(self, r):
        rng = random.Random(r)
        for re_ in sample_regexes(r)[:8]:
            d = regex_dfa(re_, r)
            for _ in range(200):
                w = tuple(rng.randrange(r + 1) for _ in range(rng.randint(0, 10)))
                assert path_value(d, w) == int(accepts(d, w))


def test_dot_dump():
    text = to_dot(paper_example_dfa())
    assert text.startswith("digraph")
    assert '2 [shape=doublecircle, label="3"];' in text
    assert '1 -> 0 [label="t"];' in text
    assert text.count("->") == 1 + 6
    nfa_text = to_dot(thompson(Lit(X1), 1))
    assert '[label="x1"]' in nfa_text


def test_dfa_validation():
    with pytest.raises(AutomatonError):
        DFA(1, 0, frozenset(), ((0,),))
    with pytest.raises(AutomatonError):
        DFA(1, 0, frozenset({3}), ((0, 0),))
