"""Reproduce the r=1, <x[1,0]^2> example: automaton, matrices, series, coefficients."""
from inc_hilbert.automata import to_dot, transition_matrices
from inc_hilbert.hilbert import Problem, brute_counts, hilbert_series
from inc_hilbert.lang import ideal_regex, render
from inc_hilbert.monomial import Monomial
from inc_hilbert.polyrat import MultiPoly, RationalFn, rat_eq, taylor


def main():
    gen = Monomial.var(1, 1, 0, 2)
    p = Problem(1, (gen,))
    print("generator:", gen)
    print("regex:    ", render(ideal_regex([gen])))
    res = hilbert_series(p)
    print(to_dot(res.dfa, name="example"))
    mats, e1, u = transition_matrices(res.dfa)
    print("M_tau =", mats[0])
    print("M_xi1 =", mats[1])
    print("e1 =", e1, " u =", u)
    print("H(s,t) =", res.series)

    s, t, one = MultiPoly.gen(2, 0), MultiPoly.gen(2, 1), MultiPoly.const(2, 1)
    closed = RationalFn(t * t, (one - s - t) * (one - s - s * t))
    print("equals t^2/((1-s-t)(1-s-st)):", rat_eq(res.series, closed))
    tab = taylor(res.series, 4, 6)
    print("series matches brute force (n<=4, d<=6):", tab == brute_counts(p, 4, 6))


if __name__ == "__main__":
    main()
