"""Command-line front end.

    inc-hilbert --rows 1 --gens "x[1,0]^2" --expand 3 4 --verify 4 6
"""
from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .automata import to_dot
from .hilbert import Problem, brute_counts, hilbert_series
from .lang import ideal_regex, render
from .monomial import Monomial, MonomialError, parse_monomial
from .polyrat import Exp, taylor, var_names


@dataclass
class CliConfig:
    rows: int
    gens: tuple[Monomial, ...]
    weights: Optional[tuple[tuple[int, ...], ...]] = None
    expand: Optional[tuple[int, int]] = None
    verify: Optional[tuple[int, int]] = None
    dot: Optional[str] = None
    latex: bool = False
    minimize: bool = True
    show_regex: bool = False

    @property
    def problem(self) -> Problem:
        return Problem(self.rows, self.gens, self.weights)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="inc-hilbert",
        description="Hilbert series H(s,t) of an Inc(N)-orbit monomial ideal in K[x_{i,j}].",
    )
    p.add_argument("--rows", type=int, default=1, help="number of rows r (default 1)")
    p.add_argument("--gens", default="", help='comma-separated monomials, e.g. "x[1,0]^2, x[2,1]"')
    p.add_argument("--weights", help='one t-degree vector per row, e.g. "1,0;0,1"')
    p.add_argument("--expand", nargs=2, type=int, metavar=("NMAX", "DMAX"),
                   help="print series coefficients up to s^NMAX and t-degree DMAX")
    p.add_argument("--verify", nargs=2, type=int, metavar=("NMAX", "DMAX"),
                   help="compare the series with brute-force monomial counts")
    p.add_argument("--dot", metavar="PATH", help="write the final DFA in Graphviz format")
    p.add_argument("--latex", action="store_true", help="print the series as LaTeX")
    p.add_argument("--no-minimize", action="store_true", help="skip DFA minimization")
    p.add_argument("--show-regex", action="store_true", help="print the ideal's regular expression")
    return p


def split_gens(text: str) -> list[str]:
    """Split at commas outside ``[...]``."""
    return re.split(r",(?![^\[]*\])", text)


def parse_args(argv: Optional[Sequence[str]] = None) -> CliConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.rows < 1:
        parser.error(f"--rows: must be >= 1, got {ns.rows}")
    gens = []
    for chunk in split_gens(ns.gens):
        if not chunk.strip():
            continue
        try:
            gens.append(parse_monomial(chunk, ns.rows))
        except MonomialError as exc:
            parser.error(f"--gens: {exc}")
    weights = None
    if ns.weights is not None:
        try:
            weights = tuple(
                tuple(int(x) for x in vec.split(",")) for vec in ns.weights.split(";")
            )
        except ValueError:
            parser.error(f"--weights: malformed vector list {ns.weights!r}")
        if len(weights) != ns.rows:
            parser.error(f"--weights: expected {ns.rows} vectors, got {len(weights)}")
        if len({len(v) for v in weights}) != 1:
            parser.error("--weights: vectors must all have the same length")
        for vec in weights:
            if any(x < 0 for x in vec):
                parser.error(f"--weights: negative entry in {vec}")
            if not any(vec):
                parser.error(f"--weights: zero weight vector {vec} makes the series ill-defined")
    for flag in ("expand", "verify"):
        bounds = getattr(ns, flag)
        if bounds is not None and min(bounds) < 0:
            parser.error(f"--{flag}: bounds must be nonnegative")
    return CliConfig(
        rows=ns.rows,
        gens=tuple(gens),
        weights=weights,
        expand=tuple(ns.expand) if ns.expand else None,
        verify=tuple(ns.verify) if ns.verify else None,
        dot=ns.dot,
        latex=ns.latex,
        minimize=not ns.no_minimize,
        show_regex=ns.show_regex,
    )


def format_table(table: dict[Exp, int], nvars: int) -> str:
    if nvars == 2:
        nmax = max(e[0] for e in table)
        dmax = max(e[1] for e in table)
        cells = [[str(table[(n, d)]) for d in range(dmax + 1)] for n in range(nmax + 1)]
        w = max(len(c) for row in cells for c in row)
        w = max(w, len(str(dmax)) + 2)
        lines = ["n\\d " + " ".join(f"t^{d}".rjust(w) for d in range(dmax + 1))]
        for n, row in enumerate(cells):
            lines.append(f"s^{n}".ljust(4) + " ".join(c.rjust(w) for c in row))
        return "\n".join(lines)
    names = var_names(nvars)
    lines = []
    for e in sorted(table, key=lambda e: (e[0], sum(e[1:]), e[1:])):
        mono = "*".join(f"{v}^{k}" for v, k in zip(names, e))
        lines.append(f"{mono}: {table[e]}")
    return "\n".join(lines)


def run(cfg: CliConfig, out=None) -> int:
    out = out or sys.stdout
    p = cfg.problem
    if cfg.show_regex:
        print(f"regex: {render(ideal_regex(list(p.gens)))}", file=out)
    res = hilbert_series(p, reduce=cfg.minimize)
    nvars = p.weight_assignment().nvars
    lhs = "H(" + ",".join(var_names(nvars)) + ")"
    body = res.series.latex() if cfg.latex else str(res.series)
    print(f"{lhs} = {body}", file=out)
    if cfg.dot:
        with open(cfg.dot, "w") as fh:
            fh.write(to_dot(res.dfa, name="ideal"))
        print(f"wrote {res.dfa_states}-state DFA to {cfg.dot}", file=out)
    if cfg.expand:
        print(format_table(taylor(res.series, *cfg.expand), nvars), file=out)
    status = 0
    if cfg.verify:
        nmax, dmax = cfg.verify
        ok = taylor(res.series, nmax, dmax) == brute_counts(p, nmax, dmax)
        print(f"verify (nmax={nmax}, dmax={dmax}): {'PASS' if ok else 'FAIL'}", file=out)
        status = 0 if ok else 1
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    cfg = parse_args(argv)
    try:
        return run(cfg)
    except (MonomialError, ValueError, ArithmeticError) as exc:
        print(f"inc-hilbert: {type(exc).__module__.rsplit('.', 1)[-1]}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
