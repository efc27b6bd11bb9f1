import io
import subprocess
import sys

import pytest

from inc_hilbert.cli import main, parse_args, run, split_gens
from inc_hilbert.monomial import Monomial
from inc_hilbert.polyrat import MultiPoly, RationalFn, rat_eq

S = MultiPoly.gen(2, 0)
T = MultiPoly.gen(2, 1)
ONE = MultiPoly.const(2, 1)


def output(argv):
    buf = io.StringIO()
    status = run(parse_args(argv), out=buf)
    return status, buf.getvalue()


def series_line(text, nvars=2):
    line = next(l for l in text.splitlines() if l.startswith("H("))
    return RationalFn.parse(line.split("=", 1)[1], nvars)


class TestParseArgs:
    def test_example(self):
        cfg = parse_args(["--rows", "1", "--gens", "x[1,0]^2"])
        assert cfg.rows == 1
        assert cfg.gens == (Monomial.var(1, 1, 0, 2),)
        assert cfg.minimize and not cfg.latex

    def test_two_generators(self):
        cfg = parse_args(["--rows", "2", "--gens", "x[1,0]*x[2,1], x[2,0]^3"])
        assert cfg.gens == (
            Monomial.from_dict(2, {(1, 0): 1, (2, 1): 1}),
            Monomial.var(2, 2, 0, 3),
        )

    def test_split(self):
        assert split_gens("x[1,0], x[2,3]*x[1,1]") == ["x[1,0]", " x[2,3]*x[1,1]"]

    def test_weights_and_bounds(self):
        cfg = parse_args(["--rows", "2", "--weights", "1,0;0,1", "--expand", "2", "3",
                          "--verify", "1", "1", "--no-minimize", "--latex"])
        assert cfg.weights == ((1, 0), (0, 1))
        assert cfg.expand == (2, 3) and cfg.verify == (1, 1)
        assert not cfg.minimize and cfg.latex

    @pytest.mark.parametrize("argv,needle", [
        (["--rows", "1", "--gens", "x[2,0]"], "row index 2 exceeds r=1"),
        (["--gens", "x[1,0"], "--gens: malformed factor"),
        (["--rows", "2", "--weights", "1;0"], "zero weight vector"),
        (["--rows", "2", "--weights", "1,0"], "expected 2 vectors"),
        (["--rows", "2", "--weights", "1;1,1"], "same length"),
        (["--rows", "2", "--weights", "a;b"], "malformed vector"),
        (["--rows", "0"], "--rows"),
        (["--bogus"], "unrecognized arguments"),
        (["--expand", "-1", "2"], "--expand"),
    ])
    def test_errors(self, argv, needle, capsys):
        with pytest.raises(SystemExit) as exc:
            parse_args(argv)
        assert exc.value.code == 2
        assert needle in capsys.readouterr().err


class TestRun:
    def test_worked_example_with_verify(self):
        status, text = output(["--rows", "1", "--gens", "x[1,0]^2", "--verify", "4", "6"])
        assert status == 0
        assert rat_eq(series_line(text), RationalFn(T * T, (ONE - S - T) * (ONE - S - S * T)))
        assert "verify (nmax=4, dmax=6): PASS" in text

    def test_empty(self):
        status, text = output(["--gens", ""])
        assert status == 0
        assert text.strip() == "H(s,t) = 0"

    def test_whole_ring(self):
        _, text = output(["--rows", "1", "--gens", "1"])
        assert rat_eq(series_line(text), RationalFn(ONE, ONE - S - T))

    def test_expand_table(self):
        _, text = output(["--gens", "x[1,0]^2", "--expand", "1", "3"])
        lines = text.splitlines()
        assert lines[-2].split() == ["s^0", "0", "0", "1", "1"]
        assert lines[-1].split() == ["s^1", "0", "0", "2", "4"]

    def test_multigraded(self):
        status, text = output(["--rows", "2", "--gens", "x[1,0]*x[2,0]", "--weights", "1,0;0,1",
                               "--expand", "1", "2", "--verify", "2", "3"])
        assert status == 0
        assert text.startswith("H(s,t1,t2) = ")
        assert "s^1*t1^1*t2^1: 2" in text
        series_line(text, nvars=3)

    def test_latex(self):
        _, text = output(["--gens", "1", "--latex"])
        assert text.strip() == r"H(s,t) = \frac{1}{1-s-t}"

    def test_dot(self, tmp_path):
        path = tmp_path / "a.dot"
        _, text = output(["--gens", "x[1,0]^2", "--dot", str(path)])
        assert "3-state DFA" in text
        dot = path.read_text()
        assert dot.count("doublecircle") == 1 and "digraph" in dot

    def test_show_regex(self):
        _, text = output(["--gens", "x[1,0]^2", "--show-regex"])
        assert "regex: (@|x1)* x1 x1 x1* (@|x1)*" in text

    @pytest.mark.parametrize("argv", [
        ["--rows", "2", "--gens", "x[1,0]*x[2,1], x[2,0]^2"],
        ["--rows", "2", "--gens", "x[1,1]^2", "--weights", "1,1;0,2"],
    ])
    def test_printed_polynomials_reparse(self, argv):
        cfg = parse_args(argv)
        _, text = output(argv)
        nvars = cfg.problem.weight_assignment().nvars
        body = text.splitlines()[0].split("=", 1)[1].strip()
        num_s, den_s = body[1:-1].split(")/(")
        f = series_line(text, nvars)
        assert MultiPoly.parse(num_s, nvars) == f.num
        assert MultiPoly.parse(den_s, nvars) == f.den
        assert str(MultiPoly.parse(num_s, nvars)) == num_s

    def test_deterministic(self):
        argv = ["--rows", "2", "--gens", "x[1,1]*x[2,2], x[2,0]^2", "--expand", "2", "2"]
        assert output(argv) == output(argv)

    def test_main_entry(self, capsys):
        assert main(["--gens", "x[1,0]"]) == 0
        assert capsys.readouterr().out.startswith("H(s,t) = ")


def test_module_invocation_is_byte_identical():
    cmd = [sys.executable, "-m", "inc_hilbert", "--rows", "2", "--gens", "x[1,0]*x[2,1]", "--verify", "2", "3"]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    assert a.stdout == b.stdout
    assert b"PASS" in a.stdout


def test_verify_failure_exit_status(monkeypatch):
    import inc_hilbert.cli as cli

    def wrong(p, nmax, dmax):
        return {}

    monkeypatch.setattr(cli, "brute_counts", wrong)
    status, text = output(["--gens", "x[1,0]", "--verify", "1", "1"])
    assert status == 1
    assert "FAIL" in text
