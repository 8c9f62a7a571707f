import io
import json

import pytest

from psep.cli import main
from psep.generators import cycle, path, spider
from psep.instance import format_instance, format_separator_witness


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        f = tmp_path / name
        f.write_text(text)
        return str(f)
    return write


P5_REPORT = """\
mode: linear
p: 1
k: 2
verdict: reduced
forced:
budget_used: 0
kernel_n: 5
kernel_m: 4
bound: 18
stats.components: 1
stats.stripped: 0
stats.step3: 0
stats.step45: 1
stats.crown_rounds: 0
stats.witness_repairs: 0
"""


def test_kernelize_golden(files):
    f = files("p5.txt", format_instance(path(5)))
    assert run("kernelize", f, "--p", "1", "--k", "2") == (0, P5_REPORT)


def test_kernelize_json(files):
    f = files("p5.txt", format_instance(path(5)))
    code, text = run("kernelize", f, "--p", "1", "--k", "2", "--format", "json")
    report = json.loads(text)
    assert code == 0 and report["kernel_n"] == 5 and report["bound"] == 18
    assert "wall_time" not in report


def test_timing_flag(files):
    f = files("p5.txt", format_instance(path(5)))
    code, text = run("kernelize", f, "--p", "1", "--timing")
    assert code == 0 and "wall_time: " in text


def test_kernelize_no_instance(files):
    f = files("c4.txt", format_instance(cycle(4)))
    code, text = run("kernelize", f, "--p", "1", "--k", "0")
    assert code == 1 and "verdict: no_instance" in text


def test_kernelize_edgeless(files, tmp_path):
    f = files("e.txt", "psep 3 0\nv a\nv b\nv c\n")
    out = tmp_path / "kernel.txt"
    code, text = run("kernelize", f, "--p", "1", "--out", str(out))
    assert code == 0 and "kernel_n: 0" in text
    assert out.read_text() == "psep 0 0\n"


def test_kernel_file_keeps_labels(files, tmp_path):
    f = files("s.txt", "psep 5 4\ne hub a\ne hub b\ne hub c\ne d a\n")
    out = tmp_path / "kernel.txt"
    code, text = run("kernelize", f, "--p", "1", "--mode", "quadratic", "--out", str(out))
    assert code == 0 and "forced: hub\n" in text
    assert out.read_text() == "psep 2 1\nv a\nv d\ne a d\n"


def test_emitted_crown_witness_verifies(files, tmp_path):
    f = files("sp.txt", format_instance(spider(10, 1)))
    wit = tmp_path / "w.txt"
    code, text = run("kernelize", f, "--p", "1", "--k", "1", "--emit-witness", str(wit))
    assert code == 0 and "forced: 0" in text
    assert run("verify", f, str(wit), "--p", "1") == (0, "crown: valid\n")


def test_solve_examples(files):
    star = files("k19.txt", format_instance(spider(9, 1)))
    code, text = run("solve", star, "--p", "1")
    assert code == 0 and "separator: 0\n" in text and "size: 1\n" in text
    p3 = files("p3.txt", format_instance(path(3)))
    assert "size: 1\n" in run("solve", p3, "--p", "1")[1]
    two = files("c4c4.txt", "psep 8 8\ne a b\ne b c\ne c d\ne d a\ne w x\ne x y\ne y z\ne z w\n")
    assert "size: 4\n" in run("solve", two, "--p", "1")[1]


def test_solve_budget(files, tmp_path):
    f = files("c4.txt", format_instance(cycle(4)))
    assert run("solve", f, "--p", "1", "--k", "1")[0] == 1
    out = tmp_path / "sep.txt"
    code, _ = run("solve", f, "--p", "1", "--k", "2", "--out", str(out))
    assert code == 0
    assert run("verify", f, str(out), "--p", "1")[0] == 0


def test_solve_capacity(files):
    f = files("c70.txt", format_instance(cycle(70)))
    assert run("solve", f, "--p", "1")[0] == 3


def test_verify_separator(files):
    p3 = files("p3.txt", format_instance(path(3)))
    good = files("good.txt", format_separator_witness({1}, ["0", "1", "2"]))
    assert run("verify", p3, good, "--p", "1") == (0, "separator: valid\n")
    c4 = files("c4.txt", format_instance(cycle(4)))
    empty = files("empty.txt", "witness separator\n")
    code, text = run("verify", c4, empty, "--p", "1")
    assert code == 1 and text.startswith("violation: ")


def test_verify_bad_crown(files):
    f = files("k13.txt", format_instance(spider(3, 1)))
    bad = files("w.txt", "witness crown\ni 1\nj 0\nj 2\nj 3\n")
    code, text = run("verify", f, bad, "--p", "1")
    assert code == 1
    assert text == "violation: edge between I-vertex 1 and J-vertex 0\ncrown: invalid\n"
    light = files("l.txt", "witness crown\ni 1\ni 2\ni 3\nc 0\nleaf 0 1\n")
    code, text = run("verify", f, light, "--p", "3")
    assert code == 1 and "star at 0 weighs 1 < p=3" in text


def test_gen(tmp_path):
    code, text = run("gen", "path", "--n", "5")
    assert code == 0 and "psep 5 4" in text
    assert run("gen", "spider", "--legs", "10", "--len", "4")[1].count("\nv ") == 41
    a = run("gen", "random", "--n", "20", "--m", "30", "--seed", "7")
    b = run("gen", "random", "--n", "20", "--m", "30", "--seed", "7")
    assert a == b and a[0] == 0


@pytest.mark.parametrize("argv", [
    ["gen", "random", "--n", "5", "--m", "3"],
    ["gen", "grid", "--rows", "2"],
    ["gen", "cycle", "--n", "2"],
    ["gen", "random", "--n", "3", "--m", "9", "--seed", "1"],
    ["gen", "path", "--n", "-1"],
    ["kernelize", "missing.txt", "--p", "1"],
    ["kernelize", "x.txt"],
    ["bogus"],
])
def test_input_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_bad_p(files, capsys):
    f = files("p5.txt", format_instance(path(5)))
    assert run("kernelize", f, "--p", "0")[0] == 2
    assert "p must be" in capsys.readouterr().err


def test_malformed_instance_reports_line(files, capsys):
    f = files("bad.txt", "psep 2 1\ne a\n")
    assert run("kernelize", f, "--p", "1")[0] == 2
    assert "line 2" in capsys.readouterr().err
