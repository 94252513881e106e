import subprocess
import sys

import pytest
from hypothesis import given

from signed_metric.cli import main
from signed_metric.errors import ParseError
from signed_metric.fixtures import FIXTURES
from signed_metric.io import format_graph, parse_graph, to_dot

from .conftest import signed_graphs

C4_ONE_NEG = "n 4\n0 1 -\n1 2 +\n2 3 +\n0 3 +\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text(C4_ONE_NEG)
    return str(p)


# -- file format --------------------------------------------------------------

def test_parse_comments_and_blank_lines():
    g = parse_graph("# a triangle\n\nn 3\n0 1 +  # first\n1 2 -\n\n0 2 +\n")
    assert g.n == 3 and g.sign(1, 2) == -1


@pytest.mark.parametrize(
    "text, line",
    [
        ("0 1 +\n", 1),
        ("n 3\n0 1 +\n1 2 x\n", 3),
        ("n 3\n0 1 +\n1 3 +\n", 3),
        ("n 3\n0 1 +\n1 1 +\n", 3),
        ("n 3\n\n0 1 +\n1 0 -\n1 2 +\n", 4),
        ("n 3\n0 1\n", 2),
        ("# only a comment\n", 1),
        ("n 4\n0 1 +\n2 3 +\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


@given(signed_graphs(max_n=9))
def test_round_trip(g):
    text = format_graph(g)
    assert parse_graph(text) == g
    assert format_graph(parse_graph(text)) == text


def test_fixture_text_round_trips():
    for fx in FIXTURES.values():
        assert parse_graph(fx.text()) == fx.graph


def test_dot_styles():
    dot = to_dot(FIXTURES["fig1_w9"].graph, (1, 3, 6, 8))
    assert dot.startswith("graph G {") and dot.count("style=dashed") == 5
    assert dot.count("fillcolor=black") == 4
    p3 = parse_graph("n 3\n0 1 +\n1 2 +\n")
    assert "dashed" not in to_dot(p3) and to_dot(p3).count("style=solid") == 2


# -- CLI ----------------------------------------------------------------------

def test_cli_dim_fig3(capsys):
    code, out, _ = run(capsys, "dim", "@fig3_tree", "--cap", "32")
    assert code == 0
    first = out.splitlines()[0]
    assert first.startswith("dim=2 ") and first.endswith("dim_underlying=7 mdd=5")
    assert sum(1 for line in out.splitlines() if line.startswith("r(")) == 21


def test_cli_dim_fig3_default_cap(capsys):
    code, _, err = run(capsys, "dim", "@fig3_tree")
    assert code == 4 and "cap" in err


def test_cli_dim_all_bases(capsys):
    code, out, _ = run(capsys, "dim", "@fig2_w9", "--all-bases")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("dim=3 ") and "mdd=1" in lines[0]
    k = int(next(line for line in lines if line.startswith("bases="))[6:])
    assert "{1,6,8}" in lines[-k:]


def test_cli_dim_incompatible(capsys, c4_file):
    code, out, _ = run(capsys, "dim", c4_file)
    assert code == 3 and "(0,2)" in out


def test_cli_compat(capsys, c4_file):
    code, out, _ = run(capsys, "compat", c4_file)
    assert code == 0 and out.strip() == "INCOMPATIBLE (0,2)"
    code, out, _ = run(capsys, "compat", "@fig2_w9")
    assert out.strip() == "COMPATIBLE"
    code, out, _ = run(capsys, "compat", "@fig3_tree")
    assert out.strip() == "COMPATIBLE"


def test_cli_compat_wheel_witness(capsys, tmp_path):
    p = tmp_path / "w5.txt"
    text = run(capsys, "gen", "wheel", "5", "--negatives", "0,2")[1]
    p.write_text(text)
    code, out, _ = run(capsys, "compat", str(p))
    assert out.startswith("INCOMPATIBLE (") and " C4-={0," in out


def test_cli_parse_error(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("n 3\n0 1 +\n1 2 ?\n")
    code, _, err = run(capsys, "dim", str(p))
    assert code == 2 and "line 3" in err
    code, _, _ = run(capsys, "compat", str(tmp_path / "missing.txt"))
    assert code == 2


def test_cli_gen(capsys):
    _, out, _ = run(capsys, "gen", "wheel", "9", "--preset", "fig1")
    assert parse_graph(out) == FIXTURES["fig1_w9"].graph
    _, out, _ = run(capsys, "gen", "path", "5", "--preset", "all_negative")
    g = parse_graph(out)
    assert g.n == 5 and g.signs == (-1,) * 4
    _, out, _ = run(capsys, "gen", "complete", "4", "--negatives", "0,1")
    g = parse_graph(out)
    assert g.m == 6 and [e for e, s in zip(g.edges, g.signs) if s < 0] == [(0, 1)]
    _, out, _ = run(capsys, "gen", "cycle", "4", "--signs=-+++")
    assert parse_graph(out) == parse_graph(C4_ONE_NEG)


def test_cli_gen_deterministic(capsys):
    a = run(capsys, "gen", "wheel", "7", "--preset", "random", "--seed", "3")[1]
    b = run(capsys, "gen", "wheel", "7", "--preset", "random", "--seed", "3")[1]
    assert a == b


@pytest.mark.parametrize(
    "argv",
    [
        ("gen", "wheel", "8", "--preset", "fig1"),
        ("gen", "cycle", "2"),
        ("gen", "path", "4", "--negatives", "0,2"),
        ("gen", "path", "4", "--signs", "+-"),
        ("gen", "blob", "4"),
    ],
)
def test_cli_gen_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_cli_dot(capsys):
    _, out, _ = run(capsys, "dot", "@fig1_w9", "--basis", "1,3,6,8")
    assert out.count("style=dashed") == 5 and out.count("fillcolor=black") == 4
    _, out, _ = run(capsys, "dot", "@fig3_tree", "--basis", "8,20")
    assert out.count("style=dashed") == 7 and out.count("fillcolor=black") == 2
    assert run(capsys, "dot", "@fig1_w9", "--basis", "1,30")[0] == 2


def test_cli_fixture(capsys):
    _, out, _ = run(capsys, "fixture", "fig2_w9")
    assert parse_graph(out) == FIXTURES["fig2_w9"].graph


def test_cli_verify_small(capsys):
    code, out, err = run(capsys, "verify", "T2.3", "--family", "cycle", "--n", "5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 32 and all(line.split("\t")[2] == "PASS" for line in lines)
    assert "32/32 PASS" in err


def test_cli_verify_bad_ids(capsys):
    assert run(capsys, "verify", "bogus")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "T2.3", "--max-n", "40")[0] == 2


def test_cli_verify_out_file(capsys, tmp_path):
    out = tmp_path / "r.tsv"
    code, stdout, _ = run(capsys, "verify", "T-path", "--max-n", "6", "--out", str(out))
    assert code == 0 and stdout == ""
    lines = out.read_text().splitlines()
    assert lines and all(line.split("\t")[2] == "PASS" for line in lines)


def test_cli_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "signed_metric", "dim"], capture_output=True)
    assert proc.returncode == 2


def test_cli_output_byte_identical():
    cmd = [sys.executable, "-m", "signed_metric", "verify", "T-star", "T3.5", "--max-n", "6", "--seed", "4"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout
