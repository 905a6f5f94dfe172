"""CLI contract: exit codes, RESULT lines, stdout/stderr separation."""

import subprocess
import sys

import pytest

from conftest import graph_with
from msgraph import cli
from msgraph.classify import Basis, HamiltonianClass, HamiltonianKind
from msgraph.core import ms_from_text, ms_identity, pair_index
from msgraph.gen import gen_constant, gen_planted_mixed
from msgraph.io import parse_graph, write_graph

T = ms_from_text


def run(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def result_line(out):
    return out.rstrip("\n").splitlines()[-1]


@pytest.fixture
def write(tmp_path):
    def _write(graph, name="g.msgraph"):
        path = tmp_path / name
        write_graph(graph, path)
        return str(path)

    return _write


@pytest.mark.parametrize(
    "graph, expected",
    [
        (gen_constant(5, 1, T("-")), "RESULT: ALL_SAME -"),
        (gen_constant(6, 1, T("-")), "RESULT: ALL_SAME +"),
        (graph_with(4, e01="-"), "RESULT: MIXED"),
    ],
)
def test_classify(graph, expected, write, capsys):
    code, out, err = run(["classify", write(graph)], capsys)
    assert code == 0
    assert result_line(out) == expected
    assert err == ""


def test_classify_reports_witnesses(write, capsys):
    _, out, _ = run(["classify", write(graph_with(4, e01="-"))], capsys)
    assert "witness triangle 0 1 2: -" in out
    assert "witness triangle 0 2 3: +" in out
    assert "balanced: no (certificate triangle 0 1 2)" in out


def test_classify_expect(write, capsys):
    path = write(gen_constant(5, 2, T("-+")))
    assert run(["classify", path, "--expect", "ALL_SAME -+"], capsys)[0] == 0
    assert run(["classify", path, "--expect", "MIXED"], capsys)[0] == 1


def test_classify_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.msgraph"
    path.write_text("msgraph 1\nn=3 m=1\n0 1 ++\n")
    code, out, err = run(["classify", str(path)], capsys)
    assert code == 2
    assert "line 3" in err
    assert result_line(out) == "RESULT: ERROR"


def test_missing_file(capsys):
    code, _, err = run(["classify", "/nonexistent/g.msgraph"], capsys)
    assert code == 2
    assert "cannot read" in err


def test_oracle(write, capsys):
    code, out, _ = run(["oracle", write(graph_with(4, e01="-"))], capsys)
    assert code == 0
    assert "  + 1\n  - 2\n" in out
    assert result_line(out) == "RESULT: 2 distinct"
    code, out, _ = run(["oracle", write(gen_constant(5, 1, T("+")))], capsys)
    assert result_line(out) == "RESULT: 1 distinct"


def test_oracle_cap(write, capsys):
    code, out, err = run(["oracle", write(gen_constant(14, 1, T("+")))], capsys)
    assert code == 2
    assert "cap" in err


def test_verify_planted_mixed(write, capsys):
    code, out, _ = run(["verify", write(gen_planted_mixed(7, 3, 5))], capsys)
    assert code == 0
    assert "theorem: MIXED" in out
    assert "oracle: MIXED" in out
    assert result_line(out) == "RESULT: PASS"


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_verify_generated(n, tmp_path, capsys):
    path = str(tmp_path / "g.msgraph")
    assert run(["gen", "--n", str(n), "--m", "2", "--seed", "3", "--p", "0.2", "--out", path], capsys)[0] == 0
    code, out, _ = run(["verify", path], capsys)
    assert code == 0
    assert result_line(out) == "RESULT: PASS"


def test_verify_detects_corrupted_classifier(write, capsys, monkeypatch):
    def corrupted(graph):
        return HamiltonianClass(HamiltonianKind.ALL_SAME, ms_identity(graph.m), Basis.THEOREM)

    monkeypatch.setattr(cli, "classify_hamiltonian", corrupted)
    code, out, _ = run(["verify", write(graph_with(4, e01="-"))], capsys)
    assert code == 1
    assert "theorem: ALL_SAME +" in out
    assert "oracle: MIXED" in out
    assert result_line(out) == "RESULT: FAIL"


def test_gen_constant_stdout(capsys):
    code, out, _ = run(["gen", "--n", "5", "--m", "1", "--model", "constant", "--sign", "-"], capsys)
    assert code == 0
    assert parse_graph(out) == gen_constant(5, 1, T("-"))


def test_gen_deterministic(tmp_path, capsys):
    args = ["gen", "--n", "6", "--m", "2", "--model", "random", "--seed", "9", "--p", "0.3"]
    run(args + ["--out", str(tmp_path / "a")], capsys)
    run(args + ["--out", str(tmp_path / "b")], capsys)
    assert (tmp_path / "a").read_bytes() == (tmp_path / "b").read_bytes()


@pytest.mark.parametrize(
    "args",
    [
        ["--n", "3", "--model", "planted-mixed"],
        ["--n", "5", "--model", "random", "--sign", "-"],
        ["--n", "5", "--model", "constant"],
        ["--n", "5", "--model", "constant", "--sign", "-", "--m", "2"],
        ["--n", "5", "--model", "constant", "--sign", "x"],
        ["--n", "5", "--model", "constant", "--sign", "-", "--seed", "1"],
        ["--n", "5", "--model", "planted-mixed", "--p", "0.5"],
        ["--n", "5", "--p", "1.5"],
        ["--n", "5", "--model", "bogus"],
    ],
)
def test_gen_usage_errors(args, capsys):
    code, out, err = run(["gen"] + args, capsys)
    assert code == 2
    assert err
    assert result_line(out) == "RESULT: ERROR"


@pytest.mark.parametrize("n, m, count", [(4, 1, 64), (5, 1, 1024)])
def test_exhaust(n, m, count, capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, err = run(["exhaust", "--n", str(n), "--m", str(m)], capsys)
    assert code == 0
    assert f"instances: {count}" in out
    assert "mismatches: 0" in out
    assert result_line(out) == "RESULT: PASS"
    assert "elapsed" in err and "elapsed" not in out
    assert list(tmp_path.iterdir()) == []


def test_exhaust_too_large(capsys):
    code, out, err = run(["exhaust", "--n", "6", "--m", "2"], capsys)
    assert code == 2
    assert str(2**30) in err


def test_exhaust_writes_counterexamples(capsys, tmp_path, monkeypatch):
    from msgraph import oracle

    def corrupted(graph):
        return HamiltonianClass(HamiltonianKind.MIXED, None, Basis.THEOREM)

    monkeypatch.setattr(oracle, "classify_hamiltonian", corrupted)
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(["exhaust", "--n", "4", "--m", "1"], capsys)
    assert code == 1
    assert result_line(out) == "RESULT: FAIL"
    files = sorted(tmp_path.glob("counterexample-n4-m1-*.msgraph"))
    assert files
    for f in files:
        g = parse_graph(f.read_text())
        assert len(oracle.enumerate_hamiltonian(g).distinct_multisigns) == 1


def test_props_minimal(capsys):
    code, out, _ = run(["props", "--trials", "1"], capsys)
    assert code == 0
    assert out.count(": PASS (1 trials, 0 failures)") == 4
    assert result_line(out) == "RESULT: PASS"


def test_props_detects_mutation(capsys, monkeypatch):
    """A graph whose edge flips mid-suite must break the hourglass suite."""
    from msgraph import props
    from msgraph.core import MultisignedCompleteGraph

    real = props.hourglass_condition
    calls = {"n": 0}

    def mutated(graph, cycle, i, j):
        calls["n"] += 1
        if calls["n"] > 20:
            a, b = cycle[i], cycle[(i + 1) % len(cycle)]
            k = pair_index(graph.n, a, b)
            edges = list(graph.edges)
            edges[k] ^= 1
            graph = MultisignedCompleteGraph(graph.n, graph.m, tuple(edges))
        return real(graph, cycle, i, j)

    monkeypatch.setattr(props, "hourglass_condition", mutated)
    code, out, err = run(["props", "--trials", "200", "--seed", "1"], capsys)
    assert code == 1
    assert out.startswith("hourglass: FAIL")
    assert "fan-decomposition: PASS" in out
    assert result_line(out) == "RESULT: FAIL"
    assert "first hourglass failure" in err


def test_props_usage(capsys):
    assert run(["props", "--trials", "0"], capsys)[0] == 2


def test_stdout_is_deterministic(write, capsys):
    path = write(gen_planted_mixed(6, 2, 3))
    for cmd in (["classify", path], ["oracle", path], ["verify", path], ["props", "--trials", "20"]):
        assert run(cmd, capsys)[:2] == run(cmd, capsys)[:2]


def test_module_entry_point_exit_codes(write, tmp_path):
    """Black-box run of ``python -m msgraph``."""
    good = write(gen_constant(5, 1, T("-")))
    bad = tmp_path / "bad.msgraph"
    bad.write_text("nope\n")
    exe = [sys.executable, "-m", "msgraph"]
    r = subprocess.run(exe + ["classify", good], capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.splitlines()[-1] == "RESULT: ALL_SAME -"
    r = subprocess.run(exe + ["classify", str(bad)], capture_output=True, text=True)
    assert r.returncode == 2
    assert "line 1" in r.stderr
    r = subprocess.run(exe + ["frobnicate"], capture_output=True, text=True)
    assert r.returncode == 2
    assert r.stdout.splitlines()[-1] == "RESULT: ERROR"
