import io
import json
import subprocess
import sys

import pytest

from oracles import brute, lhs_ok, rhs_ok
from restricted_compositions.cli import main


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "--n", "5", "--spec", "odd", "--mode", "brute"], "5\n"),
        (["count", "--n", "4", "--spec", "lhs:2:1", "--mode", "formula"], "1\n"),
        (["count", "--n", "0", "--spec", "cong:1:3"], "1\n"),
        (["count", "--n", "0", "--spec", "cong:1:3", "--mode", "formula"], "1\n"),
        (["count", "--n", "16", "--spec", "lhs:3:2", "--mode", "series"], "195\n"),
        (["count", "--n", "7", "--spec", "cong:1:3", "--mode", "series"], "6\n"),
        (["list", "--n", "4", "--spec", "odd"], "1,1,1,1\n1,3\n3,1\n"),
        (["list", "--n", "5", "--spec", "rhs:2:1"], "2,1,2\n"),
        (["list", "--n", "0", "--spec", "odd"], "\n"),
        (["list", "--n", "4", "--spec", "odd", "--json"], "[[1, 1, 1, 1], [1, 3], [3, 1]]\n"),
    ],
)
def test_count_and_list(argv, expected):
    assert run(argv) == (0, expected)


def test_count_all_modes_agree():
    code, out = run(["count", "--n", "12", "--spec", "lhs:3:1", "--mode", "all"])
    assert code == 0
    values = {line.split("\t")[0]: int(line.split("\t")[1]) for line in out.splitlines()}
    assert set(values) == {"brute", "formula", "series"} and len(set(values.values())) == 1


def test_count_all_modes_report_mismatch(monkeypatch, capsys):
    from restricted_compositions import cli

    monkeypatch.setitem(cli._MODES, "formula", lambda n, spec: -1)
    code, _ = run(["count", "--n", "6", "--spec", "cong:1:2", "--mode", "all"])
    assert code == 1
    assert "mode mismatch" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--n", "5", "--spec", "bogus"],
        ["count", "--n", "5", "--spec", "odd", "--mode", "formula"],
        ["count", "--n", "5", "--spec", "lhs:1:0", "--mode", "series"],
        ["count", "--n", "-1", "--spec", "odd"],
        ["count", "--spec", "odd"],
        ["list", "--n", "3", "--spec", "onecong:1:2:2"],
        ["map", "--bijection", "nope", "--k", "3"],
        ["map", "--bijection", "beck", "--k", "2", "--r", "1"],
        ["series", "--k", "1", "--m-max", "2"],
        ["series", "--k", "0"],
        ["verify", "--suite", "nope"],
        ["verify", "--n-max", "99"],
        [],
    ],
)
def test_usage_errors_exit_two(argv):
    assert run(argv)[0] == 2


def test_malformed_composition_is_usage_error():
    assert run(["map", "--bijection", "sills", "--k", "3"], "1,x")[0] == 2


@pytest.mark.parametrize(
    "argv, stdin, expected",
    [
        (["map", "--bijection", "sills", "--k", "3"], "1,7,1,4\n", "4,3,5,3\n"),
        (["map", "--bijection", "sills-inv", "--k", "3"], "4,3,5,3\n", "1,7,1,4\n"),
        (["map", "--bijection", "franklin-inv", "--k", "3"], "3,1,4,4,2,4\n", "5,4,6,1\n"),
        (["map", "--bijection", "franklin", "--k", "3"], "5,4,6,1\n", "3,1,4,4,2,4\n"),
        (["map", "--bijection", "franklin-raw", "--k", "3"], "4,3,4\n", "3,3,4,3\n"),
        (["map", "--bijection", "glaisher", "--k", "3"], "7\n", "3,3\n"),
        (["map", "--bijection", "glaisher", "--k", "3"], "1\n", "\n"),
        (["map", "--bijection", "glaisher-inv", "--k", "3"], "\n", "1\n"),
        (["map", "--bijection", "beck", "--k", "4", "--r", "1", "--s", "2", "--idx", "2"], "5,1\n", "5,3\n"),
        (["map", "--bijection", "beck-inv", "--k", "4", "--r", "1", "--s", "2"], "5,3\n", "5,1\n2\n"),
        (["map", "--bijection", "beck-inv", "--k", "2", "--r", "1", "--s", "1", "--json"], "4,1",
         '{"composition": [3, 1], "index": 1}\n'),
    ],
)
def test_map_examples(argv, stdin, expected):
    assert run(argv, stdin) == (0, expected)


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["map", "--bijection", "sills", "--k", "3"], "1,2\n"),
        (["map", "--bijection", "franklin", "--k", "3"], "2\n"),
        (["map", "--bijection", "franklin-inv", "--k", "3"], "1,4\n"),
        (["map", "--bijection", "sills", "--k", "3"], "\n"),
        (["map", "--bijection", "beck", "--k", "2", "--r", "1", "--s", "1", "--idx", "3"], "1\n"),
    ],
)
def test_map_precondition_failures_exit_one(argv, stdin, capsys):
    assert run(argv, stdin)[0] == 1
    assert capsys.readouterr().err.startswith("rcomp: ")


def pipe(forward, inverse, text):
    code, mid = run(forward, text + "\n")
    assert code == 0, text
    code, back = run(inverse, mid)
    assert code == 0, text
    return back.rstrip("\n")


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_pipe_identity_sills(k):
    fwd = ["map", "--bijection", "sills", "--k", str(k)]
    inv = ["map", "--bijection", "sills-inv", "--k", str(k)]
    for n in range(1, 15):
        for c in brute(n, lambda c: all((p - 1) % k == 0 for p in c)):
            text = ",".join(map(str, c))
            assert pipe(fwd, inv, text) == text
        for c in brute(n, lambda c: all(p >= k for p in c)):
            text = ",".join(map(str, c))
            assert pipe(inv, fwd, text) == text


@pytest.mark.parametrize("k", [2, 3, 4])
def test_pipe_identity_franklin(k):
    fwd = ["map", "--bijection", "franklin", "--k", str(k)]
    inv = ["map", "--bijection", "franklin-inv", "--k", str(k)]
    for n in range(1, 15):
        for m in range(4):
            for c in brute(n, lambda c: lhs_ok(c, k, m)):
                text = ",".join(map(str, c))
                assert pipe(fwd, inv, text) == text
            for c in brute(n, lambda c: rhs_ok(c, k, m)):
                text = ",".join(map(str, c))
                assert pipe(inv, fwd, text) == text


@pytest.mark.parametrize("k", [2, 3, 4])
def test_pipe_identity_glaisher(k):
    fwd = ["map", "--bijection", "glaisher", "--k", str(k)]
    inv = ["map", "--bijection", "glaisher-inv", "--k", str(k)]
    for n in range(0, 15):
        for c in brute(n, lambda c: all((p - 1) % k == 0 for p in c)):
            if c:
                text = ",".join(map(str, c))
                assert pipe(fwd, inv, text) == text
        for c in brute(n, lambda c: set(c) <= {1, k}):
            text = ",".join(map(str, c))
            assert pipe(inv, fwd, text) == text


@pytest.mark.parametrize("k", [2, 3, 4])
def test_pipe_identity_beck(k):
    for r in range(1, k):
        for s in range(1, k - r + 1):
            common = ["--k", str(k), "--r", str(r), "--s", str(s)]
            for n in range(0, 15):
                for c in brute(n, lambda c: all((p - r) % k == 0 for p in c)):
                    text = ",".join(map(str, c))
                    for idx in range(1, len(c) + 1):
                        code, mid = run(["map", "--bijection", "beck", *common, "--idx", str(idx)], text)
                        assert code == 0
                        code, back = run(["map", "--bijection", "beck-inv", *common], mid)
                        assert (code, back) == (0, f"{text}\n{idx}\n")


def test_series_json_and_csv():
    code, out = run(["series", "--k", "2", "--n-max", "6", "--m-max", "1"])
    assert code == 0
    assert json.loads(out) == {"k": 2, "coeffs": [[1, 1, 1, 2, 3, 5, 8], [0, 0, 0, 0, 1, 2, 4]]}
    code, out = run(["series", "--k", "3", "--n-max", "4", "--m-max", "0", "--format", "csv"])
    assert (code, out) == (0, "m,0,1,2,3,4\n0,1,1,1,1,2\n")
    code, out = run(["series", "--k", "1", "--n-max", "4"])
    assert json.loads(out) == {"k": 1, "coeffs": [[1, 1, 2, 4, 8]]}


def test_series_defaults():
    data = json.loads(run(["series", "--k", "3"])[1])
    assert len(data["coeffs"]) == 9 and all(len(row) == 65 for row in data["coeffs"])


def test_verify_subcommand():
    code, out = run(["verify", "--suite", "lhs-vs-rhs", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and data["checks"][0]["name"] == "lhs-vs-rhs"
    code, out = run(["verify", "--suite", "examples"])
    assert code == 0 and out.startswith("PASS")


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "restricted_compositions", "count", "--n", "5", "--spec", "odd"],
        capture_output=True, text=True, check=False,
    )
    assert (proc.returncode, proc.stdout) == (0, "5\n")
