"""Command line: outputs, exit codes and report round-trips."""

import csv
import io
import json
import subprocess
import sys

import pytest

from cheatbot.cli import main
from cheatbot.cli.main import dumps
from cheatbot.graphcore import parse_edgelist


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def _isolated_cache(cache_dir):
    yield


def test_gen_cycle(tmp_path, capsys):
    f = tmp_path / "c7.edges"
    code, out, _ = run(capsys, "gen", "cycle", "7", "--out", str(f))
    assert code == 0
    g = parse_edgelist(f.read_text())
    assert g.n == 7 and g.m == 7
    assert "n=7" in out


def test_gen_ds_icosahedron(capsys):
    code, out, _ = run(capsys, "gen", "ds-icosahedron")
    assert code == 0
    assert parse_edgelist(out).n == 72


def test_gen_strong_product(capsys):
    code, out, _ = run(capsys, "gen", "product", "strong", "cycle:4", "path:3")
    assert code == 0 and parse_edgelist(out).n == 12


def test_gen_bad_params(capsys):
    code, _, err = run(capsys, "gen", "cycle", "2")
    assert code == 2 and "error" in err
    assert run(capsys, "gen", "cycle", "x")[0] == 2


def test_param_all_on_c5_file(tmp_path, capsys):
    f = tmp_path / "c5.edges"
    f.write_text("5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run(capsys, "--json", "param", str(f), "all")
    assert code == 0
    rep = json.loads(out)
    assert rep["parameters"] == {"c_cr": 2, "sigma": 2, "bodyguard": 2, "push_cr": 0}
    assert rep["graph"]["source"] == "file" and len(rep["graph"]["hash"]) > 0
    assert rep["schema_version"] == 1 and set(rep["wall_times"]) == set(rep["parameters"])


def test_param_k23_fixture(capsys):
    code, out, _ = run(capsys, "--json", "param", "fixture:k23", "ccr")
    assert code == 0 and json.loads(out)["parameters"]["c_cr"] == 2


def test_param_push_p5(capsys):
    code, out, _ = run(capsys, "--json", "param", "path:5", "push")
    assert code == 0 and json.loads(out)["parameters"]["push_cr"] == 1


def test_param_fixed_k(capsys):
    code, out, _ = run(capsys, "--json", "param", "cycle:6", "ccr", "--cops", "1")
    assert code == 0 and json.loads(out)["parameters"] == {"c_cr_le_1": False}


def test_report_round_trip(tmp_path, capsys):
    f = tmp_path / "r.json"
    assert run(capsys, "param", "fixture:petersen", "all", "--out", str(f))[0] == 0
    text = f.read_text()
    assert dumps(json.loads(text)) == text


def test_disconnected_is_an_input_error(tmp_path, capsys):
    f = tmp_path / "two.edges"
    f.write_text("4\n0 1\n2 3\n")
    assert run(capsys, "param", str(f), "ccr")[0] == 2


def test_malformed_file(tmp_path, capsys):
    f = tmp_path / "bad.edges"
    f.write_text("3\n0 1\n1 1\n")
    code, _, err = run(capsys, "param", str(f), "ccr")
    assert code == 2 and "line 3" in err


def test_unknown_graph(capsys):
    assert run(capsys, "param", "no-such-thing", "ccr")[0] == 2


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "--budget", "100", "--no-cache", "param", "fixture:petersen", "ccr", "--cops", "2")
    assert code == 3 and "estimated" in err


def test_trace_c6(capsys):
    code, out, _ = run(capsys, "trace", "cycle:6", "--cops", "2", "--start-cops", "0,1", "--robber", "3",
                       "--push-budget", "0")
    assert code == 0
    tr = json.loads(out)
    assert tr["outcome"] == "capture" and tr["distinct_pushers"] == 0


def test_trace_p7_and_dot(tmp_path, capsys):
    dot = tmp_path / "t.dot"
    code, out, _ = run(capsys, "trace", "path:7", "--cops", "1", "--dot", str(dot))
    assert code == 0 and json.loads(out)["distinct_pushers"] == 1
    text = dot.read_text()
    assert text.count("graph round") == len(json.loads(out)["rounds"]) + 1


def test_trace_illegal_start(capsys):
    assert run(capsys, "trace", "cycle:6", "--cops", "2", "--start-cops", "0,9", "--robber", "3")[0] == 2
    assert run(capsys, "trace", "cycle:6", "--cops", "2", "--start-cops", "0,1", "--robber", "1")[0] == 2


def test_bench_psi_cycles(capsys):
    code, out, _ = run(capsys, "bench", "cycle:4-10", "--cops", "1", "--path", "psi")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 7
    iters = [int(r["iterations"]) for r in rows]
    assert iters == sorted(iters)


def test_bench_marks_budget(capsys):
    code, out, _ = run(capsys, "--budget", "10", "bench", "fixture:petersen", "--cops", "2", "--path", "solver")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows[0]["note"] == "budget exceeded"


def test_verify_corpus_small(capsys):
    code, out, _ = run(capsys, "--no-cache", "verify", "corpus", "--max-n", "5")
    assert code == 0 and "all checks pass" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "--json", "--no-cache", "verify", "corpus", "--max-n", "4")
    data = json.loads(out)
    assert code == 0 and data["pass"] and data["schema_version"] == 1
    assert {c["criterion"] for c in data["checks"]} == {1, 7, 14, 15}


def test_console_script_version():
    out = subprocess.run([sys.executable, "-m", "cheatbot.cli.main", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and "cheatbot" in out.stdout
