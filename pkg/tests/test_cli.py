import io
import json
import subprocess
import sys

import pytest

from cubicdecomp.cli import main, parse_graph
from cubicdecomp.generators import k4, prism


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_pipeline_necklace_7():
    cmd = [sys.executable, "-m", "cubicdecomp"]
    gen = subprocess.run(cmd + ["gen", "--family", "necklace", "--k", "7"], capture_output=True, text=True, check=True)
    dec = subprocess.run(cmd + ["decompose"], input=gen.stdout, capture_output=True, text=True, check=True)
    ver = subprocess.run(cmd + ["verify"], input=dec.stdout, capture_output=True, text=True)
    assert ver.returncode == 0
    assert json.loads(ver.stdout)["pass"] is True


def test_oracle_c5_strict(monkeypatch, capsys):
    text = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"
    code, out, err = run(["oracle", "--strict-oracle"], text, monkeypatch, capsys)
    assert code == 1
    assert json.loads(out)["outcome"] == "None"
    assert err


def test_oracle_found(monkeypatch, capsys):
    code, out, _ = run(["oracle"], "C~\n", monkeypatch, capsys)
    assert code == 0
    assert json.loads(out)["outcome"] == "Found"


def test_decompose_refuses_claw(monkeypatch, capsys):
    k33 = "6 9\n" + "".join(f"{u} {v}\n" for u in range(3) for v in range(3, 6))
    code, out, err = run(["decompose"], k33, monkeypatch, capsys)
    assert code == 1 and out == ""
    refusal = json.loads(err)
    assert refusal == {"refusal": "claw", "witness": {"center": 0, "leaves": [3, 4, 5]}}


def test_decompose_dot_and_trace(monkeypatch, capsys):
    code, out, err = run(["decompose", "-f", "dot", "--trace"], "K{CY?SBG?G_F\n", monkeypatch, capsys)
    assert code == 0
    assert out.startswith("graph G {") and "style=bold" in out
    assert err.splitlines()[0].startswith("Step")


def test_decompose_edgelist_output(monkeypatch, capsys):
    code, out, _ = run(["decompose", "-f", "edgelist"], "C~\n", monkeypatch, capsys)
    assert code == 0
    assert out.splitlines()[0] == "0 1 T"


def test_verify_failing_certificate(monkeypatch, capsys):
    bad = {"n": 4, "edges": [list(e) for e in k4().edges()], "labels": ["T", "T", "T", "M", "M", "O"]}
    code, out, _ = run(["verify"], json.dumps(bad), monkeypatch, capsys)
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_usage_errors(monkeypatch, capsys):
    assert run(["gen", "--family", "prism", "-f", "dot"], "", monkeypatch, capsys)[0] == 2
    assert run(["gen"], "", monkeypatch, capsys)[0] == 2
    assert run(["verify"], "not json", monkeypatch, capsys)[0] == 2
    assert run(["decompose", "/nonexistent/file"], "", monkeypatch, capsys)[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_gen_edgelist_feeds_decompose(monkeypatch, capsys):
    code, out, _ = run(["gen", "--family", "double-bracelet", "--k", "2", "--j", "1", "-f", "edgelist"], "", monkeypatch, capsys)
    assert code == 0
    code, out, _ = run(["decompose"], out, monkeypatch, capsys)
    assert code == 0


def test_sweep_random_and_file(monkeypatch, capsys, tmp_path):
    code, out, err = run(["sweep", "--random", "4", "--n", "6", "--seed", "1"], "", monkeypatch, capsys)
    assert code == 0
    assert len(out.splitlines()) == 4
    assert "0 failures" in err
    path = tmp_path / "graphs.g6"
    path.write_text("C~\nE{Sw\n")
    code, out, _ = run(["sweep", str(path), "-f", "json"], "", monkeypatch, capsys)
    rows = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and [r["oracle"] for r in rows] == ["found", "found"]


def test_sweep_flags_non_claw_free(monkeypatch, capsys, tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text("EFz_\n")  # K3,3
    code, out, _ = run(["sweep", str(path)], "", monkeypatch, capsys)
    assert code == 1


def test_parse_graph_formats():
    assert parse_graph("C~") == k4()
    assert parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n") == k4()
    assert parse_graph("E{Sw", "graph6") == prism()
