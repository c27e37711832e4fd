import json

import pytest

from ramseykit.cli import main, parse_graph_argument


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_arrow_k6(capsys):
    doc = run_json(capsys, "arrow", "K6", "K3", "K3")
    assert doc["arrows"] is True
    assert doc["witness"] is None


def test_arrow_k5_witness(capsys):
    doc = run_json(capsys, "arrow", "K5", "K3", "K3")
    assert doc["arrows"] is False
    assert len(doc["witness"]) == 10
    assert {w["color"] for w in doc["witness"]} == {"red", "blue"}


def test_arrow_matchings(capsys):
    doc = run_json(capsys, "arrow", "3K2", "2K2", "2K2")
    assert doc["arrows"] is True


def test_unknown_is_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "arrow", "K6", "K3", "K3", "--budget", "3")
    assert code == 0
    assert json.loads(out)["verdict"] == "unknown"


def test_minimal_subcommand(capsys):
    assert run_json(capsys, "minimal", "K6", "K3", "K3")["is_minimal"] is True
    assert run_json(capsys, "minimal", "K7", "K3", "K3")["is_minimal"] is False
    assert run_json(capsys, "minimal", "K2", "K2", "K2")["is_minimal"] is True


def test_density_subcommand(capsys):
    doc = run_json(capsys, "density", "K4")
    assert doc["rho"] == "3/2"
    assert doc["m2"] == "5/2"
    doc = run_json(capsys, "density", "C5")
    assert doc["rho"] == "1"
    assert doc["m2"] == "4/3"
    doc = run_json(capsys, "density", "K3", "--pair", "K3")
    assert doc["m2_pair"] == "2"


def test_classify_subcommand(capsys):
    assert run_json(capsys, "classify", "S5+S2", "S3+122K2")["rule"] == "R7"
    assert run_json(capsys, "classify", "S3", "S3")["rule"] == "R5"
    doc = run_json(capsys, "classify", "P4", "P4")
    assert doc["verdict"] == "Infinite"
    assert doc["rule"] == "R4"
    assert doc["citations"]


def test_enumerate_subcommand(capsys):
    doc = run_json(capsys, "enumerate", "K2", "K2", "--max-v", "4", "--max-e", "4")
    assert [m["graph6"] for m in doc["members"]] == ["A_"]


def test_threshold_subcommand_and_determinism(capsys):
    args = ["threshold", "K3", "K3", "--n", "7", "--c", "0.3,2.0", "--samples", "20", "--seed", "7"]
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    lines = out1.strip().splitlines()
    assert lines[0] == "n,c,p,samples,hits,misses,unknowns,estimate,seed"
    assert len(lines) == 3


def test_threshold_rejects_acyclic(capsys):
    code, _, err = run_cli(capsys, "threshold", "P4", "K3", "--n", "7", "--c", "1")
    assert code == 1
    assert "cycle" in err


def test_usage_errors_exit_one(capsys):
    assert run_cli(capsys, "arrow", "zz!!", "K3", "K3")[0] == 1
    assert run_cli(capsys, "nonsense")[0] == 1
    assert run_cli(capsys, "arrow", "K6")[0] == 1


def test_graph6_and_expression_inputs_agree(capsys):
    # E~~w is canonical K6
    doc_a = run_json(capsys, "arrow", "E~~w", "K3", "K3")
    doc_b = run_json(capsys, "arrow", "K6", "K3", "K3")
    assert doc_a["arrows"] == doc_b["arrows"] is True


def test_file_input(tmp_path, capsys):
    path = tmp_path / "graph.g6"
    path.write_text("E~~w\n")
    doc = run_json(capsys, "arrow", str(path), "K3", "K3")
    assert doc["arrows"] is True


def test_parse_graph_argument_prefers_expressions():
    g = parse_graph_argument("C5")
    assert (g.n, g.edge_count) == (5, 5)


def test_text_format(capsys):
    code, out, _ = run_cli(capsys, "classify", "S3", "S3", "--format", "text")
    assert code == 0
    assert "verdict: Finite" in out
