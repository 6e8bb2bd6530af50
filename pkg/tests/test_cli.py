import json

import pytest

from powerlambda.cli import main
from powerlambda.groups import build_group
from powerlambda.powergraph import build_power_graph, punctured_complement, read_edges


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info_a5(capsys):
    code, out, _ = run(capsys, "info", "A5")
    assert code == 0
    assert "order: 60" in out
    assert "spectrum: (2, 3, 5)" in out
    assert "classes: (15, 10, 6)" in out


def test_info_c5(capsys):
    code, out, _ = run(capsys, "info", "C5")
    assert code == 0 and "order: 5" in out and "spectrum: (5)" in out and "classes: (1)" in out


def test_info_parse_error(capsys):
    code, out, err = run(capsys, "info", "Z5")
    assert code != 0 and out == "" and "usage:" in err


def test_lambda_outputs(capsys):
    assert run(capsys, "lambda", "A5")[:2] == (0, "lambda = 60 (constructive, verified)\n")
    assert run(capsys, "lambda", "C5")[:2] == (0, "lambda = 8 (closed-form)\n")
    code, out, _ = run(capsys, "lambda", "C6", "--exact")
    assert code == 0 and "exact-search" in out
    assert int(out.split()[2]) > 6


def test_lambda_bounds_exit_code(capsys, tmp_path):
    target = tmp_path / "q.json"
    code, out, err = run(capsys, "lambda", "Q8", "--json", str(target))
    assert code == 2 and "bounds only" in out and not target.exists()
    code, out, _ = run(capsys, "lambda", "C7", "--exact", "--max-span", "9")
    assert code == 2 and out.startswith("10 <= lambda")


def test_lambda_json(capsys, tmp_path):
    target = tmp_path / "a5.json"
    code, _, _ = run(capsys, "lambda", "A5", "--json", str(target))
    doc = json.loads(target.read_text())
    assert code == 0 and doc["span"] == 60 and doc["verified"] and len(doc["labels"]) == 60


def test_check_suites(capsys):
    code, out, _ = run(capsys, "check", "lemma21")
    assert code == 0 and out.startswith("PASS lemma21")
    code, out, _ = run(capsys, "check", "thm11")
    assert code == 0 and "PASS thm11: 8 checks" in out


def test_graph_edges_round_trip(capsys):
    code, out, _ = run(capsys, "graph", "D4", "--format", "edges")
    G = build_group("D4")
    assert code == 0
    assert read_edges(out, G.order).rows == build_power_graph(G).rows


def test_graph_complement_dot(capsys, tmp_path):
    target = tmp_path / "g.dot"
    run(capsys, "graph", "C6", "--complement", "-o", str(target))
    text = target.read_text()
    assert text.startswith("graph G {") and "v0 " not in text
    pg = build_power_graph(build_group("C6"))
    assert text.count("--") == len(punctured_complement(pg).edges())


def test_hamiltonian_text_and_json(capsys):
    code, out, err = run(capsys, "hamiltonian", "PSL2_7", "--trace")
    assert code == 0 and len(out.splitlines()) == 167 and "junction" in err
    code, out, _ = run(capsys, "hamiltonian", "A5", "--oracle", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 59


def test_hamiltonian_failures(capsys):
    code, _, err = run(capsys, "hamiltonian", "C6")
    assert code == 1 and "single cyclic class" in err
    code, _, err = run(capsys, "hamiltonian", "C6", "--oracle")
    assert code == 1 and "exhausted" in err


def test_label(capsys):
    code, out, _ = run(capsys, "label", "E2_2")
    assert code == 0 and out.strip().endswith("span = 4, verified = True")


def test_classes(capsys):
    code, out, _ = run(capsys, "classes", "A5")
    assert code == 0 and len(out.splitlines()) == 31


def test_cli_is_byte_deterministic(capsys):
    first = run(capsys, "hamiltonian", "S5")[1]
    second = run(capsys, "hamiltonian", "S5")[1]
    assert first == second
