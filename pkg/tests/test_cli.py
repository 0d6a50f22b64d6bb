import io
import json

import pytest

from src.cli import EXIT_COUNTEREXAMPLE, run
from src.core.families import classify
from src.core.graph_io import parse_graph6
from src.seed.base_catalog import H_TABLE


def test_check_k4():
    result = run(["check"], "C~\n")
    assert result.exit_code == 0
    assert result.stdout == "C~\tregular\tmain=1\n"


@pytest.mark.parametrize("stdin", [b"C~\n", io.StringIO("C~\n"), io.BytesIO(b"C~\n")])
def test_check_accepts_streams_and_bytes(stdin):
    assert run(["check"], stdin).stdout == "C~\tregular\tmain=1\n"


def test_check_json_with_float():
    result = run(["check", "--json", "--float"], "C~\n")
    records = json.loads(result.stdout)
    assert records[0]["graph6"] == "C~"
    assert records[0]["tricyclic"] is True
    assert records[0]["verdict"] == {"kind": "regular", "degree": 3}
    assert records[0]["main_eigenvalues"]["exact_count"] == 1
    assert records[0]["main_eigenvalues"]["float_count"] == 1
    assert records[0]["main_eigenvalues"]["main_values_float"] == pytest.approx([3.0])


def test_check_edge_list_file(tmp_path):
    path = tmp_path / "p5.txt"
    path.write_text("5 4\n0 1\n1 2\n2 3\n3 4\n")
    result = run(["check", str(path), "--float"])
    assert result.exit_code == 0
    assert result.stdout == "DhC\tnot-linear(v=2,expected=3,actual=4)\tmain=3\tfloat=3\n"


def test_generate_then_check():
    generated = run(["generate", "H", "7"])
    assert generated.exit_code == 0
    checked = run(["check"], generated.stdout)
    assert checked.stdout.split("\t")[1:] == ["linear(3,0)", "main=2\n"]


@pytest.mark.parametrize("index", sorted(H_TABLE))
def test_every_h_round_trips(index):
    entry = H_TABLE[index]
    checked = run(["check"], run(["generate", f"H{index}"]).stdout)
    assert f"\tlinear({entry.a},{entry.b})\tmain=2" in checked.stdout


@pytest.mark.parametrize("argv, expected", [
    (["generate", "G", "7", "2"], "linear(3,2)"),
    (["generate", "G2:1,0"], "linear(2,1)"),
    (["generate", "g", "1", "1"], "linear(2,2)"),
])
def test_generate_families(argv, expected):
    checked = run(["check"], run(argv).stdout)
    assert checked.stdout.split("\t")[1] == expected


def test_generate_base_and_edge_list():
    assert run(["generate", "T", "8", "2", "2", "2", "2", "2", "2"]).stdout == "C~\n"
    edge_list = run(["generate", "H", "7", "--format", "edgelist"]).stdout
    assert edge_list.splitlines()[0] == "12 14"


@pytest.mark.parametrize("argv", [
    ["generate", "T", "9"],
    ["generate", "G", "1", "0"],
    ["generate", "H", "31"],
    ["generate", "H"],
])
def test_generate_errors(argv):
    result = run(argv)
    assert result.exit_code == 1
    assert "Erreur" in result.stderr
    assert result.stdout == ""


def test_classify():
    result = run(["classify"], run(["generate", "H", "13"]).stdout + "C~\n")
    assert result.stdout.splitlines()[0].endswith("\tH13")
    assert result.stdout.splitlines()[1] == "C~\tnone"
    records = json.loads(run(["classify", "--json"], "C~\n").stdout)
    assert records == [{"graph6": "C~", "family": None}]


def test_enumerate():
    result = run(["enumerate", "5"])
    assert result.exit_code == 0
    assert len(result.stdout.splitlines()) == 4
    assert run(["enumerate", "5", "--strategy", "naive"]).stdout == result.stdout
    assert run(["enumerate", "9", "--strategy", "naive"]).exit_code == 1


def test_verify_json_report(tmp_path):
    dump = tmp_path / "positives.g6"
    result = run(["verify", "--max-order", "6", "--json", "--no-float", "--dump-positives", str(dump)])
    assert result.exit_code == 0
    reports = json.loads(result.stdout)
    assert [report["order"] for report in reports] == [1, 2, 3, 4, 5, 6]
    assert all(report["counterexamples"] == [] for report in reports)
    assert all(report["hagos_failures"] == [] for report in reports)
    assert reports[5]["total"] == 22
    positives = dump.read_text().splitlines()
    assert len(positives) == sum(report["positives"] for report in reports) == 4
    assert all(classify(parse_graph6(line)) is not None for line in positives)


@pytest.mark.slow
def test_verify_order_eight_succeeds_with_known_omission():
    result = run(["verify", "--max-order", "8", "--json"])
    assert result.exit_code == 0
    reports = json.loads(result.stdout)
    assert reports[7]["known_omissions"] == ["G@`@W{"]
    assert all(report["counterexamples"] == [] for report in reports)
    assert "hors des tables" in result.stderr


def test_verify_table():
    result = run(["verify", "--max-order", "5", "--no-float", "--quiet"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].split()[0] == "n"
    assert lines[-1].split()[:3] == ["5", "4", "1"]


def test_verify_requires_allow_long():
    result = run(["verify", "--max-order", "9"])
    assert result.exit_code == 1
    assert "--allow-long" in result.stderr


def test_usage_errors():
    unknown = run(["frobnicate"])
    assert unknown.exit_code == 1
    assert "usage" in unknown.stderr
    assert run(["check", "--bogus"]).exit_code == 1
    assert run([]).exit_code == 1


def test_help():
    result = run(["--help"])
    assert result.exit_code == 0
    assert "verify" in result.stdout


def test_malformed_input_exits_one():
    result = run(["check"], "C\n")
    assert result.exit_code == 1
    assert "graph6" in result.stderr


def test_missing_file_exits_one(tmp_path):
    assert run(["check", str(tmp_path / "absent.g6")]).exit_code == 1


def test_output_is_deterministic():
    first = run(["enumerate", "6", "--threads", "3"]).stdout
    assert run(["enumerate", "6"]).stdout == first


def test_exit_code_constants():
    assert EXIT_COUNTEREXAMPLE == 2
