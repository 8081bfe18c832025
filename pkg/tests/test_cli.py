import json
import subprocess
import sys

import pytest

from cochromatic.bounds import SearchReport, batch_check
from cochromatic.cli import main
from cochromatic.construction import VerificationReport, build_H
from cochromatic.graph import complete, cycle
from cochromatic.io import parse_dimacs, parse_graph6, write_dimacs, write_graph6
from cochromatic.solvers import chromatic_number
from conftest import DATA


@pytest.fixture
def files(tmp_path):
    c5 = tmp_path / "c5.dimacs"
    c5.write_text(write_dimacs(cycle(5)))
    k7 = tmp_path / "k7.g6"
    k7.write_bytes(write_graph6(complete(7)) + b"\n")
    bad = tmp_path / "bad.g6"
    bad.write_bytes(b"D?\n")
    return {"c5": str(c5), "k7": str(k7), "bad": str(bad), "dir": tmp_path}


def test_solve_chi_c5(files, capsys):
    assert main(["solve", "chi", files["c5"]]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_solve_zeta_k7(files, capsys):
    assert main(["solve", "zeta", files["k7"], "--witness"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "1" and out[1].startswith("witness: clique:")


def test_solve_malformed(files, capsys):
    assert main(["solve", "omega", files["bad"]]) == 3
    assert "offset" in capsys.readouterr().err


def test_solve_matches_module(files, capsys):
    h = build_H().graph
    path = files["dir"] / "h.g6"
    path.write_bytes(write_graph6(h))
    for inv, expected in [("chi", 6), ("omega", 4), ("alpha", 3), ("zeta", 3)]:
        assert main(["solve", inv, str(path)]) == 0
        assert capsys.readouterr().out.strip() == str(expected)


def test_usage_error():
    assert main(["solve", "nope"]) == 2


def test_construct_H_byte_stable(capsysbinary):
    main(["construct", "H", "--format", "graph6"])
    first = capsysbinary.readouterr().out
    main(["construct", "H", "--format", "graph6"])
    assert capsysbinary.readouterr().out == first
    assert parse_graph6(first.strip()) == build_H().graph


def test_construct_G_dimacs(files):
    out = files["dir"] / "g.dimacs"
    assert main(["construct", "G", "--format", "dimacs", "-o", str(out)]) == 0
    assert parse_dimacs(out.read_text()).n == 1177


def test_convert_round_trip(files, capsysbinary):
    assert main(["convert", files["c5"], "--to", "graph6"]) == 0
    assert parse_graph6(capsysbinary.readouterr().out.strip()) == cycle(5)


def test_verify_lemma_property3(files, capsys):
    report_path = files["dir"] / "p3.json"
    assert main(["verify", "lemma", "--property", "3", "--report-path", str(report_path)]) == 0
    report = VerificationReport.from_json(report_path.read_text())
    assert report.passed and report.checks[0].detail["colorings"] == 100


def test_verify_budget_exit_code():
    assert main(["verify", "lemma", "--property", "3", "--node-limit", "5"]) == 3


def test_verify_theorem3_report(files):
    report_path = files["dir"] / "t3.json"
    assert main(["verify", "theorem3", "--multiplicities", "1,2", "--report-path", str(report_path)]) == 0
    doc = json.loads(report_path.read_text())
    assert doc["schema"] == "cochromatic.verification/1" and doc["passed"]
    assert doc["values"]["chi_lower"] == 7 and doc["values"]["zeta_upper"] == 4


def test_verify_observation2():
    assert main(["verify", "observation2"]) == 0


def test_search_triangle_free(files):
    report_path = files["dir"] / "s.json"
    corpus = str(DATA / "triangle_free_le9.g6")
    assert main(["search", corpus, "--n", "3", "--f", "0", "--report-path", str(report_path)]) == 0
    report = SearchReport.from_json(report_path.read_text())
    direct = batch_check((DATA / "triangle_free_le9.g6").read_bytes().splitlines(), 3, 0)
    assert report == direct


def test_search_violation_exit_code(files):
    corpus = files["dir"] / "v.g6"
    from cochromatic.graph import join
    corpus.write_bytes(write_graph6(join(cycle(5), cycle(5))) + b"\n")
    vpath = files["dir"] / "viol.g6"
    assert main(["search", str(corpus), "--n", "5", "--f", "0", "--violations-path", str(vpath)]) == 1
    assert vpath.read_text().strip() == write_graph6(join(cycle(5), cycle(5))).decode()


def test_experiment_outputs(files):
    csv_path = files["dir"] / "e.csv"
    json_path = files["dir"] / "e.json"
    args = ["experiment", "--n", "12", "--trials", "5", "--seed", "3",
            "--csv-path", str(csv_path), "--json-path", str(json_path)]
    assert main(args) == 0
    first = csv_path.read_bytes(), json_path.read_bytes()
    assert main(args) == 0
    assert (csv_path.read_bytes(), json_path.read_bytes()) == first
    assert csv_path.read_text().splitlines()[0] == "n,seed,chi,zeta,chi_complement,excess,flagged"


def test_config_defaults_and_precedence(files, capsys):
    cfg = files["dir"] / "cfg.json"
    cfg.write_text(json.dumps({"experiment": {"n": 9, "trials": 2}}))
    assert main(["--config", str(cfg), "experiment"]) == 0
    assert "n=9 trials=2" in capsys.readouterr().out
    assert main(["--config", str(cfg), "experiment", "--n", "7"]) == 0
    assert "n=7 trials=2" in capsys.readouterr().out


def test_module_entry_point(files):
    out = subprocess.run([sys.executable, "-m", "cochromatic", "solve", "chi", files["c5"]],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "3"


def test_stdin_graph6_stream():
    data = (DATA / "k4_free_le8.g6").read_bytes()[:2000]
    data = data[: data.rfind(b"\n") + 1]
    out = subprocess.run([sys.executable, "-m", "cochromatic", "search", "--n", "4", "--f", "1"],
                         input=data, capture_output=True)
    assert out.returncode == 0, out.stdout
