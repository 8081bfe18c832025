import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def run(name, *args):
    return subprocess.run([sys.executable, str(SCRIPTS / name), *args], capture_output=True, text=True)


def test_theorem_script_passes(tmp_path):
    out = run("run_theorem3.py", "--report", str(tmp_path / "r.json"))
    assert out.returncode == 0, out.stderr
    assert "OVERALL: PASS" in out.stdout and "|V(G)| = 1177" in out.stdout
    assert (tmp_path / "r.json").read_text().startswith("{")


def test_random_script_writes_files(tmp_path):
    out = run("run_random_experiment.py", "--ns", "8", "--trials", "5", "--out", str(tmp_path))
    assert out.returncode == 0, out.stderr
    assert (tmp_path / "gnp_n8.csv").read_text().splitlines()[0].startswith("n,seed,chi")
