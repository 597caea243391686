import json
import subprocess
import sys

import pytest

from stablerep.cli import main
from stablerep.stable_ring import height_position_tables, parse_tables


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decompose_rectangular(capsys):
    code, out, _ = run(capsys, "decompose", "--p", "7", "--nu", "2,2,2", "--l", "3")
    assert code == 0
    assert "stably-irreducible: yes" in out and "case: rectangular" in out


def test_decompose_projective(capsys):
    code, out, _ = run(capsys, "decompose", "--p", "7", "--nu", "6", "--l", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["projective"] and data["decomposition"]["terms"] == []


def test_decompose_identity(capsys):
    code, out, _ = run(capsys, "decompose", "--p", "5", "--nu", "1", "--l", "2")
    assert code == 0 and "decomposition: Sym^2 E" in out


def test_decompose_with_oracle(capsys):
    code, out, _ = run(capsys, "decompose", "--p", "7", "--nu", "2,1", "--l", "3", "--omega", "1", "--oracle")
    assert code == 0 and out.rstrip().endswith("AGREE")
    code, out, _ = run(capsys, "decompose", "--p", "5", "--nu", "2", "--l", "2", "--oracle", "--format", "json")
    data = json.loads(out)
    assert data["oracle"]["agree"] and set(data["oracle"]["kn"]) == {"summands", "projective_part"}


@pytest.mark.parametrize(
    "argv",
    [
        ("decompose", "--p", "9", "--nu", "1", "--l", "1"),
        ("decompose", "--p", "7", "--nu", "1,2", "--l", "1"),
        ("decompose", "--p", "7", "--nu", "1", "--l", "6"),
        ("decompose", "--p", "7", "--nu", "4,3", "--l", "1"),
        ("decompose", "--p", "17", "--nu", "1", "--l", "1", "--oracle"),
        ("tensor", "--p", "7", "--a", "2", "--b", "1,1"),
        ("verify", "--p-list", "4"),
        ("verify", "--theorems", "9.9"),
        ("tables", "--p", "101"),
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "--p", "7"])
    assert exc.value.code == 2


def test_tensor(capsys):
    code, out, _ = run(capsys, "tensor", "--p", "7", "--a", "2,2", "--b", "3,1")
    assert code == 0 and out.strip().endswith("= Ω^3 E + Ω^3(Sym^3 E) + Ω^3(Sym^5 E)")
    code, out, _ = run(capsys, "tensor", "--p", "7", "--a", "0,0", "--b", "4,3", "--format", "json")
    assert json.loads(out)["terms"] == [{"l": 4, "m": 3, "mult": 1}]


def test_tables_round_trip(capsys):
    code, out, _ = run(capsys, "tables", "--p", "7")
    assert code == 0
    assert parse_tables(out) == height_position_tables(7)
    code, out, _ = run(capsys, "tables", "--p", "7", "--format", "json")
    assert json.loads(out) == height_position_tables(7).to_json()


def test_classify_and_scan(capsys):
    code, out, _ = run(capsys, "classify", "--p", "7", "--nu", "3,3", "--l", "2")
    assert code == 0 and out.strip() == "rectangular"
    code, out, _ = run(capsys, "scan", "--p", "5", "--l", "1", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 12
    assert [r["nu"] for r in rows[:3]] == [[], [1], [2]]


def test_verify_theta_only(capsys):
    code, out, _ = run(capsys, "verify", "--theorems", "1.2", "--p-list", "13")
    assert code == 0 and out.startswith("PASS projective")


def test_verify_is_deterministic_across_jobs(capsys):
    args = ("verify", "--theorems", "5.9,5.11,ring", "--p-list", "5,7", "--format", "json", "--seed", "3")
    _, one, _ = run(capsys, *args)
    _, two, _ = run(capsys, *args, "--jobs", "2")
    assert one == two and all(s["passed"] for s in json.loads(one)["scans"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stablerep", "tensor", "--p", "5", "--a", "1,0", "--b", "1,0"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and "k + Sym^2 E" in proc.stdout
