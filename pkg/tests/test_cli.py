import csv
import io
import json
import subprocess
import sys

import pytest

from siegeldim import contributions
from siegeldim.cli import EXIT_INVALID_LEVEL, EXIT_MISMATCH, EXIT_USAGE, int_range, main
from siegeldim.verification import load_golden


def run(*argv):
    out = io.StringIO()
    try:
        code = main(list(argv), out=out)
    except SystemExit as e:  # argparse
        code = e.code
    return code, out.getvalue()


def test_compute_proven():
    assert run("compute", "--d1", "6", "--d2", "1", "--k", "10", "--j", "0") == (
        0,
        "15 (proven, k>=5)\n",
    )


def test_compute_formal():
    code, out = run("compute", "--d1", "6", "--d2", "1", "--k", "1", "--j", "0")
    assert code == 0 and out == "-1 (formal, k<=4)\n"


def test_compute_breakdown():
    code, out = run(
        "compute", "--d1", "6", "--d2", "1", "--k", "5", "--j", "0", "--breakdown"
    )
    lines = out.splitlines()
    assert code == 0 and lines[0] == "0 (proven, k>=5)"
    assert lines[1] == "  H1 = 35/72"
    assert lines[12] == " H12 = -3/4"
    assert lines[-1] == " sum = 0/1"
    assert len(lines) == 17


def test_compute_invalid_level(capsys):
    code, _ = run("compute", "--d1", "4", "--d2", "1", "--k", "5", "--j", "0")
    assert code == EXIT_INVALID_LEVEL
    assert "D not squarefree" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--d1", "6", "--d2", "1", "--k", "5"],
        ["compute", "--d1", "6", "--d2", "1", "--k", "-1", "--j", "0"],
        ["compute", "--d1", "x", "--d2", "1", "--k", "5", "--j", "0"],
        ["table", "--d1", "6", "--d2", "1", "--k", "5..2", "--j", "0"],
        ["table", "--d1", "6", "--d2", "1", "--k", "0..3", "--j", "0", "--format", "xml"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_64(argv):
    assert run(*argv)[0] == EXIT_USAGE


def test_int_range():
    assert list(int_range("3")) == [3]
    assert list(int_range("0..4")) == [0, 1, 2, 3, 4]
    assert list(int_range("1..7", 2)) == [1, 3, 5, 7]


def test_table_csv_single_cell():
    code, out = run(
        "table", "--d1", "1", "--d2", "15", "--k", "5..5", "--j", "0..0", "--format", "csv"
    )
    assert code == 0
    assert out == "d1,d2,k,j,dim,validity\n1,15,5,0,4,proven\n"


def test_table_csv_odd_j():
    code, out = run(
        "table", "--d1", "6", "--d2", "1", "--k", "5..5", "--j", "1..1", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines()[1] == "6,1,5,1,0,proven"


@pytest.mark.parametrize("table", load_golden(), ids=lambda t: f"{t.D1}-{t.D2}")
def test_table_latex_matches_golden(table):
    code, out = run(
        "table", "--d1", str(table.D1), "--d2", str(table.D2),
        "--k", "0..15", "--j", "0..8", "--format", "latex",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == r"\begin{tabular}{|c|ccccc|ccccccccccc|} \hline"
    assert lines[1] == r"$j\backslash k$ &" + "&".join(map(str, range(16))) + r" \\ \hline"
    body = lines[2:-1]
    assert body == [
        f"{j}&" + "&".join(map(str, row)) + r" \\ \hline" for j, row in table.rows.items()
    ]
    assert lines[-1] == r"\end{tabular}"


def test_formats_agree():
    args = ["table", "--d1", "5", "--d2", "2", "--k", "0..12", "--j", "0..6"]
    _, plain = run(*args)
    _, as_csv = run(*args, "--format", "csv")
    _, as_json = run(*args, "--format", "json")
    _, latex = run(*args, "--format", "latex")
    from_csv = {(int(r["j"]), int(r["k"])): int(r["dim"]) for r in csv.DictReader(io.StringIO(as_csv))}
    from_json = {(r["j"], r["k"]): r["dim"] for r in json.loads(as_json)}
    assert from_csv == from_json
    from_plain = {}
    for line in plain.splitlines()[2:]:
        j, *vals = line.split()
        from_plain.update({(int(j), k): int(v) for k, v in enumerate(vals)})
    assert from_plain == from_csv
    from_latex = {}
    for line in latex.splitlines()[2:-1]:
        j, *vals = line.split(" ")[0].split("&")
        from_latex.update({(int(j), k): int(v) for k, v in enumerate(vals)})
    assert from_latex == from_csv
    assert list(from_csv) == sorted(from_csv)  # rows by j, then k


def test_json_breakdown_strings():
    code, out = run(
        "table", "--d1", "6", "--d2", "1", "--k", "5", "--j", "0",
        "--format", "json", "--breakdown",
    )
    rec = json.loads(out)[0]
    assert code == 0
    assert rec["breakdown"]["H1"] == "35/72"
    assert rec["breakdown"]["I3"] == "-1/3"
    assert rec["breakdown"]["total"] == "0/1"
    assert list(rec["breakdown"])[:15] == list(contributions.TERM_NAMES)


def test_table_is_deterministic():
    args = ["table", "--d1", "3", "--d2", "5", "--k", "0..20", "--j", "0..10", "--format", "json"]
    assert run(*args) == run(*args)


def test_table_invalid_level():
    assert run("table", "--d1", "2", "--d2", "1", "--k", "5", "--j", "0")[0] == 2


def test_verify_ok():
    code, out = run("verify")
    assert code == 0
    assert out == "960/960 cells match\n"


def test_verify_detects_h12_swap(patched):
    orig = contributions.h12_columns
    patched.setattr(contributions, "h12_columns", lambda L: orig(L)[::-1])
    code, out = run("verify")
    assert code == EXIT_MISMATCH
    assert out.splitlines()[-1] == "276/960 cells match"
    for d in ("D1=6 ", "D1=10 ", "D1=15 "):
        assert d in out


def test_verify_detects_eisenstein_at_2(patched):
    orig = contributions.chi
    patched.setattr(
        contributions, "chi",
        lambda f, p: 1 if (f, p) == (contributions.EISENSTEIN, 2) else orig(f, p),
    )
    code, out = run("verify")
    assert code == EXIT_MISMATCH
    assert out.splitlines()[-1] == "426/960 cells match"


def test_crosscheck_default():
    code, out = run("crosscheck")
    assert code == 0
    assert out.splitlines()[-1] == "984/984 agree (24 primes, k=0..40)"


def test_crosscheck_p3_matches_table():
    code, out = run("crosscheck", "--pmax", "3", "--kmax", "15")
    assert code == 0
    row = next(t for t in load_golden() if (t.D1, t.D2) == (1, 6)).rows[0]
    assert out.splitlines()[0] == "p=3: " + " ".join(map(str, row))


def test_crosscheck_no_primes():
    assert run("crosscheck", "--pmax", "2", "--kmax", "5")[0] == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "siegeldim", "compute", "--d1", "6", "--d2", "1", "--k", "10", "--j", "0"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "15 (proven, k>=5)\n"
    proc = subprocess.run(
        [sys.executable, "-m", "siegeldim", "table", "--d1", "6"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 64
