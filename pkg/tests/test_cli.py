import csv
import json

import pytest

from pqwitness.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main, run_sweep, sweep_tasks


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_witness_sym(capsys):
    code, out, _ = run(capsys, "witness", "sym", "-n", "9", "-p", "3", "-q", "2", "--json")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["partition"] == "1^9" and rec["case"] == "Sign"
    assert rec["degree"] == "1"


def test_witness_typebc(capsys):
    code, out, _ = run(capsys, "witness", "typebc", "-n", "3", "--field", "3", "-p", "2", "-q", "5")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["case"] == "I"
    assert rec["label"] == {"top": [0, 2], "bottom": [2]}
    assert rec["degree_qprime"] == "91"


def test_witness_typea(capsys):
    code, out, _ = run(capsys, "witness", "typea", "-n", "5", "--field", "2",
                       "-p", "31", "-q", "7", "--json")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert (rec["family"], rec["label"], rec["case"]) == ("A", "1^3,2", "IIa")


@pytest.mark.parametrize("argv", [
    ["witness", "sym", "-n", "2", "-p", "2", "-q", "3"],
    ["witness", "nope", "-n", "9", "-p", "3", "-q", "2"],
    ["witness", "sym", "-n", "x", "-p", "3", "-q", "2"],
    ["witness", "typea", "-n", "4", "-p", "2", "-q", "5"],
    ["verify", "sym", "-n", "50", "-p", "3", "-q", "7"],
    ["classify", "--max-n", "3"],
    [],
])
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == EXIT_USAGE
    assert capsys.readouterr().err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "sym", "-n", "10", "-p", "3", "-q", "7")
    assert code == EXIT_OK and json.loads(out)["cardinality"] > 1
    code, out, _ = run(capsys, "verify", "alt", "-n", "9", "-p", "3", "-q", "2")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["cardinality"] == 3 and rep["witness"] == "1^4,5+"


def test_verification_failure_exit(capsys, monkeypatch):
    from pqwitness import cli
    from pqwitness.witness_sn import VerificationError

    def boom(*args):
        raise VerificationError("forced")

    monkeypatch.setattr(cli, "witness_symmetric", boom)
    code, _, err = run(capsys, "witness", "sym", "-n", "9", "-p", "3", "-q", "2")
    assert code == EXIT_VERIFY and "forced" in err


def test_sweep_files(tmp_path, capsys):
    out, table = tmp_path / "s.jsonl", tmp_path / "s.csv"
    code, stdout, _ = run(capsys, "sweep", "sym", "--n-min", "3", "--n-max", "12",
                          "--oracle", "--out", str(out), "--csv", str(table))
    assert code == EXIT_OK
    lines = [json.loads(x) for x in out.read_text().splitlines()]
    summary = lines.pop()
    assert summary["summary"] and summary["failed"] == 0
    assert summary["records"] == len(lines) == len(sweep_tasks("sym", 3, 12))
    assert all(r["oracle_contains"] for r in lines)
    assert json.loads(stdout) == summary
    with table.open() as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["group", "n", "p", "q", "intersection_size",
                       "witness_found", "witness_label"]
    assert len(rows) == len(lines) + 1


def test_sweep_lie_requires_fields(capsys):
    code, _, err = run(capsys, "sweep", "typebc", "--n-max", "4")
    assert code == EXIT_USAGE and "fields" in err


def test_empty_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "alt", "--n-min", "5", "--n-max", "4")
    assert code == EXIT_OK
    assert json.loads(out)["records"] == 0


def test_unwritable_output(tmp_path, capsys):
    code, _, _ = run(capsys, "sweep", "sym", "--n-max", "5",
                     "--out", str(tmp_path / "missing" / "x.jsonl"))
    assert code == EXIT_USAGE


def test_parallel_order_matches_serial():
    tasks = sweep_tasks("typebc", 2, 5, fields=[3, 5])
    assert run_sweep(tasks, jobs=2) == run_sweep(tasks, jobs=1)


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--max-n", "9")
    assert code == EXIT_OK
    got = [(r["n"], r["p"], r["q"]) for r in map(json.loads, out.splitlines())]
    assert got == [(4, 3, 2), (5, 5, 2), (8, 7, 2), (9, 3, 2)]
    code, out, _ = run(capsys, "classify", "--max-n", "4")
    assert [json.loads(x)["n"] for x in out.splitlines()] == [4]
