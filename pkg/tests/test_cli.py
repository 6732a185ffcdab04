import csv
import io
import json
import subprocess
import sys

import pytest

from contyoung.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_examples(capsys):
    code, out, _ = run(capsys, "eval", "rho", "--x", "1", "--y", "1")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(2.2795853023360673, rel=1e-15)
    assert json.loads(run(capsys, "eval", "voldn", "--n", "3", "--x", "2", "--y", "3")[1]) == {"value": 9}
    assert json.loads(run(capsys, "eval", "qcard", "--m", "2", "--n", "2")[1]) == {"coeffs": [0, 0, 0, 1, 1]}
    assert json.loads(run(capsys, "eval", "meanarea", "--n", "2", "--x", "1", "--y", "1")[1]) == {"value": "3/4"}


@pytest.mark.parametrize(
    "argv",
    [
        ["besseli", "--k", "1", "--t", "2"],
        ["volregion", "--region", "D1", "--x", "1", "--y", "2"],
        ["volz", "--x", "1", "--y", "1", "--z", "1"],
        ["volzdn", "--n", "3", "--x", "1", "--y", "1", "--z", "0.5"],
        ["contbinom", "--x", "2", "--s", "1"],
        ["kappa", "--x", "1"],
        ["zcard", "--kind", "integer", "--n", "4", "--z", "0.5"],
    ],
)
def test_eval_quantities(capsys, argv):
    code, out, err = run(capsys, "eval", *argv)
    assert code == 0 and err == ""
    assert isinstance(json.loads(out)["value"], float)


def test_table_dnl(capsys):
    code, out, _ = run(capsys, "table", "dnl", "--nmax", "4", "--lmax", "4")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["l", "n=1", "n=2", "n=3", "n=4"]
    assert len(rows) == 6 and all(len(r) == 5 for r in rows)
    assert rows[2][2] == "1/2"  # d_{2,1}


def test_table_other(capsys):
    rows = list(csv.reader(io.StringIO(run(capsys, "table", "tnum", "--k", "2", "--nmax", "6")[1])))
    assert ["4", "11"] in rows
    rows = list(csv.reader(io.StringIO(run(capsys, "table", "ycoeffs", "--m", "2", "--n", "2")[1])))
    assert rows == [["a", "count"], ["3", "1"], ["4", "1"]]
    rows = list(csv.reader(io.StringIO(run(capsys, "table", "powercoeffs", "--k", "2", "--nmax", "2")[1])))
    assert rows[1:] == [["0", "1"], ["1", "2"], ["2", "3/2"]]
    rows = list(csv.reader(io.StringIO(run(capsys, "table", "unum", "--k", "1", "--nmax", "3")[1])))
    assert rows[1:] == [["2", "1"], ["3", "4"]]
    code, out, _ = run(capsys, "--format", "json", "table", "ycoeffs", "--m", "2", "--n", "2")
    assert json.loads(out) == {"columns": ["a", "count"], "rows": [[3, 1], [4, 1]]}


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "duality")
    rep = json.loads(out)
    assert code == 0 and rep["suite"] == "duality" and rep["failed"] == 0
    assert {"suite", "checks", "passed", "failed", "details"} <= set(rep)


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nope"])
    assert exc.value.code == 2


def test_sample(capsys):
    code, out, _ = run(capsys, "sample", "volz", "--n", "2", "--x", "1", "--y", "1", "--z", "1", "--samples", "1000000", "--seed", "7")
    res = json.loads(out)
    assert code == 0 and res["ratio"] < 3 and res["seed"] == 7 and "generator" in res
    res = json.loads(run(capsys, "sample", "meanarea", "--n", "10", "--x", "1", "--y", "1", "--samples", "1000000", "--seed", "7")[1])
    assert res["reference"] == 0.55 and res["ratio"] < 3
    res = json.loads(run(capsys, "sample", "vhat", "--n", "1", "--w", "0.5", "--x", "1", "--y", "1", "--samples", "1000", "--seed", "3")[1])
    assert res["mean"] == 0.0
    res = json.loads(run(capsys, "sample", "integral", "--a", "1,1", "--x", "1", "--samples", "100000", "--seed", "3")[1])
    assert res["reference"] == 0.125 and res["ratio"] < 3


def test_sample_is_byte_identical(capsys):
    argv = ["sample", "volz", "--n", "3", "--x", "1", "--y", "1", "--z", "1", "--samples", "50000", "--seed", "5", "--streams", "3"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


@pytest.mark.parametrize(
    "argv, code",
    [
        (["sample", "volz", "--n", "2", "--z", "1", "--samples", "999", "--seed", "1"], 2),
        (["sample", "volz", "--n", "2", "--z", "1", "--samples", "1000"], 2),
        (["eval", "rho", "--x", "1"], 2),
        (["eval", "voldn", "--n", "0", "--x", "1", "--y", "1"], 3),
        (["eval", "contbinom", "--x", "1", "--s", "2"], 3),
        (["table", "dnl", "--nmax", "400", "--lmax", "400"], 4),
        (["eval", "volz", "--x", "100", "--y", "10", "--z", "1"], 5),
        (["eval", "rho", "--x", "1", "--y", "1", "--tol", "1e-30"], 5),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == "" and err.startswith("contyoung:")


def test_bad_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["eval", "rho", "--x", "one"])
    assert exc.value.code == 2


def test_csv_eval(capsys):
    out = run(capsys, "--format", "csv", "eval", "rho", "--x", "1", "--y", "1")[1]
    rows = dict(csv.reader(io.StringIO(out)))
    assert float(rows["value"]) == pytest.approx(2.2795853023360673)


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "contyoung", "eval", "voldn", "--n", "3", "--x", "2", "--y", "3"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(out.stdout) == {"value": 9}
