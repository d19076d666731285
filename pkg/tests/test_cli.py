from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from codezeta.cli import main
from codezeta.code import code_from_json
from codezeta.report import AnalysisReport


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture()
def hamming_file(tmp_path, capsys):
    path = tmp_path / "hamming74.json"
    assert main(["fixtures", "--name", "hamming74", "--out", str(path)]) == 0
    capsys.readouterr()
    return path


def test_analyze_hamming(hamming_file, tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, out, _ = run(["code", "analyze", "--input", str(hamming_file), "--out", str(out_path)], capsys)
    assert code == 0 and "RHA" in out
    data = json.loads(out_path.read_text())
    assert data["zeta"]["c"] == ["1/5"]
    assert data["rha"]["holds"] is True
    assert data["fsd"]["weight_equal"] is False and data["fsd"]["zeta_fixed"] is True
    report = AnalysisReport.from_json(data)
    assert report.violations() == []
    assert json.loads(json.dumps(report.to_json())) == data


def test_analyze_golay(tmp_path, capsys):
    path = tmp_path / "golay.json"
    main(["fixtures", "--name", "golay24", "--out", str(path)])
    capsys.readouterr()
    code, out, _ = run(["code", "analyze", "--input", str(path), "--json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert len(data["zeta"]["D"]["coeffs"]) == 9
    assert all(data["fsd"][k] for k in ("weight_equal", "zeta_fixed", "d_fixed", "coeff_relations", "reconstruction_21", "reconstruction_24"))


def test_zero_column_exit(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"q": 2, "rows": [[1, 0, 1], [1, 0, 0]]}))
    code, _, err = run(["code", "analyze", "--input", str(path)], capsys)
    assert code == 2 and json.loads(err)["error"] == "ZeroColumn"


@pytest.mark.parametrize("action", ["wdist", "zeta", "fsd", "rha"])
def test_code_subcommands(action, hamming_file, capsys):
    code, out, _ = run(["code", action, "--input", str(hamming_file), "--json"], capsys)
    assert code == 0 and json.loads(out)


def test_fixtures(capsys):
    code, out, _ = run(["fixtures", "--name", "hamming74"], capsys)
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 4 and len(rows[0]) == 7
    code, out, _ = run(["fixtures", "--name", "rs", "--q", "5", "--n", "5", "--k", "3"], capsys)
    assert code_from_json(json.loads(out)).k == 3
    code, _, err = run(["fixtures", "--name", "nope"], capsys)
    assert code == 2 and "error" in json.loads(err)


def test_fixture_bytes_deterministic(capsys):
    _, a, _ = run(["fixtures", "--name", "golay24"], capsys)
    _, b, _ = run(["fixtures", "--name", "golay24"], capsys)
    assert a == b


def test_rand_code(capsys):
    _, a, _ = run(["rand", "code", "--q", "2", "--n", "10", "--k", "4", "--seed", "42"], capsys)
    _, b, _ = run(["rand", "code", "--q", "2", "--n", "10", "--k", "4", "--seed", "42"], capsys)
    assert a == b
    code, out, _ = run(["rand", "code", "--q", "3", "--n", "8", "--k", "3", "--seed", "7"], capsys)
    assert code == 0 and code_from_json(json.loads(out)).k == 3
    code, _, _ = run(["rand", "code", "--q", "2", "--n", "4", "--k", "5", "--seed", "1"], capsys)
    assert code == 2


def test_ff_analyze(capsys):
    code, out, _ = run(["ff", "analyze", "--lpoly", "1,0,2", "--q", "2", "--json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["h"] == 3 and data["D_F"] == [1] and data["b_relations"]
    code, out, _ = run(["ff", "analyze", "--lpoly", "1,0,4,0,4", "--q", "2", "--json"], capsys)
    data = json.loads(out)
    assert data["h"] == 9 and [Fraction(x) for x in data["h_seq"]] == [1, 6, 9]
    code, out, _ = run(["ff", "analyze", "--points", "3", "--q", "2", "--json"], capsys)
    assert json.loads(out)["L"] == [1, 0, 2]
    code, _, err = run(["ff", "analyze", "--lpoly", "1,1", "--q", "2"], capsys)
    assert code == 2 and json.loads(err)["error"] == "OddDegree"


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "codezeta", "ff", "analyze", "--lpoly", "1,0,2", "--q", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "h" in proc.stdout
