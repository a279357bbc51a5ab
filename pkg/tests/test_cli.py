import csv
import io
import json
import math
import subprocess
import sys

import pytest

from squeezespec import cli
from squeezespec.pollaczek import weight


def run(capsys, *argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def values(out):
    return json.loads(out)["values"]


def test_pollaczek_n0_column_of_ones(capsys):
    code, out, _ = run(capsys, "pollaczek", "--n", "0", "--lambda=-2:2:5", "--b", "0.5")
    assert code == 0
    assert [v["output-re"] for v in values(out)] == [1.0] * 5


def test_pollaczek_value(capsys):
    code, out, _ = run(capsys, "pollaczek", "--n", "1", "--lambda", "1", "--b", "0.25")
    assert code == 0
    assert values(out)[0]["output-re"] == pytest.approx(2 * math.sqrt(2), rel=1e-15)


@pytest.mark.parametrize("argv", [
    ["pollaczek", "--n", "1", "--lambda", "0:1:3", "--b", "0"],
    ["pollaczek", "--n", "1", "--lambda", "0:1", "--b", "0.5"],
    ["pollaczek", "--n", "1", "--lambda", "a:b:c", "--b", "0.5"],
    ["pollaczek", "--n", "1", "--b", "0.5"],
    ["eigvec", "--generator", "j2", "--value", "0.5", "--parity", "even", "--rep", "q", "--q", "0"],
    ["eigvec", "--generator", "kplus", "--value", "0", "--parity", "even"],
    ["eigvec", "--generator", "kplus", "--value", "-1", "--parity", "odd", "--rep", "q"],
    ["classify", "--A", "-1", "--B", "0", "--C", "0"],
    ["classify", "--A", "1", "--B", "0", "--C", "0", "--tol", "0"],
    ["verify", "nonexistent"],
    ["frobnicate"],
])
def test_usage_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert err


def test_weight_and_moments(capsys):
    _, out, _ = run(capsys, "weight", "--lambda", "0,1.5", "--b", "0.75")
    got = [v["output-re"] for v in values(out)]
    assert got == pytest.approx([weight(0.0, 0.75), weight(1.5, 0.75)], rel=1e-15)
    for method in ("taylor", "quadrature", "gauss"):
        _, out, _ = run(capsys, "moments", "--b", "0.5", "--max-order", "4", "--method", method)
        mom = [v["output-re"] for v in values(out)]
        assert mom == pytest.approx([1, 0, 0.25, 0, 5 / 16], abs=1e-10)


def test_eigvec_j2_one_nrep(capsys):
    _, out, _ = run(capsys, "eigvec", "--generator", "j2", "--value", "0", "--parity", "even", "--N", "4")
    rec = json.loads(out)
    assert rec["values"][0]["output-re"] == pytest.approx(math.sqrt(weight(0.0, 0.25)), rel=1e-15)
    assert rec["metadata"]["truncation"] == 4
    assert rec["parameters"]["parity"] == "even"


def test_eigvec_kplus_delta_pair(capsys):
    _, out, _ = run(capsys, "eigvec", "--generator", "kplus", "--value", "2", "--parity", "even", "--rep", "q")
    v = values(out)
    assert v["locations"] == pytest.approx([2.0, -2.0])
    assert v["amplitude"] == pytest.approx(0.25)
    assert v["signs"] == [1, 1]


def test_eigvec_two_mode_z_origin(capsys):
    _, out, _ = run(capsys, "eigvec", "--generator", "j2", "--mode", "two", "--value", "0.3",
                    "--delta-n", "0", "--rep", "z", "--z1", "0", "--z2", "0")
    v = values(out)[0]
    assert v["output-re"] == pytest.approx(math.sqrt(weight(0.3, 0.5)), rel=1e-14)
    assert v["input"] == [{"re": 0.0, "im": 0.0}, {"re": 0.0, "im": 0.0}]


def test_eigvec_two_mode_kets_and_q(capsys):
    _, out, _ = run(capsys, "eigvec", "--generator", "kplus", "--mode", "two", "--value", "1",
                    "--delta-n", "-2", "--N", "3")
    assert [v["input"] for v in values(out)] == [[0, 2], [1, 3], [2, 4]]
    code, out, _ = run(capsys, "eigvec", "--generator", "j2", "--mode", "two", "--value", "1",
                       "--delta-n", "0", "--rep", "q", "--q1", "0.5,2", "--q2", "1,0.1")
    assert code == 0 and len(values(out)) == 2


def test_eigvec_z_csv(capsys):
    code, out, _ = run(capsys, "eigvec", "--generator", "j2", "--value", "1", "--parity", "odd",
                       "--rep", "z", "--z", "0.5+0.5j,-1j", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["input-re", "input-im", "output-re", "output-im"]
    assert rows[1][:2] == ["0.5", "0.5"] and len(rows) == 3


@pytest.mark.parametrize("args, kind", [
    (["--A", "1", "--B", "0", "--C", "0"], "DiscreteEquidistant"),
    (["--A", "0", "--B", "1", "--C", "0"], "DoubledRealLine"),
    (["--A", "0.5", "--B", "0.5", "--C", "0"], "DoubledHalfAxis"),
    (["--A", "0.5", "--B", "0.5", "--C", "1", "--Psi", str(math.pi / 2)], "FullRealLine"),
])
def test_classify_examples(capsys, args, kind):
    code, out, _ = run(capsys, "classify", *args)
    assert code == 0
    assert values(out)["kind"] == kind


def test_classify_record_fields(capsys):
    _, out, _ = run(capsys, "classify", "--A", "1", "--B", "0", "--C", "0")
    rec = json.loads(out)
    assert set(rec) == {"command", "parameters", "values", "metadata"}
    assert rec["values"]["scale"] == 4.0 and rec["values"]["multiplicity"] == 1
    assert rec["metadata"]["tolerance"] == 1e-12 and "version" in rec["metadata"]


def test_seventeen_digits():
    assert cli.dumps(0.1) == "0.10000000000000001"
    assert cli.dumps(2.0) == "2.0"
    assert cli.dumps(1 + 2j) == '{\n  "re": 1.0,\n  "im": 2.0\n}'
    assert cli.dumps(float("nan")) == '"nan"'


def test_grid_parsing():
    assert cli.parse_grid("0:1:3") == [0.0, 0.5, 1.0]
    assert cli.parse_grid("-1,2") == [-1.0, 2.0]
    assert cli.parse_grid("3") == [3.0]
    for bad in ("0:1:0", "1:2:3:4", "x"):
        with pytest.raises(cli.UsageError):
            cli.parse_grid(bad)
    assert cli.parse_complex_list("1+2i, -1j") == [1 + 2j, -1j]


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "bessel")
    assert code == 0 and json.loads(out)[0]["pass"] is True
    code, out, _ = run(capsys, "verify", "bessel", "--tolerance", "0")
    assert code == 2 and json.loads(out)[0]["pass"] is False
    code, out, _ = run(capsys, "verify", "moments", "--format", "table")
    assert code == 0 and out.startswith("suite moments: PASS")
    code, out, _ = run(capsys, "verify", "classifier", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "suite,description,error,tolerance,pass"


def test_out_file(capsys, tmp_path):
    path = tmp_path / "w.json"
    code, out, _ = run(capsys, "weight", "--lambda", "0", "--b", "1", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["command"] == "weight"


def test_byte_identical_subprocess():
    cmd = [sys.executable, "-m", "squeezespec", "verify", "orthonormality"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.returncode == 0
    assert a.stdout == b.stdout and a.stdout
