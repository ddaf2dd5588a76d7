import io
import json
import subprocess
import sys

import pytest

from ferrers_tilings.cli import run
from ferrers_tilings.exactpoly import IntPoly


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_sequence_plain():
    code, out, _ = call("sequence", "--mu", "2,1", "-d", "2", "--variant", "tilings",
                        "--at", "t=1", "--n", "11")
    assert code == 0
    assert out.strip() == "1 1 3 6 13 28 60 129 277 595 1278 2745"


def test_poly():
    code, out, _ = call("poly", "--mu", "2,1", "-d", "2", "--variant", "tilings", "--n", "3")
    assert code == 0 and out.strip() == "1 + 4t + t^2"
    code, out, _ = call("poly", "--mu", "2,1", "-d", "2", "--variant", "dense-faults", "--n", "6")
    assert out.strip() == "s^2 + 8s^3"


def test_check():
    code, out, _ = call("check", "--mu", "2,2,2", "-d", "3", "--variant", "tilings",
                        "--property", "realroots", "--n-max", "60")
    assert code == 0 and out.strip() == "first failure: n=56"
    code, out, _ = call("check", "--mu", "2,2", "-d", "2", "--property", "realroots", "--n-max", "30")
    assert out.strip() == "none ≤ 30"
    code, out, _ = call("check", "--mu", "2,2,2", "-d", "3", "--property", "interlacing",
                        "--n-max", "40")
    assert out.strip() == "first failure: n=32"


def test_bfile_offsets():
    code, out, _ = call("sequence", "--mu", "1,1", "-d", "1", "--variant", "cylindric",
                        "--at", "t=1", "--n", "4", "--format", "bfile")
    assert out.splitlines() == ["1 1", "2 3", "3 4", "4 7"]
    code, out, _ = call("sequence", "--mu", "2,1", "-d", "2", "--at", "t=1", "--n", "2",
                        "--format", "bfile")
    assert out.splitlines() == ["0 1", "1 1", "2 3"]


def test_json_round_trip():
    code, out, _ = call("sequence", "--mu", "3,1,1", "-d", "3", "--n", "5", "--format", "json")
    obj = json.loads(out)
    polys = [IntPoly.from_json(p) for p in obj["polys"]]
    assert [p(1) for p in polys] == [1, 1, 1, 4, 10, 20]
    code, out, _ = call("faultfree", "--mu", "2,2", "-d", "3", "--format", "json")
    assert json.loads(out)["B"]["x_coeffs"][2] == {"coeffs": ["0", "3"]}


def test_graph_and_info():
    code, out, _ = call("graph", "--mu", "2,1", "-d", "2", "-n", "7", "--independence", "--claw")
    assert code == 0
    assert out.splitlines()[:3] == ["vertices: 12", "edges: 21", "claw: none"]
    code, out, _ = call("graph", "--mu", "2,2,2", "-d", "3", "-n", "7", "--claw", "--auxiliary")
    assert "claw: center (3,1)" in out
    code, out, _ = call("info", "--mu", "5,5,1", "-d", "5", "--format", "json")
    assert json.loads(out)["rigid"] is True


def test_scan_table():
    code, out, _ = call("scan-fatl", "--d", "7..8", "--r", "2", "--s-max", "3", "--n-max", "20")
    assert code == 0
    assert out.splitlines() == ["d\\r      2", "  7  3->17", "  8  3->17"]


def test_deterministic_output():
    args = ("scan-fatl", "--d", "6..7", "--r", "2..3", "--s-max", "3", "--n-max", "30", "--format", "json")
    assert call(*args) == call(*args, "--workers", "2")


@pytest.mark.parametrize(
    "argv, flag",
    [(["sequence", "--mu", "2,1", "-d", "2", "--n", "x"], "--n"),
     (["sequence", "--mu", "2,1", "-d", "2", "--n", "3", "--format", "bfile"], "--format"),
     (["sequence", "--mu", "2,1", "-d", "2", "--n", "3", "--at", "q=1"], "--at"),
     (["sequence", "--mu", "2,1", "-d", "2", "--n", "3", "--at", "s=1"], "--at"),
     (["check", "--mu", "2,1", "-d", "2", "--property", "bogus", "--n-max", "3"], "--property"),
     (["scan-fatl", "--d", "5..2", "--r", "2", "--s-max", "1", "--n-max", "5"], "--d")],
)
def test_usage_errors(argv, flag):
    code, out, err = call(*argv)
    assert code == 1 and out == ""
    assert flag in err and len(err.strip().splitlines()) == 1


def test_computation_errors():
    assert call("sequence", "--mu", "1,2", "-d", "2", "--n", "3")[0] == 2
    assert call("graph", "--mu", "2,2,2", "-d", "3", "-n", "5")[0] == 2
    assert call("graph", "--mu", "2,1", "-d", "2", "-n", "30", "--independence")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ferrers_tilings", "poly", "--mu", "2,1",
                           "-d", "2", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1 + 4t + t^2"
