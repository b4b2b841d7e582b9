import io
import json
import subprocess
import sys

import pytest

from fusscat.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_count():
    assert call("count", "--what", "fc", "--n", "3", "--r", "2")[1] == "12\n"
    assert call("count", "--what", "snc", "--n", "5")[1] == "10\n"
    assert call("count", "--what", "V", "--n", "2", "--r", "2")[1] == "9\n"
    assert call("count", "--what", "B", "--n", "4", "--r", "2")[1] == "17\n"


def test_json_flag_either_side():
    a = call("--format", "json", "enumerate", "ncp", "--n", "3")
    b = call("enumerate", "ncp", "--n", "3", "--format", "json")
    assert a == b
    assert len(json.loads(a[1])) == 5


def test_maps():
    assert call("map", "--fn", "kreweras", "--input", "136/2/4/5/78")[1] == "17/23/456/8\n"
    assert call("map", "--fn", "xi", "--input", "URURRR", "--r", "2")[1] == "URRURR\n"
    assert call("map", "--fn", "kappa-inv", "--input", "URU^2R^8", "--r", "3")[1] == \
        "[1/2/3;13/2;123]\n"
    code, out, _ = call("map", "--fn", "psi", "--input", "12/3/4", "--format", "json")
    assert code == 0 and json.loads(out)["points"] == 8


def test_tiling_output():
    code, out, _ = call("map", "--fn", "tiling", "--input", "[1/2/3;13/2]", "--format", "json")
    data = json.loads(out)
    assert code == 0 and set(data) == {"tiles", "top"}


def test_act():
    code, out, _ = call("act", "--algebra", "tl", "--word", "E1,E1", "--state", "1/2/3")
    assert code == 0 and out == "12/3: -q - q^-1\n"
    code, out, _ = call("act", "--algebra", "2bfc", "--word", "E0", "--state", "[1/2/3]")
    assert code == 0 and "'" in out


def test_verify_exit_codes():
    assert call("verify", "--what", "iso-1b", "--n", "3")[0] == 0
    code, out, _ = call("verify", "--what", "dims", "--n", "3", "--r", "1")
    assert code == 1 and out.startswith("FAIL dims")
    code, out, _ = call("verify", "--what", "re", "--branch", "degenerate-e",
                        "--samples", "5", "--format", "json")
    assert code == 0 and json.loads(out)["pass"] is True


def test_usage_errors():
    assert call("count", "--what", "fc")[0] == 2
    assert call("map", "--fn", "kappa", "--input", "12/3;1/2/3")[0] == 2
    assert call("bogus")[0] == 2


@pytest.mark.parametrize("argv", [["--help"], ["count", "--help"]])
def test_help(argv, capsys):
    assert run(argv) == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fusscat.cli", "count", "--what", "fc",
                           "--n", "4", "--r", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "14\n"
