import json
import subprocess
import sys

import pytest

from wittlab import boolean_witt as B
from wittlab import cli
from wittlab import memo
from wittlab import ptypical as T
from wittlab import total_positivity as TP
from wittlab.countability import PartialHom
from wittlab.errors import PropertyViolation
from wittlab.ideals import PartitionIdeal
from wittlab.symfunc import SCHUR, SymFunc, Tensor


@pytest.fixture(autouse=True)
def _no_cache(monkeypatch):
    monkeypatch.delenv("WITTLAB_CACHE", raising=False)
    yield
    memo.configure(None)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def payload(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    return json.loads(out)["payload"]


@pytest.mark.parametrize("argv,expected", [
    (["wbool", "add", "(2,1)", "(3,2)"], "(5,2)"),
    (["lr", "[2,1]", "[1,1]", "[1]"], "1"),
    (["tp", "member", "--g", "[1,1]", "--h", "[1,-1]"], "member (1,1)"),
    (["kostka", "[2,1]", "[1,1,1]"], "2"),
    (["mprod", "[1]", "[1]"], "m[2] + 2*m[1,1]"),
    (["wbool", "mul", "(1,0)", "(0,2)", "--check"], "(0,2)"),
    (["wsbool", "mul", "eta", "eta"], "1+0*eta"),
    (["ptyp", "add", "p=2:(1,0)", "p=2:(1,0)"], "p=2:(2,0)"),
    (["ptyp", "rel", "--p", "3"], "true"),
    (["tp", "expand", "--g", "[1,1]", "--h", "[1,-1]", "--terms", "4"], "1,2,2,2,2"),
    (["ideals", "isprime", "[2,2]", "--window-size", "6"], "prime"),
])
def test_examples(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_global_flags_in_any_position(capsys):
    a = run(capsys, "--window-size", "3", "ideals", "enumerate")
    b = run(capsys, "ideals", "enumerate", "--window-size", "3")
    assert a == b and a[1].splitlines()[-1] == "15 ideals"


def test_deterministic_output(capsys):
    argv = ["coprod-mul", "[2,1]", "--basis", "s", "--format", "json"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_json_round_trips(capsys):
    assert B.BoolWitt.from_json(payload(capsys, "wbool", "add", "(1,2)", "inf")) == B.INF
    assert B.SchurBoolWitt.from_json(payload(capsys, "wsbool", "add", "eta", "(1,0)")) == B.SchurBoolWitt(1, 1)
    f = SymFunc.from_json(payload(capsys, "sprod", "[2]", "[1]"))
    assert f == SymFunc({(3,): 1, (2, 1): 1}, SCHUR)
    t = Tensor.from_json(payload(capsys, "coprod-add", "[2,1]"))
    assert t[((1,), (2,))] == 1
    assert T.PTypicalBoolWitt.from_json(payload(capsys, "ptyp", "mul", "p=3:(1,1)", "p=3:(1,0)")) \
        == T.PTypicalBoolWitt(3, 1, 1)
    ideals = payload(capsys, "ideals", "enumerate", "--window-size", "2")["ideals"]
    assert len({PartitionIdeal.from_json(i) for i in ideals}) == 6
    inv = payload(capsys, "tp", "invariant", "--g", "[1,3,2]")
    assert B.SchurBoolWitt.from_json(inv) == B.SchurBoolWitt(2, 0)
    hom = payload(capsys, "count", "force", "--z", "(1,0)", "--window-size", "3", "--boundary", '{"[1]": 2}')
    assert PartialHom.from_json(hom).n == 2


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "homs", "--n", "2", "--sizes", "1,2,3")
    assert code == 0 and out.splitlines() == ["size,n,count", "1,2,3", "2,2,9", "3,2,67"]


def test_trunc(capsys):
    code, out, _ = run(capsys, "ptyp", "trunc", "0;11;110", "--k", "4")
    assert code == 0 and out.startswith("0;11;110 valid=True lifts to T_4: 0")
    assert len(payload(capsys, "ptyp", "trunc", "--k", "3")) == 16


def test_minors_fail_witness(capsys):
    code, out, _ = run(capsys, "tp", "minors", "--g", "[1,-1]")
    assert code == 0 and out == "fail rows=[1] cols=[0] det=-1"


@pytest.mark.parametrize("argv", [
    ["lr", "[1,2]", "[1]", "[1]"],
    ["wbool", "add", "(1,a)", "(0,0)"],
    ["tp", "member", "--g", "[2,1]"],
    ["count", "force", "--z", "(1,0)", "--window-size", "3"],
    ["ptyp", "add", "p=2:(1,0)", "p=3:(1,0)"],
    ["wbool", "add", "(1,0)"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "InputError" in err


@pytest.mark.parametrize("argv", [
    ["wbool", "mul", "(1,0)", "(0,2)", "--check", "--window-size", "2"],
    ["mprod", "[1,1]", "[1]", "--nvars", "2"],
    ["count", "homs", "--sizes", "9"],
])
def test_window_errors_exit_3(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3


def test_property_violation_exit_4(capsys, monkeypatch):
    def broken(*args):
        raise PropertyViolation("kernel is not a rectangle")
    monkeypatch.setattr(B, "law_check_via_coproduct", broken)
    code, _, err = run(capsys, "wbool", "add", "(1,0)", "(1,0)", "--check")
    assert code == 4 and "PropertyViolation" in err


def test_error_payload_in_json_mode(capsys):
    code, out, _ = run(capsys, "lr", "[x]", "[1]", "[1]", "--format", "json")
    assert code == 2 and json.loads(out)["error"] == "InputError"


def test_verbose_provenance(capsys):
    code, out, _ = run(capsys, "kostka", "[2]", "[1,1]", "--format", "json", "--verbose")
    data = json.loads(out)
    assert data["provenance"]["command"][:2] == ["wittlab", "kostka"]
    code, out, _ = run(capsys, "kostka", "[2]", "[1,1]", "--verbose")
    assert out.splitlines()[0] == "1" and out.splitlines()[1].startswith("# ")


def test_cache_dir(capsys, tmp_path):
    argv = ["lr", "[4,3,2]", "[3,2]", "[2,2]", "--cache-dir", str(tmp_path)]
    first = run(capsys, *argv)
    assert list(tmp_path.glob("*.json"))
    assert run(capsys, *argv) == first


def test_suite_subset(capsys):
    code, out, _ = run(capsys, "suite", "acceptance", "--only", "1,2")
    assert code == 0 and out.splitlines()[-1] == "all criteria pass"
    assert out.splitlines()[0].startswith("[PASS]  1")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "wittlab", "wbool", "leq", "(1,0)", "(2,0)"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "true"
