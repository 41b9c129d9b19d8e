import json
import os
import shutil
import subprocess

import pytest

FDSPACE = os.environ.get("FDSPACE") or shutil.which("fdspace")
pytestmark = pytest.mark.skipif(not FDSPACE, reason="fdspace binary not found")


def run(*args):
    p = subprocess.run([FDSPACE, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def run_json(*args):
    code, out, err = run(*args)
    return code, json.loads(out) if out.strip() else None


def test_enumerate_counts():
    assert run_json("enumerate", "--example", "words", "--alphabet", "ab", "--level", "2")[1]["count"] == 4
    assert run_json("enumerate", "--example", "qsym", "--bound", "3", "--level", "1", "--space", "free")[1]["count"] == 8
    assert run_json("enumerate", "--example", "nc", "--level", "4")[1]["count"] == 14


def test_enumerate_is_byte_stable():
    args = ("enumerate", "--example", "dyck-height", "--level", "2")
    assert run(*args)[1] == run(*args)[1]


def test_check_exit_codes():
    code, out, _ = run("examples")
    assert code == 0
    for name in [line.split()[0] for line in out.splitlines()]:
        assert run("check", "--example", name, "--which", "decomposition")[0] == 0, name
    code, report = run_json("check", "--example", "truncated-words", "--which", "segal")
    assert code == 1 and report["verdict"] == "fail" and report["witnesses"]
    assert run("check", "--example", "quiver", "--which", "sheaf")[0] == 0
    assert run("check", "--example", "words", "--which", "culf")[0] == 0


def test_comult():
    code, t = run_json("comult", "--example", "words", "--alphabet", "abc", "--element", "abc")
    assert code == 0 and len(t["terms"]) == 4
    assert all(term["coeff"] == "+1/1" for term in t["terms"])
    code, t = run_json("comult", "--example", "qsym", "--bound", "11", "--element", "(2,3,1,1,4)")
    assert len(t["terms"]) == 6
    assert len(run_json("comult", "--example", "words", "--element", "")[1]["terms"]) == 1
    code, t = run_json("comult", "--example", "words", "--element", "ab", "--iterate", "2")
    assert len(t["terms"][0]["factors"]) == 3


def test_mobius_roundtrip_compare():
    code, mu = run_json("mobius", "--example", "bn", "--truncation", "7", "--bound", "6")
    assert code == 0
    assert list(mu["values"].values()) == ["+1/1", "-1/1"] + ["0/1"] * 5
    assert run("roundtrip", "--example", "words")[0] == 0
    code, r = run_json("compare", "--which", "tw")
    assert code == 0
    assert all(h["homs"] == h["n"] - h["m"] + 1 for h in r["hom_counts"])
    assert run("compare", "--which", "arrows")[0] == 0


def test_usage_errors_exit_2():
    assert run("enumerate", "--example", "nope", "--level", "1")[0] == 2
    assert run("comult", "--example", "words", "--element", "zz")[0] == 2
    code, _, err = run("compare", "--which", "tw", "--truncation", "3")
    assert code == 2 and "truncation >= 5" in err
    assert run("mobius", "--example", "bn", "--truncation", "1")[0] == 2
    assert run()[0] == 2
    assert run("check", "--example", "words", "--which", "nonsense")[0] == 2
    assert run("enumerate", "--example", "words", "--level", "1", "--format", "xml")[0] == 2
