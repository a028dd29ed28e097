import io
import json

import pytest

from qorbit.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_orbits_json():
    code, out, _ = call("orbits", "15", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [o["length"] for o in doc["orbits"]] == [14, 14, 10, 10]


def test_orbits_table_and_csv():
    assert "(yx)^3(y2x)^1(yx)^3" in call("orbits", "15")[1]
    assert call("orbits", "15", "--format", "csv")[1].startswith("a,b,c,length,word,label\n")


def test_ambiguous():
    assert call("ambiguous", "37")[1] == "tau = 124\n"
    code, out, _ = call("ambiguous", "2", "--list")
    assert out.splitlines()[0] == "tau = 8"
    assert len(out.splitlines()) == 9


def test_classify():
    code, out, _ = call("classify", "4", "1", "15")
    assert code == 0
    assert "ambiguous no" in out
    assert "(0+√15)/1" in out


@pytest.mark.parametrize("argv", [("classify", "1", "3", "15"), ("classify", "0", "2", "60"), ("orbits", "16"),
                                  ("reduce", "0", "0", "15")])
def test_invalid_elements_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2
    assert "Error" in err


def test_membership_error_message():
    assert "MembershipError" in call("classify", "1", "3", "15")[2]


@pytest.mark.parametrize("argv", [(), ("bogus",), ("orbits",), ("orbits", "x"), ("orbits", "15", "--format", "xml"),
                                  ("verify", "nope"), ("classes", "5", "5", "--partition", "3")])
def test_usage_errors_exit_1(argv):
    assert call(*argv)[0] == 1


def test_reduce_and_word():
    code, out, _ = call("reduce", "4", "1", "15", "--trace")
    assert code == 0
    assert "step 0: 4,1,1" in out
    assert "reduct    3,-6,1" in out
    assert call("word", "4", "1", "15")[1].endswith("word      (yx)^3(y2x)^1(yx)^3\n")


def test_classes():
    out = call("classes", "5", "5")[1]
    assert out.startswith("24 classes mod 5")
    out = call("classes", "10", "5", "--partition", "5")[1]
    assert "C1 (2): [0,1,0] [0,4,0]" in out


def test_subsets():
    assert call("subsets", "15")[1] == "predicted 4\nrealized  4\norbits    4\n"


def test_diagram(tmp_path):
    path = tmp_path / "q15.dot"
    code, _, _ = call("diagram", "15", "--out", str(path))
    assert code == 0
    text = path.read_text(encoding="utf-8")
    assert "tau=48" in text and "digraph" in text


def report_of(out):
    return json.loads(out[: out.rindex("}") + 1])


def test_verify_expectations():
    code, out, _ = call("verify", "thm3.6", "--n", "7", "--p", "3", "--expect", "refuted")
    assert code == 0
    assert report_of(out)["counterexamples"]
    assert call("verify", "thm3.6", "--n", "7", "--p", "3")[0] == 3
    assert call("verify", "table1")[0] == 0
    assert call("verify", "table1", "--expect", "refuted")[0] == 3


def test_verify_thm2_8_takes_n():
    code, out, _ = call("verify", "thm2.8", "--n", "8,32,128")
    assert code == 0
    assert [it["orbits"] for it in report_of(out)["statistics"]["items"]] == [2, 2, 2]
