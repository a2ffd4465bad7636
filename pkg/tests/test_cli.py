import io
import json
import subprocess
import sys

import pytest

from qhall.cli import run
from qhall.core import MultiPartition


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_wp_json():
    code, out, _ = call("wp", "--n", "2", "--word", "1,2,1")
    assert code == 0
    assert out == '{"n":2,"parts":[[1,1,1],[]]}\n'


def test_wp_empty_word():
    assert call("wp", "--n", "2", "--word", "")[1] == '{"n":2,"parts":[[],[]]}\n'
    assert call("wp", "--n", "2", "--word", "", "--format", "text")[1] == "(∅,∅)\n"


def test_compact_words_only_for_small_n():
    assert call("wp", "--n", "2", "--word-compact", "121")[1] == '{"n":2,"parts":[[1,1,1],[]]}\n'
    code, _, err = call("wp", "--n", "10", "--word-compact", "121")
    assert code == 1 and "n <= 9" in err


def test_fiber_count_and_listing():
    code, out, _ = call("fiber", "--n", "3", "--pi", "[[4,3,3,1,1],[3,2,1],[2,2]]", "--count-only")
    assert code == 0 and int(out) == 18
    code, out, _ = call("fiber", "--n", "3", "--pi", "[[3,2,1],[1,1],[1]]")
    words = json.loads(out)
    assert len(words) == 7 and [1, 2, 2, 1, 1, 3, 3, 3, 2] in words


def test_fiber_cap(monkeypatch):
    args = ("fiber", "--n", "3", "--pi", "[[3,2,1],[1,1],[1]]")
    assert call(*args, "--fiber-cap", "6")[0] == 1
    monkeypatch.setenv("QHALL_FIBER_CAP", "6")
    code, _, err = call(*args)
    assert code == 1 and "cap" in err
    assert call(*args, "--fiber-cap", "7")[0] == 0


@pytest.mark.parametrize(
    "argv,needle",
    [
        (("fiber", "--n", "3", "--pi", "[[3,2,1],[1,1]"), "--pi"),
        (("separated", "--pi", '{"parts":[[1],[]]}'), "'n'"),
        (("separated", "--pi", '{"n":2}'), "'parts'"),
        (("order", "poset", "--d", "[2,x]"), "--d"),
        (("wp", "--n", "2", "--word", "1,3"), "--word"),
        (("wp", "--n", "1", "--word", "1"), "--n"),
        (("canonical-word", "--pi", "[[1],[1]]"), "not separated"),
    ],
)
def test_bad_input_exits_one_and_names_the_field(argv, needle):
    code, out, err = call(*argv)
    assert code == 1 and out == ""
    assert needle in err


def test_unknown_verb_is_bad_input():
    assert call("frobnicate")[0] == 1


def test_order_verbs():
    assert call("order", "leq", "--mu", "[[2],[1]]", "--pi", "[[2,1],[]]")[1] == "true\n"
    assert call("order", "leq", "--mu", "[[2,1],[]]", "--pi", "[[1],[1,1]]")[1] == "false\n"
    dot = call("order", "poset", "--d", "2,1", "--format", "dot")[1]
    assert dot.startswith("digraph") and dot.count("->") == 4
    poset = json.loads(call("order", "poset", "--d", "2,1")[1])
    assert len(poset["elements"]) == 4
    ideal = json.loads(call("order", "ideal", "--pi", "[[2,1],[]]")[1])
    assert [MultiPartition.from_json(x) for x in ideal] == [
        MultiPartition(2, ((2,), (1,))),
        MultiPartition(2, ((2, 1), ())),
    ]


def test_hall_verbs():
    out = call("hall", "bracket", "--n", "2", "--word", "1,1,2", "--pi", "[[2,1],[]]")[1]
    assert json.loads(out) == {"var": "q", "coeffs": [1, 1]}
    steps = json.loads(call("hall", "top-step", "--pi", "[[2,1],[]]", "--i", "1")[1])
    assert {json.dumps(s["coeff"]["coeffs"]) for s in steps} == {"[1]", "[0, 1]"}
    out = call("hall", "reduced-count", "--n", "2", "--word", "1,1,2", "--pi", "[[2,1],[]]")[1]
    assert json.loads(out)["coeffs"] == [1]


def test_basis_verbs(tmp_path):
    rad = json.loads(call("basis", "radical", "--d", "2,1")[1])
    assert len(rad) == 1 and len(rad[0]["terms"]) == 4
    pbw = json.loads(call("basis", "pbw", "--pi", "[[2],[1]]")[1])
    assert len(pbw["terms"]) == 3
    exp = json.loads(call("basis", "expand", "--n", "2", "--word", "1,2,1")[1])
    assert len(exp["terms"]) == 4
    csv_text = call("basis", "matrix", "--d", "2,1", "--format", "csv")[1]
    assert csv_text.splitlines()[0].startswith("pi,word,")
    assert len(csv_text.splitlines()) == 4
    sec = tmp_path / "sec.json"
    sec.write_text(json.dumps([[1, 2, 1], [1, 1, 2], [2, 1, 1]]))
    a = json.loads(call("basis", "matrix", "--d", "2,1", "--section", "file", "--section-file", str(sec))[1])
    b = json.loads(call("basis", "matrix", "--d", "2,1", "--section", "canonical")[1])
    assert a == b
    target = tmp_path / "m.json"
    assert call("basis", "matrix", "--d", "2,1", "--section", "random", "--seed", "4", "--out", str(target))[0] == 0
    assert json.loads(target.read_text())["rows"]


def test_output_is_deterministic():
    args = ("basis", "matrix", "--d", "2,1,1", "--section", "random", "--seed", "9")
    assert call(*args) == call(*args)


def test_json_outputs_round_trip():
    out = call("wp", "--n", "3", "--word", "1,2,3,3")[1]
    pi = MultiPartition.from_json(out)
    assert call("separated", "--pi", out)[1] == "true\n"
    cw = json.loads(call("canonical-word", "--pi", out)[1])
    assert call("wp", "--n", "3", "--word", ",".join(map(str, cw["letters"])))[1] == out
    assert pi.n == 3


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "qhall", "wp", "--n", "2", "--word", "1,2,1"], capture_output=True, text=True
    )
    assert res.returncode == 0 and res.stdout == '{"n":2,"parts":[[1,1,1],[]]}\n'


def test_verify_quick_reports_each_criterion():
    code, out, _ = call("verify", "quick", "--format", "json")
    report = json.loads(out)
    assert [r["key"] for r in report] == [1, 2, 3, 7]
    # nonzero exit whenever a criterion fails
    assert code == (0 if all(r["passed"] for r in report) else 2)
