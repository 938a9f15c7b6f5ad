import json

import pytest
from click.testing import CliRunner

from dihedral_soergel import bimodule as bm
from dihedral_soergel.cli import main
from dihedral_soergel.realizations import catalog
from dihedral_soergel.dihedral import GroupElem
from dihedral_soergel.symalg import QElem


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, list(args))

    return invoke


def test_qnum_examples(run):
    assert run("qnum", "--n", "4", "--color", "X").output == "X^2*Y - 2*X\n"
    assert run("qnum", "--n", "0", "--color", "Y").output == "0\n"
    assert run("qnum", "--n", "4", "--color", "X", "--realization", "b2.json").output == "0\n"
    assert run("qnum", "--n", "3", "--color", "X", "--realization", "h2").output.strip() == "t"


def test_qnum_bad_arguments(run):
    assert run("qnum", "--n", "x").exit_code == 2
    assert run("qnum", "--n", "2", "--color", "Q").exit_code == 2
    assert run("qnum", "--n", "-1").exit_code == 2
    assert run("qnum", "--n", "2", "--realization", "missing").exit_code == 2


def test_qbinom(run):
    assert run("qbinom", "--m", "4", "--n", "2", "--color", "X").output == "X^2*Y^2 - 3*X*Y + 2\n"
    assert run("qbinom", "--m", "4", "--n", "2", "--realization", "m4-degenerate").output == "2\n"
    assert run("qbinom", "--m", "4", "--n", "2", "--realization", "m4-degenerate-f2").output == "0\n"


def _avalue(run, word, target):
    result = run("avalue", "--word", word, "--target", target, "--json")
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_avalue_examples(run):
    assert _avalue(run, "sts", "s") == {
        "numerator": "X", "denominator_roots": ["s", "t", "sts"], "matches_closed_form": True,
    }
    got = _avalue(run, "ss", "e")
    assert got["numerator"] == "0" and got["matches_closed_form"]
    assert _avalue(run, "s", "e") == {"numerator": "1", "denominator_roots": ["s"], "matches_closed_form": True}


def test_avalue_human_output(run):
    out = run("avalue", "--word", "sts", "--target", "s").output
    assert "matches_closed_form: true" in out
    assert "value: (X)/(a_s*a_t*(X*a_s + a_t))" in out


def test_avalue_guard(run):
    assert run("avalue", "--word", "st" * 6, "--target", "e").exit_code == 2
    assert run("avalue", "--word", "sq", "--target", "e").exit_code == 2


def test_verify_quantum(run):
    result = run("verify", "quantum", "--max-n", "25")
    assert result.exit_code == 0
    assert result.output.startswith("verify quantum: pass")


def test_verify_theorem_json(run):
    result = run("verify", "theorem", "--max-length", "5", "--json")
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["status"] == "pass" and report["failures"] == []
    assert set(report) >= {"command", "status", "cases_run", "failures", "elapsed_ms"}


def test_verify_morphism_negative_control(run):
    result = run("verify", "morphism", "--realization", "m4-degenerate", "--trials", "1", "--json")
    assert result.exit_code == 1
    report = json.loads(result.output)
    assert report["status"] == "fail"
    assert any("phi_on_generator" in f["case"] for f in report["failures"])
    details = report["details"]["m4-degenerate"]
    assert {"k": 2, "color": "X", "value": "2"} in details["assumption_witnesses"]


def test_verify_morphism_small(run):
    result = run("verify", "morphism", "--realization", "a2", "--realization", "b2", "--trials", "2")
    assert result.exit_code == 0, result.output


def test_verify_assumption_and_specialized(run):
    assert run("verify", "assumption").exit_code == 0
    assert run("verify", "specialized", "--realization", "g2").exit_code == 0
    assert run("verify", "assumption", "--realization", "universal").exit_code == 2


def test_verify_bad_suite(run):
    assert run("verify", "nonsense").exit_code == 2


def test_reports_are_byte_deterministic(run):
    args = ("verify", "morphism", "--realization", "a2", "--trials", "2", "--seed", "9", "--json", "--no-timing")
    first, second = run(*args), run(*args)
    assert first.output == second.output
    assert json.loads(first.output)["elapsed_ms"] == 0


def test_bad_realization_file(run, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"m": 3, "coef": {"kind": "integers"}, "rank": 2,
                               "alpha_s": [1, 0], "alpha_t": [0, 1],
                               "covector_s": [3, -1], "covector_t": [-1, 2]}))
    result = run("verify", "specialized", "--realization", str(bad))
    assert result.exit_code == 2
    assert "pairing not 2" in result.output


def test_member_command(run, tmp_path):
    r = catalog("a2")
    good = tmp_path / "good.json"
    good.write_text(json.dumps(bm.b_element(r, "sts").to_json()))
    result = run("member", "--input", str(good), "--realization", "a2")
    assert (result.exit_code, result.output) == (0, "true\n")
    _, rf = r.root(GroupElem.from_word("s"))
    q = QElem(r.one(), {rf: 1})
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(bm.Localized(r, "s", (q, -q)).to_json()))
    result = run("member", "--input", str(bad), "--realization", "a2", "--json")
    assert result.exit_code == 1
    assert json.loads(result.output) == {"member": False, "word": "s"}
    assert run("member", "--input", str(good), "--realization", "m4-degenerate").exit_code == 2
