from dihedral_soergel.realizations import catalog
from dihedral_soergel.verify import (
    Report,
    merge_reports,
    quantum_identity_cases,
    verify_assumption,
    verify_morphism,
)


def test_report_status_and_sorting():
    import time

    rep = Report("x")
    rep.check("b", False, 1, 2)
    rep.check("a", False, 1, 3)
    rep.check("c", True)
    rep.finish(time.perf_counter(), timing=False)
    assert rep.status == "fail" and rep.cases_run == 3
    assert [f.case for f in rep.failures] == ["a", "b"]
    assert rep.to_json()["elapsed_ms"] == 0


def test_merge_reports():
    a, b = Report("p", cases_run=2), Report("p", cases_run=1)
    a.details = {"realization": "a2"}
    merged = merge_reports("p", [a, b])
    assert merged.passed and merged.cases_run == 3 and "a2" in merged.details


def test_identity_families_present():
    names = {case.split()[0] for case, _, _ in quantum_identity_cases(3, 2, 4)}
    assert names == {
        "parity", "shift", "nonvanishing", "product", "difference",
        "square-difference-a", "square-difference-b", "square-difference-c",
        "binomial-recursion-1", "binomial-recursion-2", "binomial-ratio",
    }


def test_same_color_y_recursion_breaks_parity():
    # [n+1]_Y = Y[n]_Y - [n-1]_Y (no color swap) would give [3]_Y = Y^2 - 1 != [3]_X,
    # contradicting the parity lemma; the swapped recursion is the consistent one
    from dihedral_soergel.bipoly import BiPoly
    from dihedral_soergel.qnum import Color, two_color_quantum as q

    prev, cur = BiPoly.const(0), BiPoly.const(1)
    for _ in range(2):
        prev, cur = cur, BiPoly.Y * cur - prev
    assert cur == BiPoly.Y * BiPoly.Y - 1
    assert cur != q(3, Color.X)
    assert q(3, Color.Y) == q(3, Color.X)


def test_assumption_report_details():
    rep = verify_assumption([catalog("m4-degenerate"), catalog("m4-degenerate-f2")], timing=False)
    assert rep.passed
    assert rep.details["realizations"]["m4-degenerate"]["holds"] is False
    assert rep.details["realizations"]["m4-degenerate-f2"]["holds"] is True


def test_morphism_seed_replay():
    a = verify_morphism(catalog("a2"), trials=2, seed=4, timing=False).to_json()
    b = verify_morphism(catalog("a2"), trials=2, seed=4, timing=False).to_json()
    assert a == b and a["status"] == "pass"
