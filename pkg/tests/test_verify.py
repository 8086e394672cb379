"""Adjudication engine: suite verdicts, report serialization, strict rules."""

import json

import pytest

from irrlab import verify
from irrlab.verify import (
    ClaimRecord,
    VerifyConfig,
    check_spine_order,
    extremal_trees,
    ordering_pattern,
    record_trips_strict,
    render_params,
    report_to_csv,
    report_to_json,
    report_to_text,
    run_all,
    strict_failures,
    table1_exact,
    table1_rows,
)


@pytest.fixture(scope="module")
def full_report():
    return run_all()


def _by_claim(report, claim):
    return [rec for rec in report.records if rec.claim == claim]


def test_reference_table_shape():
    assert len(verify.REFERENCE_TABLE) == 40
    assert verify.REFERENCE_TABLE[0] == (3, 3, 32, 55, 23, 55)
    assert verify.REFERENCE_TABLE[-1] == (10, 10, 1082, 2008, 926, 2008)
    # rows are sorted by (n, m) with no duplicates
    keys = [(r[0], r[1]) for r in verify.REFERENCE_TABLE]
    assert keys == sorted(keys) and len(set(keys)) == 40


def test_table1_rows_regenerate_reference():
    rows = table1_rows()
    assert table1_exact(rows)
    first = rows[0]
    assert (first["irr_direct"], first["sigma_direct"]) == (32, 104)
    # the direct sigma column disagrees with the claimed one on every row
    assert all(row["sigma_direct"] != row["sigma_claimed"] for row in rows)
    # ... while the direct irr column always agrees
    assert all(row["irr_direct"] == row["irr_claimed"] for row in rows)


def test_full_report_statuses(full_report):
    assert full_report.summary["bound_violated"] == 0
    assert full_report.summary["unverifiable"] == 6
    assert strict_failures(full_report) == []
    assert full_report.summary["match"] + full_report.summary["mismatch"] + sum(
        (full_report.summary["bound_holds"], full_report.summary["unverifiable"])
    ) == len(full_report.records)


def test_records_are_sorted(full_report):
    keys = [(rec.claim, render_params(rec.params)) for rec in full_report.records]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)  # (claim, params) is a unique key


def test_sigma_caterpillar_mismatch_set(full_report):
    recs = _by_claim(full_report, "SIG-CAT")
    mismatch = {(r.param("n"), r.param("m")) for r in recs if r.status == "mismatch"}
    match = {(r.param("n"), r.param("m")) for r in recs if r.status == "match"}
    assert mismatch == {(n, m) for n in range(3, 13) for m in range(1, 13)}
    assert match == {(2, m) for m in range(1, 13)}
    cell = next(r for r in recs if (r.param("n"), r.param("m")) == (3, 3))
    assert (cell.claimed, cell.computed, cell.delta) == (55, 104, 49)


def test_exact_claims_all_match(full_report):
    for claim in ("IRR-CAT", "IRR-STAR", "SIG-KMN", "SIG-DSTAR", "IRR-CNN",
                  "IRR-SPINE", "IRR-SEQ4-PY", "MAXEDGES", "TABLE1", "IRR-TREE-MAX",
                  "HY1-ORDER", "BELL-MAX"):
        recs = _by_claim(full_report, claim)
        assert recs, claim
        assert all(r.status == "match" for r in recs), claim


def test_adjudicated_claims_record_findings(full_report):
    # expected mismatch inventory for the conjectured/incorrect forms
    assert all(r.status == "mismatch" for r in _by_claim(full_report, "HY-SIG4"))
    hy3 = _by_claim(full_report, "HY-SIG3")
    assert len(hy3) == 100
    matched = {(r.param("d1"), r.param("d2"), r.param("d3")) for r in hy3 if r.status == "match"}
    # the formula is exact only where the degrees form an arithmetic
    # progression with step in {-1, 0, 1}; everywhere else it mismatches
    assert matched == {(1, 2, 3), (2, 2, 2), (3, 2, 1), (3, 4, 5), (4, 4, 4), (5, 4, 3)}
    hyp = _by_claim(full_report, "IRR-SEQ4-HYP")  # sorted by rendered params: a=5 before a=8
    assert [(r.claimed, r.computed) for r in hyp] == [(70, 76), (134, 146)]
    sig3max = _by_claim(full_report, "SIG3-MAX")
    assert len(sig3max) == 34
    assert all(r.status == "mismatch" for r in sig3max)
    tree_max = _by_claim(full_report, "SIG-TREE-MAX")
    assert {r.param("n"): r.status for r in tree_max} == {
        3: "match", 4: "mismatch", 5: "mismatch", 6: "mismatch", 7: "mismatch", 8: "mismatch"
    }


def test_tree_extremes_witnesses(full_report):
    for rec in _by_claim(full_report, "IRR-TREE-MAX"):
        n = rec.param("n")
        star_degseq = "-".join(map(str, [n - 1] + [1] * (n - 1)))
        assert rec.param("witness") == star_degseq
        assert rec.computed == (n - 1) * (n - 2)


def test_bell_witnesses(full_report):
    recs = {r.param("n"): r for r in _by_claim(full_report, "BELL-MAX")}
    assert recs[4].param("witness") == "2-2-2-0"
    assert recs[4].param("witness_edges") == 3
    assert abs(recs[4].computed - 0.5) <= 1e-6
    assert recs[5].param("witness") == "2-2-2-0-0"
    assert recs[6].param("witness") == "3-3-3-3-0-0"


def test_bounds_are_aggregates_with_tight_witnesses(full_report):
    lem3 = {(r.param("family"), r.param("n")): r for r in _by_claim(full_report, "LEM3-BOUND")}
    assert all(r.status == "bound_holds" for r in lem3.values())
    # equality case: the 3-vertex path attains the degree-gap bound
    assert abs(lem3[("trees", 3)].computed) <= 1e-9
    sigt = {(r.param("family"), r.param("n")): r for r in _by_claim(full_report, "SIGT-BOUND")}
    assert all(r.status == "bound_holds" for r in sigt.values())
    assert sigt[("trees", 4)].computed == 0  # the 4-star attains the bound
    ghal = _by_claim(full_report, "IRRT-GHAL")
    assert len(ghal) == 14 and all(r.status == "bound_holds" for r in ghal)


def test_ordering_pattern_shapes():
    assert ordering_pattern((5, 4)) == (4, 5)
    assert ordering_pattern((5, 4, 3)) == (4, 3, 5)
    assert ordering_pattern((10, 8, 3, 2)) == (8, 3, 2, 10)
    assert ordering_pattern((6, 5, 4, 3, 2)) == (5, 3, 4, 2, 6)
    assert ordering_pattern((7, 6, 5, 4, 3, 2)) == (6, 3, 5, 4, 2, 7)


def test_check_spine_order_presets():
    rec = check_spine_order((10, 8, 3, 2))
    assert rec.status == "match"
    assert rec.claimed == rec.computed == 146
    assert rec.param("pattern") == "8-3-2-10"


def test_check_spine_order_unrealizable_pattern():
    # placing degree 1 in the interior makes the claimed pattern unrealizable
    rec = check_spine_order((3, 2, 1))
    assert rec.param("pattern") == "unrealizable"
    assert rec.claimed is None
    assert rec.status == "mismatch"
    with pytest.raises(ValueError):
        check_spine_order((5,))
    with pytest.raises(ValueError):
        check_spine_order((0, 2))
    with pytest.raises(ValueError, match="capped at 8"):
        check_spine_order((2,) * 9)


def test_extremal_trees_values():
    ext = extremal_trees(4)
    assert ext["count"] == 16
    assert ext["max_irr"] == 6 and ext["argmax_irr_degseq"] == (3, 1, 1, 1)
    assert ext["min_irr"] == 2
    assert ext["max_sigma"] == 12 and ext["argmax_sigma_degseq"] == (3, 1, 1, 1)
    assert ext["min_sigma"] == 2
    ext2 = extremal_trees(2)
    assert ext2["count"] == 1 and ext2["max_irr"] == 0
    with pytest.raises(ValueError):
        extremal_trees(1)
    with pytest.raises(ValueError):
        extremal_trees(10)


def test_config_validation():
    VerifyConfig().validate()
    with pytest.raises(ValueError):
        VerifyConfig(suites=("nope",)).validate()
    with pytest.raises(ValueError):
        VerifyConfig(grid_n=(1, 40), grid_m=(1, 12)).validate()  # cell cap
    with pytest.raises(ValueError):
        VerifyConfig(max_tree_n=9).validate()
    with pytest.raises(ValueError):
        VerifyConfig(max_graph_n=7).validate()
    with pytest.raises(ValueError):
        VerifyConfig(bell_range=(2, 7)).validate()
    with pytest.raises(ValueError):
        VerifyConfig(spine_max_len=7).validate()


def test_csv_shape(full_report):
    text = report_to_csv(full_report)
    lines = text.strip().split("\n")
    assert lines[0] == "claim,params,claimed,computed,delta,status"
    assert len(lines) == len(full_report.records) + 1
    cells = lines[1].split(",")
    assert len(cells) == 6
    # unverifiable records leave computed and delta empty
    unv = [ln for ln in lines if ln.endswith(",unverifiable")]
    assert len(unv) == 6
    assert all(ln.split(",")[3] == "" for ln in unv)


def test_json_round_trips(full_report):
    payload = json.loads(report_to_json(full_report))
    assert payload["provenance"]["tool"] == "irrlab"
    assert payload["summary"]["bound_violated"] == 0
    assert len(payload["records"]) == len(full_report.records)
    rec = payload["records"][0]
    assert set(rec) == {"claim", "params", "claimed", "computed", "delta", "status"}


def test_text_has_summary(full_report):
    text = report_to_text(full_report)
    assert "bound_violated   0" in text
    assert text.count("\n") >= len(full_report.records)


def test_report_is_deterministic():
    config = VerifyConfig(suites=("grid", "bell", "spine-order"))
    a = report_to_csv(run_all(config))
    b = report_to_csv(run_all(config))
    assert a == b


def test_single_suite_selection():
    report = run_all(VerifyConfig(suites=("bell",)))
    assert {rec.claim for rec in report.records} == {"BELL-MAX"}
    assert report.provenance["suites"] == "bell"


def test_strict_rules():
    trips = record_trips_strict
    mk = lambda claim, status, **params: ClaimRecord(claim, tuple(params.items()), 1, 2, status)
    assert trips(mk("LEM3-BOUND", "bound_violated", family="trees", n=4))
    assert not trips(mk("LEM3-BOUND", "bound_holds", family="trees", n=4))
    assert not trips(mk("HY-SIG3", "mismatch", d1=1, d2=2, d3=3))
    assert not trips(mk("SIG-CAT", "mismatch", n=5, m=2))  # expected wrong cell
    assert trips(mk("SIG-CAT", "mismatch", n=2, m=2))  # unexpected: n=2 must match
    assert not trips(mk("SIG-TREE-MAX", "mismatch", n=6))
    assert trips(mk("SIG-TREE-MAX", "mismatch", n=3))
    assert trips(mk("IRR-CAT", "mismatch", n=4, m=4))
    assert not trips(mk("SIG-SEQ4-CONST", "unverifiable", a=1, b=2, c=3, d=4))
