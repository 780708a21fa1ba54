"""The formula verification catalog and its drift detection."""

import json
import re

import pytest

from successruns.checks import (
    TOL,
    CheckResult,
    EXPECTED_STATUS,
    diff_expected,
    run_all,
    write_ledger,
)


@pytest.fixture(scope="module")
def results():
    return run_all()


def test_catalog_size_and_order(results):
    assert len(results) == 134
    ids = [r.formula_id for r in results]
    assert ids == sorted(ids)
    assert len(set(ids)) == len(ids)


def test_every_entry_is_well_formed(results):
    anchor = re.compile(r"^L\d+(-\d+)?$")
    for r in results:
        assert r.status in ("CONFIRMED", "ERRATUM", "NOT_TRANSCRIBED")
        assert anchor.match(r.anchor), r.formula_id
        assert r.parameters
        if r.status == "CONFIRMED":
            assert r.max_deviation is not None and r.max_deviation <= TOL
        elif r.status == "ERRATUM":
            assert r.max_deviation is not None and r.max_deviation > TOL
            assert r.note  # a defect always carries a description
        else:
            assert r.max_deviation is None
            assert r.note


def test_statuses_match_reviewed_ledger(results):
    assert diff_expected(results) == []
    assert len(EXPECTED_STATUS) == 134


def test_known_erratum_is_flagged(results):
    by_id = {r.formula_id: r for r in results}
    mean_gf = by_id["iid-trk1-mean-gf"]
    assert mean_gf.status == "ERRATUM"
    assert mean_gf.max_deviation > 0.1
    assert EXPECTED_STATUS["iid-trk1-mean-gf"] == "ERRATUM"


def test_confirmed_entries_dominate(results):
    confirmed = sum(1 for r in results if r.status == "CONFIRMED")
    errata = sum(1 for r in results if r.status == "ERRATUM")
    assert confirmed == 82
    assert errata == 51


def test_drift_detection_reports_all_directions():
    fake = [
        CheckResult("a-one", "L1", "CONFIRMED", 1e-12, "p in {0.5}"),
        CheckResult("b-two", "L2", "ERRATUM", 0.3, "p in {0.5}", note="off"),
    ]
    expected = {"a-one": "CONFIRMED", "b-two": "CONFIRMED", "c-three": "ERRATUM"}
    diff = diff_expected(fake, expected=expected)
    assert ("b-two", "CONFIRMED", "ERRATUM") in diff
    assert ("c-three", "ERRATUM", "<missing>") in diff
    fake.append(CheckResult("d-four", "L4", "CONFIRMED", 0.0, "p in {0.5}"))
    diff = diff_expected(fake, expected=expected)
    assert ("d-four", "<unlisted>", "CONFIRMED") in diff


def test_ledger_round_trips(results, tmp_path):
    path = tmp_path / "ledger.ndjson"
    write_ledger(results, path)
    lines = path.read_text().splitlines()
    assert len(lines) == len(results)
    rows = [json.loads(line) for line in lines]
    assert [row["formula_id"] for row in rows] == [r.formula_id for r in results]
    for row, r in zip(rows, results):
        assert set(row) == {
            "formula_id",
            "anchor",
            "status",
            "max_deviation",
            "parameters",
            "note",
        }
        assert row["status"] == r.status
        assert row["anchor"] == r.anchor
        if r.max_deviation is None:
            assert row["max_deviation"] is None
        else:
            assert row["max_deviation"] == pytest.approx(r.max_deviation)
