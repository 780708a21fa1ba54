"""End-to-end behavior of the command-line interface."""

import json

import numpy as np
import pytest

from successruns import checks_iid
from successruns.checks import vk_row
from successruns.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse(out):
    record = json.loads(out)
    assert set(record) == {"kind", "parameters", "payload", "errata_flags"}
    return record


def test_pmf_first_run_wait(capsys):
    code, out, _ = run(
        capsys, "pmf", "--iid", "0.5", "--stat", "vk", "--k", "2",
        "--vmax", "10",
    )
    assert code == 0
    record = parse(out)
    assert record["kind"] == "pmf"
    assert record["parameters"]["model"] == "iid"
    rows = dict(tuple(row) for row in record["payload"]["rows"])
    assert rows[5] == pytest.approx(0.09375, abs=1e-15)
    assert record["payload"]["tail"] > 0.0


def test_pmf_overlapping_counts(capsys):
    code, out, _ = run(
        capsys, "pmf", "--iid", "0.5", "--stat", "counts", "--scheme", "III",
        "--k", "2", "--n", "3",
    )
    assert code == 0
    record = parse(out)
    assert record["kind"] == "count"
    rows = dict(tuple(row) for row in record["payload"]["rows"])
    assert rows[2] == pytest.approx(0.125, abs=1e-15)


def test_pmf_markov_longest(capsys):
    code, out, _ = run(
        capsys, "pmf", "--markov", "0.45", "0.3", "0.6", "--stat", "longest",
        "--n", "6",
    )
    assert code == 0
    record = parse(out)
    probs = [row[1] for row in record["payload"]["rows"]]
    assert sum(probs) == pytest.approx(1.0, abs=1e-12)


def test_pmf_rejects_bad_run_length(capsys):
    code, _, err = run(capsys, "pmf", "--iid", "0.5", "--stat", "vk", "--k", "0")
    assert code == 2
    assert "--k" in err


def test_pmf_requires_exactly_one_model(capsys):
    code, _, err = run(capsys, "pmf", "--stat", "vk", "--k", "2")
    assert code == 2
    assert "--iid" in err and "--markov" in err
    code, _, err = run(
        capsys, "pmf", "--iid", "0.5", "--markov", "0.4", "0.5", "0.6",
        "--stat", "vk", "--k", "2",
    )
    assert code == 2


def test_pmf_rejects_off_range_probability(capsys):
    code, _, err = run(capsys, "pmf", "--iid", "1.5", "--stat", "vk", "--k", "2")
    assert code == 2
    assert "(0, 1)" in err


def test_csv_format(capsys):
    code, out, _ = run(
        capsys, "pmf", "--iid", "0.5", "--stat", "vk", "--k", "2",
        "--vmax", "4", "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "kind,,pmf"
    assert "parameter,p,0.5" in lines
    assert "rows,2,0.25" in lines
    assert any(line.startswith("tail,") for line in lines)


def test_moments_fair_coin(capsys):
    code, out, _ = run(
        capsys, "moments", "--iid", "0.5", "--stat", "vk", "--k", "2"
    )
    assert code == 0
    record = parse(out)
    assert record["payload"]["mean"] == pytest.approx(6.0, abs=1e-10)
    assert record["payload"]["second_moment"] == pytest.approx(58.0, abs=1e-10)
    assert record["payload"]["variance"] == pytest.approx(22.0, abs=1e-9)


def test_fib_values(capsys):
    code, out, _ = run(capsys, "fib", "--k", "3", "--n", "9")
    assert code == 0
    assert parse(out)["payload"]["value"] == 81
    code, out, _ = run(capsys, "fib", "--k", "2", "--n", "1")
    assert code == 0
    assert parse(out)["payload"]["value"] == 1


def test_fib_closed_form_reports_residue(capsys):
    code, out, _ = run(
        capsys, "fib", "--k", "2", "--n", "40", "--method", "dresden"
    )
    assert code == 0
    payload = parse(out)["payload"]
    assert payload["value"] == 102334155
    assert payload["residue"] < 1e-4


def test_fib_overflow_is_an_error_not_a_crash(capsys):
    code, _, err = run(capsys, "fib", "--k", "2", "--n", "200")
    assert code == 1
    assert "overflow" in err.lower()


def test_fit_simulated_recovers_probability(capsys):
    code, out, _ = run(
        capsys, "fit", "--k", "2", "--simulate-iid", "0.5", "--reps", "200",
        "--seed", "7", "--bootstrap", "200",
    )
    assert code == 0
    payload = parse(out)["payload"]
    assert abs(payload["estimates"]["p"] - 0.5) <= 0.1
    assert 0.01 <= payload["standard_errors"]["p"] <= 0.06
    assert payload["converged"] is True
    assert payload["n_obs"] == 200


def test_fit_reads_sample_files(capsys, tmp_path):
    path = tmp_path / "waits.txt"
    path.write_text("# header\n5\n7\n\n3\n12\n")
    code, out, _ = run(capsys, "fit", "--k", "2", "--input", str(path))
    assert code == 0
    payload = parse(out)["payload"]
    assert payload["n_obs"] == 4
    assert 0.0 < payload["estimates"]["p"] < 1.0


def test_fit_rejects_unusable_files(capsys, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n")
    code, _, err = run(capsys, "fit", "--k", "2", "--input", str(empty))
    assert code == 1
    assert "no observations" in err
    mangled = tmp_path / "mangled.txt"
    mangled.write_text("5\nseven\n")
    code, _, err = run(capsys, "fit", "--k", "2", "--input", str(mangled))
    assert code == 1
    assert "seven" in err
    code, _, err = run(
        capsys, "fit", "--k", "2", "--input", str(tmp_path / "absent.txt")
    )
    assert code == 1


def test_fit_simulation_requires_seed(capsys):
    code, _, err = run(
        capsys, "fit", "--k", "2", "--simulate-iid", "0.5", "--reps", "50"
    )
    assert code == 2
    assert "--seed" in err


def test_seeded_runs_are_byte_identical(capsys):
    argv = (
        "fit", "--k", "2", "--simulate-markov", "0.5", "0.6", "0.5",
        "--reps", "120", "--seed", "42", "--bootstrap", "80",
    )
    code_a, out_a, _ = run(capsys, *argv)
    code_b, out_b, _ = run(capsys, *argv)
    assert code_a == code_b == 0
    assert out_a == out_b


def test_check_passes_and_writes_ledger(capsys, tmp_path):
    path = tmp_path / "ledger.ndjson"
    code, out, err = run(
        capsys, "check", "--n", "4", "--k", "2", "--ledger", str(path)
    )
    assert code == 0
    assert err == ""
    record = parse(out)
    assert record["kind"] == "check"
    assert record["payload"]["mismatches"] == []
    assert all(tv <= 1e-10 for _, _, tv in record["payload"]["oracle"])
    statuses = {fid: status for fid, status, _ in record["payload"]["formulas"]}
    assert statuses["iid-trk1-mean-gf"] == "ERRATUM"
    assert "iid-trk1-mean-gf=ERRATUM" in record["errata_flags"]
    text = path.read_text()
    assert '"iid-trk1-mean-gf"' in text


def test_check_rejects_oversized_horizon(capsys):
    code, _, err = run(capsys, "check", "--n", "30")
    assert code == 2
    assert "24" in err


def test_check_fails_on_injected_wrong_coefficient(capsys, monkeypatch):
    # corrupt one coefficient of the independent-trials truth table; every
    # formula measured against it must drift and the run must turn red
    def crooked(model, k, vmax):
        row = vk_row(model, k, vmax).copy()
        if vmax >= k:
            row[k] *= 1.02
        return row

    monkeypatch.setattr(checks_iid, "vk_row", crooked)
    code, out, err = run(capsys, "check", "--n", "3", "--k", "1")
    assert code == 1
    record = parse(out)
    assert record["payload"]["mismatches"] != []
    assert "expected CONFIRMED, observed ERRATUM" in err
    # the complaint names the printed location of a drifted formula
    assert "anchor L" in err


def test_check_output_is_deterministic(capsys):
    code_a, out_a, _ = run(capsys, "check", "--n", "3", "--k", "1")
    code_b, out_b, _ = run(capsys, "check", "--n", "3", "--k", "1")
    assert code_a == code_b == 0
    assert out_a == out_b
