"""End-to-end command line checks, run in process."""

import json

import pytest

from repgrowth.cli import main, parse_csv


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- bound -------------------------------------------------------------------

def test_bound_trivial_one(capsys):
    code, out, _ = run(capsys, "bound", "--family", "B", "--rank", "3",
                       "--n", "1", "--p", "5")
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "trivial-one"
    assert data["value"] == {"kind": "exact", "value": 1}
    assert data["valid"] is True


def test_bound_family_square(capsys):
    code, out, _ = run(capsys, "bound", "--family", "C", "--rank", "2",
                       "--n", "3", "--p", "3")
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "family-pow-2"
    assert data["value"] == {"kind": "exact", "value": 9}
    assert "threshold n >= 4" in data["guard_detail"]
    assert "not met" in data["guard_detail"]


def test_bound_interval_tags_precision(capsys):
    code, out, _ = run(capsys, "bound", "--family", "E", "--rank", "6",
                       "--n", "30", "--p", "7", "--prec", "64")
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "family-pow-5/2"
    value = data["value"]
    assert value["kind"] == "interval"
    assert value["prec_bits"] == 64
    assert float(value["lo"]) <= float(value["hi"])


def test_bound_precision_clamped(capsys):
    code, out, _ = run(capsys, "bound", "--family", "E", "--rank", "6",
                       "--n", "30", "--p", "7", "--prec", "999999")
    assert code == 0
    assert json.loads(out)["value"]["prec_bits"] == 1024
    code, out, _ = run(capsys, "bound", "--family", "E", "--rank", "6",
                       "--n", "30", "--p", "7", "--prec", "1")
    assert json.loads(out)["value"]["prec_bits"] == 16


def test_bound_csv_roundtrip(capsys):
    code, out, _ = run(capsys, "bound", "--family", "C", "--rank", "2",
                       "--n", "3", "--p", "3", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    assert len(rows) == 1
    assert rows[0]["name"] == "family-pow-2"
    assert rows[0]["value_kind"] == "exact"
    assert rows[0]["value"] == "9"


def test_bound_rejects_composite_characteristic(capsys):
    code, _, err = run(capsys, "bound", "--family", "A", "--rank", "3",
                       "--n", "10", "--p", "6")
    assert code == 1
    error = json.loads(err)["error"]
    assert error["type"] == "hypothesis"
    assert "prime" in error["message"]


# --- witness ------------------------------------------------------------------

def test_witness_good(capsys):
    code, out, _ = run(capsys, "witness", "good", "--rank", "5",
                       "--weight", "1,2,3,2,1")
    assert code == 0
    data = json.loads(out)
    assert data["witness"] == [3, 1, 1, 1, 3]
    assert data["verified"] is True
    assert any("every coefficient positive: True" in line
               for line in data["transcript"])


def test_witness_incr(capsys):
    code, out, _ = run(capsys, "witness", "incr", "--rank", "3",
                       "--weight", "3,1,0", "--m", "1")
    assert code == 0
    data = json.loads(out)
    assert data["witness"] == [1, 2, 0]
    assert any("bracket: 5 -> 5" in line for line in data["transcript"])


def test_witness_hypothesis_failure(capsys):
    code, _, err = run(capsys, "witness", "incr", "--rank", "3",
                       "--weight", "1,1,1", "--m", "1")
    assert code == 1
    error = json.loads(err)["error"]
    assert error["type"] == "hypothesis"
    assert "Σ i·a_i > m" in error["message"]


def test_witness_m_flag_rules(capsys):
    code, _, err = run(capsys, "witness", "middle2", "--rank", "4",
                       "--weight", "2,0,0,1", "--m", "1")
    assert code == 1
    assert "takes no --m" in json.loads(err)["error"]["message"]
    code, _, err = run(capsys, "witness", "incr", "--rank", "3",
                       "--weight", "3,1,0")
    assert code == 1
    assert "--m" in json.loads(err)["error"]["message"]


def test_witness_a5(capsys):
    code, out, _ = run(capsys, "witness", "a5", "--weight", "0,0,25,0,0")
    assert code == 0
    data = json.loads(out)
    assert data["members"] == 243
    assert data["orbit_total"] == 174960
    assert data["all_verified"] is True


def test_witness_weight_parse_error(capsys):
    code, _, err = run(capsys, "witness", "good", "--rank", "3",
                       "--weight", "1,x,3")
    assert code == 1
    assert json.loads(err)["error"]["type"] == "hypothesis"


# --- enumerate ------------------------------------------------------------------

def test_enumerate_rank_one_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "A", "--rank", "1",
                       "--p", "7", "--n-max", "7")
    assert code == 0
    data = json.loads(out)
    assert [row["count"] for row in data["rows"]] == [2, 2, 4, 4, 6, 6, 7]
    assert all(row["bound"]["kind"] for row in data["rows"])
    assert data["overflow"] == 0


def test_enumerate_empty_table(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "A", "--rank", "1",
                       "--p", "7", "--n-max", "0", "--format", "csv")
    assert code == 0
    assert out.strip() == ""
    code, out, _ = run(capsys, "enumerate", "--family", "A", "--rank", "1",
                       "--p", "7", "--n-max", "0")
    assert json.loads(out)["rows"] == []


def test_enumerate_premet_route(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "A", "--rank", "2",
                       "--p", "3", "--n-max", "8", "--bound", "premet")
    assert code == 0
    data = json.loads(out)
    assert data["bound"] == "premet"
    counts = [row["count"] for row in data["rows"]]
    assert counts == sorted(counts)


def test_enumerate_requires_prime(capsys):
    code, _, err = run(capsys, "enumerate", "--family", "A", "--rank", "1",
                       "--p", "4", "--n-max", "3")
    assert code == 1
    assert json.loads(err)["error"]["type"] == "hypothesis"


# --- mullineux --------------------------------------------------------------------

def test_mullineux_basic(capsys):
    code, out, _ = run(capsys, "mullineux", "--p", "3", "--partition", "2,1")
    assert code == 0
    data = json.loads(out)
    assert data["image"] == [3]
    assert data["involution_check"] == "ok"
    assert data["m_p"] == 3


def test_mullineux_zero_characteristic(capsys):
    code, out, _ = run(capsys, "mullineux", "--p", "0", "--partition", "3,2")
    assert code == 0
    data = json.loads(out)
    assert data["image"] == [2, 2, 1]
    assert "conjugation" in data["note"]


def test_mullineux_rejects_irregular(capsys):
    code, _, err = run(capsys, "mullineux", "--p", "3", "--partition", "2,2,2")
    assert code == 1
    assert "part 2 repeats 3 times (p = 3)" in json.loads(err)["error"]["message"]


# --- verify ------------------------------------------------------------------------

def test_verify_char2_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "char2")
    assert code == 0
    data = json.loads(out)
    assert data["summary"]["fail"] == 0
    assert data["summary"]["unknown"] == 0
    assert data["summary"]["external-assumption"] >= 1
    ids = [c["id"] for c in data["checks"]]
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))
    for check in data["checks"]:
        if check["id"].split("-")[1].startswith("9"):
            assert check["verdict"] == "external-assumption"


def test_verify_csv_rows(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "char2", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    assert all(row["verdict"] in
               ("pass", "fail", "unknown", "external-assumption")
               for row in rows)
    assert any(row["verdict"] == "pass" for row in rows)


# --- argparse plumbing ---------------------------------------------------------------

def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bound", "--family", "A", "--rank", "3"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["witness", "unknown-engine", "--weight", "1"])
    assert exc.value.code == 2
    capsys.readouterr()
