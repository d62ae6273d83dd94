"""Command line surface: schemas, formats, exit codes, stability."""

import json
import math

import pytest

from hyperd import cli


def run(argv, capsys):
    code = cli.main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def run_json(argv, capsys, expect=0):
    code, out, err = run(argv, capsys)
    assert code == expect, err or out
    return json.loads(out)


RECORD_KEYS = {"z_re", "z_im", "value_re", "value_im",
               "err_estimate", "terms_used", "flags"}


# ---------------------------------------------------------------------------
# eval

def test_eval_classical_exponential(capsys):
    doc = run_json(["eval", "--eq", "1f1", "--a", "1", "--c", "1",
                    "--z", "0.3"], capsys)
    assert doc["command"] == "eval"
    assert doc["eq"] == "1f1"
    assert doc["func"] == "F"
    assert doc["params"] == {"alpha": 0.0, "theta": 1.0}
    assert doc["classical"] == {"a": 1.0, "c": 1.0}
    (rec,) = doc["records"]
    assert set(rec) == RECORD_KEYS
    # F with a = c = 1 collapses to exp(z)
    assert abs(rec["value_re"] - math.exp(0.3)) < 1e-14
    assert rec["value_im"] == 0.0
    assert rec["err_estimate"] >= 0.0
    assert rec["terms_used"] > 0
    assert rec["flags"] == []


def test_eval_lie_parameters_and_complex_literal(capsys):
    doc = run_json(["eval", "--eq", "2f1", "--m", "1", "--beta", "0.3",
                    "--mu", "0.2", "--z", "0.2+0.1i"], capsys)
    (rec,) = doc["records"]
    assert rec["z_re"] == 0.2
    assert rec["z_im"] == 0.1
    assert doc["params"]["alpha"] == 1.0
    assert abs(doc["classical"]["c"] - 2.0) < 1e-15


def test_eval_d_function_value(capsys):
    doc = run_json(["eval", "--eq", "0f1", "--func", "D", "--m", "2",
                    "--z", "0.5"], capsys)
    (rec,) = doc["records"]
    assert abs(rec["value_re"] - (-2.3258700592553354)) < 1e-12


def test_eval_u_route_echoed(capsys):
    doc = run_json(["eval", "--eq", "2f1", "--func", "U", "--m", "1",
                    "--beta", "0.3", "--mu", "0.2",
                    "--route", "LogPlusD", "--z", "-0.4"], capsys)
    assert doc["route"] == "LogPlusD"
    (rec,) = doc["records"]
    assert abs(rec["value_re"] - 2.0822876489523252) < 1e-12


def test_eval_multiple_z_flags(capsys):
    doc = run_json(["eval", "--eq", "0f1", "--alpha", "0.5",
                    "--z", "0.1", "--z", "0.2", "--z", "0.3"], capsys)
    assert [r["z_re"] for r in doc["records"]] == [0.1, 0.2, 0.3]


def test_eval_grid_row_major(capsys):
    doc = run_json(["eval", "--eq", "0f1", "--alpha", "0.5",
                    "--grid", "0.1:0.2:2,0.3:0.4:2"], capsys)
    got = [(r["z_re"], r["z_im"]) for r in doc["records"]]
    # imaginary part is the outer loop
    assert got == [(0.1, 0.3), (0.2, 0.3), (0.1, 0.4), (0.2, 0.4)]


def test_eval_output_is_bit_stable(capsys):
    argv = ["eval", "--eq", "1f1", "--func", "logsol", "--m", "1",
            "--theta", "0.7", "--z", "0.6+0.2i", "--z", "1.1"]
    _, out1, _ = run(argv, capsys)
    _, out2, _ = run(argv, capsys)
    assert out1 == out2


def test_table_csv_matches_eval_json(capsys):
    grid = "0.2:0.6:3,0.0:0.1:2"
    base = ["--eq", "1f1", "--m", "1", "--theta", "0.7"]
    jdoc = run_json(["eval"] + base + ["--grid", grid], capsys)
    code, out, _ = run(["table"] + base + ["--grid", grid], capsys)
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln and not ln.startswith("#")]
    cols = lines[0].split(",")
    rows = [dict(zip(cols, ln.split(","))) for ln in lines[1:]]
    assert len(rows) == len(jdoc["records"]) == 6
    for row, rec in zip(rows, jdoc["records"]):
        # the 17-digit serialization must agree field for field
        for key in ("z_re", "z_im", "value_re", "value_im", "err_estimate"):
            assert float(row[key]) == rec[key]
        assert int(row["terms_used"]) == rec["terms_used"]


def test_table_header_names_the_command(capsys):
    code, out, _ = run(["table", "--eq", "0f1", "--alpha", "0.3",
                        "--grid", "0.1:0.2:2,0:0:1"], capsys)
    assert code == 0
    assert any(ln.startswith("# command=table") for ln in out.splitlines())


def test_seventeen_digit_round_trip(capsys):
    doc = run_json(["eval", "--eq", "0f1", "--alpha", "0.5",
                    "--z", "0.7"], capsys)
    (rec,) = doc["records"]
    from hyperd.ffun import F0, f_norm
    want = f_norm(F0(alpha=0.5), complex(0.7)).value
    assert rec["value_re"] == want.real


# ---------------------------------------------------------------------------
# parameter validation

def test_mixed_conventions_rejected(capsys):
    code, out, err = run(["eval", "--eq", "1f1", "--m", "1",
                          "--theta", "0.7", "--a", "1.0",
                          "--z", "0.3"], capsys)
    assert code == 2
    assert out == ""
    payload = json.loads(err)
    assert payload["error"]["type"] == "DomainError"
    assert "not both" in payload["error"]["message"]


def test_missing_parameters_rejected(capsys):
    code, _, err = run(["eval", "--eq", "1f1", "--m", "1",
                        "--z", "0.3"], capsys)
    assert code == 2
    assert json.loads(err)["error"]["type"] == "DomainError"


def test_d_needs_integer_m(capsys):
    code, _, err = run(["eval", "--eq", "0f1", "--func", "D",
                        "--alpha", "0.5", "--z", "0.3"], capsys)
    assert code == 2
    assert "integer m" in json.loads(err)["error"]["message"]


def test_fi_requires_2f1(capsys):
    code, _, err = run(["eval", "--eq", "0f1", "--func", "FI",
                        "--alpha", "0.5", "--z", "0.3"], capsys)
    assert code == 2


def test_bad_complex_literal(capsys):
    code, _, err = run(["eval", "--eq", "0f1", "--alpha", "0.5",
                        "--z", "nope"], capsys)
    assert code == 2


def test_no_points_is_an_error(capsys):
    code, _, err = run(["eval", "--eq", "0f1", "--alpha", "0.5"], capsys)
    assert code == 2
    assert "--z or --grid" in json.loads(err)["error"]["message"]


def test_pole_maps_to_exit_2(capsys):
    # second solution at integer alpha hits a Gamma pole upstream only
    # for routes that need it; an on-cut U evaluation is the simple case
    code, _, err = run(["eval", "--eq", "2f1", "--func", "U", "--m", "1",
                        "--beta", "0.3", "--mu", "0.2", "--z", "0.5"],
                       capsys)
    assert code == 2
    assert json.loads(err)["error"]["type"] == "BranchCut"


def test_argparse_rejects_unknown_choice(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["eval", "--eq", "3f1", "--alpha", "0.5", "--z", "0.1"])
    assert exc.value.code == 2
    capsys.readouterr()


# ---------------------------------------------------------------------------
# verify

def test_verify_single_id(capsys):
    doc = run_json(["verify", "--id", "q.sasa3"], capsys)
    assert doc["command"] == "verify"
    assert doc["suite"] == "q.sasa3"
    assert doc["relations_checked"] == 1
    assert doc["failures"] == []
    (rec,) = doc["records"]
    assert rec["id"] == "q.sasa3"
    assert rec["family"] == "Quadratic"
    assert rec["points"] == 25
    assert rec["status"] == "ok"
    assert rec["max_scaled_residual"] <= 1e-8


def test_verify_tightened_tolerance_fails(capsys):
    doc = run_json(["verify", "--id", "q.sasa3", "--tol", "1e-18"],
                   capsys, expect=1)
    assert doc["failures"]
    assert doc["records"][0]["status"] == "FAIL"


def test_verify_suite_and_id_conflict(capsys):
    code, _, err = run(["verify", "--suite", "all", "--id", "q.sasa3"],
                       capsys)
    assert code == 2
    assert "not both" in json.loads(err)["error"]["message"]


def test_verify_quadratic_suite(capsys):
    doc = run_json(["verify", "--suite", "quadratic", "--points", "5"],
                   capsys)
    assert doc["relations_checked"] == 9
    assert all(r["family"] == "Quadratic" for r in doc["records"])
    assert doc["failures"] == []


def test_verify_kind_suite_partition(capsys):
    seen = []
    for suite in ("0f1", "1f1", "2f1"):
        doc = run_json(["verify", "--suite", suite, "--points", "3"],
                       capsys)
        assert doc["failures"] == []
        seen.extend(r["id"] for r in doc["records"])
    assert len(seen) == len(set(seen)) == 52


def test_verify_bessel_suite(capsys):
    doc = run_json(["verify", "--suite", "bessel"], capsys)
    assert doc["failures"] == []
    assert all(r["family"] == "Consistency" for r in doc["records"])
    assert doc["relations_checked"] >= 20
    ids = [r["id"] for r in doc["records"]]
    assert ids == sorted(ids)


def test_verify_csv_format(capsys):
    code, out, _ = run(["verify", "--id", "f0.contiguity",
                        "--format", "csv"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert any(ln.startswith("# command=verify") for ln in lines)
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    assert data[0].split(",")[0] == "id"
    assert data[1].split(",")[0] == "f0.contiguity"


# ---------------------------------------------------------------------------
# catalog

def test_catalog_listing(capsys):
    doc = run_json(["catalog"], capsys)
    assert doc["count"] == 61
    ids = [r["id"] for r in doc["records"]]
    assert ids == sorted(ids)
    assert len(ids) == 61
    for rec in doc["records"]:
        assert set(rec) == {"id", "kind", "family", "signature",
                            "constant", "statement"}


# ---------------------------------------------------------------------------
# environment

def test_env_max_terms_budget(capsys, monkeypatch):
    monkeypatch.setenv("HYPERD_MAX_TERMS", "5")
    code, _, err = run(["eval", "--eq", "1f1", "--m", "1",
                        "--theta", "0.7", "--z", "9+4i"], capsys)
    assert code == 2
    assert json.loads(err)["error"]["type"] == "NoConvergence"


def test_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("HYPERD_MAX_TERMS", "5")
    doc = run_json(["eval", "--eq", "1f1", "--m", "1", "--theta", "0.7",
                    "--z", "9+4i", "--max-terms", "10000"], capsys)
    assert doc["records"][0]["flags"] == []


def test_invalid_env_is_structured_error(capsys, monkeypatch):
    monkeypatch.setenv("HYPERD_MAX_TERMS", "many")
    code, _, err = run(["eval", "--eq", "0f1", "--alpha", "0.5",
                        "--z", "0.3"], capsys)
    assert code == 2
    payload = json.loads(err)
    assert "HYPERD_MAX_TERMS" in payload["error"]["message"]
