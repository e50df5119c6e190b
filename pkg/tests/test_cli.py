"""End-to-end CLI runs through main(); output is line-delimited JSON."""

import json

import pytest

from gtkit.cli import RunReport, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    lines = [json.loads(line) for line in captured.out.splitlines() if line]
    return code, lines, captured.err


def test_dim(capsys):
    code, lines, _ = run(capsys, "dim", "2,1,0")
    assert code == 0
    assert lines[0] == {"label": "dim", "value": 8, "mode": "exact", "tolerance": None}
    assert lines[-1]["command"] == "dim"
    assert lines[-1]["status"] == "pass"


def test_rdim(capsys):
    code, lines, _ = run(capsys, "rdim", "1", "2,1,0")
    assert code == 0
    by_label = {e["label"]: e["value"] for e in lines[:-1]}
    assert by_label == {"trapezoids": "4", "ratio_to_triangular": "1/2"}


def test_rdim_rejects_bad_lengths(capsys):
    with pytest.raises(SystemExit):
        main(["rdim", "1,0", "1,0"])


def test_link_row(capsys):
    code, lines, _ = run(capsys, "link", "1,0", "--level", "1")
    assert code == 0
    weights = {e["label"]: e["value"] for e in lines[:-1]}
    assert weights == {"0": "1/2", "1": "1/2", "row_sum": "1"}


def test_qlink_row(capsys):
    code, lines, _ = run(capsys, "qlink", "1,0", "--level", "1", "--q", "1/2")
    assert code == 0
    weights = {e["label"]: e["value"] for e in lines[:-1]}
    assert weights == {"0": "2/3", "1": "1/3", "row_sum": "1"}


def test_value_errors_exit_2(capsys):
    code, lines, err = run(capsys, "link", "1,0", "--level", "5")
    assert code == 2
    assert not lines
    assert json.loads(err)["error"] == "ValueError"


def test_bad_signature_is_an_argparse_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dim", "1,x"])
    assert exc.value.code == 2
    assert "position 2" in capsys.readouterr().err


def test_verify_small_suite(capsys):
    code, lines, _ = run(capsys, "verify", "q1-oracle", "--max-n", "3", "--part-bound", "1")
    assert code == 0
    assert lines[-1]["status"] == "pass"
    assert all(e["ok"] for e in lines[:-1])
    assert sum(e["checks"] for e in lines[:-1]) > 0


def test_verify_vacuous_pass(capsys):
    code, lines, _ = run(capsys, "verify", "q1-oracle", "--max-n", "1")
    assert code == 0
    assert lines[0]["label"] == "no cases below N=2"
    assert lines[0]["checks"] == 0


def test_verify_budget_exhaustion_exits_3(capsys):
    code, lines, err = run(capsys, "verify", "q1-oracle", "--max-n", "5", "--budget", "20")
    assert code == 3
    assert json.loads(err)["error"] == "budget-exceeded"


def test_verify_q_option(capsys):
    code, lines, _ = run(
        capsys, "verify", "qtoeplitz", "--max-n", "3", "--q", "1/2", "--seed", "1"
    )
    assert code == 0
    assert lines[-1]["inputs"]["qs"] == ["1/2"]


def test_uat_zero_family(capsys):
    code, lines, _ = run(capsys, "uat", "--kappa", "0", "--family", "zero", "--n", "4,5")
    assert code == 0
    gaps = {e["label"]: e["value"] for e in lines[:-1] if e["label"].startswith("N=")}
    assert gaps == {"N=4": "0", "N=5": "0"}
    flag = [e for e in lines[:-1] if e["label"] == "strictly_decreasing"]
    assert flag[0]["value"] is False  # zero gaps never decrease; informational only


def test_uat_linear_family_decreases(capsys):
    code, lines, _ = run(
        capsys, "uat", "--kappa", "0", "--family", "linear-row:2", "--n", "6,8"
    )
    assert code == 0
    flag = [e for e in lines[:-1] if e["label"] == "strictly_decreasing"]
    assert flag[0]["value"] is True


def test_bench_small(capsys):
    code, lines, _ = run(capsys, "bench", "--n", "5", "--level", "2")
    assert code == 0
    entry = lines[0]
    assert entry["enumeration"] == "completed"
    assert entry["enum_matches_det"] is True
    assert entry["row_sum_1"] is True


def test_csv_output(capsys):
    code = main(["--csv", "link", "1,0", "--level", "1"])
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[0].startswith("label,value,mode,tolerance")
    assert any(line.startswith("row_sum,1,") for line in out[1:])


def test_out_file_roundtrip(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = main(["--out", str(path), "link", "2,1,0", "--level", "2"])
    capsys.readouterr()
    assert code == 0
    report = RunReport.from_json(path.read_text())
    assert report.command == "link"
    assert report.status == "pass"
    weights = {e["label"]: e["value"] for e in report.results}
    assert weights["row_sum"] == "1"
    assert report.timing["total_seconds"] >= 0
