"""CLI tests, driving `main(argv)` directly and checking exit codes and files."""

import csv
import json

import numpy as np
import pytest

from subbergman.cli import main


def _read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


# ---------------------------------------------------------------------------
# kernel eval


def test_kernel_eval_single_point(capsys):
    rc = main(
        ["kernel", "eval", "--kind", "bergman", "--alpha", "0", "--z", "0.3", "--w", "0.2"]
    )
    assert rc == 0
    out = capsys.readouterr().out
    fields = dict(tok.split("=") for tok in out.split())
    expected = 1.0 / (1.0 - 0.3 * 0.2) ** 2
    assert float(fields["re"]) == pytest.approx(expected, rel=1e-12)
    assert float(fields["im"]) == pytest.approx(0.0, abs=1e-15)


def test_kernel_eval_sub_needs_symbol(capsys):
    rc = main(["kernel", "eval", "--kind", "sub", "--alpha", "0", "--z", "0.3", "--w", "0.2"])
    assert rc == 2
    assert "requires --symbol" in capsys.readouterr().err


def test_kernel_eval_batch(tmp_path, capsys):
    points = tmp_path / "points.csv"
    with points.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["z_re", "z_im", "w_re", "w_im"])
        writer.writerow([0.3, 0.1, 0.2, -0.1])
        writer.writerow([0.0, 0.0, 0.5, 0.0])
    out = tmp_path / "values.csv"
    rc = main(
        [
            "kernel",
            "eval",
            "--kind",
            "sub",
            "--alpha",
            "0",
            "--symbol",
            "mobius a=0.5",
            "--points",
            str(points),
            "--out",
            str(out),
        ]
    )
    assert rc == 0
    rows = _read_csv(out)
    assert rows[0] == ["z_re", "z_im", "w_re", "w_im", "k_re", "k_im"]
    assert len(rows) == 3
    # phi(0) = -1/2, so K(0, w) = 1 - phi(0) conj(phi(w)) with phi(w) real here
    w = 0.5
    phi_w = (0.5 - w) / (1 - 0.5 * w)
    expected = 1.0 + 0.5 * phi_w
    assert float(rows[2][4]) == pytest.approx(expected, rel=1e-12)
    assert "wrote 2 kernel values" in capsys.readouterr().out


def test_kernel_eval_batch_rejects_missing_header(tmp_path, capsys):
    points = tmp_path / "points.csv"
    points.write_text("x,y\n1,2\n")
    rc = main(
        [
            "kernel",
            "eval",
            "--kind",
            "bergman",
            "--alpha",
            "0",
            "--points",
            str(points),
            "--out",
            str(tmp_path / "o.csv"),
        ]
    )
    assert rc == 2
    assert "z_re" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# cnp test


def test_cnp_test_pass_writes_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = main(
        [
            "cnp",
            "test",
            "--alpha",
            "0",
            "--symbol",
            "mobius a=0.4",
            "--points",
            "12",
            "--trials",
            "4",
            "--out",
            str(out),
        ]
    )
    assert rc == 0
    payload = json.loads(out.read_text())
    assert payload["schema"] == 1
    assert payload["verdict"] == "psd_pass"
    assert payload["failed_trials"] == 0
    assert payload["witness"] is None
    assert not (tmp_path / "witness.csv").exists()
    assert "verdict=psd_pass" in capsys.readouterr().out


def test_cnp_test_fail_writes_witness(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = main(
        [
            "cnp",
            "test",
            "--alpha",
            "0",
            "--symbol",
            "monomial n=2 c=1",
            "--points",
            "12",
            "--trials",
            "4",
            "--out",
            str(out),
        ]
    )
    assert rc == 1
    payload = json.loads(out.read_text())
    assert payload["verdict"] == "fail"
    assert payload["min_eigenvalue"] < -1e-6
    assert payload["witness"]["size"] >= 2
    rows = _read_csv(tmp_path / "witness.csv")
    k = payload["witness"]["size"]
    assert rows[0][:2] == ["z_re", "z_im"]
    assert len(rows) == k + 1
    assert len(rows[0]) == 2 + 2 * k
    # the stored witness matrix must itself be indefinite
    m = np.empty((k, k), dtype=complex)
    for i in range(k):
        vals = [float(v) for v in rows[i + 1][2:]]
        m[i] = [complex(vals[2 * j], vals[2 * j + 1]) for j in range(k)]
    assert np.linalg.eigvalsh(m).min() < -1e-6
    assert "witness written" in capsys.readouterr().out


def test_cnp_test_bad_symbol_exits_2(capsys):
    rc = main(["cnp", "test", "--alpha", "0", "--symbol", "mobius a=1.5", "--out", "x.json"])
    assert rc == 2
    assert "error:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# toeplitz build / defect spectrum / berezin


def test_toeplitz_build_csv(tmp_path):
    out = tmp_path / "t.csv"
    rc = main(
        ["toeplitz", "build", "--alpha", "1", "--symbol", "series 0,1", "--size", "5", "--out", str(out)]
    )
    assert rc == 0
    rows = _read_csv(out)
    assert rows[0][:4] == ["c0_re", "c0_im", "c1_re", "c1_im"]
    assert len(rows) == 6
    # subdiagonal entry t[1, 0] = sqrt(w_0 / w_1) at alpha = 1: w = (1, 3, ...)
    assert float(rows[2][0]) == pytest.approx(np.sqrt(1.0 / 3.0), rel=1e-12)
    assert float(rows[2][2]) == 0.0


def test_defect_spectrum_json(tmp_path, capsys):
    out = tmp_path / "spec.json"
    rc = main(
        [
            "defect",
            "spectrum",
            "--which",
            "conj",
            "--alpha",
            "0",
            "--symbol",
            "series 0,1",
            "--size",
            "120",
            "--out",
            str(out),
        ]
    )
    assert rc == 0
    payload = json.loads(out.read_text())
    assert payload["schema"] == 1
    assert payload["which"] == "conj"
    assert len(payload["eigenvalues"]) == 120
    assert payload["decay_exponent"] == pytest.approx(-1.0, abs=1e-9)
    assert set(payload["schatten"]) == {"1", "1.5", "2", "3"}
    text = capsys.readouterr().out
    assert "decay_exponent=" in text
    assert "schatten p=1:" in text


def test_defect_spectrum_bad_window_exits_2(capsys):
    rc = main(
        [
            "defect",
            "spectrum",
            "--alpha",
            "0",
            "--symbol",
            "series 0,1",
            "--size",
            "40",
            "--window",
            "5:39",
        ]
    )
    assert rc == 2
    assert "window" in capsys.readouterr().err


def test_berezin_prints_identity_error(capsys):
    rc = main(
        [
            "berezin",
            "--alpha",
            "0",
            "--symbol",
            "mobius a=0.5",
            "--size",
            "200",
            "--point",
            "0.5",
            "--point",
            "0.2+0.1i",
        ]
    )
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    for line in lines:
        fields = dict(tok.split("=") for tok in line.split())
        assert float(fields["error"]) < 1e-6
    # phi_a(a) = 0, so the first expected value is exactly 1
    assert float(dict(tok.split("=") for tok in lines[0].split())["expected"]) == 1.0


# ---------------------------------------------------------------------------
# verify


def test_verify_scenario_writes_reports(tmp_path, capsys):
    rc = main(["verify", "boundary_ratio", "--out", str(tmp_path / "reports")])
    assert rc == 0
    assert (tmp_path / "reports" / "boundary_ratio.json").exists()
    assert (tmp_path / "reports" / "boundary_ratio.csv").exists()
    payload = json.loads((tmp_path / "reports" / "boundary_ratio.json").read_text())
    assert payload["schema"] == 1
    assert all(cell["status"] == "pass" for cell in payload["checks"])
    text = capsys.readouterr().out
    assert "[   PASS] boundary_ratio" in text
    assert "3 passed, 0 failed, 0 skipped" in text


def test_verify_set_override_can_force_failure(tmp_path, capsys):
    rc = main(
        [
            "verify",
            "boundary_ratio",
            "--set",
            "ratio_threshold=1e9",
            "--out",
            str(tmp_path / "reports"),
        ]
    )
    assert rc == 1
    assert "1 failed" in capsys.readouterr().out


def test_verify_flags_beat_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("ratio_threshold = 1e9\n")
    rc = main(
        [
            "verify",
            "boundary_ratio",
            "--config",
            str(cfg),
            "--set",
            "ratio_threshold=50",
            "--out",
            str(tmp_path / "reports"),
        ]
    )
    assert rc == 0
    assert "0 failed" in capsys.readouterr().out


def test_verify_unknown_scenario_exits_2(capsys):
    rc = main(["verify", "nonsense", "--out", "reports"])
    assert rc == 2
    assert "unknown scenario" in capsys.readouterr().err


def test_verify_unknown_config_key_exits_2(tmp_path, capsys):
    rc = main(
        ["verify", "boundary_ratio", "--set", "bogus=1", "--out", str(tmp_path / "reports")]
    )
    assert rc == 2
    assert "bogus" in capsys.readouterr().err
