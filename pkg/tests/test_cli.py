"""End-to-end tests for the trisect command line: output text and exit codes."""
import json

import pytest

from src.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_run_prints_requested_angles(capsys):
    code, out, _ = _run(capsys, "run", "method1.gcs", "--param", "theta=30", "--export-angles", "GEB,HBE")
    assert code == EXIT_OK
    assert out == "GEB=45 HBE=30\n"


def test_run_prints_exported_points(capsys):
    code, out, _ = _run(capsys, "run", "method1", "--param", "theta=30")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "A=(0, 0)"
    assert lines[1] == "B=(1, 0)"
    assert len(lines) == 8


def test_run_reports_unbound_optional_points(capsys):
    code, out, _ = _run(capsys, "run", "method3.gcs", "--param", "theta=60")
    assert code == EXIT_OK
    assert "K=undefined" in out.splitlines()


def test_run_construction_failure_exits_1(capsys, isolated_logs):
    code, out, err = _run(capsys, "run", "method2.gcs", "--param", "theta=30")
    assert code == EXIT_FAILURE
    assert out == ""
    assert "step 12 (G)" in err
    [record] = isolated_logs.glob("run_*.json")
    payload = json.loads(record.read_text(encoding="utf-8"))
    assert payload["status"] == "failed"
    assert payload["failed_step"] == 12


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "no_such_script.gcs", "--param", "theta=30"],
        ["run", "method1.gcs", "--param", "theta=abc"],
        ["run", "method1.gcs", "--param", "theta"],
        ["run", "method1.gcs"],
        ["run", "method1.gcs", "--param", "theta=30", "--param", "phi=2"],
        ["run", "method1.gcs", "--param", "theta=30", "--export-angles", "GE"],
        ["run", "method1.gcs", "--param", "theta=30", "--export-angles", "GZB"],
        ["run", "method1.gcs", "--param", "theta=30", "--export-angles", "G:E"],
        ["run", "method1.gcs", "--param", "theta=30", "--export-angles", "A:B:C:D"],
        ["run", "method1.gcs", "--param", "theta=30", "--export-angles", "G::B"],
        ["run", "method1.gcs", "--param", "theta=inf"],
        ["run", "method1.gcs", "--param", "theta=-inf"],
        ["run", "method1.gcs", "--param", "theta=nan"],
    ],
)
def test_run_usage_errors_exit_2(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err.startswith("Error: ")


def test_run_parse_error_exits_2(capsys, tmp_path):
    script = tmp_path / "broken.gcs"
    script.write_text("point A = (0, 0)\npoint A = (1, 0)\n", encoding="utf-8")
    code, _, err = _run(capsys, "run", str(script))
    assert code == EXIT_USAGE
    assert "broken.gcs:2:7" in err


def test_run_script_with_invalid_utf8_exits_2(capsys, tmp_path):
    script = tmp_path / "bad.gcs"
    script.write_bytes(b"point A = (0, 0)\npoint B\xff\xfe = (1, 0)\n")
    code, out, err = _run(capsys, "run", str(script))
    assert code == EXIT_USAGE
    assert out == ""
    assert "bad.gcs:2:8" in err
    assert "UTF-8" in err


def test_run_colon_angle_names(capsys):
    code, out, _ = _run(capsys, "run", "method1.gcs", "--param", "theta=30", "--export-angles", "G:E:B,H:B:E")
    assert code == EXIT_OK
    assert out == "G:E:B=45 H:B:E=30\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["render", "method1", "--theta", "inf"],
        ["render", "method1", "--theta", "nan"],
        ["verify", "method1", "--from", "nan"],
        ["verify", "method1", "--tolerance", "inf"],
        ["seed", "method1", "--beta", "nan"],
    ],
)
def test_non_finite_numbers_are_rejected(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == EXIT_USAGE
    assert out == ""
    assert "not a finite number" in err


def test_run_writes_a_log_record(capsys, isolated_logs):
    assert _run(capsys, "--run-id", "r1", "run", "method1.gcs", "--param", "theta=30")[0] == EXIT_OK
    [record] = (isolated_logs / "r1").glob("run_*.json")
    payload = json.loads(record.read_text(encoding="utf-8"))
    assert payload["status"] == "ok"
    assert payload["bindings"] == {"theta": "30"}


def test_verify_method1_passes(capsys):
    code, out, _ = _run(capsys, "verify", "method1", "--from", "1", "--to", "59", "--step", "0.5")
    assert code == EXIT_OK
    assert "(117 points)" in out
    assert "fixed points  36" in out
    assert out.rstrip().endswith("PASS")


def test_verify_exterior(capsys):
    assert _run(capsys, "verify", "method1", "--exterior")[0] == EXIT_OK
    assert _run(capsys, "verify", "method2", "--exterior")[0] == EXIT_USAGE


def test_verify_csv_to_file(capsys, tmp_path):
    out_path = tmp_path / "m2.csv"
    code, out, _ = _run(
        capsys, "verify", "method2", "--from", "61", "--to", "65", "--step", "2", "--format", "csv", "-o", str(out_path)
    )
    assert code == EXIT_OK
    assert out == ""
    lines = out_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "method,theta_deg,claim_id,residual_deg,pass"
    assert len(lines) == 1 + 3 * 15


def test_verify_out_of_range_grid_exits_2(capsys):
    code, _, err = _run(capsys, "verify", "method3", "--from", "100", "--to", "120")
    assert code == EXIT_USAGE
    assert "method3" in err


def test_full_method3_verify_exits_1(capsys):
    code, out, _ = _run(capsys, "verify", "method3")
    assert code == EXIT_FAILURE
    assert out.rstrip().endswith("FAIL")


def test_verify_unknown_method_exits_2(capsys):
    assert _run(capsys, "verify", "method7")[0] == EXIT_USAGE


def test_render_writes_svg(capsys, tmp_path, isolated_logs):
    out_path = tmp_path / "fig1.svg"
    code, _, _ = _run(capsys, "render", "method1", "--theta", "30", "-o", str(out_path))
    assert code == EXIT_OK
    data = out_path.read_bytes()
    assert data.startswith(b"<?xml")
    assert b'id="arc-GEB"' in data
    assert len(list(isolated_logs.glob("render_*.json"))) == 1


def test_render_to_stdout(capsys):
    code, out, _ = _run(capsys, "render", "method3", "--theta", "45", "--no-circles")
    assert code == EXIT_OK
    assert ">T</text>" in out
    assert 'class="construction"' not in out


def test_render_a_script(capsys, tmp_path):
    out_path = tmp_path / "script.svg"
    code, _, _ = _run(capsys, "render", "method2.gcs", "--param", "theta=75", "--arcs", "GDA", "-o", str(out_path))
    assert code == EXIT_OK
    assert b'id="arc-GDA"' in out_path.read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        ["render", "method1", "--theta", "95"],
        ["render", "method1"],
        ["render", "method1", "--theta", "30", "--width", "0"],
    ],
)
def test_render_usage_errors_exit_2(capsys, argv):
    assert _run(capsys, *argv)[0] == EXIT_USAGE


def test_render_to_missing_directory_exits_1(capsys, tmp_path):
    code, _, _ = _run(capsys, "render", "method1", "--theta", "30", "-o", str(tmp_path / "missing" / "fig.svg"))
    assert code == EXIT_FAILURE


@pytest.mark.parametrize(
    "method, beta, expected",
    [
        ("method1", "45", "theta=30 roundtrip_beta=45 pass"),
        ("method1", "36", "theta=36 roundtrip_beta=36 pass"),
        ("method2", "90", "theta=75 roundtrip_beta=90 pass"),
        ("method3", "90", "theta=60 roundtrip_beta=90 pass"),
    ],
)
def test_seed(capsys, method, beta, expected):
    code, out, _ = _run(capsys, "seed", method, "--beta", beta)
    assert code == EXIT_OK
    assert out.strip() == expected


def test_seed_errors(capsys):
    assert _run(capsys, "seed", "method1", "--beta", "400")[0] == EXIT_USAGE
    assert _run(capsys, "seed", "method3", "--beta", "135")[0] == EXIT_FAILURE


def test_fixed_points(capsys):
    code, out, _ = _run(capsys, "fixed-points", "method1")
    assert code == EXIT_OK
    assert out.strip() == "method1: theta=36"
    assert _run(capsys, "fixed-points", "method3")[1].strip() == "method3: none"


def test_backend_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("GEOM_BACKEND", "bigfloat:128")
    code, out, _ = _run(capsys, "run", "method1.gcs", "--param", "theta=30", "--export-angles", "GEB,HBE")
    assert code == EXIT_OK
    assert out == "GEB=45 HBE=30\n"


@pytest.mark.parametrize("value", ["bogus", "bigfloat:lots", "bigfloat:20"])
def test_bad_backend_from_environment_exits_2(capsys, monkeypatch, value):
    monkeypatch.setenv("GEOM_BACKEND", value)
    assert _run(capsys, "run", "method1.gcs", "--param", "theta=30")[0] == EXIT_USAGE


def test_precision_flag_is_checked(capsys):
    assert _run(capsys, "run", "method1.gcs", "--param", "theta=30", "--backend", "bigfloat", "--precision", "40")[0] == EXIT_USAGE


def test_output_is_deterministic(capsys):
    first = _run(capsys, "verify", "method2", "--from", "61", "--to", "71", "--format", "json-lines")
    second = _run(capsys, "verify", "method2", "--from", "61", "--to", "71", "--format", "json-lines")
    assert first == second
    assert first[0] == EXIT_OK


def test_unknown_subcommand_exits_2(capsys):
    assert _run(capsys, "bisect")[0] == EXIT_USAGE
