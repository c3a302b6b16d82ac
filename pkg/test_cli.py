#!/usr/bin/env python3
"""
测试 hypack 命令行：table / curve / verify 与错误处理
"""

import io
import json

import pandas as pd
import pytest

from hypack.cli.app import main
from hypack.cli.error_handlers import EXIT_FAILURE, EXIT_USAGE, CLIErrorHandler
from hypack.cli.request_validators import validate_curve_request, validate_verify_request
from hypack.cli.table_commands import cmd_table
from hypack.cli.verify_commands import build_report, render_report
from hypack.reference import ReferenceRecord
from hypack.utils.errors import ConstraintViolationError, UsageError


# ---- table ----

def _rows(out):
    """去掉表头，按空白拆分每一行"""
    return [line.split() for line in out.strip().splitlines()[1:]]


def test_table_inball(capsys):
    assert main(["table", "inball"]) == 0
    rows = _rows(capsys.readouterr().out)
    assert len(rows) == 8
    label, radius, ball, cell, density = rows[-1]
    assert label == "(6,3)"
    assert float(radius) == pytest.approx(0.2407179, abs=2e-7)
    assert float(cell) == pytest.approx(0.4228923, abs=2e-7)
    assert float(density) == pytest.approx(0.1397706, abs=2e-6)


def test_table_distances(capsys):
    assert main(["table", "distances"]) == 0
    rows = _rows(capsys.readouterr().out)
    assert [row[0] for row in rows] == ["H0H1", "H1H4", "H0H4", "H4H5", "H0H5"]
    assert float(rows[2][1]) == pytest.approx(0.6931471, abs=2e-7)
    assert float(rows[2][2]) == pytest.approx(0.7071067, abs=2e-7)
    assert float(rows[0][2]) == pytest.approx(0.5, abs=2e-7)


def test_table_horoball_one(capsys):
    assert main(["table", "horoball-one"]) == 0
    rows = _rows(capsys.readouterr().out)
    assert len(rows) == 11
    assert float(rows[0][-1]) == pytest.approx(0.8188080, abs=2e-6)


def test_table_horoball_two(capsys):
    assert main(["table", "horoball-two"]) == 0
    rows = _rows(capsys.readouterr().out)
    assert [row[0] for row in rows] == ["(inf,3,6,inf)", "(inf,4,4,inf)", "(inf,6,3,inf)"]
    densities = [float(row[3]) for row in rows]
    assert densities == pytest.approx([0.8532761, 0.8188081, 0.8532761], abs=2e-6)
    assert float(rows[1][4]) == pytest.approx(0.5, abs=1e-7)


def test_table_summary(capsys):
    assert main(["table", "summary"]) == 0
    out = capsys.readouterr().out
    assert "(3,3)" in out
    assert "(3,3) i=2" in out
    assert "(3,6) (6,3)" in out


def test_unknown_table_is_usage_error(capsys):
    assert main(["table", "nope"]) == EXIT_USAGE
    assert "invalid choice" in capsys.readouterr().err
    with pytest.raises(UsageError):
        cmd_table("nope")


def test_missing_command_is_usage_error(capsys):
    assert main([]) == EXIT_USAGE


# ---- curve ----

def test_curve_44(tmp_path):
    out = tmp_path / "curve.csv"
    assert main(["curve", "--q", "4", "--r", "4", "--samples", "2", "--out", str(out)]) == 0
    df = pd.read_csv(out)
    assert list(df.columns) == ["t", "density", "vol_b0", "vol_b2", "active_constraint"]
    assert len(df) == 2
    assert df["t"].iloc[0] == pytest.approx(1.0 / 3.0, abs=1e-8)
    assert df["t"].iloc[-1] == pytest.approx(0.5, abs=1e-8)
    assert df["density"].iloc[-1] == pytest.approx(0.8188081, abs=2e-6)
    assert df["vol_b0"].iloc[-1] + df["vol_b2"].iloc[-1] == pytest.approx(0.375, abs=1e-7)


def test_curve_is_deterministic(tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (first, second):
        assert main(["curve", "--q", "4", "--r", "4", "--samples", "7", "--out", str(path)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_curve_single_point_warns(tmp_path, capsys):
    out = tmp_path / "curve.csv"
    assert main(["curve", "--q", "3", "--r", "6", "--out", str(out)]) == 0
    df = pd.read_csv(out)
    assert len(df) == 1
    assert df["density"].iloc[0] == pytest.approx(0.8532761, abs=2e-6)
    assert "WARNING" in capsys.readouterr().err


@pytest.mark.parametrize("argv, field", [
    (["--q", "3", "--r", "3"], "q,r"),
    (["--q", "3", "--r", "7"], "q,r"),
    (["--q", "4", "--r", "4", "--samples", "1"], "samples"),
])
def test_curve_invalid_arguments(tmp_path, capsys, argv, field):
    code = main(["curve", *argv, "--out", str(tmp_path / "x.csv")])
    assert code == EXIT_USAGE
    err = capsys.readouterr().err
    assert "VALIDATION_ERROR" in err
    assert f"(field: {field})" in err


def test_curve_output_directory_is_rejected(tmp_path, capsys):
    assert main(["curve", "--q", "4", "--r", "4", "--out", str(tmp_path)]) == EXIT_USAGE
    assert "(field: out)" in capsys.readouterr().err


def test_curve_unwritable_path(tmp_path, capsys):
    out = tmp_path / "missing" / "curve.csv"
    assert main(["curve", "--q", "4", "--r", "4", "--out", str(out)]) == EXIT_FAILURE
    assert "IO_ERROR" in capsys.readouterr().err


# ---- verify ----

def test_verify_default_passes(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert out.strip().splitlines()[-1] == "overall: PASS (90/90 records)"


def test_verify_tight_tolerance_fails(capsys):
    assert main(["verify", "--tol", "1e-12"]) == EXIT_FAILURE
    assert "overall: FAIL" in capsys.readouterr().out


def test_verify_json(capsys):
    assert main(["--log-level", "error", "verify", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 90
    for row in rows:
        for key in ("table", "key", "quantity", "reference", "computed", "abs_error", "tolerance", "pass"):
            assert key in row
    assert all(row["pass"] for row in rows)


def test_verify_rejects_non_positive_tolerance(capsys):
    assert main(["verify", "--tol", "0"]) == EXIT_USAGE
    assert "(field: tol)" in capsys.readouterr().err


def test_report_for_unknown_quantity():
    record = ReferenceRecord(table=1, key="(9,9)", quantity="density", printed=0.5)
    report = build_report(records=[record])
    assert not report.passed
    assert report.pass_count == 0
    assert "overall: FAIL (0/1 records)" in render_report(report)


def test_endpoint_tier_uses_endpoint_tolerance():
    records = [r for r in build_report().rows if r.quantity in ("t", "t1", "t2")]
    assert len(records) == 4
    assert all(r.tolerance == pytest.approx(5e-4) for r in records)


# ---- 错误处理与校验器 ----

def test_error_response_shape():
    response, code = CLIErrorHandler.create_error_response("坏了", "X", EXIT_FAILURE, {"field": "q"})
    assert code == EXIT_FAILURE
    assert response == {"success": False, "error": {"message": "坏了", "code": "X", "details": {"field": "q"}}}
    stream = io.StringIO()
    CLIErrorHandler.emit(response, stream)
    assert stream.getvalue() == "error [X]: 坏了 (field: q)\n"


def test_hypack_error_mapping():
    response, code = CLIErrorHandler.handle_hypack_error(UsageError("未知的表名"))
    assert code == EXIT_USAGE
    assert response["error"]["code"] == "USAGE_ERROR"
    response, code = CLIErrorHandler.handle_hypack_error(ConstraintViolationError("越界", face="B0:u0"))
    assert code == EXIT_FAILURE
    assert response["error"]["details"]["face"] == "B0:u0"


def test_unexpected_and_io_error_mapping():
    response, code = CLIErrorHandler.handle_unexpected_error(RuntimeError("boom"))
    assert code == EXIT_FAILURE
    assert response["error"] == {
        "message": "内部错误",
        "code": "INTERNAL_ERROR",
        "details": {"error_type": "RuntimeError"},
    }
    response, code = CLIErrorHandler.handle_io_error(PermissionError("denied"))
    assert code == EXIT_FAILURE
    assert response["error"]["code"] == "IO_ERROR"


def test_validators():
    assert validate_curve_request(4, 4, 10, "out.csv") == {'valid': True}
    assert validate_curve_request(4, 4, 10, " ")['field'] == 'out'
    assert validate_verify_request(1e-5, "text") == {'valid': True}
    assert validate_verify_request(1e-5, "xml")['field'] == 'format'
