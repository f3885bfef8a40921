"""Command line interface tests (exit codes and output shape)."""

import json

import pytest

from opineq.cases import registry
from opineq.cli import main


def test_list_cases(capsys):
    assert main(["list-cases"]) == 0
    out = capsys.readouterr().out
    for case in registry():
        assert case.id in out


def test_verify_single_case(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    code = main([
        "verify", "--case", "zhan", "--dims", "2,3", "--samples", "5",
        "--seed", "11", "--report", str(report_path),
    ])
    assert code == 0
    out = capsys.readouterr().out
    assert "zhan" in out and "violations: 0" in out
    report = json.loads(report_path.read_text())
    assert report["cases"][0]["id"] == "zhan"
    assert report["violation_count"] == 0


def test_verify_comma_list(capsys):
    assert main(["verify", "--case", "agm,emi", "--dims", "2", "--samples", "3"]) == 0
    out = capsys.readouterr().out
    assert "agm" in out and "emi" in out


def test_verify_with_param(capsys):
    code = main([
        "verify", "--case", "zhan", "--dims", "2", "--samples", "4",
        "--param", "r=0.5",
    ])
    assert code == 0


def test_verify_param_needs_single_case(capsys):
    code = main(["verify", "--case", "all", "--param", "r=0.5",
                 "--dims", "2", "--samples", "2"])
    assert code == 2


def test_search_exhausted(capsys, tmp_path):
    report_path = tmp_path / "s.json"
    code = main([
        "search", "--case", "zhan", "--param", "r=1.0", "--budget", "200",
        "--seed", "3", "--report", str(report_path),
    ])
    assert code == 0
    assert "no witness" in capsys.readouterr().out
    assert json.loads(report_path.read_text())["witness"] is None


def test_search_finds_witness(capsys, tmp_path):
    report_path = tmp_path / "w.json"
    code = main([
        "search", "--case", "zhan", "--param", "r=-3.0", "--budget", "100000",
        "--seed", "7", "--report", str(report_path),
    ])
    assert code == 1
    assert "witness found" in capsys.readouterr().out
    report = json.loads(report_path.read_text())
    assert report["witness"]["margin"] < 0


def test_unknown_case_is_config_error(capsys):
    assert main(["verify", "--case", "bogus", "--samples", "2"]) == 2


def test_bad_param_range_is_config_error(capsys):
    assert main(["search", "--case", "cpr_general", "--param", "r=2.5",
                 "--param", "theta=0", "--budget", "5"]) == 2


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_eval_function(capsys):
    assert main(["eval", "--function", "sinh_over_z", "--point", "1+0i",
                 "--truncate", "500"]) == 0
    out = capsys.readouterr().out
    assert "closed form" in out and "truncated" in out


def test_eval_unknown_function(capsys):
    assert main(["eval", "--function", "zeta", "--point", "1"]) == 2
