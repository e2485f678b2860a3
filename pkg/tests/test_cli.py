"""CLI smoke tests."""

import json

from click.testing import CliRunner

from groupoidlab.cli.main import cli
from groupoidlab.io import parse_spec
from tests.conftest import CONFIGS, FIXTURES


def test_cli_check_passes(tmp_path):
    runner = CliRunner()
    report = tmp_path / "report.json"
    summary = tmp_path / "summary.md"
    result = runner.invoke(
        cli,
        ["check", str(CONFIGS / "z2.yaml"), "--report", str(report), "--summary", str(summary)],
    )
    assert result.exit_code == 0, result.output
    data = json.loads(report.read_text())
    assert data["summary"]["passed"] == data["summary"]["total"]
    assert "checks passed" in result.output
    assert summary.read_text().startswith("# groupoidlab check report: z2")


def test_cli_check_broken_E_exits_1(tmp_path):
    runner = CliRunner()
    result = runner.invoke(
        cli,
        ["check", str(CONFIGS / "pair2_brokenE.yaml"), "--report", str(tmp_path / "r.json")],
    )
    assert result.exit_code == 1
    assert "FAILED" in result.output


def test_cli_check_bad_spec_exits_2():
    runner = CliRunner()
    for name in ("missing_inverse.yaml", "noncomposable.yaml", "bad_weight.yaml", "inverse_list.yaml"):
        result = runner.invoke(cli, ["check", str(FIXTURES / name)])
        assert result.exit_code == 2, name
    result = runner.invoke(cli, ["check", str(FIXTURES / "missing_inverse.yaml")])
    assert "inverse missing for arrow 'p1_2'" in result.output


def test_cli_check_with_config_and_log(tmp_path):
    runner = CliRunner()
    log = tmp_path / "run.jsonl"
    result = runner.invoke(
        cli,
        [
            "check",
            str(CONFIGS / "pair2.yaml"),
            "--config",
            str(CONFIGS / "lab_settings.yaml"),
            "--model",
            "function",
            "--report",
            str(tmp_path / "r.json"),
            "--log",
            str(log),
        ],
    )
    assert result.exit_code == 0, result.output
    assert log.read_text().count("\n") >= 8


def test_cli_check_bad_config_exits_2(tmp_path):
    bad = tmp_path / "settings.yaml"
    bad.write_text("tol: 5\n")
    runner = CliRunner()
    result = runner.invoke(cli, ["check", str(CONFIGS / "z2.yaml"), "--config", str(bad)])
    assert result.exit_code == 2


def test_cli_derive_antipode(tmp_path):
    runner = CliRunner()
    result = runner.invoke(
        cli, ["derive", str(CONFIGS / "pair2.yaml"), "--what", "S", "--out", str(tmp_path)]
    )
    assert result.exit_code == 0, result.output
    lines = (tmp_path / "pair2_convolution_S.txt").read_text().splitlines()
    assert lines[0].startswith("# S (convolution model of pair2)")
    rows = [line for line in lines if not line.startswith("#")]
    assert len(rows) == 4
    assert all(len(row.split()) == 4 for row in rows)
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert manifest["run"]["what"] == "S"
    assert manifest["run"]["files"] == ["pair2_convolution_S.txt"]


def test_cli_derive_tau_for_both_models(tmp_path):
    runner = CliRunner()
    result = runner.invoke(
        cli,
        ["derive", str(CONFIGS / "z2.yaml"), "--what", "tau", "--t", "0.5", "--out", str(tmp_path)],
    )
    assert result.exit_code == 0, result.output
    assert (tmp_path / "z2_function_tau.txt").exists()
    assert (tmp_path / "z2_convolution_tau.txt").exists()


def test_cli_example_pair(tmp_path):
    runner = CliRunner()
    out = tmp_path / "pair3.yaml"
    result = runner.invoke(cli, ["example", "pair", "--n", "3", "--m", "1,2,4", "--out", str(out)])
    assert result.exit_code == 0, result.output
    spec = parse_spec(out)
    assert spec.name == "pair3"
    assert len(spec.groupoid) == 9
    assert spec.weights.m["p3_3"] == 4.0


def test_cli_example_group_and_union():
    runner = CliRunner()
    result = runner.invoke(cli, ["example", "group", "--table", "s3"])
    assert result.exit_code == 0
    assert "name: s3" in result.output
    result = runner.invoke(cli, ["example", "union", "--of", "pair:2", "group:z2"])
    assert result.exit_code == 0
    assert "name: union_pair2_z2" in result.output


def test_cli_example_bad_input():
    runner = CliRunner()
    assert runner.invoke(cli, ["example", "pair", "--n", "2", "--m", "1"]).exit_code == 2
    assert runner.invoke(cli, ["example", "group", "--table", "q8"]).exit_code == 2
    assert runner.invoke(cli, ["example", "union"]).exit_code == 2
