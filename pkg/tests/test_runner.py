"""Tests for the check pipeline and report serialization."""

import json
import re

import pytest

from groupoidlab.config import JSONLLogger, LabSettings
from groupoidlab.io import parse_spec
from groupoidlab.report import ReportBuilder, markdown_summary, report_json, write_report
from groupoidlab.runner import STAGES, PipelineRunner, build_artifacts, build_model, run_checks
from groupoidlab.types import CheckReport
from tests.conftest import CONFIGS


def _failed_ids(report):
    return [c.check_id for c in report.failed()]


@pytest.fixture(scope="module")
def z2_report():
    return run_checks(parse_spec(CONFIGS / "z2.yaml"))


class TestPipeline:
    def test_z2_passes(self, z2_report):
        assert z2_report.all_passed, _failed_ids(z2_report)

    def test_ids_are_prefixed_by_model(self, z2_report):
        ids = list(z2_report.checks)
        assert "groupoid.associativity.1" in ids
        assert "function.qgroupoid.weak_unit.1" in ids
        assert "convolution.antipode.S_squared.1" in ids
        assert all(i.startswith(("groupoid.", "function.", "convolution.")) for i in ids)

    def test_every_stage_contributes(self, z2_report):
        modules = {c.check_id.split(".")[1] for c in z2_report.sorted() if c.check_id.startswith("function.")}
        assert {"algebra", "qgroupoid", "regreps", "antipode"} <= modules

    @pytest.mark.parametrize("name", ["pair2.yaml", "pair2_function.yaml", "pair2_mixed.yaml", "s3.yaml"])
    def test_shipped_configs_pass(self, name):
        report = run_checks(parse_spec(CONFIGS / name))
        assert report.all_passed, _failed_ids(report)

    def test_broken_E_fails(self):
        report = run_checks(parse_spec(CONFIGS / "pair2_brokenE.yaml"))
        assert not report.all_passed
        idempotent = report["convolution.qgroupoid.E_idempotent.1"]
        assert not idempotent.passed
        assert idempotent.residual > 1e-4
        e_delta = [report[f"convolution.qgroupoid.E_delta.{k}"] for k in (1, 2)]
        assert max(c.residual for c in e_delta) > 1e-4

    def test_off_unit_phi_fails(self):
        report = run_checks(parse_spec(CONFIGS / "pair2_phi_off_unit.yaml"))
        assert not report.all_passed
        invariance = report["convolution.qgroupoid.Q_L_invariance.1"]
        assert not invariance.passed
        assert invariance.residual > 1e-4
        polar = report["convolution.polar.construction"]
        assert polar.residual is None
        match = re.search(r"K is not well defined on its spanning family \(residual (\S+)\)", polar.detail)
        assert match is not None, polar.detail
        assert float(match.group(1)) > 1e-4
        assert "convolution.antipode.S_squared.1" not in report

    def test_model_override(self):
        spec = parse_spec(CONFIGS / "pair2.yaml")
        report = run_checks(spec, models=("function",))
        assert any(i.startswith("function.") for i in report.checks)
        assert not any(i.startswith("convolution.") for i in report.checks)

    def test_build_artifacts_stops_early(self, pair2_convolution, settings):
        art = build_artifacts(pair2_convolution, settings, until="qmaps")
        assert art.qm is not None
        assert art.rb is None and art.ab is None

    def test_stage_order(self):
        assert [name for name, _ in STAGES] == [
            "algebra",
            "axioms",
            "gamma",
            "qmaps",
            "regreps",
            "polar",
            "antipode",
        ]

    def test_progress_log(self, tmp_path):
        path = tmp_path / "run.jsonl"
        spec = parse_spec(CONFIGS / "pair2.yaml")
        with JSONLLogger(path) as logger:
            PipelineRunner(LabSettings(), logger).run(spec)
        records = [json.loads(line) for line in path.read_text().splitlines()]
        assert [r["seq"] for r in records] == list(range(len(records)))
        stages = [r["stage"] for r in records if r.get("model") == "convolution"]
        assert stages == [name for name, _ in STAGES]
        assert records[-1]["stage"] == "summary"
        assert records[-1]["total"] > 0

    def test_build_model_applies_perturbation(self):
        spec = parse_spec(CONFIGS / "pair2_brokenE.yaml")
        clean = build_model(parse_spec(CONFIGS / "pair2.yaml"), "convolution")
        assert not (build_model(spec, "convolution").E == clean.E).all()


class TestReport:
    def test_json_is_deterministic(self, z2_report):
        again = run_checks(parse_spec(CONFIGS / "z2.yaml"))
        assert report_json(again) == report_json(z2_report)

    def test_json_shape(self, z2_report, tmp_path):
        path = tmp_path / "report.json"
        write_report(z2_report, path)
        data = json.loads(path.read_text())
        assert data["summary"]["total"] == len(z2_report)
        ids = [c["check_id"] for c in data["checks"]]
        assert ids == sorted(ids)
        assert set(data["checks"][0]) >= {"check_id", "anchor", "residual", "tol", "pass"}

    def test_unevaluated_check_serializes_null(self):
        report = CheckReport(label="x")
        report.record("m.stage.construction", "stage builds", None, 1e-9, detail="boom")
        data = json.loads(report_json(report))
        assert data["checks"][0]["residual"] is None
        assert data["checks"][0]["pass"] is False

    def test_markdown_summary(self, z2_report):
        text = markdown_summary(z2_report, title="z2")
        assert text.startswith("# z2")
        assert f"{len(z2_report)} of {len(z2_report)} checks passed" in text
        assert "| function.antipode |" in text
        assert "Failed checks" not in text

    def test_markdown_lists_failures(self, tmp_path):
        report = CheckReport(label="demo")
        report.record("groupoid.units.1", "units", 0.0, 0.0)
        report.record("function.qgroupoid.E_idempotent.1", "E² = E", 1e-3, 1e-9)
        builder = ReportBuilder("demo")
        builder.add_report(report)
        builder.save(tmp_path / "summary.md")
        text = (tmp_path / "summary.md").read_text()
        assert "### Failed checks" in text
        assert "`function.qgroupoid.E_idempotent.1`" in text
        assert "1 of 2 checks passed" in text
