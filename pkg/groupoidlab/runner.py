"""The check pipeline: build every object for a model and run every suite on it."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from groupoidlab.algebra import check_star_algebra, gns_checks, kms_verify, tomita_checks
from groupoidlab.antipode import (
    AntipodeBundle,
    antipode_cross_checks,
    build_K,
    commutation_suite,
    derive_antipode,
    modular_commutation_checks,
    phiR_suite,
    polar_checks,
    relations_suite,
    restriction_suite,
)
from groupoidlab.config import JSONLLogger, LabSettings
from groupoidlab.errors import LabError
from groupoidlab.io.spec_reader import GroupoidSpec
from groupoidlab.models import MODEL_BUILDERS, apply_perturbation, validate_groupoid
from groupoidlab.qgroupoid import (
    GammaMaps,
    QMaps,
    QuantumGroupoid,
    base_reconstruction,
    build_q_maps,
    gamma_maps,
    gamma_relations,
    invariance_identities,
    qmap_checks,
    structure_axioms,
    verify_axioms,
)
from groupoidlab.regreps import RegRepBundle, build_regular_reps, pentagon_checks, regular_rep_checks
from groupoidlab.types import CheckReport


@dataclass
class Artifacts:
    """Objects built for one model, filled in stage by stage."""

    qg: QuantumGroupoid
    structure: CheckReport | None = None
    gm: GammaMaps | None = None
    qm: QMaps | None = None
    rb: RegRepBundle | None = None
    ab: AntipodeBundle | None = None


def build_model(spec: GroupoidSpec, model: str) -> QuantumGroupoid:
    """Build the named model of a spec and apply its perturbations."""
    qg = MODEL_BUILDERS[model](spec.groupoid, spec.weights)
    return apply_perturbation(qg, spec.groupoid, spec.perturbation)


def _algebra_stage(art: Artifacts, s: LabSettings) -> CheckReport:
    qg = art.qg
    report = CheckReport(label="algebra")
    for alg in (qg.A, qg.B, qg.C):
        report.merge(check_star_algebra(alg, s.tol))
    for name, weight, rep, md in (("phi", qg.phi, qg.rep_phi, qg.md_phi), ("psi", qg.psi, qg.rep_psi, qg.md_psi)):
        report.merge(gns_checks(rep, s.tol, name))
        report.merge(kms_verify(weight, md, s.tol, s.sample_ts, name))
        report.merge(tomita_checks(md, s.tol, s.sample_ts, name))
    return report


def _axioms_stage(art: Artifacts, s: LabSettings) -> CheckReport:
    art.structure = structure_axioms(art.qg, s.tol, s.sample_ts)
    return verify_axioms(art.qg, s.tol, s.sample_ts, structure=art.structure)


def _gamma_stage(art: Artifacts, s: LabSettings) -> CheckReport:
    art.gm = gamma_maps(art.qg)
    return gamma_relations(art.qg, art.gm, s.tol)


def _qmaps_stage(art: Artifacts, s: LabSettings) -> CheckReport:
    qg = art.qg
    art.qm = build_q_maps(qg, art.gm, s.tol)
    report = qmap_checks(qg, art.qm, s.tol)
    report.merge(invariance_identities(qg, art.qm, s.tol))
    report.merge(base_reconstruction(qg, s.tol))
    return report


def _regreps_stage(art: Artifacts, s: LabSettings) -> CheckReport:
    qg = art.qg
    art.rb = build_regular_reps(qg, art.qm)
    rb = art.rb
    report = regular_rep_checks(qg, rb, s.tol, s.max_dim)
    report.merge(pentagon_checks(rb.w_phi, rb.e_phi, rb.g_l_phi, s.tol, pi=rb.rep_phi.pi, max_dim=s.max_dim))
    return report


def _polar_stage(art: Artifacts, s: LabSettings) -> CheckReport:
    qg = art.qg
    k_op, k_residual, k_rank = build_K(qg, art.rb.w_op, s.tol)
    art.ab = derive_antipode(qg, k_op, k_residual, k_rank, s.tol, s.degeneracy_tol)
    report = polar_checks(art.ab, s.tol)
    report.merge(modular_commutation_checks(qg, art.ab, art.rb, s.tol, s.sample_ts, s.max_dim))
    return report


def _antipode_stage(art: Artifacts, s: LabSettings) -> CheckReport:
    qg, ab = art.qg, art.ab
    report = antipode_cross_checks(qg, ab, art.rb, s.tol, s.sample_ts)
    report.merge(relations_suite(qg, ab, s.tol, s.sample_ts))
    report.merge(restriction_suite(qg, ab, art.gm, s.tol, s.sample_ts))
    report.merge(phiR_suite(qg, ab, s.tol, s.sample_ts, structure=art.structure))
    report.merge(commutation_suite(qg, ab, s.tol, s.pair_ss, s.pair_ts))
    return report


STAGES: list[tuple[str, Callable[[Artifacts, LabSettings], CheckReport]]] = [
    ("algebra", _algebra_stage),
    ("axioms", _axioms_stage),
    ("gamma", _gamma_stage),
    ("qmaps", _qmaps_stage),
    ("regreps", _regreps_stage),
    ("polar", _polar_stage),
    ("antipode", _antipode_stage),
]


def build_artifacts(qg: QuantumGroupoid, settings: LabSettings, until: str = "antipode") -> Artifacts:
    """Run the construction stages up to and including `until`, discarding their checks.

    Raises:
        LabError: If a construction premise fails
    """
    art = Artifacts(qg)
    for name, stage in STAGES:
        stage(art, settings)
        if name == until:
            break
    return art


class PipelineRunner:
    """Run every stage on every model of a spec.

    A stage raising LabError (or a numerical failure) is recorded as the failed
    check `<model>.<stage>.construction`; the remaining stages of that model are
    skipped since each depends on the previous one.
    """

    def __init__(self, settings: LabSettings | None = None, logger: JSONLLogger | None = None):
        self.settings = settings or LabSettings()
        self.logger = logger

    def _log(self, **record) -> None:
        if self.logger is not None:
            self.logger.log(record)

    def run_model(self, qg: QuantumGroupoid, model: str) -> CheckReport:
        report = CheckReport(label=model)
        art = Artifacts(qg)
        for name, stage in STAGES:
            t0 = time.perf_counter()
            try:
                stage_report = stage(art, self.settings)
            except (LabError, np.linalg.LinAlgError) as e:
                report.record(
                    f"{model}.{name}.construction",
                    f"stage {name} builds its objects",
                    None,
                    self.settings.tol,
                    detail=f"{type(e).__name__}: {e}",
                )
                self._log(model=model, stage=name, error=str(e), elapsed=time.perf_counter() - t0)
                break
            report.merge(stage_report, prefix=f"{model}.")
            self._log(
                model=model,
                stage=name,
                checks=len(stage_report),
                failed=len(stage_report.failed()),
                elapsed=time.perf_counter() - t0,
            )
        return report

    def run(self, spec: GroupoidSpec, models: tuple[str, ...] | None = None) -> CheckReport:
        """Validate the groupoid, then check each selected model."""
        report = CheckReport(label=spec.name)
        report.merge(validate_groupoid(spec.groupoid))
        for model in models or spec.models:
            try:
                qg = build_model(spec, model)
            except LabError as e:
                report.record(
                    f"{model}.model.construction", "model builds", None, self.settings.tol, detail=str(e)
                )
                continue
            report.merge(self.run_model(qg, model))
        self._log(stage="summary", **report.summary())
        return report


def run_checks(
    spec: GroupoidSpec,
    settings: LabSettings | None = None,
    models: tuple[str, ...] | None = None,
    logger: JSONLLogger | None = None,
) -> CheckReport:
    return PipelineRunner(settings, logger).run(spec, models)
