"""Command-line interface for groupoidlab."""

from __future__ import annotations

import sys
from pathlib import Path

import click
import numpy as np

from groupoidlab.config import JSONLLogger, LabSettings, load_settings, write_manifest
from groupoidlab.errors import ConfigError, LabError, SpecError
from groupoidlab.io.spec_reader import MODEL_CHOICES, GroupoidSpec, dump_spec, parse_spec
from groupoidlab.models import (
    HaarWeights,
    disjoint_union,
    named_group,
    pair_groupoid,
    union_weights,
)
from groupoidlab.regreps import represent_pair
from groupoidlab.report import ReportBuilder, report_json, write_report
from groupoidlab.runner import build_artifacts, build_model, run_checks

DERIVABLE = ("S", "R", "tau", "W", "V", "K", "L", "nabla", "E", "sigma", "I")

# stage each object needs; None means it is read off the model directly
_DERIVE_STAGE = {
    "S": "polar",
    "R": "polar",
    "tau": "polar",
    "K": "polar",
    "L": "polar",
    "I": "polar",
    "W": "regreps",
    "V": "regreps",
    "nabla": None,
    "sigma": None,
    "E": None,
}


def _load_spec(path: str) -> GroupoidSpec:
    try:
        return parse_spec(path)
    except SpecError as e:
        for message in e.errors:
            click.echo(message, err=True)
        sys.exit(2)


def _load_settings(config: str | None, tol: float | None) -> LabSettings:
    try:
        settings = load_settings(config)
        return settings.with_tol(tol) if tol is not None else settings
    except ConfigError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(2)


def _models(spec: GroupoidSpec, model: str | None) -> tuple[str, ...]:
    if model is None:
        return spec.models
    return ("function", "convolution") if model == "both" else (model,)


@click.group()
def cli():
    """groupoidlab: build and verify finite-dimensional quantum groupoids."""
    pass


@cli.command()
@click.argument("spec_path", type=click.Path())
@click.option("--tol", type=float, default=None, help="Residual threshold (default 1e-9)")
@click.option("--report", "report_path", type=click.Path(), help="Write the JSON report here instead of stdout")
@click.option("--model", type=click.Choice(MODEL_CHOICES), help="Override the spec's model selection")
@click.option("--config", "-c", type=click.Path(), help="YAML file with LabSettings")
@click.option("--summary", "summary_path", type=click.Path(), help="Write a markdown summary here")
@click.option("--log", "log_path", type=click.Path(), help="JSONL progress log, one record per stage")
def check(spec_path, tol, report_path, model, config, summary_path, log_path):
    """Run every suite on SPEC_PATH; exit 0 iff all checks pass."""
    spec = _load_spec(spec_path)
    settings = _load_settings(config, tol)
    models = _models(spec, model)

    if log_path:
        with JSONLLogger(log_path) as logger:
            report = run_checks(spec, settings, models, logger)
    else:
        report = run_checks(spec, settings, models)

    if report_path:
        write_report(report, report_path)
    else:
        click.echo(report_json(report), nl=False)

    if summary_path:
        builder = ReportBuilder(f"groupoidlab check report: {spec.name}")
        builder.add_report(report)
        builder.save(summary_path)

    summary = report.summary()
    click.echo(f"{summary['passed']}/{summary['total']} checks passed", err=True)
    for failed in report.failed()[:10]:
        click.echo(f"FAILED {failed.check_id}: {failed.anchor}", err=True)
    sys.exit(0 if report.all_passed else 1)


def _format_matrix(m: np.ndarray) -> str:
    m = np.atleast_2d(m)
    rows = [" ".join(f"{z.real:.17g}{z.imag:+.17g}j" for z in row) for row in m]
    return "\n".join(rows) + "\n"


def _derived_object(spec: GroupoidSpec, model: str, what: str, t: float, settings: LabSettings):
    """(matrix, basis description) for one derivable object."""
    qg = build_model(spec, model)
    arrows = ", ".join(spec.groupoid.arrows)
    algebra_basis = f"algebra basis in arrow order: {arrows}"
    if what == "nabla":
        return qg.md_phi.nabla, "GNS coordinates of H_phi"
    if what == "sigma":
        return qg.md_phi.sigma(t), algebra_basis
    if what == "E":
        return represent_pair(qg.rep_psi, qg.rep_phi, qg.E), "GNS coordinates of H_psi ⊗ H_phi"

    art = build_artifacts(qg, settings, until=_DERIVE_STAGE[what])
    if what == "W":
        return art.rb.w_op, "GNS coordinates of H_psi ⊗ H_phi"
    if what == "V":
        return art.rb.v_op, "GNS coordinates of H_psi ⊗ H_psi"
    ab = art.ab
    if what == "S":
        return ab.s_map, algebra_basis
    if what == "R":
        return ab.r_map, algebra_basis
    if what == "tau":
        return ab.tau(t), algebra_basis
    if what == "L":
        return ab.l_op, "GNS coordinates of H_psi"
    if what == "K":
        return ab.k_op.linear_part, "GNS coordinates of H_psi; K(xi) = M conj(xi)"
    return ab.i_op.linear_part, "GNS coordinates of H_psi; I(xi) = M conj(xi)"


@cli.command()
@click.argument("spec_path", type=click.Path())
@click.option("--what", required=True, type=click.Choice(DERIVABLE), help="Object to write")
@click.option("--t", "t", type=float, default=1.0, show_default=True, help="Parameter for tau and sigma")
@click.option("--out", "out_dir", type=click.Path(), default=".", help="Output directory")
@click.option("--model", type=click.Choice(MODEL_CHOICES), help="Override the spec's model selection")
@click.option("--config", "-c", type=click.Path(), help="YAML file with LabSettings")
def derive(spec_path, what, t, out_dir, model, config):
    """Write a derived matrix (S, R, tau, W, ...) for each model of SPEC_PATH."""
    spec = _load_spec(spec_path)
    settings = _load_settings(config, None)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    written = []
    for name in _models(spec, model):
        try:
            matrix, basis = _derived_object(spec, name, what, t, settings)
        except LabError as e:
            click.echo(f"Error: {name} model: {e}", err=True)
            sys.exit(1)
        path = out / f"{spec.name}_{name}_{what}.txt"
        header = f"# {what} ({name} model of {spec.name})\n# {basis}\n# shape {matrix.shape[0]} x {matrix.shape[1]}\n"
        path.write_text(header + _format_matrix(matrix))
        written.append(path.name)
        click.echo(f"Wrote {path}")

    write_manifest(out, {"spec": str(spec_path), "what": what, "t": t, "files": written, **settings.to_dict()})


def _parse_floats(text: str | None, count: int, option: str) -> list[float] | None:
    if text is None:
        return None
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise ConfigError(f"{option} must be comma-separated numbers, got {text!r}")
    if len(values) != count:
        raise ConfigError(f"{option} needs {count} values, got {len(values)}")
    return values


def _component(text: str):
    """`pair:<n>` or `group:<name>` to (groupoid, name)."""
    kind, _, arg = text.partition(":")
    if kind == "pair" and arg.isdigit():
        return pair_groupoid(int(arg)), f"pair{arg}"
    if kind == "group" and arg:
        return named_group(arg), arg.lower()
    raise ConfigError(f"component must be pair:<n> or group:<name>, got {text!r}")


@cli.command()
@click.argument("kind", type=click.Choice(["pair", "group", "union"]))
@click.option("--n", "size", type=int, default=2, show_default=True, help="Pair groupoid size")
@click.option("--m", "left", help="Comma-separated left weights, one per unit (pair)")
@click.option("--right", help="Comma-separated right weights, one per unit (pair)")
@click.option("--table", default="z2", show_default=True, help="Group table: z<n> or s<k>")
@click.option("--of", "parts", nargs=2, help="Two components for union, e.g. pair:2 group:z3")
@click.option("--model", type=click.Choice(MODEL_CHOICES), default="both", show_default=True)
@click.option("--out", "out_path", type=click.Path(), help="Write the spec here instead of stdout")
def example(kind, size, left, right, table, parts, model, out_path):
    """Emit a spec file for a standard groupoid."""
    try:
        if kind == "pair":
            g = pair_groupoid(size)
            name = f"pair{size}"
            m = _parse_floats(left, size, "--m") or [1.0] * size
            n = _parse_floats(right, size, "--right") or [1.0] * size
            weights = HaarWeights(dict(zip(g.units, m)), dict(zip(g.units, n)))
        elif kind == "group":
            g = named_group(table)
            name = table.lower()
            weights = HaarWeights.uniform(g)
        else:
            if not parts:
                raise ConfigError("union needs --of <component> <component>")
            (g1, n1), (g2, n2) = _component(parts[0]), _component(parts[1])
            g = disjoint_union(g1, g2)
            name = f"union_{n1}_{n2}"
            weights = union_weights(HaarWeights.uniform(g1), HaarWeights.uniform(g2))
        spec = GroupoidSpec(groupoid=g, weights=weights, model=model, name=name)
    except ConfigError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(2)

    text = dump_spec(spec, out_path)
    if out_path:
        click.echo(f"Wrote {out_path}")
    else:
        click.echo(text, nl=False)


def main():
    """Entry point for CLI."""
    cli()


if __name__ == "__main__":
    main()
