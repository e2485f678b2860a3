"""Groupoid spec files: parsing with located errors, and writing."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from groupoidlab.config import load_yaml_config
from groupoidlab.errors import ConfigError, SpecError
from groupoidlab.models.groupoid import FiniteGroupoid, HaarWeights, groupoid_errors
from groupoidlab.models.perturb import Perturbation

MODEL_CHOICES = ("function", "convolution", "both")

_KNOWN_KEYS = {
    "name",
    "model",
    "units",
    "arrows",
    "inverse",
    "compose",
    "left_weight",
    "right_weight",
    "perturb",
}


@dataclass(frozen=True)
class GroupoidSpec:
    """A parsed and validated spec file.

    Attributes:
        groupoid: The finite groupoid
        weights: Left and right Haar weight densities
        model: "function", "convolution" or "both"
        name: Label used in reports
        perturbation: Negative-control perturbations (inactive by default)
    """

    groupoid: FiniteGroupoid
    weights: HaarWeights
    model: str = "both"
    name: str = "groupoid"
    perturbation: Perturbation = field(default_factory=Perturbation)

    def __post_init__(self):
        if self.model not in MODEL_CHOICES:
            raise ConfigError(f"model must be one of {MODEL_CHOICES}, got {self.model!r}")

    @property
    def models(self) -> tuple[str, ...]:
        return ("function", "convolution") if self.model == "both" else (self.model,)


class _Collector:
    """Accumulates located messages for one file."""

    def __init__(self, path: Path):
        self.path = path
        self.errors: list[str] = []

    def add(self, where: str, message: str) -> None:
        self.errors.append(f"{self.path}: {where}: {message}")


def _mapping(raw: Any, key: str, shape: str, errs: _Collector) -> dict:
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        errs.add(key, f"must be a mapping {shape}, got {type(raw).__name__}")
        return {}
    return raw


def _weights(raw: Any, key: str, units: list[str], errs: _Collector) -> dict[str, float]:
    if raw is None:
        return {u: 1.0 for u in units}
    if not isinstance(raw, dict):
        errs.add(key, "must be a mapping unit -> positive number")
        return {}
    out = {}
    for unit, value in raw.items():
        unit = str(unit)
        if unit not in units:
            errs.add(f"{key}[{unit}]", "unresolved unit id")
            continue
        try:
            number = float(value)
        except (TypeError, ValueError):
            errs.add(f"{key}[{unit}]", f"not a number: {value!r}")
            continue
        if not number > 0:
            errs.add(f"{key}[{unit}]", f"non-positive weight {number}")
            continue
        out[unit] = number
    for unit in units:
        if unit not in out and unit not in raw:
            errs.add(key, f"missing unit {unit!r}")
    return out


def spec_from_dict(data: dict[str, Any], path: str | Path = "<spec>") -> GroupoidSpec:
    """Validate a spec mapping.

    Raises:
        SpecError: With every problem found, each prefixed by its location
    """
    errs = _Collector(Path(path))
    if not isinstance(data, dict):
        raise SpecError([f"{path}: top level must be a mapping, got {type(data).__name__}"])
    for key in sorted(set(data) - _KNOWN_KEYS):
        errs.add(key, "unknown key")

    model = data.get("model", "both")
    if model not in MODEL_CHOICES:
        errs.add("model", f"must be one of {', '.join(MODEL_CHOICES)}, got {model!r}")

    raw_units = data.get("units") or []
    if not isinstance(raw_units, list):
        errs.add("units", f"must be a list of unit ids, got {type(raw_units).__name__}")
        raw_units = []
    units = [str(u) for u in raw_units]
    if not units:
        errs.add("units", "at least one unit is required")

    arrows: list[str] = []
    src: dict[str, str] = {}
    tgt: dict[str, str] = {}
    raw_arrows = data.get("arrows") or []
    if not isinstance(raw_arrows, list):
        errs.add("arrows", "must be a list of {id, src, tgt}")
        raw_arrows = []
    for i, entry in enumerate(raw_arrows):
        if not isinstance(entry, dict):
            errs.add(f"arrows[{i}]", "must be a mapping with id, src, tgt")
            continue
        missing = [k for k in ("id", "src", "tgt") if k not in entry]
        if missing:
            errs.add(f"arrows[{i}]", f"missing field(s) {', '.join(missing)}")
            continue
        p = str(entry["id"])
        if p in src:
            errs.add(f"arrows[{i}]", f"duplicate arrow id {p!r}")
            continue
        arrows.append(p)
        src[p], tgt[p] = str(entry["src"]), str(entry["tgt"])
        for name in ("src", "tgt"):
            if str(entry[name]) not in units:
                errs.add(f"arrows[{i}].{name}", f"unresolved unit id {entry[name]!r}")
    for u in units:
        if u not in src:
            errs.add("units", f"unit {u!r} is not listed among arrows")

    inverse = {str(k): str(v) for k, v in _mapping(data.get("inverse"), "inverse", "arrow -> arrow", errs).items()}
    for p in arrows:
        if p not in inverse:
            errs.add("inverse", f"inverse missing for arrow {p!r}")
    for p, q in inverse.items():
        if p not in src or q not in src:
            errs.add(f"inverse[{p}]", f"unresolved arrow id in {p} -> {q}")

    compose: dict[tuple[str, str], str] = {}
    for key, value in _mapping(data.get("compose"), "compose", "'p,q' -> arrow", errs).items():
        parts = [s.strip() for s in str(key).split(",")]
        if len(parts) != 2 or not all(parts):
            errs.add(f"compose[{key}]", "malformed composition key, expected 'p,q'")
            continue
        p, q = parts
        if p not in src or q not in src or str(value) not in src:
            errs.add(f"compose[{key}]", f"unresolved arrow id in {p},{q} -> {value}")
            continue
        compose[(p, q)] = str(value)

    left = _weights(data.get("left_weight"), "left_weight", units, errs)
    right = _weights(data.get("right_weight"), "right_weight", units, errs)

    try:
        perturbation = Perturbation.from_dict(data.get("perturb"))
    except ConfigError as e:
        errs.add("perturb", str(e))
        perturbation = Perturbation()

    if errs.errors:
        raise SpecError(errs.errors)

    g = FiniteGroupoid(tuple(arrows), tuple(units), src, tgt, inverse, compose)
    for message in groupoid_errors(g):
        errs.add("groupoid", message)
    if errs.errors:
        raise SpecError(errs.errors)

    return GroupoidSpec(
        groupoid=g,
        weights=HaarWeights(left, right),
        model=model,
        name=str(data.get("name") or Path(path).stem),
        perturbation=perturbation,
    )


def parse_spec(path: str | Path) -> GroupoidSpec:
    """Read and validate a YAML or JSON spec file.

    Raises:
        SpecError: If the file cannot be read or fails validation
    """
    try:
        data = load_yaml_config(path)
    except ConfigError as e:
        raise SpecError([str(e)])
    return spec_from_dict(data, path)


def spec_to_dict(spec: GroupoidSpec) -> dict[str, Any]:
    g, hw = spec.groupoid, spec.weights
    data: dict[str, Any] = {
        "name": spec.name,
        "model": spec.model,
        "units": list(g.units),
        "arrows": [{"id": p, "src": g.src[p], "tgt": g.tgt[p]} for p in g.arrows],
        "inverse": {p: g.inv[p] for p in g.arrows},
        "compose": {f"{p},{q}": r for (p, q), r in sorted(g.compose.items(), key=lambda kv: (g.index(kv[0][0]), g.index(kv[0][1])))},
        "left_weight": {u: float(hw.m[u]) for u in g.units},
        "right_weight": {u: float(hw.n[u]) for u in g.units},
    }
    if spec.perturbation.active:
        data["perturb"] = spec.perturbation.to_dict()
    return data


def dump_spec(spec: GroupoidSpec, path: str | Path | None = None) -> str:
    """YAML text of a spec; also written to `path` when given."""
    text = yaml.safe_dump(spec_to_dict(spec), sort_keys=False, default_flow_style=None)
    if path is not None:
        Path(path).write_text(text)
    return text
