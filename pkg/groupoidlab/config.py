"""Configuration and reproducibility utilities."""

from __future__ import annotations

import json
import platform
import time
from dataclasses import asdict, dataclass, fields
from datetime import datetime, timezone
from importlib import metadata
from pathlib import Path
from typing import Any

import yaml

from groupoidlab.errors import ConfigError


def load_yaml_config(path: str | Path) -> dict[str, Any]:
    """Load a YAML (or JSON) file.

    Args:
        path: Path to the file

    Returns:
        Parsed dictionary, empty for an empty file

    Raises:
        ConfigError: If the file is missing, unparsable or not a mapping
    """
    try:
        with open(path, "r") as f:
            config = yaml.safe_load(f)
    except FileNotFoundError:
        raise ConfigError(f"Config file not found: {path}")
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML: {e}")

    if config is None:
        config = {}
    if not isinstance(config, dict):
        raise ConfigError(f"{path}: top level must be a mapping")

    return config


@dataclass(frozen=True)
class LabSettings:
    """Numerical settings shared by every suite.

    Attributes:
        tol: Pass threshold applied to every residual
        sample_ts: Real parameters for one-parameter group checks
        pair_ss: First parameters for two-parameter commutation checks
        pair_ts: Second parameters for two-parameter commutation checks
        max_dim: Largest operator dimension a tensor product may reach
        degeneracy_tol: Relative singular-value floor for invertibility
    """

    tol: float = 1e-9
    sample_ts: tuple[float, ...] = (0.3, 1.0, -0.7)
    pair_ss: tuple[float, ...] = (0.3, 1.0)
    pair_ts: tuple[float, ...] = (-0.7, 0.4)
    max_dim: int = 4096
    degeneracy_tol: float = 1e-12

    def __post_init__(self):
        if not 0 < self.tol < 1:
            raise ConfigError(f"tol must be in (0,1), got {self.tol}")
        if not 0 < self.degeneracy_tol < 1:
            raise ConfigError(f"degeneracy_tol must be in (0,1), got {self.degeneracy_tol}")
        if self.max_dim < 1:
            raise ConfigError(f"max_dim must be positive, got {self.max_dim}")
        for name in ("sample_ts", "pair_ss", "pair_ts"):
            values = getattr(self, name)
            if not values:
                raise ConfigError(f"{name} must be non-empty")
            object.__setattr__(self, name, tuple(float(v) for v in values))

    def with_tol(self, tol: float) -> "LabSettings":
        return LabSettings(**{**asdict(self), "tol": tol})

    @classmethod
    def from_dict(cls, config: dict[str, Any]) -> "LabSettings":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(config) - known)
        if unknown:
            raise ConfigError(f"Unknown settings keys: {', '.join(unknown)}")
        try:
            return cls(**config)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid settings: {e}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "tol": self.tol,
            "sample_ts": list(self.sample_ts),
            "pair_ss": list(self.pair_ss),
            "pair_ts": list(self.pair_ts),
            "max_dim": self.max_dim,
            "degeneracy_tol": self.degeneracy_tol,
        }


def load_settings(path: str | Path | None) -> LabSettings:
    """Load LabSettings from a YAML file, or defaults when path is None."""
    if path is None:
        return LabSettings()
    return LabSettings.from_dict(load_yaml_config(path))


_VERSIONED = ("groupoidlab", "numpy", "scipy", "click", "PyYAML")


def package_versions() -> dict[str, str]:
    """Installed versions of the packages a derived file depends on."""
    versions = {"python": platform.python_version()}
    for name in _VERSIONED:
        try:
            versions[name.lower()] = metadata.version(name)
        except metadata.PackageNotFoundError:
            versions[name.lower()] = "unknown"
    return versions


def write_manifest(out_dir: str | Path, run: dict[str, Any]) -> dict[str, Any]:
    """Write manifest.json next to derived files.

    Args:
        out_dir: Directory holding the derived files
        run: What was derived and with which settings, recorded verbatim

    Returns:
        Manifest dictionary
    """
    manifest = {
        "created": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "versions": package_versions(),
        "run": run,
    }
    path = Path(out_dir) / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return manifest


class JSONLLogger:
    """Stage-by-stage progress log, one JSON object per line.

    Each record is stamped with a sequence number and the seconds elapsed
    since the log was opened.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._fh = self.path.open("w", encoding="utf-8")
        self._seq = 0
        self._t0 = time.perf_counter()

    def log(self, record: dict[str, Any]) -> None:
        entry = {"seq": self._seq, "t": round(time.perf_counter() - self._t0, 6), **record}
        self._fh.write(json.dumps(entry, sort_keys=True, default=str) + "\n")
        self._fh.flush()
        self._seq += 1

    def close(self) -> None:
        if not self._fh.closed:
            self._fh.close()

    def __enter__(self) -> "JSONLLogger":
        return self

    def __exit__(self, *exc) -> None:
        self.close()
