"""groupoidlab: construction and verification lab for finite-dimensional quantum groupoids."""

__version__ = "0.1.0"

from groupoidlab.io.spec_reader import GroupoidSpec, parse_spec
from groupoidlab.qgroupoid.model import QuantumGroupoid
from groupoidlab.runner import PipelineRunner, run_checks
from groupoidlab.types import Check, CheckReport

__all__ = [
    "__version__",
    "Check",
    "CheckReport",
    "GroupoidSpec",
    "PipelineRunner",
    "QuantumGroupoid",
    "parse_spec",
    "run_checks",
]
