"""Spec file input and output."""

from groupoidlab.io.spec_reader import (
    MODEL_CHOICES,
    GroupoidSpec,
    dump_spec,
    parse_spec,
    spec_from_dict,
    spec_to_dict,
)

__all__ = [
    "MODEL_CHOICES",
    "GroupoidSpec",
    "dump_spec",
    "parse_spec",
    "spec_from_dict",
    "spec_to_dict",
]
