"""Shared fixtures: spec paths and models built once per session."""

from pathlib import Path

import pytest

from groupoidlab.config import LabSettings
from groupoidlab.io.spec_reader import parse_spec
from groupoidlab.models import (
    HaarWeights,
    convolution_algebra_model,
    function_algebra_model,
    named_group,
    pair_groupoid,
)
from groupoidlab.runner import build_artifacts

ROOT = Path(__file__).resolve().parent.parent
CONFIGS = ROOT / "configs"
FIXTURES = Path(__file__).resolve().parent / "fixtures"


def weighted_pair(n, m, right=None):
    g = pair_groupoid(n)
    right = right or [1.0] * n
    return g, HaarWeights(dict(zip(g.units, m)), dict(zip(g.units, right)))


@pytest.fixture(scope="session")
def settings():
    return LabSettings()


@pytest.fixture(scope="session")
def pair2():
    return weighted_pair(2, [1.0, 2.0])


@pytest.fixture(scope="session")
def s3():
    g = named_group("s3")
    return g, HaarWeights.uniform(g)


@pytest.fixture(scope="session")
def pair2_function(pair2):
    return function_algebra_model(*pair2)


@pytest.fixture(scope="session")
def pair2_convolution(pair2):
    return convolution_algebra_model(*pair2)


@pytest.fixture(scope="session")
def s3_function(s3):
    return function_algebra_model(*s3)


@pytest.fixture(scope="session", params=["function", "convolution"])
def pair2_model(request, pair2_function, pair2_convolution):
    return {"function": pair2_function, "convolution": pair2_convolution}[request.param]


@pytest.fixture(scope="session")
def pair2_artifacts(pair2_model, settings):
    return build_artifacts(pair2_model, settings)


@pytest.fixture(scope="session")
def s3_artifacts(s3_function, settings):
    return build_artifacts(s3_function, settings)


@pytest.fixture
def pair2_spec():
    return parse_spec(CONFIGS / "pair2.yaml")


@pytest.fixture(scope="session")
def pair2_convolution_artifacts(pair2_convolution, settings):
    return build_artifacts(pair2_convolution, settings)
