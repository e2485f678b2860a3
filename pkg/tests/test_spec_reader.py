"""Tests for spec parsing, located validation errors and spec writing."""

import pytest

from groupoidlab.errors import ConfigError, SpecError
from groupoidlab.io import GroupoidSpec, dump_spec, parse_spec, spec_from_dict, spec_to_dict
from groupoidlab.models import HaarWeights, named_group, pair_groupoid
from tests.conftest import CONFIGS, FIXTURES


def _errors(name):
    with pytest.raises(SpecError) as exc:
        parse_spec(FIXTURES / name)
    return exc.value.errors


class TestParse:
    def test_pair2(self):
        spec = parse_spec(CONFIGS / "pair2.yaml")
        assert spec.name == "pair2"
        assert spec.models == ("convolution",)
        assert spec.groupoid.arrows == ("p1_1", "p1_2", "p2_1", "p2_2")
        assert spec.weights.m == {"p1_1": 1.0, "p2_2": 2.0}
        assert not spec.perturbation.active

    def test_union_selects_both_models(self):
        spec = parse_spec(CONFIGS / "union.yaml")
        assert spec.models == ("function", "convolution")
        assert len(spec.groupoid.units) == 3

    def test_s3(self):
        spec = parse_spec(CONFIGS / "s3.yaml")
        assert spec.groupoid.units == ("s012",)
        assert len(spec.groupoid) == 6

    def test_perturb_block(self):
        spec = parse_spec(CONFIGS / "pair2_brokenE.yaml")
        assert spec.perturbation.e_noise == pytest.approx(0.001)
        assert spec.perturbation.seed == 7

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecError, match="not found"):
            parse_spec(tmp_path / "absent.yaml")

    def test_spec_error_is_a_config_error(self):
        assert issubclass(SpecError, ConfigError)


class TestLocatedErrors:
    def test_missing_inverse(self):
        errors = _errors("missing_inverse.yaml")
        assert any("inverse missing for arrow 'p1_2'" in e for e in errors)
        assert all(e.startswith(str(FIXTURES / "missing_inverse.yaml")) for e in errors)

    def test_non_composable_entry(self):
        errors = _errors("noncomposable.yaml")
        assert any("non-composable pair in compose table: p1_2,p1_2" in e for e in errors)

    def test_compose_gap(self):
        errors = _errors("compose_gap.yaml")
        assert any("compose not total on composable pair p2_1,p1_2" in e for e in errors)

    def test_bad_weight(self):
        errors = _errors("bad_weight.yaml")
        assert any("left_weight[p2_2]: non-positive weight" in e for e in errors)

    def test_bad_compose_key(self):
        errors = _errors("bad_compose_key.yaml")
        assert any("malformed composition key" in e for e in errors)

    def test_every_problem_is_reported(self):
        data = {
            "units": ["u"],
            "arrows": [{"id": "u", "src": "u", "tgt": "w"}, {"id": "x", "src": "u"}],
            "inverse": {"u": "u"},
            "model": "quantum",
            "colour": "red",
        }
        with pytest.raises(SpecError) as exc:
            spec_from_dict(data, "inline.yaml")
        text = "\n".join(exc.value.errors)
        assert "inline.yaml: colour: unknown key" in text
        assert "inline.yaml: model: must be one of" in text
        assert "arrows[0].tgt: unresolved unit id 'w'" in text
        assert "arrows[1]: missing field(s) tgt" in text

    def test_inverse_given_as_list(self):
        errors = _errors("inverse_list.yaml")
        assert any("inverse: must be a mapping arrow -> arrow, got list" in e for e in errors)

    @pytest.mark.parametrize(
        "key, value, message",
        [
            ("compose", ["p1_1,p1_1"], "compose: must be a mapping 'p,q' -> arrow, got list"),
            ("inverse", "u", "inverse: must be a mapping arrow -> arrow, got str"),
            ("units", "u", "units: must be a list of unit ids, got str"),
        ],
    )
    def test_wrong_container_types(self, key, value, message):
        data = {
            "units": ["u"],
            "arrows": [{"id": "u", "src": "u", "tgt": "u"}],
            "inverse": {"u": "u"},
            "compose": {"u,u": "u"},
        }
        data[key] = value
        with pytest.raises(SpecError) as exc:
            spec_from_dict(data, "inline.yaml")
        assert f"inline.yaml: {message}" in exc.value.errors

    def test_top_level_must_be_a_mapping(self):
        with pytest.raises(SpecError, match="top level must be a mapping, got list"):
            spec_from_dict(["u"], "inline.yaml")

    def test_duplicate_arrow(self):
        data = {
            "units": ["u"],
            "arrows": [{"id": "u", "src": "u", "tgt": "u"}, {"id": "u", "src": "u", "tgt": "u"}],
            "inverse": {"u": "u"},
            "compose": {"u,u": "u"},
        }
        with pytest.raises(SpecError, match="duplicate arrow id 'u'"):
            spec_from_dict(data)


class TestWrite:
    def test_dump_and_parse(self, tmp_path):
        g = pair_groupoid(3)
        weights = HaarWeights(dict(zip(g.units, [1.0, 2.0, 4.0])), {u: 1.0 for u in g.units})
        path = tmp_path / "pair3.yaml"
        dump_spec(GroupoidSpec(g, weights, model="function", name="pair3"), path)
        spec = parse_spec(path)
        assert spec.groupoid.arrows == g.arrows
        assert dict(spec.groupoid.compose) == dict(g.compose)
        assert spec.weights.m == {"p1_1": 1.0, "p2_2": 2.0, "p3_3": 4.0}
        assert spec.model == "function"

    def test_to_dict_of_group(self):
        g = named_group("z3")
        data = spec_to_dict(GroupoidSpec(g, HaarWeights.uniform(g), name="z3"))
        assert data["units"] == ["z0"]
        assert data["compose"]["z1,z2"] == "z0"
        assert "perturb" not in data

    def test_model_validated(self):
        g = named_group("z2")
        with pytest.raises(ConfigError):
            GroupoidSpec(g, HaarWeights.uniform(g), model="quantum")
