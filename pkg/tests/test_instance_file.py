import json

import pytest

from m2c.builtin.instances import build_permutation_instance
from m2c.core.errors import ParseError, ValidationError
from m2c.io.instance_file import parse_instance, parse_instance_text, serialize_instance, write_instance
from m2c.monoidal.instance import Location
from m2c.suite import run_all


@pytest.mark.parametrize("name", ["strict.json", "perturbed.json", "zero.json", "abcd.json", "cocycle_abcd.json",
                                  "permutations.json", "permutations_lf.json"])
def test_fixtures_load(instances_dir, name):
    inst = parse_instance(str(instances_dir / name))
    assert inst.objects


def test_strict_fixture_matches_the_builder(instances_dir, strict2):
    inst = parse_instance(str(instances_dir / "strict.json"))
    assert inst.objects == strict2.objects
    assert set(inst.signature.oneCells) == set(strict2.signature.oneCells)
    assert run_all(inst) == run_all(strict2)


def test_permutation_fixture_matches_the_builder(instances_dir):
    inst = parse_instance(str(instances_dir / "permutations.json"))
    assert serialize_instance(inst) == serialize_instance(build_permutation_instance())


def test_serialization_is_stable(strict2, tmp_path):
    location = Location("alpha", (1, strict2.signature.generator1("f_a_b"), "I", "I"))
    original = strict2.perturb(location, "1")
    path = tmp_path / "perturbed.json"
    write_instance(original, str(path))

    loaded = parse_instance(str(path))
    assert serialize_instance(loaded) == path.read_text(encoding="utf-8")
    assert run_all(loaded) == run_all(original)


def test_scalar_serialization_keeps_components(abcd):
    text = serialize_instance(abcd.perturb(Location("lf", abcd.signature.identity("1")), (1,)))
    loaded = parse_instance_text(text)
    assert serialize_instance(loaded) == text
    assert json.loads(text)["components"] == [{"kind": "lf", "key": ["id(1)"], "value": 1}]


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as e:
        parse_instance_text('{\n  "model": "scalar",\n  "group": Z2\n}')
    assert e.value.line == 3
    assert e.value.col > 1


def test_missing_file():
    with pytest.raises(ParseError):
        parse_instance("no/such/instance.json")


def test_unknown_key_is_rejected(instances_dir):
    doc = json.loads((instances_dir / "zero.json").read_text(encoding="utf-8"))
    doc["epsilon"] = []
    with pytest.raises(ValidationError) as e:
        parse_instance_text(json.dumps(doc))
    assert e.value.path == "epsilon"


def test_unknown_model():
    with pytest.raises(ValidationError) as e:
        parse_instance_text('{"model": "bicategory"}')
    assert e.value.path == "model"


def test_omega_of_the_wrong_length(instances_dir):
    doc = json.loads((instances_dir / "zero.json").read_text(encoding="utf-8"))
    doc["omega"] = doc["omega"][:-1]
    with pytest.raises(ValidationError) as e:
        parse_instance_text(json.dumps(doc))
    assert e.value.path.startswith("omega")


def test_two_cell_with_unknown_boundary(instances_dir):
    doc = json.loads((instances_dir / "strict.json").read_text(encoding="utf-8"))
    doc["two_cells"]["e_a_b"] = {"source": "f_a_b", "target": "h_a_b", "value": "1"}
    with pytest.raises(ValidationError):
        parse_instance_text(json.dumps(doc))
