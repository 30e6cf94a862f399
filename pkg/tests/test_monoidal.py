import json

import pytest

from m2c.builtin.conditions import Domain
from m2c.builtin.instances import build_random_instance, build_strict_instance
from m2c.core.cells import Generator, Identity2, OneCellPath, boundary, hcomp, vcomp
from m2c.core.errors import ValidationError
from m2c.core.evaluator import evaluate
from m2c.io.instance_file import parse_instance_text
from m2c.monoidal.hat import (fold_tensor_left, fold_tensor_left_head, fold_tensor_right, fold_tensor_right_head,
                              hat_tensor_left, hat_tensor_right)
from m2c.monoidal.instance import Location
from m2c.monoidal.kv import kv_tensorator_Agg, kv_tensorator_ffB, kv_tensorator_fg


def _strictDocument(instances_dir):
    return json.loads((instances_dir / "strict.json").read_text(encoding="utf-8"))


def test_strict_instances_validate():
    for n in (1, 2, 3):
        build_strict_instance(n).validate()


def test_tensor_of_objects_is_truncated_concatenation(strict2):
    md = strict2.monoidal
    assert md.tensor("I", "a") == "a"
    assert md.tensor("a", "b") == "a"
    assert md.tensor(md.tensor("a", "b"), "b") == md.tensor("a", md.tensor("b", "b"))


def test_structure_defaults_to_identities(strict2):
    md = strict2.monoidal
    assert md.assoc1("a", "b", "I").isIdentity
    assert md.lunit1("a") == OneCellPath.identity("a")
    assert isinstance(md.pent("a", "b", "I", "a"), Identity2)
    assert isinstance(md.phi_unit("a", "b"), Identity2)


def test_tensorator_boundary(strict2):
    md = strict2.monoidal
    sig = strict2.signature
    f, h = sig.generator1("f_a_b"), sig.generator1("f_b_a")
    idI = OneCellPath.identity("I")
    src, tgt = md.tensoratorBoundary(h, idI, f, idI)
    assert src == f.then(h) == tgt


#region Validation at load time

def test_phi_on_identities_must_be_identity(instances_dir):
    doc = _strictDocument(instances_dir)
    doc["structure_cells"] = {"phi1": {"source": "id(a)", "target": "id(a)", "value": "1"}}
    doc["monoidal"] = {"phi": [{"key": ["id(a)", "id(a)", "id(a)", "id(a)"], "cell": "phi1"}]}
    with pytest.raises(ValidationError) as e:
        parse_instance_text(json.dumps(doc))
    assert e.value.path.startswith("monoidal.phi")
    assert "φ_{A,B}" in e.value.reason


def test_tensorator_with_wrong_boundary(instances_dir):
    doc = _strictDocument(instances_dir)
    doc["structure_cells"] = {"phi1": {"source": "f_a_b", "target": "g_a_b", "value": "0"}}
    doc["monoidal"] = {"phi": [{"key": ["id(b)", "id(a)", "f_a_b", "id(a)"], "cell": "phi1"}]}
    with pytest.raises(ValidationError) as e:
        parse_instance_text(json.dumps(doc))
    assert e.value.path == "monoidal.phi[id(b),id(a),f_a_b,id(a)]"


def test_perturbation_adds_a_structure_cell(strict2):
    location = Location("alpha", (1, strict2.signature.generator1("f_a_b"), "I", "I"))
    perturbed = strict2.perturb(location, "1")
    cell = perturbed.monoidal.tables["alpha"][location.key]
    assert isinstance(cell, Generator)
    assert perturbed.model.generator(cell) == "1"
    assert location.key not in strict2.monoidal.tables["alpha"]
    perturbed.validate()


def test_perturb_then_revert_restores_values(strict2):
    location = strict2.locations()[0]
    once = strict2.perturb(location, "1")
    twice = once.perturb(location, "1")
    cell = twice.monoidal.tables[location.kind][location.key]
    assert twice.model.generator(cell) == "0"

#endregion


#region Folds, hats and kv fillers

def _composites(inst, length):
    return [p for p in inst.signature.allPaths(length) if len(p) == length]


def _withTensorators(inst):
    """Every tensorator on a pair of generators set to 1; composite pairs stay identities."""
    for location in inst.locations():
        if location.kind == "phi":
            inst = inst.perturb(location, "1")
    return inst


@pytest.fixture(scope="module")
def phi2():
    return _withTensorators(build_strict_instance(2))


@pytest.mark.parametrize("n", [2, 3])
def test_fold_bracketing_agrees_on_strict_instances(n):
    inst = build_strict_instance(n)
    md = inst.monoidal
    for p in _composites(inst, 3):
        for obj in inst.objects:
            right, rightHead = fold_tensor_right(md, p, obj), fold_tensor_right_head(md, p, obj)
            assert boundary(right) == boundary(rightHead)
            assert inst.evaluate(right) == inst.evaluate(rightHead)
            left, leftHead = fold_tensor_left(md, obj, p), fold_tensor_left_head(md, obj, p)
            assert boundary(left) == boundary(leftHead)
            assert inst.evaluate(left) == inst.evaluate(leftHead)


@pytest.mark.parametrize("n", [2, 3])
def test_fold_bracketing_agrees_with_non_identity_tensorators(n):
    inst = _withTensorators(build_strict_instance(n))
    md = inst.monoidal
    for p in _composites(inst, 3):
        for obj in inst.objects:
            right = fold_tensor_right(md, p, obj)
            assert inst.evaluate(right) == "1"
            assert inst.evaluate(right) == inst.evaluate(fold_tensor_right_head(md, p, obj))
            left = fold_tensor_left(md, obj, p)
            assert inst.evaluate(left) == inst.evaluate(fold_tensor_left_head(md, obj, p))


def test_fold_of_two_segments_is_the_tensorator(phi2):
    md = phi2.monoidal
    sig = phi2.signature
    f, h = sig.generator1("f_a_b"), sig.generator1("f_b_a")
    for e in phi2.objects:
        idE = OneCellPath.identity(e)
        phi = md.tensorator(h, idE, f, idE)
        assert isinstance(phi, Generator)
        assert fold_tensor_right(md, [f, h], e) == phi
        assert phi2.evaluate(fold_tensor_right(md, f.then(h), e)) == "1"


def test_fold_of_three_segments_joins_from_the_back(phi2):
    md = phi2.monoidal
    sig = phi2.signature
    f, h = sig.generator1("f_a_b"), sig.generator1("f_b_a")
    idE = OneCellPath.identity("b")
    inner = hcomp(Identity2(md.tensor(f, idE)), md.tensorator(f, idE, h, idE))
    expected = vcomp(inner, md.tensorator(h.then(f), idE, f, idE))
    folded = fold_tensor_right(md, [f, h, f], "b")
    assert folded == expected
    assert boundary(folded) == (md.tensor(f, idE).then(md.tensor(h, idE)).then(md.tensor(f, idE)),
                                md.tensor(f.then(h).then(f), idE))
    assert phi2.evaluate(folded) == "1"


def test_left_hat_is_the_tensorator_then_the_whiskered_cell(phi2):
    md = phi2.monoidal
    sig = phi2.signature
    h = sig.generator1("f_b_a")
    cell = next(ref.cell for ref in Domain(phi2, 2).twoCells if ref.token == "c_a_b|f_b_a")
    src, tgt = boundary(cell)
    idI = OneCellPath.identity("I")
    hat = hat_tensor_left(md, "I", cell, tgtSegments=[tgt])
    expected = vcomp(md.tensorator(idI, h, idI, sig.generator1("f_a_b")), md.tensor("I", cell))
    assert hat == expected
    assert phi2.evaluate(hat) == phi2.evaluate(expected) != phi2.evaluate(md.tensor("I", cell))


def test_hat_of_an_identity_is_an_identity(phi2):
    md = phi2.monoidal
    for p in _composites(phi2, 2) + _composites(phi2, 3):
        for e in phi2.objects:
            hat = hat_tensor_right(md, Identity2(p), e)
            src, tgt = boundary(hat)
            assert src == tgt == md.tensor(p, OneCellPath.identity(e))
            assert phi2.evaluate(hat) == "0"


def test_hat_degenerates_to_plain_tensor_when_tensorators_are_identities(strict2):
    md = strict2.monoidal
    domain = Domain(strict2, 2)
    assert any("|" in ref.token for ref in domain.twoCells)
    for ref in domain.twoCells:
        for obj in strict2.objects:
            assert strict2.evaluate(hat_tensor_right(md, ref.cell, obj)) == strict2.evaluate(md.tensor(ref.cell, obj))
            assert strict2.evaluate(hat_tensor_left(md, obj, ref.cell)) == strict2.evaluate(md.tensor(obj, ref.cell))


def test_hat_boundary_is_made_of_whiskered_segments(strict2):
    md = strict2.monoidal
    sig = strict2.signature
    cell = next(ref.cell for ref in Domain(strict2, 2).twoCells if ref.token == "c_a_b|f_b_a")
    hat = hat_tensor_right(md, cell, "b")
    src, tgt = boundary(hat)
    f, h = sig.generator1("f_a_b"), sig.generator1("f_b_a")
    assert src == md.tensor(f, "b").then(md.tensor(h, "b"))
    assert tgt == md.tensor(sig.generator1("g_a_b"), "b").then(md.tensor(h, "b"))


@pytest.mark.parametrize("seed", range(5))
def test_kv_fillers_have_the_phi_boundaries(seed):
    inst = build_random_instance(seed)
    md = inst.monoidal
    sig = inst.signature
    f, h = sig.generator1("f_a_b"), sig.generator1("f_b_a")
    ffB = kv_tensorator_ffB(md, h, f, "a")
    assert boundary(ffB) == (md.tensor(f, "a").then(md.tensor(h, "a")), md.tensor(f.then(h), "a"))
    Agg = kv_tensorator_Agg(md, "I", h, f)
    assert boundary(Agg) == (md.tensor("I", f).then(md.tensor("I", h)), md.tensor("I", f.then(h)))
    fg = kv_tensorator_fg(md, f, h)
    assert boundary(fg)[0] == md.tensor("a", h).then(md.tensor(f, "a"))
    assert boundary(fg)[1] == md.tensor(f, "b").then(md.tensor("b", h))
    evaluate(fg, inst.model)

#endregion
