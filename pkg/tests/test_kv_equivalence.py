import pytest

from m2c.builtin.conditions import Domain, fillersFor
from m2c.builtin.conditions.fillers import Fillers
from m2c.builtin.instances import build_random_instance, build_strict_instance
from m2c.core.cells import boundary
from m2c.monoidal.hat import hat_tensor_left, hat_tensor_right, segmentsOf
from m2c.suite import run_all


@pytest.mark.parametrize("seed", range(10))
def test_kv_fillers_reproduce_phi_reports(seed):
    inst = build_random_instance(seed)
    phi = run_all(inst, fillers="phi")
    kv = run_all(inst, fillers="kv")
    assert [r.toDict() for r in kv] == [r.toDict() for r in phi]


def test_random_instances_are_reproducible():
    first, second = build_random_instance(7), build_random_instance(7)
    assert first.signature.structureCells.keys() == second.signature.structureCells.keys()
    assert run_all(first, ["stasheff", "modification"]) == run_all(second, ["stasheff", "modification"])


def test_filler_styles_share_the_hat_folds():
    inst = build_strict_instance(2)
    for location in inst.locations():
        if location.kind == "phi":
            inst = inst.perturb(location, "1")
    md = inst.monoidal
    phi, kv = fillersFor("phi", md), fillersFor("kv", md)
    assert not any(hasattr(Fillers, name) for name in ("foldRight", "foldLeft"))
    for ref in Domain(inst, 2).twoCells:
        src, tgt = boundary(ref.cell)
        p, q = segmentsOf(src, md.signature), segmentsOf(tgt, md.signature)
        for obj in inst.objects:
            plain = inst.evaluate(hat_tensor_right(md, ref.cell, obj))
            assert inst.evaluate(phi.hatRight(ref.cell, obj, p, q)) == plain
            assert inst.evaluate(kv.hatRight(ref.cell, obj, p, q)) == plain
            plain = inst.evaluate(hat_tensor_left(md, obj, ref.cell))
            assert inst.evaluate(kv.hatLeft(obj, ref.cell, p, q)) == plain
