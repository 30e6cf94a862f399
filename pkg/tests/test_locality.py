import random
import re

import pytest

from m2c.builtin.instances import build_strict_instance
from m2c.core.cells import OneCellPath, boundary
from m2c.core.report import ConditionId
from m2c.monoidal.instance import Location
from m2c.suite import run_all

PERTURBATIONS = 100


def _reach(inst, tokens):
    """(1-cell generator ids, objects) a failing index touches, 2-cells read through their boundaries."""
    sig = inst.signature
    gens, objs = set(), set()

    def path(gids):
        for g in gids:
            gens.add(g)
            objs.update(sig.oneCells[g])

    for token in tokens:
        for piece in re.split(r"[|;.]", token):
            if piece in sig.objects:
                objs.add(piece)
            elif piece in sig.oneCells:
                path([piece])
            elif piece in sig.twoCells:
                for p in boundary(sig.twoCells[piece]):
                    objs.update((p.src, p.tgt))
                    path(p.gens)
            elif piece.startswith("id(") and piece.endswith(")"):
                objs.add(piece[3:-1])
    return gens, objs


@pytest.fixture(scope="module")
def strict():
    return build_strict_instance(2)


@pytest.mark.parametrize("draw", range(PERTURBATIONS))
def test_single_perturbation_fails_locally(strict, draw):
    location = random.Random(draw).choice(strict.locations())
    perturbed = strict.perturb(location, "1")
    reports = run_all(perturbed)
    failed = [r for r in reports if not r.passed]
    assert failed, f"{location.label()} went unnoticed"

    gens, objs = location.references()
    named = {o for o in objs if o != strict.unit}
    for report in failed:
        reachedGens, reachedObjs = _reach(perturbed, report.indices)
        where = f"{report.condition} at ({', '.join(report.indices)})"
        assert set(gens) <= reachedGens, f"{where} does not reach the 1-cells of {location.label()}"
        assert named <= reachedObjs, f"{where} does not reach the objects of {location.label()}"

    untouched = {c.value for c in ConditionId} - {r.condition for r in failed}
    assert untouched
    assert any(r.passed for r in reports if r.condition in untouched)


def test_references_of_a_location():
    f = OneCellPath("a", "b", ("f_a_b",))
    gens, objs = Location("alpha", (1, f, "I", "b")).references()
    assert gens == ["f_a_b"]
    assert objs == ["I", "b"]
