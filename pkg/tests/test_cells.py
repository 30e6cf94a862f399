import pytest

from m2c.builtin.models import cyclicEvaluator
from m2c.core import cells
from m2c.core.cells import (Generator, HComp, Identity2, OneCellPath, boundary, concat, hcomp, inverse, vcomp,
                            whisker)
from m2c.core.errors import BoundaryMismatch, NonComposable, NotInvertible
from m2c.core.evaluator import equal_cells, evaluate

F = OneCellPath("a", "b", ("f",))
G = OneCellPath("a", "b", ("g",))
H = OneCellPath("b", "a", ("h",))
C = Generator("c", F, G)
D = Generator("d", G, F)
K = Generator("k", H, H)


def test_identity_path_label():
    assert OneCellPath.identity("a").label() == "id(a)"
    assert OneCellPath.identity("a").isIdentity


def test_empty_path_between_distinct_objects():
    with pytest.raises(NonComposable):
        OneCellPath("a", "b", ())


def test_paths_compose_by_concatenation():
    p = F.then(H)
    assert p.label() == "f.h"
    assert (p.src, p.tgt) == ("a", "a")
    assert concat(OneCellPath.identity("a"), F, OneCellPath.identity("b")) == F


def test_then_rejects_mismatched_ends():
    with pytest.raises(NonComposable):
        F.then(F)


def test_vertical_composite_boundary():
    assert boundary(vcomp(C, D)) == (F, F)


def test_vertical_composite_mismatch():
    with pytest.raises(BoundaryMismatch):
        vcomp(C, C)


def test_horizontal_composite_boundary():
    assert boundary(hcomp(C, K)) == (F.then(H), G.then(H))


def test_horizontal_composite_mismatch():
    with pytest.raises(BoundaryMismatch):
        hcomp(C, C)


def test_identity_factors_drop_out():
    assert vcomp(Identity2(F), C, Identity2(G)) == C
    assert hcomp(Identity2(OneCellPath.identity("a")), C) == C
    merged = hcomp(Identity2(F), Identity2(H))
    assert merged == Identity2(F.then(H))


def test_whisker_boundary():
    cell = whisker(H, C, H)
    assert boundary(cell) == (H.then(F).then(H), H.then(G).then(H))


def test_whisker_builds_a_horizontal_composite():
    cell = whisker(H, C, H)
    assert cell == HComp(HComp(Identity2(H), C), Identity2(H))
    assert whisker(None, C) == C
    assert not hasattr(cells, "Whisker")


def test_inverse_swaps_boundary():
    assert boundary(inverse(C)) == (G, F)
    assert inverse(Identity2(F)) == Identity2(F)


def test_evaluate_in_cyclic_model():
    model = cyclicEvaluator(3, {"c": "1", "d": "2", "k": "1"})
    assert evaluate(vcomp(C, D), model) == "0"
    assert evaluate(hcomp(C, K), model) == "2"
    assert evaluate(inverse(C), model) == "2"
    assert equal_cells(vcomp(C, D), Identity2(F), model)
    assert not equal_cells(C, vcomp(C, D, C), cyclicEvaluator(3, {"c": "1", "d": "1"}))


def test_evaluate_checks_boundaries_first():
    model = cyclicEvaluator(2, {"c": "1"})
    bad = Generator("bad", F, H)
    with pytest.raises(BoundaryMismatch):
        evaluate(bad, model)


def test_non_invertible_value():
    from m2c.builtin.models import TabulatedEvaluator

    # {0, 1} under multiplication: 0 has no inverse
    table = {("0", "0"): "0", ("0", "1"): "0", ("1", "0"): "0", ("1", "1"): "1"}
    model = TabulatedEvaluator(["0", "1"], "1", table, table, table, {"c": "0"})
    with pytest.raises(NotInvertible):
        evaluate(inverse(C), model)


def test_parse_path_inverts_label(strict2):
    sig = strict2.signature
    for p in sig.allPaths(3) + [OneCellPath.identity(o) for o in sig.objects]:
        assert sig.parsePath(p.label()) == p
