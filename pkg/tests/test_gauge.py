import itertools

import pytest

from m2c.builtin.instances import build_strict_instance, gauge_transform
from m2c.io.instance_file import serialize_instance
from m2c.monoidal.instance import Location
from m2c.suite import run_all

TRIPLES = [("a", "b", "I"), ("a", "a", "a"), ("I", "a", "b"), ("b", "I", "a")]


def _stasheffFaces(inst, A, B, C, D, E):
    T = inst.monoidal.tensor
    return [(A, B, C, D), (A, B, T(C, D), E), (T(A, B), C, D, E),
            (B, C, D, E), (A, T(B, C), D, E), (A, B, C, T(D, E))]


@pytest.fixture(scope="module")
def strict():
    return build_strict_instance(2)


@pytest.mark.parametrize("triple", TRIPLES)
def test_gauge_transform_keeps_every_check_passing(strict, triple):
    gauged = gauge_transform(strict, triple)
    assert serialize_instance(gauged) != serialize_instance(strict)
    failed = [r for r in run_all(gauged, depth=2) if not r.passed]
    assert failed == []


def test_gauge_transform_passes_with_kv_fillers(strict):
    gauged = gauge_transform(strict, ("a", "b", "I"))
    assert all(r.passed for r in run_all(gauged, depth=2, fillers="kv"))


def test_gauge_twice_cancels(strict):
    twice = gauge_transform(gauge_transform(strict, ("a", "a", "a")), ("a", "a", "a"))
    added = set(twice.model.values) - set(strict.model.values)
    assert added
    assert all(twice.model.values[c] == "0" for c in added)


@pytest.mark.parametrize("triple, skipped", [(("a", "b", "I"), ("a", "b", "I", "I")),
                                             (("a", "a", "a"), ("a", "a", "a", "a"))])
def test_unbalanced_gauge_fails_stasheff_exactly_where_the_skipped_face_appears(strict, triple, skipped):
    gauged = gauge_transform(strict, triple, skip=[Location("pi", skipped)])
    assert serialize_instance(gauged) != serialize_instance(strict)

    expected = set()
    for tup in itertools.product(strict.objects, repeat=5):
        if _stasheffFaces(strict, *tup).count(skipped) % 2:
            expected.add(tup)
    assert expected

    failed = {r.indices for r in run_all(gauged, ["stasheff"]) if not r.passed}
    assert failed == expected
