import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from m2c.builtin.instances import (FiniteAbelianGroup, build_permutation_instance, coboundary, is_cocycle,
                                   product_cochain, zero_cochain)
from m2c.builtin.instances.cochains import all_cochains, cochain_batch, cochain_count
from m2c.builtin.models import (LinearEvaluator, LinearForm, ScalarEvaluator, TabulatedEvaluator, cyclicEvaluator,
                               linearize, permutationTables)
from m2c.core.cells import Generator, OneCellPath, inverse, vcomp
from m2c.core.errors import DomainTooLarge, MissingTableEntry, ValidationError
from m2c.io.instance_file import parse_instance

orders = st.integers(min_value=2, max_value=7)


@st.composite
def cyclic_triples(draw):
    n = draw(orders)
    x, y, z = (str(draw(st.integers(0, n - 1))) for _ in range(3))
    return cyclicEvaluator(n), x, y, z


#region Tabulated laws

@given(cyclic_triples())
def test_vcomp_associative(args):
    m, x, y, z = args
    assert m.vcomp(m.vcomp(x, y), z) == m.vcomp(x, m.vcomp(y, z))


@given(cyclic_triples())
def test_identity_is_neutral(args):
    m, x, _, _ = args
    assert m.vcomp(m.unitElement, x) == x == m.hcomp(x, m.unitElement)


@given(cyclic_triples(), st.integers(0, 6))
def test_interchange(args, w):
    m, x, y, z = args
    w = str(w % len(m.elements))
    assert m.hcomp(m.vcomp(x, y), m.vcomp(z, w)) == m.vcomp(m.hcomp(x, z), m.hcomp(y, w))


@given(cyclic_triples())
def test_every_value_invertible(args):
    m, x, _, _ = args
    assert m.invertible(x)
    assert m.vcomp(x, m.inverse(x)) == m.unitElement


def test_cyclic_tables_validate():
    cyclicEvaluator(5).validate()


def test_non_associative_table_rejected():
    m = cyclicEvaluator(3)
    table = dict(m.vcompTable)
    table[("1", "1")] = "0"
    bad = TabulatedEvaluator(m.elements, "0", table, m.hcompTable, m.tensorTable, {})
    with pytest.raises(ValidationError):
        bad.validate()


def test_one_shared_table_forces_commutativity():
    S3, compose = permutationTables(3)
    with pytest.raises(ValidationError, match="interchange"):
        TabulatedEvaluator(S3, "012", compose, compose, compose, {}).validate()


def test_permutation_model_validates():
    build_permutation_instance().validate()


def test_vertical_composition_does_not_commute():
    m = build_permutation_instance().model
    loop = OneCellPath("a", "a", ("f_a_a",))
    assert m.vcomp("120", "102", (loop, loop)) == "021"
    assert m.vcomp("102", "120", (loop, loop)) == "210"


def test_identity_values_follow_the_hom():
    m = build_permutation_instance().model
    assert m.identity(OneCellPath.identity("I")) == "1_I"
    assert m.identity(OneCellPath.identity("a")) == "1_a"
    assert m.identity(OneCellPath("a", "a", ("f_a_a", "f_a_a"))) == "012"


def test_inverse_uses_the_boundary():
    m = build_permutation_instance().model
    loop = OneCellPath("a", "a", ("f_a_a",))
    assert m.inverse("120", (loop, loop)) == "201"
    assert m.inverse("1_a", (OneCellPath.identity("a"),) * 2) == "1_a"


def test_whiskering_keeps_the_left_factor():
    m = build_permutation_instance().model
    twice = OneCellPath("a", "a", ("f_a_a", "f_a_a"))
    assert m.hcomp("120", "012", (twice, twice)) == "120"
    assert m.hcomp("012", "120", (twice, twice)) == "012"
    assert m.hcomp("1_a", "102", (twice, twice)) == "102"


def test_composite_without_a_table_is_reported():
    m = build_permutation_instance().model
    loop = OneCellPath("a", "a", ("f_a_a",))
    with pytest.raises(MissingTableEntry):
        m.hcomp("1_I", "120", (loop, loop))


def test_value_outside_its_hom_sort_rejected():
    with pytest.raises(ValidationError) as e:
        build_permutation_instance(rotation="1_a").validate()
    assert e.value.path == "two_cells.rot"

#endregion


#region Shipped tables

TABULATED_FIXTURES = ["strict.json", "perturbed.json", "permutations.json", "permutations_lf.json"]


def _model(instances_dir, name):
    return parse_instance(str(instances_dir / name)).model


def _results(m, op, left, right):
    return [key[3] for key in m.tables if key[:3] == (op, left, right)]


@pytest.mark.parametrize("name", TABULATED_FIXTURES)
def test_shipped_tables_are_total(instances_dir, name):
    m = _model(instances_dir, name)
    for (op, left, right, result), table in m.tables.items():
        for x, y in itertools.product(m.sorts[left].elements, m.sorts[right].elements):
            assert table[(x, y)] in m.sorts[result].elements


@pytest.mark.parametrize("name", TABULATED_FIXTURES)
def test_shipped_vertical_tables_are_groups(instances_dir, name):
    m = _model(instances_dir, name)
    for sort in m.sorts.values():
        v = m.tables[("vcomp", sort.name, sort.name, sort.name)]
        e = sort.identity
        for x in sort.elements:
            assert v[(e, x)] == x == v[(x, e)]
            assert any(v[(x, y)] == e == v[(y, x)] for y in sort.elements)
        for x, y, z in itertools.product(sort.elements, repeat=3):
            assert v[(v[(x, y)], z)] == v[(x, v[(y, z)])]


@pytest.mark.parametrize("name", TABULATED_FIXTURES)
@pytest.mark.parametrize("op", ["vcomp", "hcomp", "tensor"])
def test_shipped_tables_are_associative(instances_dir, name, op):
    m = _model(instances_dir, name)
    for a, b, c in itertools.product(m.sorts, repeat=3):
        for ab in _results(m, op, a, b):
            for bc in _results(m, op, b, c):
                for abc in set(_results(m, op, ab, c)) & set(_results(m, op, a, bc)):
                    left, right = m.tables[(op, ab, c, abc)], m.tables[(op, a, bc, abc)]
                    first, second = m.tables[(op, a, b, ab)], m.tables[(op, b, c, bc)]
                    for x, y, z in itertools.product(m.sorts[a].elements, m.sorts[b].elements, m.sorts[c].elements):
                        assert left[(first[(x, y)], z)] == right[(x, second[(y, z)])], (op, x, y, z)


@pytest.mark.parametrize("name", TABULATED_FIXTURES)
@pytest.mark.parametrize("op", ["hcomp", "tensor"])
def test_shipped_tables_satisfy_interchange(instances_dir, name, op):
    m = _model(instances_dir, name)
    for (kind, a, b, result), table in m.tables.items():
        if kind != op:
            continue
        va, vb = m.tables[("vcomp", a, a, a)], m.tables[("vcomp", b, b, b)]
        vr = m.tables[("vcomp", result, result, result)]
        for x, x2, y, y2 in itertools.product(m.sorts[a].elements, m.sorts[a].elements,
                                              m.sorts[b].elements, m.sorts[b].elements):
            assert table[(va[(x, x2)], vb[(y, y2)])] == vr[(table[(x, y)], table[(x2, y2)])], (x, x2, y, y2)

#endregion


#region Scalar and linear

@given(st.lists(st.integers(-20, 20), min_size=2, max_size=2), st.lists(st.integers(-20, 20), min_size=2, max_size=2))
def test_scalar_inverse_and_commutativity(a, b):
    m = ScalarEvaluator((2, 3), {})
    a, b = m.reduce(a), m.reduce(b)
    assert m.vcomp(a, m.inverse(a)) == m.zero
    assert m.hcomp(a, b) == m.hcomp(b, a)


def test_scalar_render():
    assert ScalarEvaluator((2,), {}).render((1,)) == "1"
    assert ScalarEvaluator((2, 3), {}).render((1, 2)) == "(1,2)"


@given(st.dictionaries(st.sampled_from("abcd"), st.integers(-5, 5)),
       st.dictionaries(st.sampled_from("abcd"), st.integers(-5, 5)))
def test_linear_forms_form_a_group(x, y):
    x, y = LinearForm(x), LinearForm(y)
    assert (x + y) - y == x
    assert x + (-x) == LinearForm()
    assert LinearEvaluator().inverse(x) == -x

#endregion


#region Groups and cochains

def test_group_spec_round_trip():
    G = FiniteAbelianGroup.parse("Z2xZ3")
    assert G.spec() == "Z2xZ3"
    assert G.order == 6
    assert G.labels()[0] == "0:0"


@pytest.mark.parametrize("spec", ["", "Z", "Q2", "Z2*Z3", "Z0"])
def test_bad_group_spec(spec):
    with pytest.raises(ValueError):
        FiniteAbelianGroup.parse(spec)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=8, max_size=8))
def test_coboundaries_are_cocycles(values):
    G = FiniteAbelianGroup.parse("Z2")
    nu = np.array(values, dtype=np.int64).reshape(2, 2, 2, 1)
    assert is_cocycle(coboundary(nu, G, G), G, G)


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=27, max_size=27))
def test_coboundaries_are_cocycles_z3(values):
    G = FiniteAbelianGroup.parse("Z3")
    nu = np.array(values, dtype=np.int64).reshape(3, 3, 3, 1)
    assert is_cocycle(coboundary(nu, G, G), G, G)


def test_product_cochain_is_a_cocycle(z2):
    assert is_cocycle(product_cochain(z2, z2), z2, z2)
    assert is_cocycle(zero_cochain(z2, z2), z2, z2)


def test_single_flip_is_not_a_cocycle(z2):
    omega = product_cochain(z2, z2)
    omega[0, 1, 0, 1] = 1
    assert not is_cocycle(omega, z2, z2)


def test_cochain_batch_counts(z2):
    assert cochain_count(z2, z2) == 2 ** 16
    batch = cochain_batch(z2, z2, 0, 4)
    assert batch.shape == (4, 16, 1)
    assert batch[1, 0, 0] == 1 and batch[2, 1, 0] == 1


def test_enumeration_guard():
    G = FiniteAbelianGroup.parse("Z3")
    with pytest.raises(DomainTooLarge):
        all_cochains(G, G)

#endregion


def test_linearize_counts_generators():
    f, g = OneCellPath("a", "b", ("f",)), OneCellPath("a", "b", ("g",))
    c, d = Generator("c", f, g), Generator("d", g, f)
    assert linearize(vcomp(c, d, c)) == LinearForm({"c": 2, "d": 1})
    assert linearize(vcomp(c, inverse(c))) == LinearForm()
