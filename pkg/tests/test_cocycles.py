import numpy as np
import pytest

from m2c.builtin.instances import FiniteAbelianGroup, build_scalar_instance, coboundary, is_cocycle, product_cochain
from m2c.builtin.instances.cochains import all_cochains, enumerate_cocycles, failing_tuples
from m2c.builtin.instances.skeletal import omega_of
from m2c.suite import check_stasheff, run_all, stasheff_pass_set


def _failingTokens(reports):
    return {r.indices for r in reports if not r.passed}


def test_product_cocycle_passes_every_stasheff_tuple(abcd):
    reports = check_stasheff(abcd)
    assert len(reports) == 32
    assert all(r.passed for r in reports)


def test_product_cocycle_passes_every_axiom(abcd):
    assert all(r.passed for r in run_all(abcd, ["axioms"]))


@pytest.mark.parametrize("flip", range(16))
def test_single_flip_fails_exactly_where_the_coboundary_is_nonzero(z2, flip):
    omega = product_cochain(z2, z2)
    idx = np.unravel_index(flip, (2, 2, 2, 2))
    omega[idx] = (omega[idx] + 1) % 2
    inst = build_scalar_instance(z2, z2, omega, name=f"flip{flip}")

    labels = z2.labels()
    expected = {tuple(labels[i] for i in t) for t in failing_tuples(omega, z2, z2)}
    assert expected
    assert _failingTokens(check_stasheff(inst)) == expected


def test_omega_survives_the_instance(abcd, z2):
    assert (omega_of(abcd) == product_cochain(z2, z2)).all()


def test_batch_stasheff_matches_the_oracle(z2):
    base = build_scalar_instance(z2, z2)
    candidates = all_cochains(z2, z2)
    passing = stasheff_pass_set(base, candidates)

    cocycles = enumerate_cocycles(z2, z2, threads=2)
    assert len(passing) == len(cocycles)
    found = {candidates[i].tobytes() for i in passing}
    assert found == {c.reshape(16, 1).tobytes() for c in cocycles}


def test_enumeration_is_independent_of_thread_count(z2):
    one = enumerate_cocycles(z2, z2, threads=1)
    four = enumerate_cocycles(z2, z2, threads=4)
    assert [c.tobytes() for c in one] == [c.tobytes() for c in four]


def test_cocycles_are_closed_under_coboundaries(z2):
    rng = np.random.default_rng(3)
    for omega in enumerate_cocycles(z2, z2)[:8]:
        nu = rng.integers(0, 2, size=(2, 2, 2, 1))
        assert is_cocycle((omega + coboundary(nu, z2, z2)) % 2, z2, z2)


def test_z3_product_cocycle_passes_stasheff():
    G = FiniteAbelianGroup.parse("Z3")
    inst = build_scalar_instance(G, G, product_cochain(G, G))
    assert all(r.passed for r in check_stasheff(inst))
