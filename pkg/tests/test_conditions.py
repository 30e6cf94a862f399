import pytest

from m2c.builtin.conditions import CONDITIONS, FIGURES, Domain, fillersFor
from m2c.builtin.instances import build_permutation_instance, build_random_instance, build_strict_instance
from m2c.core.errors import BadIndices, ConfigError, UnknownCondition
from m2c.core.report import ConditionId
from m2c.io.instance_file import parse_instance
from m2c.monoidal.instance import Location
from m2c.suite import (SUITES, check_consequences, check_functor_axioms, check_stasheff, resolve_selection,
                       run_all)


def _failed(reports):
    return [r for r in reports if not r.passed]


def test_every_condition_is_registered_with_a_figure():
    assert set(CONDITIONS) == set(ConditionId)
    assert set(FIGURES) == set(ConditionId)
    assert all(FIGURES[cid] for cid in ConditionId)
    assert len(ConditionId) == 21


def test_suites_cover_every_condition():
    covered = set()
    for ids in SUITES.values():
        covered.update(ids)
    assert covered == set(ConditionId)


def test_resolve_selection():
    assert resolve_selection(["all"]) == set(ConditionId)
    assert resolve_selection(["stasheff", "cor_r_id"]) == {ConditionId.STASHEFF, ConditionId.COR_R_ID}
    with pytest.raises(UnknownCondition):
        resolve_selection(["pentagon"])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_strict_instances_pass_everything(n):
    reports = run_all(build_strict_instance(n), depth=2)
    assert reports
    assert _failed(reports) == []
    assert {r.condition for r in reports} >= {ConditionId.STASHEFF.value, ConditionId.MOD_PENT.value}


def test_strict_instance_passes_with_kv_fillers(strict2):
    assert _failed(run_all(strict2, fillers="kv")) == []


def test_unknown_filler_style(strict2):
    with pytest.raises(ConfigError):
        fillersFor("raw", strict2.monoidal)


def test_reports_are_sorted_and_stable(strict2):
    first = run_all(strict2, threads=4)
    second = run_all(strict2, threads=1)
    assert first == second
    assert [r.sortKey() for r in first] == sorted(r.sortKey() for r in first)


def test_perturbed_tensorator_fails_the_functor_axiom(strict2):
    sig = strict2.signature
    f, h = sig.generator1("f_a_b"), sig.generator1("f_b_a")
    ida = sig.identity("a")
    perturbed = strict2.perturb(Location("phi", (h, ida, f, ida)), "1")

    failed = _failed(check_functor_axioms(perturbed))
    assert failed
    assert any("f_a_b" in r.indices and "f_b_a" in r.indices for r in failed)
    assert all(r.witness is not None for r in failed)


def test_perturbed_fixture_fails_where_the_associator_was_changed(instances_dir):
    inst = parse_instance(str(instances_dir / "perturbed.json"))
    failed = _failed(run_all(inst))
    assert failed
    assert all(any("f_a_b" in token or token == "I" for token in r.indices) for r in failed)


def test_permutation_instance_passes_everything():
    inst = build_permutation_instance()
    assert _failed(run_all(inst, depth=2)) == []
    assert _failed(run_all(inst, depth=2, fillers="kv")) == []


def test_left_unitor_naturality_sees_non_commuting_values(instances_dir):
    inst = parse_instance(str(instances_dir / "permutations_lf.json"))
    reports = {r.indices: r for r in run_all(inst, ["unitor_nat_f_left"])}
    assert not reports[("flip",)].passed
    assert reports[("rot",)].passed


def test_find_rejects_unknown_indices(strict2):
    domain = Domain(strict2, 2)
    stasheff = CONDITIONS[ConditionId.STASHEFF]
    assert stasheff.tokens(stasheff.find(domain, ["a", "b", "I", "a", "b"])) == ("a", "b", "I", "a", "b")
    with pytest.raises(BadIndices):
        stasheff.find(domain, ["a", "b", "z", "a", "b"])


def test_fail_fast_stops_at_the_first_failure(strict2):
    location = Location("pi", ("a", "a", "a", "a"))
    perturbed = strict2.perturb(location, "1")
    everything = run_all(perturbed, ["stasheff"])
    fast = run_all(perturbed, ["stasheff"], fail_fast=True)
    assert len(_failed(fast)) == 1
    assert len(fast) <= len(everything)


def test_pentagonator_perturbation_fails_stasheff_with_values(strict2):
    inst = strict2.perturb(Location("pi", ("a", "b", "I", "a")), "1")
    reports = check_stasheff(inst)
    assert any(not r.passed for r in reports)
    assert all(r.witness[0] != "error" for r in reports if not r.passed)


#region Corollaries

def _premise(inst):
    return not _failed(run_all(inst, ["functor", "associator", "unitor"]))


def test_consequences_hold_wherever_their_premises_do():
    candidates = [build_strict_instance(n) for n in (1, 2, 3)] + [build_random_instance(s) for s in range(6)]
    held = 0
    for inst in candidates:
        if _premise(inst):
            held += 1
            assert _failed(check_consequences(inst)) == []
    assert held >= 3

#endregion


def test_word_cap_four_spot_checks():
    inst = build_strict_instance(2, wordCap=4)
    assert len(inst.objects) == 31
    domain = Domain(inst, 1)
    fillers = fillersFor("phi", inst.monoidal)
    stasheff = CONDITIONS[ConditionId.STASHEFF]
    for index in (("I", "a", "ab", "abab", "b"), ("abab", "baba", "I", "bbbb", "aab"), ("b", "ba", "aba", "I", "I")):
        report = stasheff.check(domain, index, fillers)
        assert report.passed, report
