"""
Runs condition families over an instance and collects their reports.

Every check is an independent pure evaluation, so checks are farmed out to a thread pool
and merged back in (condition, indices) order; the output never depends on scheduling.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Optional, Set, Tuple

import numpy as np

from m2c.builtin.conditions import CONDITIONS, Domain, fillersFor
from m2c.builtin.instances.groups import FiniteAbelianGroup
from m2c.builtin.instances.skeletal import pentagonator_columns
from m2c.builtin.models.linear import coefficientMatrix, linearize
from m2c.core.errors import UnknownCondition
from m2c.core.report import CheckReport, ConditionId, sortReports
from m2c.core.settings import Settings
from m2c.monoidal.instance import Instance

logger = logging.getLogger(__name__)

C = ConditionId

SUITES: Dict[str, Tuple[ConditionId, ...]] = {
    "functor": (C.FUNCTOR_AXIOM_1,),
    "associator": (C.ASSOC_NAT_F, C.ASSOC_NAT_OBJ, C.ASSOC_TRANSF),
    "unitor": (C.UNITOR_NAT_F_LEFT, C.UNITOR_NAT_F_RIGHT, C.UNITOR_TRANSF_LEFT, C.UNITOR_TRANSF_RIGHT),
    "tensorator": (C.TENS_NAT_1, C.TENS_NAT_2, C.TENS_NAT_3, C.TENS_TRANSF),
    "modification": (C.MOD_LAMBDA, C.MOD_MU, C.MOD_RHO, C.MOD_PENT),
    "stasheff": (C.STASHEFF,),
    "unit_polytopes": (C.UNIT_POLY_1, C.UNIT_POLY_2),
    "axioms": (C.STASHEFF, C.UNIT_POLY_1, C.UNIT_POLY_2),
    "consequences": (C.COR_R_ID, C.COR_ALPHA_ID),
}

# Checks handed to the pool per round when failing fast
_FAIL_FAST_CHUNK = 64


def resolve_selection(names: Optional[Iterable[str]]) -> Set[ConditionId]:
    """Suite names, condition ids or "all" to a set of condition ids."""
    if names is None:
        return set(ConditionId)
    selection: Set[ConditionId] = set()
    for name in names:
        if name == "all":
            selection.update(ConditionId)
        elif name in SUITES:
            selection.update(SUITES[name])
        else:
            try:
                selection.add(ConditionId(name))
            except ValueError:
                raise UnknownCondition(f"Unknown suite or condition: {name}; "
                                       f"suites are {', '.join(sorted(SUITES))}")
    return selection


def run_all(inst: Instance, selection: Optional[Iterable] = None, settings: Optional[Settings] = None,
            **overrides) -> List[CheckReport]:
    """
    Check every selected condition at every index tuple and return the reports sorted by
    (condition, indices). Keyword overrides (depth, threads, fail_fast, fillers) win over settings.
    """
    settings = settings or Settings()
    depth = overrides.get("depth") or settings.depth
    threads = overrides.get("threads") or settings.threads
    failFast = overrides.get("fail_fast")
    if failFast is None:
        failFast = settings.failFast
    style = overrides.get("fillers") or settings.fillers

    if selection is None:
        selected = set(ConditionId)
    else:
        selected = resolve_selection(s.value if isinstance(s, ConditionId) else s for s in selection)

    domain = Domain(inst, depth)
    fillers = fillersFor(style, inst.monoidal)
    tasks = []
    for cid in sorted(selected, key=lambda c: c.value):
        condition = CONDITIONS[cid]
        tasks += [(condition, index) for index in condition.indices(domain)]
    logger.info("Running %d checks over %d conditions on '%s' (depth %d, %d threads, %s fillers).",
                len(tasks), len(selected), inst.name, depth, threads, style)

    def run(task):
        condition, index = task
        return condition.check(domain, index, fillers)

    reports: List[CheckReport] = []
    with ThreadPoolExecutor(max_workers=threads) as pool:
        if not failFast:
            reports = list(pool.map(run, tasks))
        else:
            for start in range(0, len(tasks), _FAIL_FAST_CHUNK):
                chunk = list(pool.map(run, tasks[start:start + _FAIL_FAST_CHUNK]))
                failed = next((i for i, r in enumerate(chunk) if not r.passed), None)
                if failed is not None:
                    reports += chunk[:failed + 1]
                    logger.info("Stopped at the first failure: %s.", chunk[failed].condition)
                    break
                reports += chunk

    return sortReports(reports)


#region Per-family entry points

def check_functor_axioms(inst: Instance, **overrides) -> List[CheckReport]:
    return run_all(inst, SUITES["functor"], **overrides)


def check_associator_conditions(inst: Instance, **overrides) -> List[CheckReport]:
    return run_all(inst, SUITES["associator"], **overrides)


def check_unitor_conditions(inst: Instance, **overrides) -> List[CheckReport]:
    return run_all(inst, SUITES["unitor"], **overrides)


def check_tensorator_conditions(inst: Instance, **overrides) -> List[CheckReport]:
    return run_all(inst, SUITES["tensorator"], **overrides)


def check_modifications(inst: Instance, **overrides) -> List[CheckReport]:
    return run_all(inst, SUITES["modification"], **overrides)


def check_stasheff(inst: Instance, **overrides) -> List[CheckReport]:
    return run_all(inst, SUITES["stasheff"], **overrides)


def check_unit_polytopes(inst: Instance, **overrides) -> List[CheckReport]:
    return run_all(inst, SUITES["unit_polytopes"], **overrides)


def check_consequences(inst: Instance, **overrides) -> List[CheckReport]:
    return run_all(inst, SUITES["consequences"], **overrides)

#endregion


#region Batch Stasheff

def stasheff_pass_set(inst: Instance, cochains: np.ndarray) -> Set[int]:
    """
    Positions of the cochains ω (array of shape (count, |G|^4, rank K)) for which the
    scalar instance, with its pentagonator replaced by ω, passes every Stasheff tuple.

    Each Stasheff equation is compiled once into a linear form over generator ids; the π
    columns are then applied to all cochains at once and the other generators contribute
    a fixed offset from the instance's own values.
    """
    K = FiniteAbelianGroup.parse(inst.meta["coefficients"])
    condition = CONDITIONS[ConditionId.STASHEFF]
    domain = Domain(inst, 1)
    fillers = fillersFor("phi", inst.monoidal)

    forms = []
    for index in condition.indices(domain):
        lhs, rhs = condition.surface(domain, index, fillers).sides()
        forms.append(linearize(lhs) - linearize(rhs))

    columns = pentagonator_columns(inst)
    matrix = coefficientMatrix(forms, columns)
    cells = inst.signature.allTwoCells()
    known = set(columns)
    offset = np.zeros((len(forms), len(K.moduli)), dtype=np.int64)
    for row, form in enumerate(forms):
        for gen, coefficient in form.terms:
            if gen not in known:
                offset[row] += coefficient * np.array(inst.model.generator(cells[gen]), dtype=np.int64)

    moduli = np.array(K.moduli, dtype=np.int64)
    defects = (np.einsum("tj,njr->ntr", matrix, np.asarray(cochains, dtype=np.int64)) + offset[None]) % moduli
    passing = np.flatnonzero(~defects.any(axis=(1, 2)))
    logger.info("%d of %d cochains pass every Stasheff tuple.", len(passing), len(cochains))
    return {int(i) for i in passing}

#endregion
