import logging
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from m2c.core.cells import Generator
from m2c.core.signature import Signature
from m2c.builtin.models.scalar import ScalarEvaluator
from m2c.monoidal.data import MonoidalData
from m2c.monoidal.instance import Instance, Location
from .cochains import zero_cochain
from .groups import FiniteAbelianGroup

logger = logging.getLogger(__name__)

UNITOR_KINDS = ("lambda", "mu", "rho")


def build_scalar_instance(G: FiniteAbelianGroup, K: FiniteAbelianGroup,
                          omega: Optional[np.ndarray] = None,
                          unitors: Optional[Dict[str, np.ndarray]] = None,
                          components: Optional[Dict[Location, Sequence[int]]] = None,
                          name: str = "scalar") -> Instance:
    """
    Skeletal instance: objects are the elements of G, tensor is the group operation, the
    only 1-cells are identities, and 2-cells take values in K with every composition being
    addition. π and the 2-unitors get one structure cell per index tuple, valued by omega
    and the unitor arrays (shape (|G|, |G|, rank K)). Further components (α, l_f, r_f at
    identities) are added from `components` when given.
    """
    labels = G.labels()
    objectTensor = {(labels[i], labels[j]): G.label(G.add(a, b))
                    for i, a in enumerate(G.elements) for j, b in enumerate(G.elements)}
    bare = Signature(labels, G.label(G.zero), {}, {}, objectTensor, {}, {}, {})
    shape = MonoidalData(bare)

    omega = zero_cochain(G, K) if omega is None else np.asarray(omega, dtype=np.int64)
    if omega.shape != (G.order,) * 4 + (len(K.moduli),):
        raise ValueError(f"omega has shape {omega.shape}, expected {(G.order,) * 4 + (len(K.moduli),)}")
    unitors = dict(unitors or {})
    for kind in unitors:
        if kind not in UNITOR_KINDS:
            raise ValueError(f"Unknown unitor kind: {kind}")

    structure: Dict[str, Generator] = {}
    values: Dict[str, Tuple[int, ...]] = {}
    tables: Dict[str, Dict] = {kind: {} for kind in ("pi",) + UNITOR_KINDS}

    def add(kind: str, key: Tuple[str, ...], value) -> None:
        cellId = f"{kind}[{','.join(key)}]"
        src, tgt = shape.expectedBoundary(kind, key)
        cell = Generator(cellId, src, tgt)
        structure[cellId] = cell
        values[cellId] = K.reduce(value)
        tables[kind][key] = cell

    for idx in np.ndindex(*(G.order,) * 4):
        add("pi", tuple(labels[i] for i in idx), omega[idx])
    for kind in UNITOR_KINDS:
        table = unitors.get(kind, zero_cochain(G, K, 2))
        for i, j in np.ndindex(G.order, G.order):
            add(kind, (labels[i], labels[j]), table[i, j])

    signature = Signature(labels, G.label(G.zero), {}, {}, objectTensor, {}, {}, {}, structure)
    instance = Instance(name, "scalar", signature, MonoidalData(signature, tables),
                        ScalarEvaluator(K.moduli, values),
                        {"group": G.spec(), "coefficients": K.spec()})

    for location, value in sorted((components or {}).items(), key=lambda kv: kv[0].cellId()):
        instance = instance.perturb(location, K.reduce(value))

    logger.info("Built scalar instance over %s with coefficients %s.", G.spec(), K.spec())
    return instance


def pentagonator_columns(instance: Instance) -> Tuple[str, ...]:
    """Ids of the π cells of a scalar instance, in flat cochain order."""
    G = FiniteAbelianGroup.parse(instance.meta["group"])
    labels = G.labels()
    table = instance.monoidal.tables["pi"]
    return tuple(table[tuple(labels[i] for i in idx)].id for idx in np.ndindex(*(G.order,) * 4))


def omega_of(instance: Instance) -> np.ndarray:
    """The pentagonator values of a scalar instance as a cochain."""
    G = FiniteAbelianGroup.parse(instance.meta["group"])
    K = FiniteAbelianGroup.parse(instance.meta["coefficients"])
    labels = G.labels()
    omega = zero_cochain(G, K)
    for idx in np.ndindex(*(G.order,) * 4):
        cell = instance.monoidal.tables["pi"][tuple(labels[i] for i in idx)]
        omega[idx] = instance.model.generator(cell)
    return omega
