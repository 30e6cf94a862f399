"""
Brute-force oracle for the skeletal family: 4-cochains ω: G^4 → K of a finite abelian
group with trivial coefficients, their coboundaries and exhaustive cocycle enumeration.

A cochain is an integer array of shape (|G|,)*4 + (rank K,), indexed by element
positions in FiniteAbelianGroup.elements.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Set, Tuple

import numpy as np

from m2c.core.errors import DomainTooLarge
from .groups import FiniteAbelianGroup

logger = logging.getLogger(__name__)

# Hard limit on the number of candidate cochains an enumeration may visit
ENUMERATION_LIMIT = 2 ** 20
SHARD_SIZE = 4096


def zero_cochain(G: FiniteAbelianGroup, K: FiniteAbelianGroup, degree: int = 4) -> np.ndarray:
    return np.zeros((G.order,) * degree + (len(K.moduli),), dtype=np.int64)


def cochain_from_function(G: FiniteAbelianGroup, K: FiniteAbelianGroup,
                          fn: Callable[..., Sequence[int]], degree: int = 4) -> np.ndarray:
    omega = zero_cochain(G, K, degree)
    for idx in np.ndindex(*(G.order,) * degree):
        omega[idx] = K.reduce(fn(*(G.elements[i] for i in idx)))
    return omega


def product_cochain(G: FiniteAbelianGroup, K: FiniteAbelianGroup) -> np.ndarray:
    """ω(A,B,C,D) = A·B·C·D on the first coordinates, landing in the first factor of K."""
    def fn(a, b, c, d):
        value = [0] * len(K.moduli)
        value[0] = a[0] * b[0] * c[0] * d[0]
        return value
    return cochain_from_function(G, K, fn)


@lru_cache(maxsize=None)
def _deltaMatrix(moduli: Tuple[int, ...], degree: int) -> np.ndarray:
    """
    Integer matrix of δ from degree-cochains to (degree+1)-cochains, on flat indices:
    (δc)(x_0..x_n) = c(x_1..x_n) + Σ_i (-1)^(i+1) c(.., x_i + x_{i+1}, ..) + (-1)^(n+1) c(x_0..x_{n-1}).
    """
    G = FiniteAbelianGroup(moduli)
    n = G.order
    add = G.addTable()
    rows = n ** (degree + 1)
    matrix = np.zeros((rows, n ** degree), dtype=np.int64)
    shape = (n,) * degree
    for row, xs in enumerate(np.ndindex(*(n,) * (degree + 1))):
        matrix[row, np.ravel_multi_index(xs[1:], shape)] += 1
        for i in range(degree):
            merged = xs[:i] + (add[xs[i], xs[i + 1]],) + xs[i + 2:]
            matrix[row, np.ravel_multi_index(merged, shape)] += (-1) ** (i + 1)
        matrix[row, np.ravel_multi_index(xs[:-1], shape)] += (-1) ** (degree + 1)
    return matrix


def _apply(matrix: np.ndarray, flat: np.ndarray, K: FiniteAbelianGroup) -> np.ndarray:
    moduli = np.array(K.moduli, dtype=np.int64)
    return np.einsum("ij,...jr->...ir", matrix, flat) % moduli


def cocycle_defect(omega: np.ndarray, G: FiniteAbelianGroup, K: FiniteAbelianGroup) -> np.ndarray:
    """δω as an array of shape (|G|,)*5 + (rank K,)."""
    flat = omega.reshape(G.order ** 4, len(K.moduli))
    defect = _apply(_deltaMatrix(G.moduli, 4), flat, K)
    return defect.reshape((G.order,) * 5 + (len(K.moduli),))


def is_cocycle(omega: np.ndarray, G: FiniteAbelianGroup, K: FiniteAbelianGroup) -> bool:
    return not cocycle_defect(omega, G, K).any()


def failing_tuples(omega: np.ndarray, G: FiniteAbelianGroup, K: FiniteAbelianGroup) -> Set[Tuple[int, ...]]:
    """Element-index 5-tuples where δω ≠ 0."""
    defect = cocycle_defect(omega, G, K).any(axis=-1)
    return {tuple(int(i) for i in idx) for idx in np.argwhere(defect)}


def coboundary(nu: np.ndarray, G: FiniteAbelianGroup, K: FiniteAbelianGroup) -> np.ndarray:
    """δν for a 3-cochain ν of shape (|G|,)*3 + (rank K,)."""
    flat = nu.reshape(G.order ** 3, len(K.moduli))
    return _apply(_deltaMatrix(G.moduli, 3), flat, K).reshape((G.order,) * 4 + (len(K.moduli),))


#region Enumeration

def cochain_count(G: FiniteAbelianGroup, K: FiniteAbelianGroup, degree: int = 4) -> int:
    return K.order ** (G.order ** degree)


def _guard(G: FiniteAbelianGroup, K: FiniteAbelianGroup, degree: int) -> int:
    total = cochain_count(G, K, degree)
    if total > ENUMERATION_LIMIT:
        raise DomainTooLarge(f"{K.spec()}-valued {degree}-cochains on {G.spec()} number {total}, "
                             f"above the limit of {ENUMERATION_LIMIT}")
    return total


def cochain_batch(G: FiniteAbelianGroup, K: FiniteAbelianGroup, start: int, stop: int,
                  degree: int = 4) -> np.ndarray:
    """Cochains number start..stop-1 as a (count, |G|^degree, rank K) array; digits base |K|."""
    cells = G.order ** degree
    powers = K.order ** np.arange(cells, dtype=np.int64)
    numbers = np.arange(start, stop, dtype=np.int64)
    digits = (numbers[:, None] // powers[None, :]) % K.order
    return K.elementArray()[digits]


def all_cochains(G: FiniteAbelianGroup, K: FiniteAbelianGroup, degree: int = 4) -> np.ndarray:
    total = _guard(G, K, degree)
    return cochain_batch(G, K, 0, total, degree)


def _shardCocycles(G: FiniteAbelianGroup, K: FiniteAbelianGroup, start: int, stop: int) -> np.ndarray:
    batch = cochain_batch(G, K, start, stop)
    defects = _apply(_deltaMatrix(G.moduli, 4), batch, K)
    return batch[~defects.any(axis=(1, 2))]


def enumerate_cocycles(G: FiniteAbelianGroup, K: FiniteAbelianGroup,
                       threads: Optional[int] = None) -> List[np.ndarray]:
    """Every K-valued 4-cocycle on G, in enumeration order; shards merge in order."""
    total = _guard(G, K, 4)
    shards = [(start, min(start + SHARD_SIZE, total)) for start in range(0, total, SHARD_SIZE)]
    with ThreadPoolExecutor(max_workers=threads or 1) as pool:
        found = list(pool.map(lambda bounds: _shardCocycles(G, K, *bounds), shards))

    shape = (G.order,) * 4 + (len(K.moduli),)
    cocycles = [flat.reshape(shape) for chunk in found for flat in chunk]
    logger.info("Found %d cocycles among %d cochains.", len(cocycles), total)
    return cocycles

#endregion
