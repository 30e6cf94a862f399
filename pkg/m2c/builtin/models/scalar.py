from typing import Dict, Optional, Sequence, Tuple

from m2c.core.cells import Generator, OneCellPath
from m2c.core.errors import UnknownGenerator
from m2c.core.evaluator import Evaluator, Hom

Scalar = Tuple[int, ...]


class ScalarEvaluator(Evaluator):
    """
    Values in a finite abelian group K = Z/n_1 × … × Z/n_k, as tuples.
    Vertical, horizontal and tensor composition are all addition; identities are 0.
    """

    name = "scalar"

    def __init__(self, moduli: Sequence[int], values: Dict[str, Scalar]):
        self.moduli: Tuple[int, ...] = tuple(moduli)
        self.zero: Scalar = tuple(0 for _ in self.moduli)
        self.values = {gen: self.reduce(v) for gen, v in values.items()}

    def reduce(self, value: Sequence[int]) -> Scalar:
        if len(value) != len(self.moduli):
            raise ValueError(f"Scalar {tuple(value)} does not fit moduli {self.moduli}")
        return tuple(int(x) % n for x, n in zip(value, self.moduli))

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.moduli))

    def withValue(self, gen: str, value: Scalar) -> "ScalarEvaluator":
        values = dict(self.values)
        values[gen] = value
        return ScalarEvaluator(self.moduli, values)

    def identity(self, path: OneCellPath) -> Scalar:
        return self.zero

    def generator(self, cell: Generator) -> Scalar:
        try:
            return self.values[cell.id]
        except KeyError:
            raise UnknownGenerator(f"no value for 2-cell generator {cell.id}")

    def vcomp(self, first: Scalar, second: Scalar, hom: Optional[Hom] = None) -> Scalar:
        return self.add(first, second)

    def hcomp(self, left: Scalar, right: Scalar, hom: Optional[Hom] = None) -> Scalar:
        return self.add(left, right)

    def tensor(self, left: Scalar, right: Scalar, hom: Optional[Hom] = None) -> Scalar:
        return self.add(left, right)

    def inverse(self, value: Scalar, hom: Optional[Hom] = None) -> Scalar:
        return tuple((-x) % n for x, n in zip(value, self.moduli))

    def combine(self, a: Scalar, b: Scalar, hom: Optional[Hom] = None) -> Scalar:
        return self.add(a, b)

    def render(self, value: Scalar) -> str:
        if len(value) == 1:
            return str(value[0])
        return "(" + ",".join(str(x) for x in value) + ")"
