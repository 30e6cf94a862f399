import itertools
import re
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

Element = Tuple[int, ...]

_FACTOR = re.compile(r"^Z(\d+)$")


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z/n_1 × … × Z/n_k with elements as tuples, listed in lexicographic order."""
    moduli: Tuple[int, ...]
    elements: Tuple[Element, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not self.moduli or any(m < 1 for m in self.moduli):
            raise ValueError(f"Bad group moduli: {self.moduli}")
        object.__setattr__(self, "elements", tuple(itertools.product(*(range(m) for m in self.moduli))))

    @staticmethod
    def parse(spec: str) -> "FiniteAbelianGroup":
        """'Z2', 'Z2xZ3' and so on."""
        moduli = []
        for part in spec.strip().split("x"):
            match = _FACTOR.match(part.strip())
            if match is None:
                raise ValueError(f"Bad group spec {spec!r}; expected factors like Z2 joined by x")
            moduli.append(int(match.group(1)))
        return FiniteAbelianGroup(tuple(moduli))

    def spec(self) -> str:
        return "x".join(f"Z{m}" for m in self.moduli)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def zero(self) -> Element:
        return tuple(0 for _ in self.moduli)

    def add(self, a: Sequence[int], b: Sequence[int]) -> Element:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def neg(self, a: Sequence[int]) -> Element:
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def reduce(self, a: Sequence[int]) -> Element:
        if len(a) != len(self.moduli):
            raise ValueError(f"{tuple(a)} is not an element of {self.spec()}")
        return tuple(int(x) % m for x, m in zip(a, self.moduli))

    def index(self, a: Sequence[int]) -> int:
        return self.elements.index(tuple(a))

    def label(self, a: Sequence[int]) -> str:
        return ":".join(str(x) for x in a)

    def fromLabel(self, text: str) -> Element:
        try:
            return self.reduce([int(x) for x in text.split(":")])
        except ValueError:
            raise ValueError(f"{text!r} is not an element label of {self.spec()}")

    def labels(self) -> List[str]:
        return [self.label(a) for a in self.elements]

    def addTable(self) -> np.ndarray:
        """Index of a + b for element indices a, b."""
        n = self.order
        table = np.zeros((n, n), dtype=np.int64)
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                table[i, j] = self.index(self.add(a, b))
        return table

    def elementArray(self) -> np.ndarray:
        """Elements as rows of an (order, rank) array."""
        return np.array(self.elements, dtype=np.int64).reshape(self.order, len(self.moduli))
