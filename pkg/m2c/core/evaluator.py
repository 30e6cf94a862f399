from abc import ABC, abstractmethod
from typing import Any, Optional, Tuple

from .cells import (TwoCellExpr, Generator, Identity2, VComp, HComp, Tensor, Inverse,
                    OneCellPath, boundary)
from .errors import BoundaryMismatch, NotInvertible

# (source path, target path) of a 2-cell
Hom = Tuple[OneCellPath, OneCellPath]


class Evaluator(ABC):
    """
    A finite model of 2-cells with decidable equality.
    Evaluators are read-only once built and may be shared between worker threads.

    Composition hooks receive the boundary of their result as `hom`; inverse hooks get the
    boundary of the value being inverted. Models whose value sets do not depend on the
    boundary ignore it.
    """

    name = "abstract"

    @abstractmethod
    def identity(self, path: OneCellPath) -> Any:
        pass

    @abstractmethod
    def generator(self, cell: Generator) -> Any:
        """Value of a generator; raises UnknownGenerator when the model has none."""
        pass

    @abstractmethod
    def vcomp(self, first: Any, second: Any, hom: Optional[Hom] = None) -> Any:
        pass

    @abstractmethod
    def hcomp(self, left: Any, right: Any, hom: Optional[Hom] = None) -> Any:
        pass

    @abstractmethod
    def tensor(self, left: Any, right: Any, hom: Optional[Hom] = None) -> Any:
        pass

    @abstractmethod
    def inverse(self, value: Any, hom: Optional[Hom] = None) -> Any:
        pass

    def invertible(self, value: Any, hom: Optional[Hom] = None) -> bool:
        return True

    def eq(self, a: Any, b: Any) -> bool:
        return a == b

    def render(self, value: Any) -> str:
        """Stable text form used in reports and diagrams."""
        return str(value)


def evaluate(e: TwoCellExpr, m: Evaluator) -> Any:
    boundary(e)
    return _fold(e, m)


def _fold(e: TwoCellExpr, m: Evaluator) -> Any:
    # boundary() has already cached every node below the root
    if isinstance(e, Generator):
        return m.generator(e)
    if isinstance(e, Identity2):
        return m.identity(e.path)
    if isinstance(e, VComp):
        return m.vcomp(_fold(e.first, m), _fold(e.second, m), boundary(e))
    if isinstance(e, HComp):
        return m.hcomp(_fold(e.left, m), _fold(e.right, m), boundary(e))
    if isinstance(e, Tensor):
        return m.tensor(_fold(e.left, m), _fold(e.right, m), boundary(e))
    if isinstance(e, Inverse):
        value = _fold(e.inner, m)
        hom = boundary(e.inner)
        if not m.invertible(value, hom):
            raise NotInvertible(f"value {m.render(value)} has no inverse in model {m.name}")
        return m.inverse(value, hom)
    raise TypeError(f"Not a 2-cell expression: {e!r}")


def equal_cells(e1: TwoCellExpr, e2: TwoCellExpr, m: Evaluator) -> bool:
    b1, b2 = boundary(e1), boundary(e2)
    if b1 != b2:
        raise BoundaryMismatch("root", f"cells are not parallel: {b1[0].label()} => {b1[1].label()} "
                                       f"against {b2[0].label()} => {b2[1].label()}")
    return m.eq(evaluate(e1, m), evaluate(e2, m))
