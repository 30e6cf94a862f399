"""
Fillers: the interchange-style 2-cells the coherence surfaces are pasted from.

Two constructions are available. "phi" builds everything from the single tensorator
φ directly; "kv" builds from the three interchange tensorators ⊗_{f,g}, ⊗_{f2,f1,B}
and ⊗_{A,g2,g1}. On a well-formed instance both give equal values, so switching
styles must never change a check result.
"""

import logging
from abc import ABC, abstractmethod
from typing import Dict, List, Sequence, Type

from m2c.core.cells import OneCellPath, TwoCellExpr, inverse, vcomp
from m2c.core.errors import ConfigError
from m2c.monoidal import hat, kv
from m2c.monoidal.shapes import Shape, applyCells, compositor, leaves

logger = logging.getLogger(__name__)


class Fillers(ABC):

    style = "abstract"

    def __init__(self, md):
        self.md = md

    @abstractmethod
    def ffB(self, f2: OneCellPath, f1: OneCellPath, b: str) -> TwoCellExpr:
        """(f1⊗B)·(f2⊗B) ⇒ (f1·f2)⊗B."""
        pass

    @abstractmethod
    def Agg(self, a: str, g2: OneCellPath, g1: OneCellPath) -> TwoCellExpr:
        """(A⊗g1)·(A⊗g2) ⇒ A⊗(g1·g2)."""
        pass

    @abstractmethod
    def fg(self, f: OneCellPath, g) -> TwoCellExpr:
        """(A⊗g)·(f⊗B') ⇒ (f⊗B)·(A'⊗g); either argument may be given as an object."""
        pass

    @abstractmethod
    def interchange(self, shape: Shape, first: Sequence[OneCellPath], second: Sequence[OneCellPath]) -> TwoCellExpr:
        """
        F(first)·F(second) ⇒ F(first')·F(second') where the moving 1-cells of first and
        second sit in different slots and the primed pair runs them in the other order.
        """
        pass

    #region Hats

    def hatRight(self, alpha: TwoCellExpr, e: str,
                 srcSegments: Sequence[OneCellPath], tgtSegments: Sequence[OneCellPath]) -> TwoCellExpr:
        """α ⊗̂ E over the given segmentations of the source and target of α."""
        return hat.hat_tensor_right(self.md, alpha, e, list(srcSegments), list(tgtSegments),
                                    lambda tail, seg: self.ffB(tail, seg, e))

    def hatLeft(self, a: str, alpha: TwoCellExpr,
                srcSegments: Sequence[OneCellPath], tgtSegments: Sequence[OneCellPath]) -> TwoCellExpr:
        return hat.hat_tensor_left(self.md, a, alpha, list(srcSegments), list(tgtSegments),
                                   lambda tail, seg: self.Agg(a, tail, seg))

    #endregion

    def _path(self, x) -> OneCellPath:
        return OneCellPath.identity(x) if isinstance(x, str) else x


class PhiFillers(Fillers):
    """Everything straight from φ."""

    style = "phi"

    def ffB(self, f2, f1, b):
        idB = OneCellPath.identity(b)
        return self.md.tensorator(f2, idB, f1, idB)

    def Agg(self, a, g2, g1):
        idA = OneCellPath.identity(a)
        return self.md.tensorator(idA, g2, idA, g1)

    def fg(self, f, g):
        f, g = self._path(f), self._path(g)
        idA, idA2 = OneCellPath.identity(f.src), OneCellPath.identity(f.tgt)
        idB, idB2 = OneCellPath.identity(g.src), OneCellPath.identity(g.tgt)
        return vcomp(self.md.tensorator(f, idB2, idA, g),
                     inverse(self.md.tensorator(idA2, g, f, idB)))

    def interchange(self, shape, first, second):
        md = self.md
        swappedFirst, swappedSecond = _swap(first, second)
        return vcomp(compositor(md, shape, first, second),
                     inverse(compositor(md, shape, swappedFirst, swappedSecond)))


class KvFillers(Fillers):
    """Everything from the three interchange tensorators."""

    style = "kv"

    def ffB(self, f2, f1, b):
        return kv.kv_tensorator_ffB(self.md, f2, f1, b)

    def Agg(self, a, g2, g1):
        return kv.kv_tensorator_Agg(self.md, a, g2, g1)

    def fg(self, f, g):
        return kv.kv_tensorator_fg(self.md, self._path(f), self._path(g))

    def interchange(self, shape, first, second):
        """Walk down the shape to the tensor node that separates the two moving slots."""
        md = self.md
        swappedFirst, swappedSecond = _swap(first, second)
        left, right = shape
        leftMoves = _moving(left, first, second)
        rightMoves = _moving(right, first, second)
        if leftMoves and rightMoves:
            if _moving(left, first):
                # first moves on the left: F(first)·F(second) = (f⊗B)(A'⊗g)
                return inverse(self.fg(applyCells(md, left, first), applyCells(md, right, second)))
            return self.fg(applyCells(md, left, second), applyCells(md, right, first))

        inner = left if leftMoves else right
        segsFrom = [applyCells(md, inner, first), applyCells(md, inner, second)]
        segsTo = [applyCells(md, inner, swappedFirst), applyCells(md, inner, swappedSecond)]
        core = self.interchange(inner, first, second)
        if leftMoves:
            return self.hatRight(core, applyCells(md, right, first).src, segsFrom, segsTo)
        return self.hatLeft(applyCells(md, left, first).src, core, segsFrom, segsTo)


def _swap(first: Sequence[OneCellPath], second: Sequence[OneCellPath]):
    """Run the moving 1-cell of `second` first: (X1, Y1) -> (X2, Y2)."""
    newFirst = tuple(OneCellPath.identity(a.src) if not a.isIdentity else b for a, b in zip(first, second))
    newSecond = tuple(a if not a.isIdentity else OneCellPath.identity(b.tgt) for a, b in zip(first, second))
    return newFirst, newSecond


def _moving(shape: Shape, *tuples: Sequence[OneCellPath]) -> bool:
    """Whether any of the given cell tuples moves in a slot under `shape`."""
    slots = leaves(shape)
    return any(not cells[i].isIdentity for cells in tuples for i in slots)


FILLERS: Dict[str, Type[Fillers]] = {
    PhiFillers.style: PhiFillers,
    KvFillers.style: KvFillers,
}


def fillersFor(style: str, md) -> Fillers:
    try:
        cls = FILLERS[style]
    except KeyError:
        raise ConfigError(f"Unknown filler style {style!r}; choose one of {sorted(FILLERS)}")
    return cls(md)
