"""
Functors built from the tensor, and transformations between them.

A shape is a binary tree whose leaves are argument slots (ints) or the unit (None):
((0, 1), 2) is (A⊗B)⊗C and (None, 0) is I⊗A. Applying a shape to paths gives the
image of a 1-cell; the compositor of a shape is the 2-cell F(X)·F(Y) ⇒ F(X·Y) built
from tensorators, i.e. the 2-functor structure of the shape.

A transformation σ: F ⇒ G has a 1-cell σ_P for each object tuple P and a 2-cell
σ_X: F(X)·σ_Q ⇒ σ_P·G(X) for each 1-cell X: P → Q.
"""

from typing import Callable, Dict, Optional, Sequence, Tuple, Union

from m2c.core.cells import Identity2, OneCellPath, TwoCellExpr, boundary, hcomp, inverse, vcomp
from m2c.core.errors import MissingTableEntry

Shape = Union[int, None, Tuple["Shape", "Shape"]]

ASSOC_SOURCE: Shape = ((0, 1), 2)
ASSOC_TARGET: Shape = (0, (1, 2))
LEFT_UNIT_SOURCE: Shape = (None, 0)
RIGHT_UNIT_SOURCE: Shape = (0, None)
IDENTITY: Shape = 0


def applyObjects(md, shape: Shape, objs: Sequence[str]) -> str:
    if shape is None:
        return md.unit
    if isinstance(shape, int):
        return objs[shape]
    left, right = shape
    return md.tensor(applyObjects(md, left, objs), applyObjects(md, right, objs))


def applyCells(md, shape: Shape, cells: Sequence[OneCellPath]) -> OneCellPath:
    if shape is None:
        return OneCellPath.identity(md.unit)
    if isinstance(shape, int):
        return cells[shape]
    left, right = shape
    return md.tensor(applyCells(md, left, cells), applyCells(md, right, cells))


def compositor(md, shape: Shape, first: Sequence[OneCellPath], second: Sequence[OneCellPath]) -> TwoCellExpr:
    """F(first)·F(second) ⇒ F(first·second)."""
    if shape is None or isinstance(shape, int):
        return Identity2(applyCells(md, shape, first).then(applyCells(md, shape, second)))
    left, right = shape
    phi = md.tensorator(applyCells(md, left, second), applyCells(md, right, second),
                        applyCells(md, left, first), applyCells(md, right, first))
    return vcomp(phi, md.tensor(compositor(md, left, first, second), compositor(md, right, first, second)))


def sources(cells: Sequence[OneCellPath]) -> Tuple[str, ...]:
    return tuple(c.src for c in cells)


def targets(cells: Sequence[OneCellPath]) -> Tuple[str, ...]:
    return tuple(c.tgt for c in cells)


class Transformation:
    """
    A transformation between two shapes, with components at single generators read
    from a table and components at longer 1-cells derived by the transformation axiom.
    """

    def __init__(self, md, name: str, source: Shape, target: Shape,
                 objectComponent: Callable[[Sequence[str]], OneCellPath],
                 lookup: Callable[[Tuple[OneCellPath, ...]], Optional[TwoCellExpr]]):
        self.md = md
        self.name = name
        self.source = source
        self.target = target
        self.objectComponent = objectComponent
        self.lookup = lookup
        self._cache: Dict[Tuple[OneCellPath, ...], TwoCellExpr] = {}

    def expectedBoundary(self, cells: Sequence[OneCellPath]) -> Tuple[OneCellPath, OneCellPath]:
        src = applyCells(self.md, self.source, cells).then(self.objectComponent(targets(cells)))
        tgt = self.objectComponent(sources(cells)).then(applyCells(self.md, self.target, cells))
        return src, tgt

    def component(self, cells: Sequence[OneCellPath]) -> TwoCellExpr:
        cells = tuple(cells)
        cached = self._cache.get(cells)
        if cached is not None:
            return cached

        explicit = self.lookup(cells)
        if explicit is not None:
            result = explicit
        elif sum(len(c) for c in cells) <= 1:
            src, tgt = self.expectedBoundary(cells)
            if src != tgt:
                raise MissingTableEntry(f"no {self.name} component at ({', '.join(c.label() for c in cells)})")
            result = Identity2(src)
        else:
            first, second = self._splitLast(cells)
            result = self.extend(first, second)

        self._cache[cells] = result
        return result

    def _splitLast(self, cells: Tuple[OneCellPath, ...]):
        slot = max(i for i, c in enumerate(cells) if not c.isIdentity)
        head = cells[slot]
        gen = head.gens[-1]
        mid = self.md.signature.oneCells[gen][0]
        prefix = list(cells)
        prefix[slot] = OneCellPath(head.src, mid, head.gens[:-1])
        step = [OneCellPath.identity(c.tgt) for c in prefix]
        step[slot] = OneCellPath(mid, head.tgt, (gen,))
        return tuple(prefix), tuple(step)

    def extend(self, first: Sequence[OneCellPath], second: Sequence[OneCellPath]) -> TwoCellExpr:
        """σ at first·second from σ at first, σ at second and the two compositors."""
        md = self.md
        sigmaP = self.objectComponent(sources(first))
        sigmaR = self.objectComponent(targets(second))
        kappa = compositor(md, self.source, first, second)
        psi = compositor(md, self.target, first, second)
        return vcomp(
            inverse(hcomp(kappa, Identity2(sigmaR))),
            hcomp(Identity2(applyCells(md, self.source, first)), self.component(second)),
            hcomp(self.component(first), Identity2(applyCells(md, self.target, second))),
            hcomp(Identity2(sigmaP), psi),
        )

    def transformationAxiom(self, first: Sequence[OneCellPath], second: Sequence[OneCellPath]):
        """
        The two sides of the transformation axiom for composable first, second:
        σ_{first·second} ⊙ (κ ⋆ 1) and (1 ⋆ ψ) ⊙ (σ_first ⋆ 1) ⊙ (1 ⋆ σ_second).
        """
        md = self.md
        joined = tuple(a.then(b) for a, b in zip(first, second))
        sigmaP = self.objectComponent(sources(first))
        sigmaR = self.objectComponent(targets(second))
        kappa = compositor(md, self.source, first, second)
        psi = compositor(md, self.target, first, second)
        lhs = [hcomp(kappa, Identity2(sigmaR)), self.component(joined)]
        rhs = [
            hcomp(Identity2(applyCells(md, self.source, first)), self.component(second)),
            hcomp(self.component(first), Identity2(applyCells(md, self.target, second))),
            hcomp(Identity2(sigmaP), psi),
        ]
        return lhs, rhs


def checkBoundary(cell: TwoCellExpr, expected: Tuple[OneCellPath, OneCellPath]) -> bool:
    return boundary(cell) == expected


def applyMixed(md, shape: Shape, items: Sequence):
    """Apply a shape to objects mixed with one higher cell; md.tensor treats the objects as identities."""
    if shape is None:
        return md.unit
    if isinstance(shape, int):
        return items[shape]
    left, right = shape
    return md.tensor(applyMixed(md, left, items), applyMixed(md, right, items))


def leaves(shape: Shape) -> Tuple[int, ...]:
    if shape is None:
        return ()
    if isinstance(shape, int):
        return (shape,)
    return leaves(shape[0]) + leaves(shape[1])
