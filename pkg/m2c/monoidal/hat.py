"""
The modified tensor ⊗̂ of an object with a 2-cell whose boundary is a composite.

Plain whiskering α ⊗ E only sees the composite 1-cells as a whole; ⊗̂ first
gathers the whiskered segments with tensorators, applies α ⊗ 1_E and splits the
target again, so that its boundary is made of the whiskered segments themselves.
"""

from typing import Callable, List, Optional, Sequence, Union

from m2c.core.cells import Identity2, OneCellPath, TwoCellExpr, boundary, concat, hcomp, inverse, vcomp
from m2c.core.errors import BoundaryMismatch

Segments = Union[OneCellPath, Sequence[OneCellPath]]
# (tail, seg) -> the 2-cell joining seg onto the already folded tail
Join = Callable[[OneCellPath, OneCellPath], TwoCellExpr]


def segmentsOf(segments: Segments, signature) -> List[OneCellPath]:
    """A single path splits into its generators; a list is taken as given."""
    if isinstance(segments, OneCellPath):
        if segments.isIdentity:
            return [segments]
        return [signature.generator1(g) for g in segments.gens]
    return list(segments)


def fold_tensor_right(md, segments: Segments, e: str, join: Optional[Join] = None) -> TwoCellExpr:
    """
    (f_1⊗E)·…·(f_n⊗E) ⇒ (f_1·…·f_n)⊗E, joining from the last segment backwards:
    n = 2 is φ_{f_2,E,f_1,E}; n = 3 is (1 ⋆ φ_{f_3,E,f_2,E}) then φ_{f_2·f_3,E,f_1,E}.
    """
    parts = segmentsOf(segments, md.signature)
    idE = OneCellPath.identity(e)
    tail = parts[-1]
    cell: TwoCellExpr = Identity2(md.tensor(tail, idE))
    for seg in reversed(parts[:-1]):
        phi = join(tail, seg) if join else md.tensorator(tail, idE, seg, idE)
        cell = vcomp(hcomp(Identity2(md.tensor(seg, idE)), cell), phi)
        tail = seg.then(tail)
    return cell


def fold_tensor_left(md, a: str, segments: Segments, join: Optional[Join] = None) -> TwoCellExpr:
    """(A⊗g_1)·…·(A⊗g_n) ⇒ A⊗(g_1·…·g_n), same bracketing as the right fold."""
    parts = segmentsOf(segments, md.signature)
    idA = OneCellPath.identity(a)
    tail = parts[-1]
    cell: TwoCellExpr = Identity2(md.tensor(idA, tail))
    for seg in reversed(parts[:-1]):
        phi = join(tail, seg) if join else md.tensorator(idA, tail, idA, seg)
        cell = vcomp(hcomp(Identity2(md.tensor(idA, seg)), cell), phi)
        tail = seg.then(tail)
    return cell


def fold_tensor_right_head(md, segments: Segments, e: str) -> TwoCellExpr:
    """The opposite bracketing: join from the first segment forwards."""
    parts = segmentsOf(segments, md.signature)
    idE = OneCellPath.identity(e)
    head = parts[0]
    cell: TwoCellExpr = Identity2(md.tensor(head, idE))
    for seg in parts[1:]:
        phi = md.tensorator(seg, idE, head, idE)
        cell = vcomp(hcomp(cell, Identity2(md.tensor(seg, idE))), phi)
        head = head.then(seg)
    return cell


def fold_tensor_left_head(md, a: str, segments: Segments) -> TwoCellExpr:
    parts = segmentsOf(segments, md.signature)
    idA = OneCellPath.identity(a)
    head = parts[0]
    cell: TwoCellExpr = Identity2(md.tensor(idA, head))
    for seg in parts[1:]:
        phi = md.tensorator(idA, seg, idA, head)
        cell = vcomp(hcomp(cell, Identity2(md.tensor(idA, seg))), phi)
        head = head.then(seg)
    return cell


def _checkSegments(parts: List[OneCellPath], path: OneCellPath, side: str) -> None:
    if concat(*parts) != path:
        raise BoundaryMismatch(side, f"segments {'.'.join(p.label() for p in parts)} do not compose to {path.label()}")


def hat_tensor_right(md, alpha: TwoCellExpr, e: str,
                     srcSegments: Optional[Segments] = None,
                     tgtSegments: Optional[Segments] = None, join: Optional[Join] = None) -> TwoCellExpr:
    """
    α ⊗̂ E = fold(q)^{-1} ⊙ (α ⊗ 1_E) ⊙ fold(p) for α: p ⇒ q.
    Segments default to the generators of p and q.
    """
    src, tgt = boundary(alpha)
    p = segmentsOf(srcSegments if srcSegments is not None else src, md.signature)
    q = segmentsOf(tgtSegments if tgtSegments is not None else tgt, md.signature)
    _checkSegments(p, src, "source")
    _checkSegments(q, tgt, "target")
    return vcomp(fold_tensor_right(md, p, e, join),
                 md.tensor(alpha, e),
                 inverse(fold_tensor_right(md, q, e, join)))


def hat_tensor_left(md, a: str, alpha: TwoCellExpr,
                    srcSegments: Optional[Segments] = None,
                    tgtSegments: Optional[Segments] = None, join: Optional[Join] = None) -> TwoCellExpr:
    """A ⊗̂ α; for α: g·f ⇒ h this is φ_{A,g,A,f} then A ⊗ α."""
    src, tgt = boundary(alpha)
    p = segmentsOf(srcSegments if srcSegments is not None else src, md.signature)
    q = segmentsOf(tgtSegments if tgtSegments is not None else tgt, md.signature)
    _checkSegments(p, src, "source")
    _checkSegments(q, tgt, "target")
    return vcomp(fold_tensor_left(md, a, p, join),
                 md.tensor(a, alpha),
                 inverse(fold_tensor_left(md, a, q, join)))
