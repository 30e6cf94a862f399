"""
Cells of the ambient strict 2-category.

1-cells are paths of generators written in diagrammatic order: `p.then(q)` runs p first.
The empty path is the identity, so composition is concatenation and strict.
2-cells are immutable expression trees; every node has a boundary (source path, target path).
"""

from dataclasses import dataclass, field
from typing import Iterable, Optional, Tuple

from .errors import BoundaryMismatch, NonComposable


@dataclass(frozen=True)
class OneCellPath:
    src: str
    tgt: str
    gens: Tuple[str, ...] = ()

    def __post_init__(self):
        if not self.gens and self.src != self.tgt:
            raise NonComposable(f"empty path from {self.src} to {self.tgt}")

    @staticmethod
    def identity(obj: str) -> "OneCellPath":
        return OneCellPath(obj, obj, ())

    @property
    def isIdentity(self) -> bool:
        return not self.gens

    def then(self, other: "OneCellPath") -> "OneCellPath":
        if self.tgt != other.src:
            raise NonComposable(f"cannot follow {self.label()} (ends at {self.tgt}) "
                                f"with {other.label()} (starts at {other.src})")
        return OneCellPath(self.src, other.tgt, self.gens + other.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def label(self) -> str:
        if not self.gens:
            return f"id({self.src})"
        return ".".join(self.gens)

    def __str__(self) -> str:
        return self.label()


def concat(first: OneCellPath, *rest: OneCellPath) -> OneCellPath:
    path = first
    for p in rest:
        path = path.then(p)
    return path


class TwoCellExpr:
    """Base of the 2-cell expression nodes."""

    @property
    def src(self) -> OneCellPath:
        return boundary(self)[0]

    @property
    def tgt(self) -> OneCellPath:
        return boundary(self)[1]


@dataclass(frozen=True)
class Generator(TwoCellExpr):
    id: str
    source: OneCellPath
    target: OneCellPath


@dataclass(frozen=True)
class Identity2(TwoCellExpr):
    path: OneCellPath


@dataclass(frozen=True)
class VComp(TwoCellExpr):
    """Vertical composite: `first` then `second`."""
    first: TwoCellExpr
    second: TwoCellExpr


@dataclass(frozen=True)
class HComp(TwoCellExpr):
    """Horizontal composite along an object: `left` runs first in path order."""
    left: TwoCellExpr
    right: TwoCellExpr


@dataclass(frozen=True)
class Tensor(TwoCellExpr):
    """
    Tensor of two 2-cells. The boundary needs the tensor tables, so it is
    computed once by the monoidal layer and carried on the node.
    """
    left: TwoCellExpr
    right: TwoCellExpr
    source: OneCellPath = field(compare=False, repr=False, default=None)  # type: ignore
    target: OneCellPath = field(compare=False, repr=False, default=None)  # type: ignore


@dataclass(frozen=True)
class Inverse(TwoCellExpr):
    inner: TwoCellExpr


#region Boundaries

def boundary(e: TwoCellExpr) -> Tuple[OneCellPath, OneCellPath]:
    """Return (source path, target path), checking every composition node below e."""
    return _boundary(e, "root")


def _boundary(e: TwoCellExpr, nodePath: str) -> Tuple[OneCellPath, OneCellPath]:
    cached = e.__dict__.get("_boundary")
    if cached is not None:
        return cached

    if isinstance(e, Identity2):
        result = (e.path, e.path)
    elif isinstance(e, Generator):
        if (e.source.src, e.source.tgt) != (e.target.src, e.target.tgt):
            raise BoundaryMismatch(nodePath, f"generator {e.id} joins non-parallel paths "
                                             f"{e.source.label()} and {e.target.label()}")
        result = (e.source, e.target)
    elif isinstance(e, VComp):
        s1, t1 = _boundary(e.first, nodePath + ".first")
        s2, t2 = _boundary(e.second, nodePath + ".second")
        if t1 != s2:
            raise BoundaryMismatch(nodePath, f"vertical composite needs {t1.label()} == {s2.label()}")
        result = (s1, t2)
    elif isinstance(e, HComp):
        s1, t1 = _boundary(e.left, nodePath + ".left")
        s2, t2 = _boundary(e.right, nodePath + ".right")
        if s1.tgt != s2.src:
            raise BoundaryMismatch(nodePath, f"horizontal composite meets {s1.tgt} against {s2.src}")
        result = (s1.then(s2), t1.then(t2))
    elif isinstance(e, Tensor):
        _boundary(e.left, nodePath + ".left")
        _boundary(e.right, nodePath + ".right")
        if e.source is None or e.target is None:
            raise BoundaryMismatch(nodePath, "tensor node built without tensor tables")
        result = (e.source, e.target)
    elif isinstance(e, Inverse):
        s, t = _boundary(e.inner, nodePath + ".inner")
        result = (t, s)
    else:
        raise TypeError(f"Not a 2-cell expression: {e!r}")

    # Frozen nodes still own a __dict__; the cache is not a field
    e.__dict__["_boundary"] = result
    return result


def isParallel(e1: TwoCellExpr, e2: TwoCellExpr) -> bool:
    return boundary(e1) == boundary(e2)

#endregion

#region Builders

def identity2(path: OneCellPath) -> Identity2:
    return Identity2(path)


def vcomp(*cells: TwoCellExpr) -> TwoCellExpr:
    """
    Vertical composite of a chain of cells, first cell first.
    Identity factors are dropped once the chain has been checked.
    """
    if not cells:
        raise ValueError("vcomp needs at least one cell")
    for i in range(len(cells) - 1):
        t = _boundary(cells[i], f"vcomp[{i}]")[1]
        s = _boundary(cells[i + 1], f"vcomp[{i + 1}]")[0]
        if t != s:
            raise BoundaryMismatch(f"vcomp[{i + 1}]", f"vertical composite needs {t.label()} == {s.label()}")

    kept = [c for c in cells if not isinstance(c, Identity2)]
    if not kept:
        return cells[0]
    result = kept[0]
    for c in kept[1:]:
        result = VComp(result, c)
    return result


def hcomp(*cells: TwoCellExpr) -> TwoCellExpr:
    """Horizontal composite in path order; neighbouring identities merge."""
    if not cells:
        raise ValueError("hcomp needs at least one cell")

    merged = []
    for i, c in enumerate(cells):
        src = _boundary(c, f"hcomp[{i}]")[0]
        if merged:
            prev = merged[-1]
            end = _boundary(prev, f"hcomp[{i - 1}]")[1].tgt
            if end != src.src:
                raise BoundaryMismatch(f"hcomp[{i}]", f"horizontal composite meets {end} against {src.src}")
            if isinstance(c, Identity2) and isinstance(prev, Identity2):
                merged[-1] = Identity2(prev.path.then(c.path))
                continue
            if isinstance(c, Identity2) and c.path.isIdentity:
                continue
            if isinstance(prev, Identity2) and prev.path.isIdentity:
                merged[-1] = c
                continue
        merged.append(c)

    result = merged[0]
    for c in merged[1:]:
        result = HComp(result, c)
    return result


def whisker(prefix: Optional[OneCellPath], cell: TwoCellExpr, suffix: Optional[OneCellPath] = None) -> TwoCellExpr:
    """Whisker a cell by identity 2-cells on the paths before and after it."""
    parts = []
    if prefix is not None:
        parts.append(Identity2(prefix))
    parts.append(cell)
    if suffix is not None:
        parts.append(Identity2(suffix))
    return hcomp(*parts)


def inverse(cell: TwoCellExpr) -> TwoCellExpr:
    if isinstance(cell, Identity2):
        return cell
    return Inverse(cell)


def generatorIds(e: TwoCellExpr) -> Iterable[str]:
    """Generator ids in e, left to right."""
    if isinstance(e, Generator):
        yield e.id
    elif isinstance(e, (VComp,)):
        yield from generatorIds(e.first)
        yield from generatorIds(e.second)
    elif isinstance(e, (HComp, Tensor)):
        yield from generatorIds(e.left)
        yield from generatorIds(e.right)
    elif isinstance(e, Inverse):
        yield from generatorIds(e.inner)

#endregion
