import itertools
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from m2c.core.cells import (Identity2, OneCellPath, TwoCellExpr, boundary, concat, hcomp, vcomp, whisker)
from m2c.core.errors import BadIndices, MissingTableEntry, NotInvertible, UnknownGenerator
from m2c.core.evaluator import equal_cells, evaluate
from m2c.core.report import FAIL, PASS, CheckReport, ConditionId
from m2c.monoidal.instance import Instance
from m2c.monoidal.shapes import applyMixed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tag:
    """A literal index token: a slot ("s1") or a variant name."""
    text: str


@dataclass(frozen=True)
class CellRef:
    """A quantified 2-cell and the token naming it."""
    token: str
    cell: TwoCellExpr = field(compare=False, hash=False, repr=False)


Item = Union[str, OneCellPath, CellRef, Tag]
Index = Tuple[Item, ...]


def token(item: Item) -> str:
    if isinstance(item, OneCellPath):
        return item.label()
    if isinstance(item, CellRef):
        return item.token
    if isinstance(item, Tag):
        return item.text
    return item


@dataclass(frozen=True)
class Face:
    label: str
    cell: TwoCellExpr


@dataclass
class Surface:
    """Two hemispheres of a closed pasting surface, each a chain of faces read top to bottom."""
    lhs: List[Face]
    rhs: List[Face]

    def sides(self) -> Tuple[TwoCellExpr, TwoCellExpr]:
        return vcomp(*(f.cell for f in self.lhs)), vcomp(*(f.cell for f in self.rhs))


#region Quantification domain

class Domain:
    """
    What "for every object / 1-cell / 2-cell" ranges over at a given depth: all objects,
    identities plus generator paths of at most `depth` steps, and the generator 2-cells,
    extended at depth 2 and above by their whiskers with a generator and their vertical composites.
    """

    def __init__(self, instance: Instance, depth: int):
        self.instance = instance
        self.md = instance.monoidal
        self.depth = depth
        sig = instance.signature
        self.objects: List[str] = list(sig.objects)
        self.identities = [OneCellPath.identity(o) for o in self.objects]
        self.paths = sig.allPaths(depth)
        self.oneCells = self.identities + self.paths
        self.twoCells = self._twoCells()
        self._splits: Dict[int, List[Tuple[OneCellPath, ...]]] = {}

    def _twoCells(self) -> List[CellRef]:
        sig = self.instance.signature
        gens = [CellRef(c.id, c) for c in sig.twoCells.values()]
        cells = list(gens)
        if self.depth < 2:
            return cells
        for ref in gens:
            src = boundary(ref.cell)[0]
            for g in sig.outgoing.get(src.tgt, []):
                cells.append(CellRef(f"{ref.token}|{g}", hcomp(ref.cell, Identity2(sig.generator1(g)))))
            for g, (_, gt) in sig.oneCells.items():
                if gt == src.src:
                    cells.append(CellRef(f"{g}|{ref.token}", hcomp(Identity2(sig.generator1(g)), ref.cell)))
        for a in gens:
            for b in gens:
                if boundary(a.cell)[1] == boundary(b.cell)[0]:
                    cells.append(CellRef(f"{a.token};{b.token}", vcomp(a.cell, b.cell)))
        return cells

    def splits(self, k: int) -> List[Tuple[OneCellPath, ...]]:
        """Every way to cut a 1-cell of the domain into k consecutive pieces, empty pieces allowed."""
        found = self._splits.get(k)
        if found is not None:
            return found
        sig = self.instance.signature
        found = []
        for p in self.oneCells:
            verts = [p.src] + [sig.oneCells[g][1] for g in p.gens]
            for cuts in itertools.combinations_with_replacement(range(len(p) + 1), k - 1):
                bounds = (0,) + cuts + (len(p),)
                found.append(tuple(OneCellPath(verts[a], verts[b], p.gens[a:b])
                                   for a, b in zip(bounds, bounds[1:])))
        self._splits[k] = found
        return found

    def objectTuples(self, k: int) -> Iterator[Tuple[str, ...]]:
        return itertools.product(self.objects, repeat=k)

#endregion


#region Registry

CONDITIONS: Dict[ConditionId, "Condition"] = {}

# Condition id -> the drawn surface or displayed equation it checks
FIGURES: Dict[ConditionId, str] = {}


def register(cls):
    """Class decorator adding a condition to the registry."""
    condition = cls()
    if condition.id in CONDITIONS:
        raise ValueError(f"Condition {condition.id} registered twice")
    CONDITIONS[condition.id] = condition
    FIGURES[condition.id] = cls.figure
    return cls

#endregion


class Condition(ABC):
    """
    One coherence equation, quantified over index tuples.
    Subclasses enumerate their indices and build the closed surface at each one.
    """

    id: ConditionId
    figure: str = ""

    @abstractmethod
    def indices(self, domain: Domain) -> Iterator[Index]:
        pass

    @abstractmethod
    def surface(self, domain: Domain, index: Index, fillers) -> Surface:
        pass

    def tokens(self, index: Index) -> Tuple[str, ...]:
        return tuple(token(item) for item in index)

    def find(self, domain: Domain, tokens: Sequence[str]) -> Index:
        """The index whose tokens are `tokens`; raises BadIndices when there is none."""
        wanted = tuple(tokens)
        for index in self.indices(domain):
            if self.tokens(index) == wanted:
                return index
        raise BadIndices(f"({', '.join(wanted)}) is not an index of {self.id} at depth {domain.depth}")

    def check(self, domain: Domain, index: Index, fillers) -> CheckReport:
        model = domain.instance.model
        tokens = self.tokens(index)
        try:
            lhs, rhs = self.surface(domain, index, fillers).sides()
            if equal_cells(lhs, rhs, model):
                return CheckReport(self.id.value, tokens, PASS)
            witness = (model.render(evaluate(lhs, model)), model.render(evaluate(rhs, model)))
        except (MissingTableEntry, NotInvertible, UnknownGenerator) as e:
            logger.warning("%s at (%s) could not be evaluated: %s", self.id.value, ", ".join(tokens), e)
            witness = ("error", str(e))
        return CheckReport(self.id.value, tokens, FAIL, witness)


#region Surface helpers

def cellsOf(items: Sequence) -> Tuple[OneCellPath, ...]:
    """Objects become identity 1-cells; paths stay."""
    return tuple(OneCellPath.identity(x) if isinstance(x, str) else x for x in items)


def sources(cells: Sequence[OneCellPath]) -> Tuple[str, ...]:
    return tuple(c.src for c in cells)


def targets(cells: Sequence[OneCellPath]) -> Tuple[str, ...]:
    return tuple(c.tgt for c in cells)


def compositeComponent(steps: Sequence[Tuple[TwoCellExpr, OneCellPath, OneCellPath]]) -> TwoCellExpr:
    """
    Component at a 1-cell of a composite transformation τ_1 ... τ_m, from the components
    c_i of the factors: (c_i, τ_i at the source tuple, τ_i at the target tuple).
    Step i is c_i whiskered by τ_1..τ_{i-1} at the source and τ_{i+1}..τ_m at the target.
    """
    cells = []
    for i, (cell, _, _) in enumerate(steps):
        before = [p for _, p, _ in steps[:i]]
        after = [q for _, _, q in steps[i + 1:]]
        cells.append(whisker(concat(*before) if before else None, cell,
                             concat(*after) if after else None))
    return vcomp(*cells)


def naturalitySurface(md, transformation, items: Sequence, slot: int) -> Surface:
    """
    Naturality of a transformation in a 2-cell Γ: X ⇒ X' sitting at items[slot]:
    (F Γ ⋆ 1) then σ_{X'} equals σ_X then (1 ⋆ G Γ).
    """
    gamma = items[slot].cell
    s, t = boundary(gamma)
    plain = [x for x in items]
    plain[slot] = s
    before = cellsOf(plain)
    plain[slot] = t
    after = cellsOf(plain)
    mixed = [x for x in items]
    mixed[slot] = gamma

    sigmaP = transformation.objectComponent(sources(before))
    sigmaQ = transformation.objectComponent(targets(before))
    name = transformation.name
    lhs = [Face("F(Γ) * 1", hcomp(applyMixed(md, transformation.source, mixed), Identity2(sigmaQ))),
           Face(f"{name}(X')", transformation.component(after))]
    rhs = [Face(f"{name}(X)", transformation.component(before)),
           Face("1 * G(Γ)", hcomp(Identity2(sigmaP), applyMixed(md, transformation.target, mixed)))]
    return Surface(lhs, rhs)


def transformationSurface(transformation, first: Sequence[OneCellPath], second: Sequence[OneCellPath]) -> Surface:
    lhs, rhs = transformation.transformationAxiom(first, second)
    name = transformation.name
    return Surface([Face("κ * 1", lhs[0]), Face(f"{name}(XY)", lhs[1])],
                   [Face(f"1 * {name}(Y)", rhs[0]), Face(f"{name}(X) * 1", rhs[1]), Face("1 * ψ", rhs[2])])


def slotItems(slot: int, moving: Item, others: Sequence[str]) -> List[Item]:
    """Place `moving` at 1-based `slot` among the objects `others`."""
    items: List[Item] = list(others)
    items.insert(slot - 1, moving)
    return items

#endregion
