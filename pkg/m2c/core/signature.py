from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .cells import Generator, OneCellPath, boundary
from .errors import BoundaryMismatch, MissingTableEntry, NonComposable, UnknownGenerator, ValidationError

RESERVED = set(".|;()")


class Signature:
    """
    Objects, generator 1-cells and generator 2-cells of an instance, together with
    the tensor tables on objects and on generator 1-cells.
    """

    def __init__(self,
                 objects: Sequence[str],
                 unit: str,
                 oneCells: Dict[str, Tuple[str, str]],
                 twoCells: Dict[str, Generator],
                 objectTensor: Dict[Tuple[str, str], str],
                 genObj: Dict[Tuple[str, str], OneCellPath],
                 objGen: Dict[Tuple[str, str], OneCellPath],
                 genGen: Dict[Tuple[str, str], OneCellPath],
                 structureCells: Optional[Dict[str, Generator]] = None):
        self.objects: Tuple[str, ...] = tuple(objects)
        self.unit = unit
        self.oneCells = dict(oneCells)
        self.twoCells = dict(twoCells)
        # Generators that only fill structure components; naturality does not range over them
        self.structureCells = dict(structureCells or {})
        self.objectTensor = dict(objectTensor)
        self.genObj = dict(genObj)
        self.objGen = dict(objGen)
        self.genGen = dict(genGen)
        self._objectSet = set(self.objects)

        # Outgoing generators per object, in declaration order
        self.outgoing: Dict[str, List[str]] = {obj: [] for obj in self.objects}
        for gen, (src, _) in self.oneCells.items():
            self.outgoing.setdefault(src, []).append(gen)

    def allTwoCells(self) -> Dict[str, Generator]:
        cells = dict(self.twoCells)
        cells.update(self.structureCells)
        return cells

    def withStructureCell(self, cell: Generator) -> "Signature":
        structure = dict(self.structureCells)
        structure[cell.id] = cell
        return Signature(self.objects, self.unit, self.oneCells, self.twoCells, self.objectTensor,
                         self.genObj, self.objGen, self.genGen, structure)

    #region Paths

    def isObject(self, name: str) -> bool:
        return name in self._objectSet

    def identity(self, obj: str) -> OneCellPath:
        return OneCellPath.identity(obj)

    def generator1(self, gen: str) -> OneCellPath:
        if gen not in self.oneCells:
            raise UnknownGenerator(f"unknown 1-cell generator: {gen}")
        src, tgt = self.oneCells[gen]
        return OneCellPath(src, tgt, (gen,))

    def path(self, src: str, gens: Sequence[str]) -> OneCellPath:
        """Build a path from src along gens, checking each step."""
        current = src
        for gen in gens:
            if gen not in self.oneCells:
                raise UnknownGenerator(f"unknown 1-cell generator: {gen}")
            s, t = self.oneCells[gen]
            if s != current:
                raise NonComposable(f"generator {gen} starts at {s}, expected {current}")
            current = t
        return OneCellPath(src, current, tuple(gens))

    def parsePath(self, label: str) -> OneCellPath:
        """Inverse of OneCellPath.label()."""
        if label.startswith("id(") and label.endswith(")"):
            obj = label[3:-1]
            if not self.isObject(obj):
                raise UnknownGenerator(f"unknown object: {obj}")
            return self.identity(obj)
        gens = label.split(".")
        first = gens[0]
        if first not in self.oneCells:
            raise UnknownGenerator(f"unknown 1-cell generator: {first}")
        return self.path(self.oneCells[first][0], gens)

    def paths(self, src: str, depth: int) -> Iterator[OneCellPath]:
        """Non-identity paths out of src with at most `depth` generators, shortest first."""
        frontier = [self.identity(src)]
        for _ in range(depth):
            nextFrontier = []
            for p in frontier:
                for gen in self.outgoing.get(p.tgt, []):
                    q = p.then(self.generator1(gen))
                    nextFrontier.append(q)
                    yield q
            frontier = nextFrontier

    def allPaths(self, depth: int) -> List[OneCellPath]:
        return [p for obj in self.objects for p in self.paths(obj, depth)]

    #endregion

    #region Tensor

    def tensorObjects(self, a: str, b: str) -> str:
        try:
            return self.objectTensor[(a, b)]
        except KeyError:
            raise MissingTableEntry(f"no tensor entry for objects ({a}, {b})")

    def _tensorStep(self, x: str, y: str, xIsGen: bool, yIsGen: bool) -> OneCellPath:
        if xIsGen and yIsGen:
            table, kind = self.genGen, "1-cells"
        elif xIsGen:
            table, kind = self.genObj, "1-cell and object"
        elif yIsGen:
            table, kind = self.objGen, "object and 1-cell"
        else:
            return self.identity(self.tensorObjects(x, y))
        try:
            return table[(x, y)]
        except KeyError:
            raise MissingTableEntry(f"no tensor entry for {kind} ({x}, {y})")

    def tensorPaths(self, p: OneCellPath, q: OneCellPath) -> OneCellPath:
        """Componentwise tensor; the shorter path is padded with identities at its end."""
        steps = max(len(p), len(q))
        result = self.identity(self.tensorObjects(p.src, q.src))
        x, y = p.src, q.src
        for i in range(steps):
            xIsGen = i < len(p)
            yIsGen = i < len(q)
            left = p.gens[i] if xIsGen else x
            right = q.gens[i] if yIsGen else y
            result = result.then(self._tensorStep(left, right, xIsGen, yIsGen))
            if xIsGen:
                x = self.oneCells[left][1]
            if yIsGen:
                y = self.oneCells[right][1]
        return result

    #endregion

    #region Validation

    def validate(self) -> None:
        """Check totality and endpoints of every table; raise ValidationError on the first problem."""
        if not self.objects:
            raise ValidationError("objects", "an instance needs at least one object")
        if len(self._objectSet) != len(self.objects):
            raise ValidationError("objects", "object ids must be unique")
        if self.unit not in self._objectSet:
            raise ValidationError("unit", f"unit {self.unit} is not an object")

        for name in list(self.objects) + list(self.oneCells) + list(self.allTwoCells()):
            if not name or RESERVED & set(name):
                raise ValidationError(name, "ids must be non-empty and avoid the characters . | ; ( )")
        cells = set(self.allTwoCells())
        clash = self._objectSet & (set(self.oneCells) | cells)
        clash |= set(self.oneCells) & cells
        clash |= set(self.twoCells) & set(self.structureCells)
        if clash:
            raise ValidationError(sorted(clash)[0], "ids must be unique across objects and cells")

        for gen, (src, tgt) in self.oneCells.items():
            for end in (src, tgt):
                if end not in self._objectSet:
                    raise ValidationError(f"one_cells.{gen}", f"unknown object {end}")

        for a in self.objects:
            for b in self.objects:
                ab = self.objectTensor.get((a, b))
                if ab is None:
                    raise ValidationError(f"tensor.objects.{a},{b}", "missing object tensor entry")
                if ab not in self._objectSet:
                    raise ValidationError(f"tensor.objects.{a},{b}", f"unknown object {ab}")

        for f, (fs, ft) in self.oneCells.items():
            for b in self.objects:
                self._checkEntry(self.genObj, (f, b), (fs, b), (ft, b), "tensor.one_cells")
                self._checkEntry(self.objGen, (b, f), (b, fs), (b, ft), "tensor.one_cells")
            for g, (gs, gt) in self.oneCells.items():
                self._checkEntry(self.genGen, (f, g), (fs, gs), (ft, gt), "tensor.one_cells")

        for cell_id, cell in self.allTwoCells().items():
            try:
                self.path(cell.source.src, cell.source.gens)
                self.path(cell.target.src, cell.target.gens)
                boundary(cell)
            except (UnknownGenerator, NonComposable, BoundaryMismatch) as e:
                raise ValidationError(f"two_cells.{cell_id}", str(e), e)

    def _checkEntry(self, table, key, srcPair, tgtPair, where) -> None:
        entry = table.get(key)
        if entry is None:
            raise ValidationError(f"{where}.{key[0]},{key[1]}", "missing 1-cell tensor entry")
        want = (self.objectTensor[srcPair], self.objectTensor[tgtPair])
        if (entry.src, entry.tgt) != want:
            raise ValidationError(f"{where}.{key[0]},{key[1]}",
                                  f"entry runs {entry.src} -> {entry.tgt}, expected {want[0]} -> {want[1]}")
        try:
            self.path(entry.src, entry.gens)
        except (UnknownGenerator, NonComposable) as e:
            raise ValidationError(f"{where}.{key[0]},{key[1]}", str(e), e)

    #endregion
