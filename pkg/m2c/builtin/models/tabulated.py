import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from m2c.core.cells import Generator, OneCellPath, boundary
from m2c.core.errors import MissingTableEntry, NotInvertible, UnknownGenerator, ValidationError
from m2c.core.evaluator import Evaluator, Hom

logger = logging.getLogger(__name__)

Table = Dict[Tuple[str, str], str]
# (operation, left sort, right sort, result sort)
TableKey = Tuple[str, str, str, str]

DEFAULT_SORT = "default"
OPERATIONS = ("vcomp", "hcomp", "tensor")


@dataclass(frozen=True)
class Sort:
    """The finite value set of the homs assigned to it, with its identity element."""
    name: str
    elements: Tuple[str, ...]
    identity: str


class TabulatedEvaluator(Evaluator):
    """
    2-cell values from finite sets with explicit composition tables.

    Every parallel pair of paths (p, q) is assigned a sort; pairs the model does not list
    take the default sort, whose tables are vcompTable, hcompTable and tensorTable. A
    composite looks up the table for its operation, the sorts of its two operands and the
    sort of its own boundary. Element names are unique across sorts, so a value knows its
    sort. With the default sort alone this is a single value set with three tables.
    """

    name = "tabulated"

    def __init__(self, elements: Sequence[str], identity: str,
                 vcompTable: Table, hcompTable: Table, tensorTable: Table,
                 values: Dict[str, str],
                 sorts: Optional[Sequence[Sort]] = None,
                 homs: Optional[Dict[Hom, str]] = None,
                 tables: Optional[Dict[TableKey, Table]] = None):
        self.elements: Tuple[str, ...] = tuple(elements)
        self.unitElement = identity
        self.vcompTable = dict(vcompTable)
        self.hcompTable = dict(hcompTable)
        self.tensorTable = dict(tensorTable)
        self.values = dict(values)
        self.extraSorts: Tuple[Sort, ...] = tuple(sorts or ())
        self.homs: Dict[Hom, str] = dict(homs or {})
        self.extraTables: Dict[TableKey, Table] = {k: dict(t) for k, t in (tables or {}).items()}

        self.sorts: Dict[str, Sort] = {DEFAULT_SORT: Sort(DEFAULT_SORT, self.elements, identity)}
        for sort in self.extraSorts:
            self.sorts.setdefault(sort.name, sort)
        self.typed = bool(self.extraSorts)
        self.sortOf: Dict[str, str] = {}
        for sort in self.sorts.values():
            for x in sort.elements:
                self.sortOf.setdefault(x, sort.name)

        D = DEFAULT_SORT
        self.tables: Dict[TableKey, Table] = {("vcomp", D, D, D): self.vcompTable,
                                              ("hcomp", D, D, D): self.hcompTable,
                                              ("tensor", D, D, D): self.tensorTable}
        self.tables.update(self.extraTables)
        self._results: Dict[Tuple[str, str, str], List[str]] = {}
        for op, left, right, result in self.tables:
            self._results.setdefault((op, left, right), []).append(result)

        self._inverses: Dict[Tuple[str, str, str, str], Optional[str]] = {}

    def withValue(self, gen: str, value: str) -> "TabulatedEvaluator":
        values = dict(self.values)
        values[gen] = value
        return TabulatedEvaluator(self.elements, self.unitElement, self.vcompTable,
                                  self.hcompTable, self.tensorTable, values,
                                  self.extraSorts, self.homs, self.extraTables)

    def sortOfHom(self, hom: Hom) -> str:
        return self.homs.get(hom, DEFAULT_SORT)

    #region Composition

    def _resultSort(self, op: str, left: str, right: str, hom: Optional[Hom]) -> str:
        if hom is not None:
            return self.sortOfHom(hom)
        found = self._results.get((op, left, right), [])
        if len(found) != 1:
            raise MissingTableEntry(f"{op} of sorts {left}, {right} needs the boundary of the result")
        return found[0]

    def _compose(self, op: str, x: str, y: str, hom: Optional[Hom]) -> str:
        if not self.typed:
            return self.tables[(op, DEFAULT_SORT, DEFAULT_SORT, DEFAULT_SORT)][(x, y)]
        left, right = self.sortOf[x], self.sortOf[y]
        result = self._resultSort(op, left, right, hom)
        table = self.tables.get((op, left, right, result))
        if table is None:
            raise MissingTableEntry(f"no {op} table from sorts {left}, {right} into {result}")
        return table[(x, y)]

    def identity(self, path: OneCellPath) -> str:
        if not self.typed:
            return self.unitElement
        return self.sorts[self.sortOfHom((path, path))].identity

    def generator(self, cell: Generator) -> str:
        try:
            return self.values[cell.id]
        except KeyError:
            raise UnknownGenerator(f"no value for 2-cell generator {cell.id}")

    def vcomp(self, first: str, second: str, hom: Optional[Hom] = None) -> str:
        return self._compose("vcomp", first, second, hom)

    def hcomp(self, left: str, right: str, hom: Optional[Hom] = None) -> str:
        return self._compose("hcomp", left, right, hom)

    def tensor(self, left: str, right: str, hom: Optional[Hom] = None) -> str:
        return self._compose("tensor", left, right, hom)

    def _inverseOf(self, x: str, hom: Optional[Hom]) -> Optional[str]:
        own = self.sortOf.get(x)
        if own is None:
            return None
        if hom is None:
            back = there = here = own
        else:
            p, q = hom
            back, there, here = self.sortOfHom((q, p)), self.sortOfHom((p, p)), self.sortOfHom((q, q))
        key = (x, back, there, here)
        if key in self._inverses:
            return self._inverses[key]
        forward = self.tables.get(("vcomp", own, back, there))
        reverse = self.tables.get(("vcomp", back, own, here))
        found = None
        if forward is not None and reverse is not None:
            unitThere, unitHere = self.sorts[there].identity, self.sorts[here].identity
            found = next((y for y in self.sorts[back].elements
                          if forward.get((x, y)) == unitThere and reverse.get((y, x)) == unitHere), None)
        self._inverses[key] = found
        return found

    def invertible(self, value: str, hom: Optional[Hom] = None) -> bool:
        return self._inverseOf(value, hom) is not None

    def inverse(self, value: str, hom: Optional[Hom] = None) -> str:
        found = self._inverseOf(value, hom)
        if found is None:
            raise NotInvertible(f"value {value} has no inverse in model {self.name}")
        return found

    def combine(self, a: str, b: str, hom: Optional[Hom] = None) -> str:
        """Perturbations add through vertical composition; hom is the boundary of a."""
        return self._compose("vcomp", a, b, hom)

    #endregion

    #region Validation

    def _unitSorts(self) -> List[str]:
        """Sorts of identity 2-cells on identity 1-cells."""
        found = sorted({sort for (p, q), sort in self.homs.items() if p.isIdentity and q.isIdentity})
        return found if found or self.typed else [DEFAULT_SORT]

    def _keys(self, op: str) -> Iterable[TableKey]:
        return [k for k in self.tables if k[0] == op]

    def validate(self, cells: Optional[Dict[str, Generator]] = None) -> None:
        """Totality, associativity, identity and interchange of the tables; values sit in their hom's sort."""
        self._validateSorts()
        for key, table in self.tables.items():
            self._validateTotal(key, table)
        for key in self._keys("vcomp"):
            self._validateUnits(key, self.sorts[key[1]], self.sorts[key[2]])
        for op in ("hcomp", "tensor"):
            for unit in self._unitSorts():
                for key in self._keys(op):
                    self._validateUnits(key, self.sorts[unit] if key[1] == unit else None,
                                        self.sorts[unit] if key[2] == unit else None)
        for op in OPERATIONS:
            self._validateAssociative(op)
        for op in ("hcomp", "tensor"):
            self._validateInterchange(op)
        self._validateValues(cells)
        logger.debug("Validated %d tables over %d sorts.", len(self.tables), len(self.sorts))

    def _validateSorts(self) -> None:
        names = [s.name for s in self.extraSorts]
        if DEFAULT_SORT in names or len(set(names)) != len(names):
            raise ValidationError("sorts", f"sort names must be unique and differ from {DEFAULT_SORT}")
        allElements = [x for s in self.sorts.values() for x in s.elements]
        if len(set(allElements)) != len(allElements):
            raise ValidationError("values", "element names must be unique")
        for sort in self.sorts.values():
            if sort.identity not in sort.elements:
                where = "values.identity" if sort.name == DEFAULT_SORT else f"sorts.{sort.name}.identity"
                raise ValidationError(where, f"identity {sort.identity} is not an element")
        for (p, q), sort in self.homs.items():
            if sort not in self.sorts:
                raise ValidationError(f"homs.{p.label()},{q.label()}", f"unknown sort {sort}")

    def _where(self, key: TableKey) -> str:
        op, left, right, result = key
        if key[1:] == (DEFAULT_SORT,) * 3:
            return "tensor.values" if op == "tensor" else op
        return f"tables.{op}({left},{right};{result})"

    def _validateTotal(self, key: TableKey, table: Table) -> None:
        op, left, right, result = key
        if op not in OPERATIONS:
            raise ValidationError(self._where(key), f"unknown operation {op}")
        for s in (left, right, result):
            if s not in self.sorts:
                raise ValidationError(self._where(key), f"unknown sort {s}")
        targets = set(self.sorts[result].elements)
        for x, y in itertools.product(self.sorts[left].elements, self.sorts[right].elements):
            z = table.get((x, y))
            if z is None:
                raise ValidationError(f"{self._where(key)}.{x},{y}", "missing table entry")
            if z not in targets:
                raise ValidationError(f"{self._where(key)}.{x},{y}", f"unknown element {z}")

    def _validateUnits(self, key: TableKey, leftUnit: Optional[Sort], rightUnit: Optional[Sort]) -> None:
        op, left, right, result = key
        table = self.tables[key]
        if leftUnit is not None and right == result:
            for y in self.sorts[right].elements:
                if table[(leftUnit.identity, y)] != y:
                    raise ValidationError(self._where(key), f"{leftUnit.identity} is not a unit for {y}")
        if rightUnit is not None and left == result:
            for x in self.sorts[left].elements:
                if table[(x, rightUnit.identity)] != x:
                    raise ValidationError(self._where(key), f"{rightUnit.identity} is not a unit for {x}")

    def _validateAssociative(self, op: str) -> None:
        for (_, a, b, ab) in self._keys(op):
            for (_, ab2, c, abc) in self._keys(op):
                if ab2 != ab:
                    continue
                for bc in self._results.get((op, b, c), []):
                    outer = self.tables.get((op, a, bc, abc))
                    if outer is None:
                        continue
                    first, second = self.tables[(op, a, b, ab)], self.tables[(op, ab, c, abc)]
                    inner = self.tables[(op, b, c, bc)]
                    for x, y, z in itertools.product(self.sorts[a].elements, self.sorts[b].elements,
                                                     self.sorts[c].elements):
                        if second[(first[(x, y)], z)] != outer[(x, inner[(y, z)])]:
                            raise ValidationError(self._where((op, a, b, ab)),
                                                  f"not associative at ({x}, {y}, {z})")

    def _validateInterchange(self, op: str) -> None:
        """op(a;a', b;b') = op(a, b);op(a', b') over every chain of tables that fits."""
        for (_, v1, v2, result) in self._keys(op):
            outer = self.tables[(op, v1, v2, result)]
            for (_, a, a2, r1) in self._keys("vcomp"):
                if r1 != v1:
                    continue
                for (_, b, b2, r2) in self._keys("vcomp"):
                    if r2 != v2:
                        continue
                    for h1 in self._results.get((op, a, b), []):
                        for h2 in self._results.get((op, a2, b2), []):
                            after = self.tables.get(("vcomp", h1, h2, result))
                            if after is None:
                                continue
                            va, vb = self.tables[("vcomp", a, a2, v1)], self.tables[("vcomp", b, b2, v2)]
                            o1, o2 = self.tables[(op, a, b, h1)], self.tables[(op, a2, b2, h2)]
                            for x, x2, y, y2 in itertools.product(self.sorts[a].elements, self.sorts[a2].elements,
                                                                  self.sorts[b].elements, self.sorts[b2].elements):
                                if outer[(va[(x, x2)], vb[(y, y2)])] != after[(o1[(x, y)], o2[(x2, y2)])]:
                                    raise ValidationError(self._where((op, v1, v2, result)),
                                                          f"interchange fails at ({x}, {x2}, {y}, {y2})")

    def _validateValues(self, cells: Optional[Dict[str, Generator]]) -> None:
        for gen, value in self.values.items():
            if value not in self.sortOf:
                raise ValidationError(f"two_cells.{gen}", f"unknown element {value}")
        if not self.typed or not cells:
            return
        for cid, cell in cells.items():
            value = self.values.get(cid)
            if value is None:
                continue
            src, tgt = boundary(cell)
            expected = self.sortOfHom((src, tgt))
            if self.sortOf[value] != expected:
                raise ValidationError(f"two_cells.{cid}", f"value {value} is in sort {self.sortOf[value]}, "
                                                          f"but {src.label()} => {tgt.label()} takes {expected}")

    #endregion


def cyclicTables(order: int) -> Tuple[List[str], Table]:
    """Element names and addition table of Z/order."""
    elements = [str(i) for i in range(order)]
    table = {(str(i), str(j)): str((i + j) % order) for i in range(order) for j in range(order)}
    return elements, table


def cyclicEvaluator(order: int, values: Optional[Dict[str, str]] = None) -> TabulatedEvaluator:
    elements, table = cyclicTables(order)
    return TabulatedEvaluator(elements, "0", table, table, table, values or {})


def permutationTables(degree: int) -> Tuple[List[str], Table]:
    """
    The symmetric group on `degree` points in one-line notation ("120" sends 0 to 1),
    composed diagrammatically: x then y sends i to y[x[i]].
    """
    points = "0123456789"[:degree]
    elements = ["".join(p) for p in itertools.permutations(points)]
    table = {(x, y): "".join(y[int(c)] for c in x) for x in elements for y in elements}
    return elements, table
