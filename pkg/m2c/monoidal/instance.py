import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from m2c.core.cells import Generator, OneCellPath, TwoCellExpr
from m2c.core.errors import M2CError, UnknownGenerator, UnknownLocation, ValidationError
from m2c.core.evaluator import Evaluator, evaluate
from m2c.core.signature import Signature
from .data import CELL_KINDS, MonoidalData, describeKey

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Location:
    """A structure component: its kind and its index key."""
    kind: str
    key: Any

    def label(self) -> str:
        return f"{self.kind}[{describeKey(self.key)}]"

    def cellId(self) -> str:
        """Generator id for a freshly created component cell."""
        return f"{self.kind}[{_idKey(self.key)}]"

    def references(self) -> Tuple[List[str], List[str]]:
        """(1-cell generator ids, object ids) named by the key."""
        gens: List[str] = []
        objs: List[str] = []
        items = self.key if isinstance(self.key, tuple) else (self.key,)
        for item in items:
            if isinstance(item, OneCellPath):
                if item.isIdentity:
                    objs.append(item.src)
                gens.extend(item.gens)
            elif isinstance(item, str):
                objs.append(item)
        return gens, objs


def _idKey(key: Any) -> str:
    if isinstance(key, tuple):
        return ",".join(_idKey(k) for k in key)
    if isinstance(key, OneCellPath):
        return "~".join(key.gens) if key.gens else f"1_{key.src}"
    return str(key)


class Instance:
    """A candidate monoidal 2-category: signature, structure data and a value model."""

    def __init__(self, name: str, kind: str, signature: Signature, monoidal: MonoidalData,
                 model: Evaluator, meta: Optional[Dict[str, Any]] = None):
        self.name = name
        self.kind = kind
        self.signature = signature
        self.monoidal = monoidal
        self.model = model
        self.meta = dict(meta or {})

    @property
    def objects(self) -> Tuple[str, ...]:
        return self.signature.objects

    @property
    def unit(self) -> str:
        return self.signature.unit

    def evaluate(self, e: TwoCellExpr) -> Any:
        return evaluate(e, self.model)

    def validate(self) -> "Instance":
        self.signature.validate()
        validateModel = getattr(self.model, "validate", None)
        if validateModel is not None:
            validateModel(self.signature.allTwoCells())
        for cell_id, cell in self.signature.allTwoCells().items():
            try:
                self.model.generator(cell)
            except UnknownGenerator as e:
                raise ValidationError(f"two_cells.{cell_id}", "no value assigned", e)
        self.monoidal.validate(self.model)
        logger.info("Validated instance '%s' with %d objects.", self.name, len(self.objects))
        return self

    #region Perturbation

    def locations(self) -> List[Location]:
        """Structure locations a perturbation can target, in a fixed order."""
        sig = self.signature
        objs = self.objects
        gens = [sig.generator1(g) for g in sig.oneCells]
        ids = [OneCellPath.identity(o) for o in objs]
        found: List[Location] = []

        found += [Location("pi", (a, b, c, d)) for a in objs for b in objs for c in objs for d in objs]
        for kind in ("lambda", "mu", "rho"):
            found += [Location(kind, (a, b)) for a in objs for b in objs]
        for slot in (1, 2, 3):
            for f in gens + ids:
                for b in objs:
                    for c in objs:
                        items = [b, c]
                        items.insert(slot - 1, f)
                        found.append(Location("alpha", (slot, *items)))
        for kind in ("lf", "rf"):
            found += [Location(kind, f) for f in gens + ids]
        for f1 in gens:
            for f2 in gens:
                if f1.tgt != f2.src:
                    continue
                for o in objs:
                    idO = OneCellPath.identity(o)
                    found.append(Location("phi", (f2, idO, f1, idO)))
                    found.append(Location("phi", (idO, f2, idO, f1)))
        return [loc for loc in found if self._resolves(loc)]

    def _resolves(self, location: Location) -> bool:
        try:
            self._expected(location)
            return True
        except UnknownLocation:
            return False

    def _expected(self, location: Location):
        if location.kind not in CELL_KINDS:
            raise UnknownLocation(f"unknown component kind: {location.kind}")
        gens, objs = location.references()
        for o in objs:
            if not self.signature.isObject(o):
                raise UnknownLocation(f"unknown object {o} in {location.label()}")
        for g in gens:
            if g not in self.signature.oneCells:
                raise UnknownLocation(f"unknown 1-cell {g} in {location.label()}")
        if location.kind == "phi" and all(p.isIdentity for p in location.key):
            raise UnknownLocation("φ_{A,B} is fixed to the identity")
        try:
            return self.monoidal.expectedBoundary(location.kind, location.key)
        except (M2CError, KeyError, TypeError, ValueError) as e:
            raise UnknownLocation(f"{location.label()} does not resolve: {e}")

    def perturb(self, location: Location, delta: Any) -> "Instance":
        """A new instance whose component at `location` is shifted by delta; self is untouched."""
        expected = self._expected(location)
        model = self.model
        existing = self.monoidal.tables[location.kind].get(location.key)

        if isinstance(existing, Generator):
            value = model.combine(model.generator(existing), delta, expected)
            return Instance(self.name, self.kind, self.signature, self.monoidal,
                            model.withValue(existing.id, value), self.meta)

        base = evaluate(existing, model) if existing is not None else model.identity(expected[0])
        cellId = location.cellId()
        taken = self.signature.allTwoCells()
        while cellId in taken:
            cellId += "'"
        cell = Generator(cellId, expected[0], expected[1])
        signature = self.signature.withStructureCell(cell)
        tables = {k: dict(v) for k, v in self.monoidal.tables.items()}
        tables[location.kind][location.key] = cell
        logger.debug("Added structure cell %s for perturbation.", cellId)
        return Instance(self.name, self.kind, signature, MonoidalData(signature, tables),
                        model.withValue(cellId, model.combine(base, delta, expected)), self.meta)

    #endregion
