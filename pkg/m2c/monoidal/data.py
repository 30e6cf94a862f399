import logging
from typing import Any, Dict, Iterator, Optional, Tuple, Union

from m2c.core.cells import Identity2, OneCellPath, Tensor, TwoCellExpr, boundary
from m2c.core.errors import M2CError, MissingTableEntry, NonComposable, ValidationError
from m2c.core.evaluator import Evaluator, evaluate
from m2c.core.signature import Signature
from . import shapes
from .shapes import Transformation

logger = logging.getLogger(__name__)

Cell = Union[str, OneCellPath, TwoCellExpr]

# Component tables holding 2-cells, by kind
CELL_KINDS = ("phi", "alpha", "lf", "rf", "pi", "lambda", "mu", "rho")
# Component tables holding structure 1-cells
PATH_KINDS = ("a", "l", "r")


def describeKey(key: Any) -> str:
    if isinstance(key, tuple):
        return ",".join(describeKey(k) for k in key)
    if isinstance(key, OneCellPath):
        return key.label()
    return str(key)


class MonoidalData:
    """
    The structure of a monoidal 2-category over a signature: unit, tensor,
    tensorator φ, associator (a, α), unitors (l, l_f, r, r_f), pentagonator π
    and 2-unitors λ, μ, ρ.

    Components missing from the tables default to identities wherever the required
    boundary allows it; α, l_f and r_f at composite 1-cells that are not tabulated are
    derived from the generator components by the transformation axiom.
    """

    def __init__(self, signature: Signature, tables: Optional[Dict[str, Dict[Any, Any]]] = None):
        self.signature = signature
        self.unit = signature.unit
        self.tables: Dict[str, Dict[Any, Any]] = {kind: {} for kind in PATH_KINDS + CELL_KINDS}
        for kind, table in (tables or {}).items():
            if kind not in self.tables:
                raise KeyError(f"Unknown component kind: {kind}")
            self.tables[kind] = dict(table)

        self._transformations: Dict[Tuple[str, int], Transformation] = {}

    def withComponent(self, kind: str, key: Any, value: Any) -> "MonoidalData":
        """A copy with one table entry replaced; self is left untouched."""
        tables = {k: dict(v) for k, v in self.tables.items()}
        tables[kind][key] = value
        return MonoidalData(self.signature, tables)

    #region Tensor

    def tensor(self, x: Cell, y: Cell) -> Cell:
        """Tensor of two cells of the same level; an object next to a higher cell acts as its identity."""
        sig = self.signature
        if isinstance(x, str) and isinstance(y, str):
            return sig.tensorObjects(x, y)
        if isinstance(x, TwoCellExpr) or isinstance(y, TwoCellExpr):
            x = self._asTwoCell(x)
            y = self._asTwoCell(y)
            sx, tx = boundary(x)
            sy, ty = boundary(y)
            if isinstance(x, Identity2) and isinstance(y, Identity2):
                return Identity2(sig.tensorPaths(sx, sy))
            return Tensor(x, y, sig.tensorPaths(sx, sy), sig.tensorPaths(tx, ty))
        return sig.tensorPaths(self._asPath(x), self._asPath(y))

    def _asPath(self, x: Cell) -> OneCellPath:
        return OneCellPath.identity(x) if isinstance(x, str) else x

    def _asTwoCell(self, x: Cell) -> TwoCellExpr:
        if isinstance(x, TwoCellExpr):
            return x
        return Identity2(self._asPath(x))

    def tensorator(self, f2: OneCellPath, g2: OneCellPath, f1: OneCellPath, g1: OneCellPath) -> TwoCellExpr:
        """φ_{f2,g2,f1,g1}: (f1⊗g1)·(f2⊗g2) ⇒ (f1·f2)⊗(g1·g2)."""
        if f1.tgt != f2.src or g1.tgt != g2.src:
            raise NonComposable(f"tensorator arguments do not compose: "
                                f"{f1.label()}/{f2.label()} and {g1.label()}/{g2.label()}")
        explicit = self.tables["phi"].get((f2, g2, f1, g1))
        if explicit is not None:
            return explicit
        src, tgt = self.tensoratorBoundary(f2, g2, f1, g1)
        if src != tgt:
            raise MissingTableEntry(f"no tensorator entry at ({describeKey((f2, g2, f1, g1))})")
        return Identity2(src)

    def tensoratorBoundary(self, f2, g2, f1, g1) -> Tuple[OneCellPath, OneCellPath]:
        src = self.tensor(f1, g1).then(self.tensor(f2, g2))
        tgt = self.tensor(f1.then(f2), g1.then(g2))
        return src, tgt

    def phi_unit(self, a: str, b: str) -> TwoCellExpr:
        """φ_{A,B}: id_A ⊗ id_B ⇒ id_{A⊗B}, the identity by requirement."""
        return Identity2(OneCellPath.identity(self.tensor(a, b)))

    #endregion

    #region Structure 1-cells

    def assoc1(self, a: str, b: str, c: str) -> OneCellPath:
        """a_{A,B,C}: (AB)C → A(BC)."""
        return self._structurePath("a", (a, b, c), self.tensor(self.tensor(a, b), c), self.tensor(a, self.tensor(b, c)))

    def lunit1(self, a: str) -> OneCellPath:
        """l_A: IA → A."""
        return self._structurePath("l", a, self.tensor(self.unit, a), a)

    def runit1(self, a: str) -> OneCellPath:
        """r_A: AI → A."""
        return self._structurePath("r", a, self.tensor(a, self.unit), a)

    def _structurePath(self, kind: str, key: Any, src: str, tgt: str) -> OneCellPath:
        explicit = self.tables[kind].get(key)
        if explicit is not None:
            return explicit
        if src != tgt:
            raise MissingTableEntry(f"no {kind} entry at ({describeKey(key)})")
        return OneCellPath.identity(src)

    #endregion

    #region Transformations

    def _transformation(self, kind: str, slot: int = 0) -> Transformation:
        key = (kind, slot)
        found = self._transformations.get(key)
        if found is not None:
            return found

        if kind == "alpha":
            def lookup(cells, slot=slot):
                return self.tables["alpha"].get(self._alphaKey(cells, slot))
            t = Transformation(self, "alpha", shapes.ASSOC_SOURCE, shapes.ASSOC_TARGET,
                               lambda objs: self.assoc1(*objs), lookup)
        elif kind == "lf":
            t = Transformation(self, "l", shapes.LEFT_UNIT_SOURCE, shapes.IDENTITY,
                               lambda objs: self.lunit1(objs[0]),
                               lambda cells: self.tables["lf"].get(cells[0]))
        elif kind == "rf":
            t = Transformation(self, "r", shapes.RIGHT_UNIT_SOURCE, shapes.IDENTITY,
                               lambda objs: self.runit1(objs[0]),
                               lambda cells: self.tables["rf"].get(cells[0]))
        else:
            raise KeyError(kind)

        self._transformations[key] = t
        return t

    def _alphaKey(self, cells: Tuple[OneCellPath, ...], slot: int):
        moving = [i for i, c in enumerate(cells) if not c.isIdentity]
        if len(moving) > 1:
            return None
        if moving:
            slot = moving[0] + 1
        if slot not in (1, 2, 3):
            return None
        return self.alphaKey(slot, cells)

    @staticmethod
    def alphaKey(slot: int, cells: Tuple[OneCellPath, ...]):
        items = [c if i == slot - 1 else c.src for i, c in enumerate(cells)]
        return (slot, *items)

    def transformation(self, kind: str, slot: int = 0) -> Transformation:
        """The associator ("alpha", by slot) or a unitor ("lf", "rf") as a transformation."""
        return self._transformation(kind, slot)

    def associator(self) -> Transformation:
        return self._transformation("alpha", 0)

    def leftUnitor(self) -> Transformation:
        return self._transformation("lf")

    def rightUnitor(self) -> Transformation:
        return self._transformation("rf")

    def alpha(self, slot: int, x: Cell, y: Cell, z: Cell) -> TwoCellExpr:
        """
        α in the given slot (1, 2 or 3); the slot argument is a 1-cell, the others objects.
        Slot 1 is α_{f,B,C}: ((f⊗B)⊗C)·a_{A',B,C} ⇒ a_{A,B,C}·(f⊗(B⊗C)).
        """
        cells = tuple(self._asPath(v) for v in (x, y, z))
        for i, c in enumerate(cells):
            if i != slot - 1 and not c.isIdentity:
                raise NonComposable(f"alpha slot {slot} takes objects outside the slot, got {c.label()}")
        return self._transformation("alpha", slot).component(cells)

    def assoc2(self, f: OneCellPath, b: str, c: str) -> TwoCellExpr:
        return self.alpha(1, f, b, c)

    def lunit2(self, f: OneCellPath) -> TwoCellExpr:
        """l_f: (I⊗f)·l_{A'} ⇒ l_A·f."""
        return self.leftUnitor().component((f,))

    def runit2(self, f: OneCellPath) -> TwoCellExpr:
        """r_f: (f⊗I)·r_{A'} ⇒ r_A·f."""
        return self.rightUnitor().component((f,))

    #endregion

    #region Pentagonator and 2-unitors

    def pentBoundary(self, a, b, c, d) -> Tuple[OneCellPath, OneCellPath]:
        t = self.tensor
        src = t(self.assoc1(a, b, c), d).then(self.assoc1(a, t(b, c), d)).then(t(a, self.assoc1(b, c, d)))
        tgt = self.assoc1(t(a, b), c, d).then(self.assoc1(a, b, t(c, d)))
        return src, tgt

    def lambdaBoundary(self, a, b) -> Tuple[OneCellPath, OneCellPath]:
        src = self.assoc1(self.unit, a, b).then(self.lunit1(self.tensor(a, b)))
        return src, self.tensor(self.lunit1(a), b)

    def muBoundary(self, a, b) -> Tuple[OneCellPath, OneCellPath]:
        src = self.assoc1(a, self.unit, b).then(self.tensor(a, self.lunit1(b)))
        return src, self.tensor(self.runit1(a), b)

    def rhoBoundary(self, a, b) -> Tuple[OneCellPath, OneCellPath]:
        src = self.assoc1(a, b, self.unit).then(self.tensor(a, self.runit1(b)))
        return src, self.runit1(self.tensor(a, b))

    def pent(self, a: str, b: str, c: str, d: str) -> TwoCellExpr:
        return self._objectCell("pi", (a, b, c, d), self.pentBoundary(a, b, c, d))

    def u2_lambda(self, a: str, b: str) -> TwoCellExpr:
        return self._objectCell("lambda", (a, b), self.lambdaBoundary(a, b))

    def u2_mu(self, a: str, b: str) -> TwoCellExpr:
        return self._objectCell("mu", (a, b), self.muBoundary(a, b))

    def u2_rho(self, a: str, b: str) -> TwoCellExpr:
        return self._objectCell("rho", (a, b), self.rhoBoundary(a, b))

    def _objectCell(self, kind: str, key: Tuple[str, ...], expected) -> TwoCellExpr:
        explicit = self.tables[kind].get(key)
        if explicit is not None:
            return explicit
        src, tgt = expected
        if src != tgt:
            raise MissingTableEntry(f"no {kind} entry at ({describeKey(key)})")
        return Identity2(src)

    #endregion

    #region Validation

    def expectedBoundary(self, kind: str, key: Any) -> Tuple[OneCellPath, OneCellPath]:
        """The boundary a component at `key` must have."""
        if kind == "phi":
            return self.tensoratorBoundary(*key)
        if kind == "alpha":
            slot = key[0]
            cells = tuple(self._asPath(v) for v in key[1:])
            return self._transformation("alpha", slot).expectedBoundary(cells)
        if kind == "lf":
            return self.leftUnitor().expectedBoundary((key,))
        if kind == "rf":
            return self.rightUnitor().expectedBoundary((key,))
        if kind == "pi":
            return self.pentBoundary(*key)
        if kind == "lambda":
            return self.lambdaBoundary(*key)
        if kind == "mu":
            return self.muBoundary(*key)
        if kind == "rho":
            return self.rhoBoundary(*key)
        raise KeyError(kind)

    def entries(self) -> Iterator[Tuple[str, Any, Any]]:
        for kind in PATH_KINDS + CELL_KINDS:
            for key, value in self.tables[kind].items():
                yield kind, key, value

    def validate(self, model: Evaluator) -> None:
        """Check every tabulated component against its required boundary and against the model."""
        sig = self.signature

        for kind, key, path in ((k, key, v) for k in PATH_KINDS for key, v in self.tables[k].items()):
            where = f"monoidal.{kind}[{describeKey(key)}]"
            if kind == "a":
                a, b, c = key
                want = (self.tensor(self.tensor(a, b), c), self.tensor(a, self.tensor(b, c)))
            elif kind == "l":
                want = (self.tensor(self.unit, key), key)
            else:
                want = (self.tensor(key, self.unit), key)
            if (path.src, path.tgt) != want:
                raise ValidationError(where, f"structure 1-cell runs {path.src} -> {path.tgt}, expected {want[0]} -> {want[1]}")
            try:
                sig.path(path.src, path.gens)
            except M2CError as e:
                raise ValidationError(where, str(e), e)

        for kind in CELL_KINDS:
            for key, cell in self.tables[kind].items():
                where = f"monoidal.{kind}[{describeKey(key)}]"
                try:
                    want = self.expectedBoundary(kind, key)
                    got = boundary(cell)
                except M2CError as e:
                    raise ValidationError(where, str(e), e)
                if got != want:
                    raise ValidationError(where, f"boundary {got[0].label()} => {got[1].label()} does not match the "
                                                 f"required {want[0].label()} => {want[1].label()}")
                value = evaluate(cell, model)
                if not model.invertible(value, got):
                    raise ValidationError(where, "structure 2-cells must be invertible")
                if kind == "phi" and all(p.isIdentity for p in key):
                    if not model.eq(value, model.identity(got[0])):
                        raise ValidationError(where, "φ_{A,B} must be the identity 2-cell (tensorator on identity 1-cells)")

        logger.debug("Validated %d structure components.", sum(len(t) for t in self.tables.values()))

    #endregion
