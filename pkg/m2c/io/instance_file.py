"""
Reading and writing instance files.

Instances are JSON documents. Every table is a list of rows rather than a mapping with
composite keys, so ids never need escaping. Serialization writes keys and rows in a
fixed order, so parse -> serialize -> parse -> serialize is byte-stable.
"""

import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Sequence, Tuple

import numpy as np

from m2c.builtin.instances.groups import FiniteAbelianGroup
from m2c.builtin.instances.skeletal import UNITOR_KINDS, build_scalar_instance, omega_of
from m2c.builtin.models.tabulated import Sort, TabulatedEvaluator
from m2c.core.cells import Generator, OneCellPath
from m2c.core.errors import M2CError, ParseError, ValidationError
from m2c.core.signature import Signature
from m2c.monoidal.data import CELL_KINDS, PATH_KINDS, MonoidalData
from m2c.monoidal.instance import Instance, Location

logger = logging.getLogger(__name__)

TABULATED_KEYS = ("model", "name", "objects", "unit", "one_cells", "two_cells", "structure_cells",
                  "values", "vcomp", "hcomp", "tensor", "sorts", "homs", "tables", "monoidal", "meta")
SCALAR_KEYS = ("model", "name", "group", "coefficients", "omega", "unitors", "components")
TENSOR_KEYS = ("objects", "one_cells", "values")
VALUES_KEYS = ("elements", "identity")
SORT_TABLE_KEYS = ("op", "sorts", "rows")
CELL_KEYS = ("source", "target", "value")
# Scalar components beyond π and the 2-unitors
SCALAR_COMPONENT_KINDS = ("phi", "alpha", "lf", "rf")


#region Key codecs

def _objects(sig: Signature, tokens: Sequence[str], count: int, where: str) -> Tuple[str, ...]:
    if len(tokens) != count:
        raise ValidationError(where, f"expected {count} objects, got {len(tokens)}")
    for t in tokens:
        if not isinstance(t, str) or not sig.isObject(t):
            raise ValidationError(where, f"unknown object {t}")
    return tuple(tokens)


def _path(sig: Signature, label: Any, where: str) -> OneCellPath:
    if not isinstance(label, str):
        raise ValidationError(where, f"expected a path label, got {label!r}")
    try:
        return sig.parsePath(label)
    except M2CError as e:
        raise ValidationError(where, str(e), e)


def _decodeAlpha(sig, tokens, where):
    if len(tokens) != 4 or tokens[0] not in (1, 2, 3):
        raise ValidationError(where, "alpha keys are [slot, x, y, z] with slot 1, 2 or 3")
    slot = tokens[0]
    items = []
    for i, t in enumerate(tokens[1:]):
        items.append(_path(sig, t, where) if i == slot - 1 else _objects(sig, [t], 1, where)[0])
    return (slot, *items)


def _decodePhi(sig, tokens, where):
    if len(tokens) != 4:
        raise ValidationError(where, "phi keys are [f2, g2, f1, g1]")
    return tuple(_path(sig, t, where) for t in tokens)


def _decodeUnitor(sig, tokens, where):
    if len(tokens) != 1:
        raise ValidationError(where, "unitor keys are [f]")
    return _path(sig, tokens[0], where)


def _label(x) -> Any:
    return x.label() if isinstance(x, OneCellPath) else x


# kind -> (encode key to JSON list, decode JSON list to key)
KEY_CODECS: Dict[str, Tuple[Callable, Callable]] = {
    "a": (list, lambda sig, t, w: _objects(sig, t, 3, w)),
    "l": (lambda k: [k], lambda sig, t, w: _objects(sig, t, 1, w)[0]),
    "r": (lambda k: [k], lambda sig, t, w: _objects(sig, t, 1, w)[0]),
    "phi": (lambda k: [p.label() for p in k], _decodePhi),
    "alpha": (lambda k: [_label(x) for x in k], _decodeAlpha),
    "lf": (lambda k: [k.label()], _decodeUnitor),
    "rf": (lambda k: [k.label()], _decodeUnitor),
    "pi": (list, lambda sig, t, w: _objects(sig, t, 4, w)),
    "lambda": (list, lambda sig, t, w: _objects(sig, t, 2, w)),
    "mu": (list, lambda sig, t, w: _objects(sig, t, 2, w)),
    "rho": (list, lambda sig, t, w: _objects(sig, t, 2, w)),
}

#endregion


#region Parsing helpers

def _checkKeys(data: Dict[str, Any], allowed: Sequence[str], where: str) -> None:
    for key in data:
        if key not in allowed:
            raise ValidationError(f"{where}{key}", "unknown key")


def _require(data: Dict[str, Any], key: str, kind: type, where: str, default: Any = ...) -> Any:
    if key not in data:
        if default is not ...:
            return default
        raise ValidationError(f"{where}{key}", "missing key")
    value = data[key]
    if not isinstance(value, kind):
        raise ValidationError(f"{where}{key}", f"expected {kind.__name__}")
    return value


def _strings(data: Any, where: str) -> List[str]:
    if not isinstance(data, list):
        raise ValidationError(where, "expected a list of ids")
    for i, item in enumerate(data):
        if not isinstance(item, str):
            raise ValidationError(f"{where}[{i}]", f"expected a string, got {item!r}")
    return data


def _rows(data: Any, width: int, where: str) -> List[list]:
    if not isinstance(data, list):
        raise ValidationError(where, "expected a list of rows")
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != width:
            raise ValidationError(f"{where}[{i}]", f"expected a row of {width} entries")
        _strings(row, f"{where}[{i}]")
    return data


def _table(data: Any, where: str) -> Dict[Tuple[str, str], str]:
    return {(x, y): z for x, y, z in _rows(data, 3, where)}

#endregion


def parse_instance(path: str) -> Instance:
    """Load and fully validate an instance file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Could not read {path}: {e}")
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}")
    instance = parse_instance_text(text)
    logger.info("Loaded instance '%s' with %d objects.", instance.name, len(instance.objects))
    return instance


def parse_instance_text(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno)
    if not isinstance(data, dict):
        raise ParseError("an instance file holds a JSON object", 1, 1)

    model = data.get("model")
    if model == "tabulated":
        _checkKeys(data, TABULATED_KEYS, "")
        instance = _loadTabulated(data)
    elif model == "scalar":
        _checkKeys(data, SCALAR_KEYS, "")
        instance = _loadScalar(data)
    else:
        raise ValidationError("model", f"expected \"tabulated\" or \"scalar\", got {model!r}")
    return instance.validate()


#region Tabulated

def _loadCells(sig: Signature, data: Dict[str, Any], where: str) -> Tuple[Dict[str, Generator], Dict[str, str]]:
    cells: Dict[str, Generator] = {}
    values: Dict[str, str] = {}
    for cid, entry in data.items():
        at = f"{where}.{cid}"
        if not isinstance(entry, dict):
            raise ValidationError(at, "expected an object with source, target and value")
        _checkKeys(entry, CELL_KEYS, f"{at}.")
        src = _path(sig, _require(entry, "source", str, f"{at}."), f"{at}.source")
        tgt = _path(sig, _require(entry, "target", str, f"{at}."), f"{at}.target")
        cells[cid] = Generator(cid, src, tgt)
        values[cid] = _require(entry, "value", str, f"{at}.")
    return cells, values


def _loadMonoidal(sig: Signature, data: Dict[str, Any], cells: Dict[str, Generator]) -> Dict[str, Dict]:
    _checkKeys(data, PATH_KINDS + CELL_KINDS, "monoidal.")
    tables: Dict[str, Dict] = {}
    for kind, entries in data.items():
        if not isinstance(entries, list):
            raise ValidationError(f"monoidal.{kind}", "expected a list of entries")
        decode = KEY_CODECS[kind][1]
        field = "path" if kind in PATH_KINDS else "cell"
        table = {}
        for i, entry in enumerate(entries):
            at = f"monoidal.{kind}[{i}]"
            if not isinstance(entry, dict):
                raise ValidationError(at, "expected an object with key and " + field)
            _checkKeys(entry, ("key", field), f"{at}.")
            key = decode(sig, _require(entry, "key", list, f"{at}."), f"{at}.key")
            ref = _require(entry, field, str, f"{at}.")
            if kind in PATH_KINDS:
                table[key] = _path(sig, ref, f"{at}.path")
            elif ref in cells:
                table[key] = cells[ref]
            else:
                raise ValidationError(f"{at}.cell", f"unknown 2-cell {ref}")
        tables[kind] = table
    return tables


def _loadSorts(data: Dict[str, Any]) -> List[Sort]:
    sorts = []
    for name, spec in _require(data, "sorts", dict, "", {}).items():
        at = f"sorts.{name}"
        if not isinstance(spec, dict):
            raise ValidationError(at, "expected an object with elements and identity")
        _checkKeys(spec, VALUES_KEYS, f"{at}.")
        elements = _strings(_require(spec, "elements", list, f"{at}."), f"{at}.elements")
        sorts.append(Sort(name, tuple(elements), _require(spec, "identity", str, f"{at}.")))
    return sorts


def _loadHoms(sig: Signature, data: Dict[str, Any]) -> Dict[Tuple[OneCellPath, OneCellPath], str]:
    homs = {}
    for i, (src, tgt, sort) in enumerate(_rows(_require(data, "homs", list, "", []), 3, "homs")):
        at = f"homs[{i}]"
        p, q = _path(sig, src, at), _path(sig, tgt, at)
        if (p.src, p.tgt) != (q.src, q.tgt):
            raise ValidationError(at, f"{src} and {tgt} are not parallel")
        homs[(p, q)] = sort
    return homs


def _loadSortTables(data: Dict[str, Any]) -> Dict[Tuple[str, str, str, str], Dict]:
    tables = {}
    for i, entry in enumerate(_require(data, "tables", list, "", [])):
        at = f"tables[{i}]"
        if not isinstance(entry, dict):
            raise ValidationError(at, "expected an object with op, sorts and rows")
        _checkKeys(entry, SORT_TABLE_KEYS, f"{at}.")
        sorts = _strings(_require(entry, "sorts", list, f"{at}."), f"{at}.sorts")
        if len(sorts) != 3:
            raise ValidationError(f"{at}.sorts", "expected [left, right, result]")
        key = (_require(entry, "op", str, f"{at}."), *sorts)
        if key in tables:
            raise ValidationError(at, "a table for this operation and these sorts is already given")
        tables[key] = _table(_require(entry, "rows", list, f"{at}."), f"{at}.rows")
    return tables


def _loadTabulated(data: Dict[str, Any]) -> Instance:
    objects = _strings(_require(data, "objects", list, ""), "objects")
    unit = _require(data, "unit", str, "")
    oneCells = {}
    for gen, ends in _require(data, "one_cells", dict, "").items():
        if not isinstance(ends, list) or len(ends) != 2 or not all(isinstance(e, str) for e in ends):
            raise ValidationError(f"one_cells.{gen}", "expected [source, target]")
        oneCells[gen] = tuple(ends)
    bare = Signature(objects, unit, oneCells, {}, {}, {}, {}, {})

    tensor = _require(data, "tensor", dict, "")
    _checkKeys(tensor, TENSOR_KEYS, "tensor.")
    objectTensor = _table(_require(tensor, "objects", list, "tensor."), "tensor.objects")
    genObj, objGen, genGen = {}, {}, {}
    for i, (x, y, label) in enumerate(_rows(_require(tensor, "one_cells", list, "tensor."), 3, "tensor.one_cells")):
        table = (genGen if y in oneCells else genObj) if x in oneCells else objGen
        table[(x, y)] = _path(bare, label, f"tensor.one_cells[{i}]")

    twoCells, values = _loadCells(bare, _require(data, "two_cells", dict, ""), "two_cells")
    structure, structureValues = _loadCells(bare, _require(data, "structure_cells", dict, "", {}), "structure_cells")
    values.update(structureValues)

    signature = Signature(objects, unit, oneCells, twoCells, objectTensor, genObj, objGen, genGen, structure)
    allCells = signature.allTwoCells()
    tables = _loadMonoidal(signature, _require(data, "monoidal", dict, "", {}), allCells)

    spec = _require(data, "values", dict, "")
    _checkKeys(spec, VALUES_KEYS, "values.")
    elements = _strings(_require(spec, "elements", list, "values."), "values.elements")
    model = TabulatedEvaluator(elements, _require(spec, "identity", str, "values."),
                               _table(_require(data, "vcomp", list, ""), "vcomp"),
                               _table(_require(data, "hcomp", list, ""), "hcomp"),
                               _table(_require(tensor, "values", list, "tensor."), "tensor.values"),
                               values, _loadSorts(data), _loadHoms(signature, data), _loadSortTables(data))
    return Instance(_require(data, "name", str, "", "instance"), "tabulated", signature,
                    MonoidalData(signature, tables), model, _require(data, "meta", dict, "", {}))

#endregion


#region Scalar

def _scalar(K: FiniteAbelianGroup, value: Any, where: str) -> Tuple[int, ...]:
    if isinstance(value, int) and not isinstance(value, bool):
        value = [value]
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ValidationError(where, "expected an integer or a list of integers")
    try:
        return K.reduce(value)
    except ValueError as e:
        raise ValidationError(where, str(e))


def _cochain(G, K, data: Any, degree: int, where: str) -> np.ndarray:
    size = G.order ** degree
    if not isinstance(data, list) or len(data) != size:
        raise ValidationError(where, f"expected a list of {size} values in lexicographic tuple order")
    flat = np.array([_scalar(K, v, f"{where}[{i}]") for i, v in enumerate(data)], dtype=np.int64)
    return flat.reshape((G.order,) * degree + (len(K.moduli),))


def _loadScalar(data: Dict[str, Any]) -> Instance:
    try:
        G = FiniteAbelianGroup.parse(_require(data, "group", str, ""))
    except ValueError as e:
        raise ValidationError("group", str(e))
    try:
        K = FiniteAbelianGroup.parse(_require(data, "coefficients", str, ""))
    except ValueError as e:
        raise ValidationError("coefficients", str(e))

    omega = None
    if "omega" in data:
        omega = _cochain(G, K, data["omega"], 4, "omega")
    unitors = {}
    given = _require(data, "unitors", dict, "", {})
    _checkKeys(given, UNITOR_KINDS, "unitors.")
    for kind, values in given.items():
        unitors[kind] = _cochain(G, K, values, 2, f"unitors.{kind}")

    instance = build_scalar_instance(G, K, omega, unitors, name=_require(data, "name", str, "", "scalar"))
    for i, entry in enumerate(_require(data, "components", list, "", [])):
        at = f"components[{i}]"
        if not isinstance(entry, dict):
            raise ValidationError(at, "expected an object with kind, key and value")
        _checkKeys(entry, ("kind", "key", "value"), f"{at}.")
        kind = _require(entry, "kind", str, f"{at}.")
        if kind not in SCALAR_COMPONENT_KINDS:
            raise ValidationError(f"{at}.kind", f"expected one of {', '.join(SCALAR_COMPONENT_KINDS)}")
        key = KEY_CODECS[kind][1](instance.signature, _require(entry, "key", list, f"{at}."), f"{at}.key")
        value = _scalar(K, entry.get("value"), f"{at}.value")
        try:
            instance = instance.perturb(Location(kind, key), value)
        except M2CError as e:
            raise ValidationError(at, str(e), e)
    return instance

#endregion


#region Serialization

def _cellEntries(cells: Dict[str, Generator], model) -> Dict[str, Any]:
    return {cid: {"source": c.source.label(), "target": c.target.label(), "value": model.generator(c)}
            for cid, c in cells.items()}


def _monoidalEntries(md: MonoidalData) -> Dict[str, List]:
    out: Dict[str, List] = {}
    for kind in PATH_KINDS + CELL_KINDS:
        table = md.tables[kind]
        if not table:
            continue
        encode = KEY_CODECS[kind][0]
        rows = []
        for key, value in table.items():
            if kind in PATH_KINDS:
                rows.append({"key": encode(key), "path": value.label()})
            elif isinstance(value, Generator):
                rows.append({"key": encode(key), "cell": value.id})
            else:
                raise ValueError(f"monoidal.{kind} holds a composite expression; only generator cells serialize")
        out[kind] = rows
    return out


def _serializeTabulated(inst: Instance) -> Dict[str, Any]:
    sig, model = inst.signature, inst.model
    elements = list(model.elements)

    def rows(table, left=elements, right=elements):
        return [[x, y, table[(x, y)]] for x in left for y in right]

    oneCellRows = [[x, y, p.label()] for table in (sig.genObj, sig.objGen, sig.genGen) for (x, y), p in table.items()]
    data: Dict[str, Any] = {
        "model": "tabulated",
        "name": inst.name,
        "objects": list(sig.objects),
        "unit": sig.unit,
        "one_cells": {g: [s, t] for g, (s, t) in sig.oneCells.items()},
        "two_cells": _cellEntries(sig.twoCells, model),
        "structure_cells": _cellEntries(sig.structureCells, model),
        "values": {"elements": elements, "identity": model.unitElement},
        "vcomp": rows(model.vcompTable),
        "hcomp": rows(model.hcompTable),
        "tensor": {"objects": [[a, b, sig.objectTensor[(a, b)]] for a in sig.objects for b in sig.objects],
                   "one_cells": oneCellRows,
                   "values": rows(model.tensorTable)},
        "sorts": {s.name: {"elements": list(s.elements), "identity": s.identity} for s in model.extraSorts},
        "homs": [[p.label(), q.label(), sort] for (p, q), sort in model.homs.items()],
        "tables": [{"op": op, "sorts": [left, right, result],
                    "rows": rows(table, model.sorts[left].elements, model.sorts[right].elements)}
                   for (op, left, right, result), table in model.extraTables.items()],
        "monoidal": _monoidalEntries(inst.monoidal),
        "meta": inst.meta,
    }
    for key in ("sorts", "homs", "tables"):
        if not data[key]:
            del data[key]
    return data


def _scalarValue(value: Sequence[int]) -> Any:
    return int(value[0]) if len(value) == 1 else [int(x) for x in value]


def _serializeScalar(inst: Instance) -> Dict[str, Any]:
    G = FiniteAbelianGroup.parse(inst.meta["group"])
    K = FiniteAbelianGroup.parse(inst.meta["coefficients"])
    md, model = inst.monoidal, inst.model
    labels = G.labels()

    omega = omega_of(inst).reshape(G.order ** 4, len(K.moduli))
    unitors = {}
    for kind in UNITOR_KINDS:
        unitors[kind] = [_scalarValue(model.generator(md.tables[kind][(labels[i], labels[j])]))
                         for i, j in np.ndindex(G.order, G.order)]

    components = []
    for kind in SCALAR_COMPONENT_KINDS:
        for key, cell in md.tables[kind].items():
            components.append({"kind": kind, "key": KEY_CODECS[kind][0](key),
                               "value": _scalarValue(model.generator(cell))})
    return {
        "model": "scalar",
        "name": inst.name,
        "group": G.spec(),
        "coefficients": K.spec(),
        "omega": [_scalarValue(v) for v in omega],
        "unitors": unitors,
        "components": components,
    }


def serialize_instance(inst: Instance) -> str:
    """Canonical JSON text for an instance."""
    if inst.kind == "scalar":
        data = _serializeScalar(inst)
    elif inst.kind == "tabulated":
        data = _serializeTabulated(inst)
    else:
        raise ValueError(f"Cannot serialize instances of kind {inst.kind}")
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def write_instance(inst: Instance, path: str) -> None:
    Path(path).write_text(serialize_instance(inst), encoding="utf-8")
    logger.info("Wrote instance '%s' to %s.", inst.name, path)

#endregion
