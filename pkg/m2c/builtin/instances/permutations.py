import logging
from typing import Dict, Tuple

from m2c.core.cells import Generator, OneCellPath
from m2c.core.signature import Signature
from m2c.builtin.models.tabulated import DEFAULT_SORT, Sort, TabulatedEvaluator, permutationTables
from m2c.monoidal.data import MonoidalData
from m2c.monoidal.instance import Instance

logger = logging.getLogger(__name__)

UNIT = "I"
OBJECT = "a"
LOOP = "f_a_a"
# Sorts of the identity 2-cells on id(I) and id(a), one element each
UNIT_SORT = "at_I"
OBJECT_SORT = "at_a"
UNIT_VALUE = "1_I"
OBJECT_VALUE = "1_a"

ROTATION = "120"
FLIP = "102"


def _constant(left, right, value) -> Dict[Tuple[str, str], str]:
    return {(x, y): value for x in left for y in right}


def _first(left, right) -> Dict[Tuple[str, str], str]:
    return {(x, y): x for x in left for y in right}


def _second(left, right) -> Dict[Tuple[str, str], str]:
    return {(x, y): y for x in left for y in right}


def permutationModel(values: Dict[str, str]) -> TabulatedEvaluator:
    """
    Values for the one-loop signature: 2-cells between non-empty paths of f take values
    in S3 and compose vertically as permutations. A horizontal composite keeps the value
    of its leftmost non-identity-path factor; a tensor keeps the value of its left factor,
    except that I ⊗ - passes its right factor through and a ⊗ - lands on id(a).
    """
    S3, compose = permutationTables(3)
    I, A = (UNIT_VALUE,), (OBJECT_VALUE,)
    D, U, O = DEFAULT_SORT, UNIT_SORT, OBJECT_SORT
    homs = {(OneCellPath.identity(UNIT), OneCellPath.identity(UNIT)): U,
            (OneCellPath.identity(OBJECT), OneCellPath.identity(OBJECT)): O}
    tables = {
        ("vcomp", U, U, U): _constant(I, I, UNIT_VALUE),
        ("vcomp", O, O, O): _constant(A, A, OBJECT_VALUE),
        ("hcomp", U, U, U): _constant(I, I, UNIT_VALUE),
        ("hcomp", O, O, O): _constant(A, A, OBJECT_VALUE),
        ("hcomp", O, D, D): _second(A, S3),
        ("hcomp", D, O, D): _first(S3, A),
        ("tensor", U, U, U): _constant(I, I, UNIT_VALUE),
        ("tensor", U, O, O): _constant(I, A, OBJECT_VALUE),
        ("tensor", O, U, O): _constant(A, I, OBJECT_VALUE),
        ("tensor", O, O, O): _constant(A, A, OBJECT_VALUE),
        ("tensor", U, D, D): _second(I, S3),
        ("tensor", O, D, O): _constant(A, S3, OBJECT_VALUE),
        ("tensor", D, U, D): _first(S3, I),
        ("tensor", D, O, D): _first(S3, A),
    }
    sorts = [Sort(U, I, UNIT_VALUE), Sort(O, A, OBJECT_VALUE)]
    return TabulatedEvaluator(S3, "012", compose, _first(S3, S3), _first(S3, S3), values, sorts, homs, tables)


def build_permutation_instance(rotation: str = ROTATION, flip: str = FLIP) -> Instance:
    """
    Strict monoidal 2-category on objects I and a with one loop f: a → a, whose two
    2-cells rot, flip: f ⇒ f take non-commuting values in S3. The tensor truncates
    words to one letter, so f ⊗ B = f, I ⊗ f = f and a ⊗ f = id(a). Every structure
    cell is an identity.
    """
    objects = [UNIT, OBJECT]
    objectTensor = {(x, y): OBJECT if OBJECT in (x, y) else UNIT for x in objects for y in objects}
    loop = OneCellPath(OBJECT, OBJECT, (LOOP,))
    genObj = {(LOOP, b): loop for b in objects}
    objGen = {(UNIT, LOOP): loop, (OBJECT, LOOP): OneCellPath.identity(OBJECT)}
    genGen = {(LOOP, LOOP): loop}
    twoCells = {"rot": Generator("rot", loop, loop), "flip": Generator("flip", loop, loop)}

    signature = Signature(objects, UNIT, {LOOP: (OBJECT, OBJECT)}, twoCells, objectTensor, genObj, objGen, genGen)
    model = permutationModel({"rot": rotation, "flip": flip})
    instance = Instance("permutations", "tabulated", signature, MonoidalData(signature), model,
                        {"values": "S3"})
    logger.info("Built permutation instance with rot = %s and flip = %s.", rotation, flip)
    return instance
