import itertools
import logging
from typing import Dict, List, Optional, Tuple

from m2c.core.cells import Generator, OneCellPath
from m2c.core.signature import Signature
from m2c.builtin.models.tabulated import cyclicEvaluator
from m2c.monoidal.data import MonoidalData
from m2c.monoidal.instance import Instance

logger = logging.getLogger(__name__)

LETTERS = "abcdefghijklmnopqrstuvwxyz"
UNIT = "I"


def _name(word: str) -> str:
    return word or UNIT


def build_strict_instance(n: int, wordCap: Optional[int] = None) -> Instance:
    """
    Strict monoidal 2-category on n letters.

    Objects are the words of length at most wordCap (default 1, or 0 for a single letter);
    the tensor is concatenation truncated to the cap, so it stays strictly associative
    and unital. The full-length words carry a cycle of generator 1-cells f, the first
    generator has a parallel twin g, and 2-cells c: f ⇒ g and d: g ⇒ f connect them.
    Tensoring a generator with a word on its left gives a whiskered generator w, or an
    identity once the cap swallows it. Every structure cell is an identity.
    """
    if n < 1:
        raise ValueError("A strict instance needs at least one letter")
    if n > len(LETTERS):
        raise ValueError(f"At most {len(LETTERS)} letters are supported")
    cap = wordCap if wordCap is not None else (0 if n == 1 else 1)
    if cap < 0:
        raise ValueError("The word cap must be non-negative")

    letters = LETTERS[:n]
    words = [""] + ["".join(w) for k in range(1, cap + 1) for w in itertools.product(letters, repeat=k)]

    def join(u: str, v: str) -> str:
        return (u + v)[:cap]

    objects = [_name(w) for w in words]
    objectTensor = {(_name(u), _name(v)): _name(join(u, v)) for u in words for v in words}

    #region Generators

    # gen id -> (whisker word, base gen id); base generators have an empty whisker word
    oneCells: Dict[str, Tuple[str, str]] = {}
    origin: Dict[str, Tuple[str, str]] = {}
    full = [w for w in words if w and len(w) == cap]

    bases: List[Tuple[str, str, str]] = []
    if len(full) >= 2:
        for i, u in enumerate(full):
            v = full[(i + 1) % len(full)]
            bases.append((f"f_{u}_{v}", u, v))
        _, u0, v0 = bases[0]
        bases.append((f"g_{u0}_{v0}", u0, v0))

    for gid, u, v in bases:
        oneCells[gid] = (_name(u), _name(v))
        origin[gid] = ("", gid)

    for x in words:
        if not x or len(x) >= cap:
            continue
        for gid, u, v in bases:
            src, tgt = join(x, u), join(x, v)
            if src == tgt:
                continue
            wid = f"w_{x}_{gid}"
            oneCells[wid] = (_name(src), _name(tgt))
            origin[wid] = (x, gid)

    #endregion

    #region Tensor on 1-cells

    raw = {obj: word for obj, word in zip(objects, words)}

    def leftWhisker(a: str, gid: str) -> OneCellPath:
        prefix, base = origin[gid]
        word = raw[a] + prefix
        _, u, v = next(b for b in bases if b[0] == base)
        src = _name(join(word, u))
        if word == "":
            return OneCellPath(src, _name(v), (base,))
        wid = f"w_{word}_{base}"
        if wid in oneCells:
            return OneCellPath(src, oneCells[wid][1], (wid,))
        return OneCellPath.identity(src)

    genObj: Dict[Tuple[str, str], OneCellPath] = {}
    objGen: Dict[Tuple[str, str], OneCellPath] = {}
    genGen: Dict[Tuple[str, str], OneCellPath] = {}
    for gid, (src, tgt) in oneCells.items():
        single = OneCellPath(src, tgt, (gid,))
        for b in objects:
            # Sources of generators are full-length words, so a right factor is truncated away
            genObj[(gid, b)] = single
            objGen[(b, gid)] = leftWhisker(b, gid)
        for other in oneCells:
            genGen[(gid, other)] = single

    #endregion

    twoCells: Dict[str, Generator] = {}
    values: Dict[str, str] = {}
    if bases:
        fid, u0, v0 = bases[0]
        gid = bases[-1][0]
        f = OneCellPath(_name(u0), _name(v0), (fid,))
        g = OneCellPath(_name(u0), _name(v0), (gid,))
        for cid, src, tgt in ((f"c_{u0}_{v0}", f, g), (f"d_{u0}_{v0}", g, f)):
            twoCells[cid] = Generator(cid, src, tgt)
            values[cid] = "1"

    signature = Signature(objects, UNIT, oneCells, twoCells, objectTensor, genObj, objGen, genGen)
    instance = Instance(f"strict-{n}", "tabulated", signature, MonoidalData(signature),
                        cyclicEvaluator(2, values), {"letters": n, "word_cap": cap})
    logger.info("Built strict instance on %d letters with %d objects and %d 1-cells.",
                n, len(objects), len(oneCells))
    return instance
