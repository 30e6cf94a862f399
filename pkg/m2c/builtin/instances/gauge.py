import logging
from typing import Any, Iterable, List, Tuple

from m2c.monoidal.instance import Instance, Location

logger = logging.getLogger(__name__)

Triple = Tuple[str, str, str]


def _occurrences(instance: Instance, location: Location) -> List[Triple]:
    """The associator triples a_{X,Y,Z} on the boundary of one structure component."""
    T = instance.monoidal.tensor
    I = instance.signature.unit
    key = location.key
    if location.kind == "pi":
        A, B, C, D = key
        return [(A, B, C), (A, T(B, C), D), (B, C, D), (T(A, B), C, D), (A, B, T(C, D))]
    if location.kind == "lambda":
        return [(I, *key)]
    if location.kind == "mu":
        return [(key[0], I, key[1])]
    if location.kind == "rho":
        return [(*key, I)]
    if location.kind == "alpha":
        slot, items = key[0], list(key[1:])
        path = items[slot - 1]
        found = []
        for end in (path.src, path.tgt):
            items[slot - 1] = end
            found.append(tuple(items))
        return found
    return []


def gauge_transform(instance: Instance, triple: Triple, delta: Any = "1",
                    skip: Iterable[Location] = ()) -> Instance:
    """
    Change of basis by an invertible θ: a_{X,Y,Z} ⇒ a_{X,Y,Z} at one triple.

    Every π, λ, μ, ρ and α component whose boundary passes through a_{X,Y,Z} an odd number
    of times is shifted by delta, so delta must have order two in the model. The result is
    equivalent to the input and passes exactly the checks the input passes. Components
    listed in `skip` keep their value, which unbalances the transform.
    """
    skipped = {(loc.kind, loc.key) for loc in skip}
    result = instance
    shifted = 0
    for location in instance.locations():
        if location.kind not in ("pi", "lambda", "mu", "rho", "alpha"):
            continue
        if sum(1 for t in _occurrences(instance, location) if t == tuple(triple)) % 2 == 0:
            continue
        if (location.kind, location.key) in skipped:
            continue
        result = result.perturb(location, delta)
        shifted += 1
    logger.info("Gauge at (%s) shifted %d components.", ", ".join(triple), shifted)
    return result
