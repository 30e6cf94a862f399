import logging
import random

from m2c.monoidal.instance import Instance
from .strict import build_strict_instance

logger = logging.getLogger(__name__)


def build_random_instance(seed: int, n: int = 2, changes: int = 3) -> Instance:
    """
    The strict instance on n letters with up to `changes` structure locations set to a
    non-identity Z/2 value, chosen by a seeded generator.
    """
    rng = random.Random(seed)
    instance = build_strict_instance(n)
    locations = instance.locations()
    picked = rng.sample(locations, k=min(len(locations), rng.randint(1, changes)))
    for location in picked:
        instance = instance.perturb(location, "1")
    instance.name = f"random-{seed}"
    logger.info("Built random instance %d with %s perturbed.", seed,
                ", ".join(loc.label() for loc in picked))
    return instance
