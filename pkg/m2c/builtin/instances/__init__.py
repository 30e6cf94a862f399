from .groups import FiniteAbelianGroup
from .strict import build_strict_instance
from .permutations import build_permutation_instance
from .gauge import gauge_transform
from .skeletal import build_scalar_instance, omega_of, pentagonator_columns
from .randomized import build_random_instance
from .cochains import (coboundary, cocycle_defect, enumerate_cocycles, failing_tuples, is_cocycle,
                       product_cochain, zero_cochain)
