from .tabulated import DEFAULT_SORT, Sort, TabulatedEvaluator, cyclicEvaluator, permutationTables
from .scalar import ScalarEvaluator
from .linear import LinearEvaluator, LinearForm, coefficientMatrix, linearize
