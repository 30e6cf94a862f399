from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np

from m2c.core.cells import Generator, OneCellPath, TwoCellExpr
from m2c.core.evaluator import Evaluator, Hom, evaluate


class LinearForm:
    """An integer combination of generator ids."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[str, int] = ()):
        self.terms: Tuple[Tuple[str, int], ...] = tuple(sorted((g, c) for g, c in dict(terms).items() if c != 0))

    def __add__(self, other: "LinearForm") -> "LinearForm":
        merged: Dict[str, int] = dict(self.terms)
        for g, c in other.terms:
            merged[g] = merged.get(g, 0) + c
        return LinearForm(merged)

    def __neg__(self) -> "LinearForm":
        return LinearForm({g: -c for g, c in self.terms})

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearForm) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{g}" for g, c in self.terms)

    def coefficient(self, gen: str) -> int:
        return dict(self.terms).get(gen, 0)

    def generators(self) -> Iterable[str]:
        return (g for g, _ in self.terms)


class LinearEvaluator(Evaluator):
    """
    The free abelian model: a generator evaluates to itself with coefficient 1.
    Every additive model factors through it, so a check compiled once to a linear
    form can be evaluated on many value assignments.
    """

    name = "linear"

    def identity(self, path: OneCellPath) -> LinearForm:
        return LinearForm()

    def generator(self, cell: Generator) -> LinearForm:
        return LinearForm({cell.id: 1})

    def vcomp(self, first: LinearForm, second: LinearForm, hom: Optional[Hom] = None) -> LinearForm:
        return first + second

    def hcomp(self, left: LinearForm, right: LinearForm, hom: Optional[Hom] = None) -> LinearForm:
        return left + right

    def tensor(self, left: LinearForm, right: LinearForm, hom: Optional[Hom] = None) -> LinearForm:
        return left + right

    def inverse(self, value: LinearForm, hom: Optional[Hom] = None) -> LinearForm:
        return -value


def coefficientMatrix(forms: Sequence[LinearForm], columns: Sequence[str]) -> np.ndarray:
    """Rows are forms, columns the given generator ids; other generators are ignored."""
    index = {g: i for i, g in enumerate(columns)}
    matrix = np.zeros((len(forms), len(columns)), dtype=np.int64)
    for row, form in enumerate(forms):
        for g, c in form.terms:
            col = index.get(g)
            if col is not None:
                matrix[row, col] += c
    return matrix


def linearize(e: TwoCellExpr) -> LinearForm:
    """The coefficient map of a 2-cell: how often each generator occurs, inverses counted negatively."""
    return evaluate(e, LinearEvaluator())
