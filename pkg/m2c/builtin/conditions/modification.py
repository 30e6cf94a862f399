"""
π, λ, μ and ρ are modifications: each satisfies the modification square against the two
composite transformations it connects, at every 1-cell in every slot.
"""

from typing import List, Sequence, Tuple

from m2c.core.cells import Identity2, OneCellPath, TwoCellExpr, hcomp, inverse, vcomp
from m2c.core.report import ConditionId
from m2c.monoidal.shapes import Shape, applyCells
from .base import (Condition, Face, Surface, Tag, cellsOf, compositeComponent, register, slotItems,
                   sources, targets)


class ModificationCondition(Condition):
    """
    Subclasses give the shapes F and G, the factor 1-cells of both composite transformations
    σ, σ̃: F ⇒ G at an object tuple, their components at a 1-cell in a given slot, and Γ.
    """

    arity = 0
    source: Shape = None
    target: Shape = None

    def indices(self, domain):
        for slot in range(1, self.arity + 1):
            for x in domain.oneCells:
                for others in domain.objectTuples(self.arity - 1):
                    yield (Tag(f"s{slot}"), *slotItems(slot, x, others))

    def sigmaPaths(self, md, objs: Sequence[str]) -> List[OneCellPath]:
        raise NotImplementedError

    def tildePaths(self, md, objs: Sequence[str]) -> List[OneCellPath]:
        raise NotImplementedError

    def gamma(self, md, objs: Sequence[str]) -> TwoCellExpr:
        raise NotImplementedError

    def components(self, md, fillers, slot: int, items: list) -> Tuple[List[TwoCellExpr], List[TwoCellExpr]]:
        raise NotImplementedError

    def surface(self, domain, index, fillers):
        md = domain.md
        slot = int(index[0].text[1:])
        items = list(index[1:])
        cells = cellsOf(items)
        P, Q = sources(cells), targets(cells)
        sigmaCells, tildeCells = self.components(md, fillers, slot, items)

        sigma = compositeComponent(list(zip(sigmaCells, self.sigmaPaths(md, P), self.sigmaPaths(md, Q))))
        tilde = compositeComponent(list(zip(tildeCells, self.tildePaths(md, P), self.tildePaths(md, Q))))
        lhs = [Face("1 * Γ(Q)", hcomp(Identity2(applyCells(md, self.source, cells)), self.gamma(md, Q))),
               Face("σ̃(X)", tilde)]
        rhs = [Face("σ(X)", sigma),
               Face("Γ(P) * 1", hcomp(self.gamma(md, P), Identity2(applyCells(md, self.target, cells))))]
        return Surface(lhs, rhs)


@register
class PentagonatorModification(ModificationCondition):
    id = ConditionId.MOD_PENT
    figure = "pentagonal prism: π against a 1-cell in one of its four slots"
    arity = 4
    source = (((0, 1), 2), 3)
    target = (0, (1, (2, 3)))

    def sigmaPaths(self, md, o):
        T, a = md.tensor, md.assoc1
        return [T(a(o[0], o[1], o[2]), o[3]), a(o[0], T(o[1], o[2]), o[3]), T(o[0], a(o[1], o[2], o[3]))]

    def tildePaths(self, md, o):
        T, a = md.tensor, md.assoc1
        return [a(T(o[0], o[1]), o[2], o[3]), a(o[0], o[1], T(o[2], o[3]))]

    def gamma(self, md, o):
        return md.pent(*o)

    def components(self, md, fl, slot, items):
        T, a, alpha = md.tensor, md.assoc1, md.alpha
        if slot == 1:
            f, B, C, D = items
            A, A2 = f.src, f.tgt
            sigma = [fl.hatRight(alpha(1, f, B, C), D, [T(T(f, B), C), a(A2, B, C)], [a(A, B, C), T(f, T(B, C))]),
                     alpha(1, f, T(B, C), D),
                     inverse(fl.fg(f, a(B, C, D)))]
            tilde = [alpha(1, T(f, B), C, D), alpha(1, f, B, T(C, D))]
        elif slot == 2:
            A, g, C, D = items
            B, B2 = g.src, g.tgt
            sigma = [fl.hatRight(alpha(2, A, g, C), D, [T(T(A, g), C), a(A, B2, C)], [a(A, B, C), T(A, T(g, C))]),
                     alpha(2, A, T(g, C), D),
                     fl.hatLeft(A, alpha(1, g, C, D), [T(T(g, C), D), a(B2, C, D)], [a(B, C, D), T(g, T(C, D))])]
            tilde = [alpha(1, T(A, g), C, D), alpha(2, A, g, T(C, D))]
        elif slot == 3:
            A, B, h, D = items
            C, C2 = h.src, h.tgt
            sigma = [fl.hatRight(alpha(3, A, B, h), D, [T(T(A, B), h), a(A, B, C2)], [a(A, B, C), T(A, T(B, h))]),
                     alpha(2, A, T(B, h), D),
                     fl.hatLeft(A, alpha(2, B, h, D), [T(T(B, h), D), a(B, C2, D)], [a(B, C, D), T(B, T(h, D))])]
            tilde = [alpha(2, T(A, B), h, D), alpha(3, A, B, T(h, D))]
        else:
            A, B, C, k = items
            D, D2 = k.src, k.tgt
            sigma = [fl.fg(a(A, B, C), k),
                     alpha(3, A, T(B, C), k),
                     fl.hatLeft(A, alpha(3, B, C, k), [T(T(B, C), k), a(B, C, D2)], [a(B, C, D), T(B, T(C, k))])]
            tilde = [alpha(3, T(A, B), C, k), alpha(3, A, B, T(C, k))]
        return sigma, tilde


@register
class MiddleUnitorModification(ModificationCondition):
    id = ConditionId.MOD_MU
    figure = "unit prism: μ against a 1-cell, F(A,B) = (AI)B and G(A,B) = AB"
    arity = 2
    source = ((0, None), 1)
    target = (0, 1)

    def sigmaPaths(self, md, o):
        return [md.assoc1(o[0], md.unit, o[1]), md.tensor(o[0], md.lunit1(o[1]))]

    def tildePaths(self, md, o):
        return [md.tensor(md.runit1(o[0]), o[1])]

    def gamma(self, md, o):
        return md.u2_mu(*o)

    def components(self, md, fl, slot, items):
        T, I = md.tensor, md.unit
        if slot == 1:
            f, B = items
            sigma = [md.alpha(1, f, I, B), inverse(fl.fg(f, md.lunit1(B)))]
            tilde = [fl.hatRight(md.runit2(f), B, [T(f, I), md.runit1(f.tgt)], [md.runit1(f.src), f])]
        else:
            A, g = items
            sigma = [md.alpha(3, A, I, g),
                     fl.hatLeft(A, md.lunit2(g), [T(I, g), md.lunit1(g.tgt)], [md.lunit1(g.src), g])]
            tilde = [fl.fg(md.runit1(A), g)]
        return sigma, tilde


@register
class LeftUnitorModification(ModificationCondition):
    id = ConditionId.MOD_LAMBDA
    figure = "unit prism: λ against a 1-cell, F(A,B) = (IA)B and G(A,B) = AB"
    arity = 2
    source = ((None, 0), 1)
    target = (0, 1)

    def sigmaPaths(self, md, o):
        return [md.assoc1(md.unit, o[0], o[1]), md.lunit1(md.tensor(o[0], o[1]))]

    def tildePaths(self, md, o):
        return [md.tensor(md.lunit1(o[0]), o[1])]

    def gamma(self, md, o):
        return md.u2_lambda(*o)

    def components(self, md, fl, slot, items):
        T, I = md.tensor, md.unit
        if slot == 1:
            f, B = items
            sigma = [md.alpha(2, I, f, B), md.lunit2(T(f, B))]
            tilde = [fl.hatRight(md.lunit2(f), B, [T(I, f), md.lunit1(f.tgt)], [md.lunit1(f.src), f])]
        else:
            A, g = items
            sigma = [md.alpha(3, I, A, g), md.lunit2(T(A, g))]
            tilde = [fl.fg(md.lunit1(A), g)]
        return sigma, tilde


@register
class RightUnitorModification(ModificationCondition):
    id = ConditionId.MOD_RHO
    figure = "unit prism: ρ against a 1-cell, F(A,B) = (AB)I and G(A,B) = AB"
    arity = 2
    source = ((0, 1), None)
    target = (0, 1)

    def sigmaPaths(self, md, o):
        return [md.assoc1(o[0], o[1], md.unit), md.tensor(o[0], md.runit1(o[1]))]

    def tildePaths(self, md, o):
        return [md.runit1(md.tensor(o[0], o[1]))]

    def gamma(self, md, o):
        return md.u2_rho(*o)

    def components(self, md, fl, slot, items):
        T, I = md.tensor, md.unit
        if slot == 1:
            f, B = items
            sigma = [md.alpha(1, f, B, I), inverse(fl.fg(f, md.runit1(B)))]
            tilde = [md.runit2(T(f, B))]
        else:
            A, g = items
            sigma = [md.alpha(2, A, g, I),
                     fl.hatLeft(A, md.runit2(g), [T(g, I), md.runit1(g.tgt)], [md.runit1(g.src), g])]
            tilde = [md.runit2(T(A, g))]
        return sigma, tilde
