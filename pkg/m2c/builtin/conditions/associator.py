import itertools

from m2c.core.cells import Identity2, OneCellPath, hcomp, vcomp
from m2c.core.report import ConditionId
from m2c.monoidal.shapes import applyCells
from .base import (Condition, Face, Surface, Tag, cellsOf, naturalitySurface, register, slotItems,
                   sources, targets, transformationSurface)

SLOTS = (1, 2, 3)


@register
class AssociatorNaturality(Condition):
    """α is natural in the 1-cell it is indexed by, in each of the three slots."""

    id = ConditionId.ASSOC_NAT_F
    figure = "associator naturality cylinder over γ: f ⇒ f′ with objects in the other slots"

    def indices(self, domain):
        for slot in SLOTS:
            for ref in domain.twoCells:
                for others in domain.objectTuples(2):
                    yield (Tag(f"s{slot}"), *slotItems(slot, ref, others))

    def surface(self, domain, index, fillers):
        slot = int(index[0].text[1:])
        md = domain.md
        return naturalitySurface(md, md.transformation("alpha", slot), list(index[1:]), slot - 1)


@register
class AssociatorObjectNaturality(Condition):
    """
    Naturality of α in an object slot: with f and g in two different slots, sliding one past
    the other commutes with α. Each side of the cube is two α squares; the interchange fillers
    close it up.
    """

    id = ConditionId.ASSOC_NAT_OBJ
    figure = "associator naturality cube over f and g in two slots, interchange fillers on F and G"

    def indices(self, domain):
        for i, j in itertools.combinations(SLOTS, 2):
            k = next(s for s in SLOTS if s not in (i, j))
            for f in domain.paths:
                for g in domain.paths:
                    for obj in domain.objects:
                        items = [None, None, None]
                        items[i - 1], items[j - 1], items[k - 1] = f, g, obj
                        yield (Tag(f"s{i}-{j}"), *items)

    def surface(self, domain, index, fillers):
        md = domain.md
        i, j = (int(s) for s in index[0].text[1:].split("-"))
        items = list(index[1:])
        f, g = items[i - 1], items[j - 1]

        def cells(atI: OneCellPath, atJ: OneCellPath):
            plain = list(items)
            plain[i - 1], plain[j - 1] = atI, atJ
            return cellsOf(plain)

        X1 = cells(f, OneCellPath.identity(g.src))
        Y1 = cells(OneCellPath.identity(f.tgt), g)
        X2 = cells(OneCellPath.identity(f.src), g)
        Y2 = cells(f, OneCellPath.identity(g.tgt))

        tI = md.transformation("alpha", i)
        tJ = md.transformation("alpha", j)
        F, G = tI.source, tI.target

        def side(x, y, tx, ty):
            return vcomp(hcomp(Identity2(applyCells(md, F, x)), ty.component(y)),
                         hcomp(tx.component(x), Identity2(applyCells(md, G, y))))

        sigmaP = tI.objectComponent(sources(X1))
        sigmaQ = tI.objectComponent(targets(Y1))
        lhs = [Face("γF * 1", hcomp(fillers.interchange(F, X1, Y1), Identity2(sigmaQ))),
               Face("α(g) then α(f)", side(X2, Y2, tJ, tI))]
        rhs = [Face("α(f) then α(g)", side(X1, Y1, tI, tJ)),
               Face("1 * γG", hcomp(Identity2(sigmaP), fillers.interchange(G, X1, Y1)))]
        return Surface(lhs, rhs)


@register
class AssociatorTransformationAxiom(Condition):
    """α at a composite equals the pasting of α at the two pieces, per slot."""

    id = ConditionId.ASSOC_TRANSF
    figure = "associator transformation-axiom prism over composable f, f′"

    def indices(self, domain):
        for slot in SLOTS:
            for first, second in domain.splits(2):
                for others in domain.objectTuples(2):
                    yield (Tag(f"s{slot}"), first, second, *others)

    def surface(self, domain, index, fillers):
        slot = int(index[0].text[1:])
        first, second = index[1], index[2]
        others = list(index[3:])
        before = cellsOf(slotItems(slot, first, others))
        after = cellsOf(slotItems(slot, second, others))
        return transformationSurface(domain.md.transformation("alpha", slot), before, after)
