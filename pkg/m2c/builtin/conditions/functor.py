from m2c.core.cells import Identity2, OneCellPath, hcomp
from m2c.core.report import ConditionId
from .base import Condition, Face, Surface, Tag, register


@register
class FunctorAxiom(Condition):
    """
    The tensor as a 2-functor: reassociating three tensorators agrees, and a tensorator
    against an identity pair is the identity (φ_{A,B} = 1 leaves only that degenerate form).
    """

    id = ConditionId.FUNCTOR_AXIOM_1
    figure = "tensorator associativity square: φ_{Z,YX} ⊙ (φ_{Y,X} ⋆ 1) = φ_{ZY,X} ⊙ (1 ⋆ φ_{Z,Y})"

    def indices(self, domain):
        for f1, f2, f3 in domain.splits(3):
            for g1, g2, g3 in domain.splits(3):
                yield (Tag("assoc"), f1, g1, f2, g2, f3, g3)
        for f in domain.oneCells:
            for g in domain.oneCells:
                yield (Tag("unit-left"), f, g)
                yield (Tag("unit-right"), f, g)

    def surface(self, domain, index, fillers):
        md = domain.md
        variant = index[0].text
        if variant != "assoc":
            f, g = index[1:]
            if variant == "unit-left":
                ids = (OneCellPath.identity(f.src), OneCellPath.identity(g.src))
                phi = md.tensorator(f, g, *ids)
            else:
                ids = (OneCellPath.identity(f.tgt), OneCellPath.identity(g.tgt))
                phi = md.tensorator(*ids, f, g)
            return Surface([Face("φ", phi)], [Face("1", Identity2(md.tensor(f, g)))])

        f1, g1, f2, g2, f3, g3 = index[1:]
        lhs = [Face("φ(Y,X) * 1", hcomp(md.tensorator(f2, g2, f1, g1), Identity2(md.tensor(f3, g3)))),
               Face("φ(Z,YX)", md.tensorator(f3, g3, f1.then(f2), g1.then(g2)))]
        rhs = [Face("1 * φ(Z,Y)", hcomp(Identity2(md.tensor(f1, g1)), md.tensorator(f3, g3, f2, g2))),
               Face("φ(ZY,X)", md.tensorator(f2.then(f3), g2.then(g3), f1, g1))]
        return Surface(lhs, rhs)
