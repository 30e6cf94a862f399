"""Naturality and coherence of the tensorator, phrased through the interchange fillers."""

from m2c.core.cells import Identity2, OneCellPath, boundary, hcomp
from m2c.core.report import ConditionId
from .base import Condition, Face, Surface, Tag, register


def _from(domain, obj: str):
    return [p for p in domain.paths if p.src == obj]


def _into(domain, obj: str):
    return [p for p in domain.paths if p.tgt == obj]


@register
class TensoratorNaturality(Condition):
    """⊗_{f,g} is natural in f and in g."""

    id = ConditionId.TENS_NAT_1
    figure = "interchange naturality cylinder: γ: f ⇒ f′ slid past g, and the mirror in g"

    def indices(self, domain):
        for ref in domain.twoCells:
            for g in domain.paths:
                yield (Tag("f"), ref, g)
        for f in domain.paths:
            for ref in domain.twoCells:
                yield (Tag("g"), f, ref)

    def surface(self, domain, index, fillers):
        md = domain.md
        T = md.tensor
        variant, x, y = index
        if variant.text == "f":
            gamma, g = x.cell, y
            f, f2 = boundary(gamma)
            lhs = [Face("1 * (Γ⊗B′)", hcomp(Identity2(T(f.src, g)), T(gamma, g.tgt))),
                   Face("⊗(f′,g)", fillers.fg(f2, g))]
            rhs = [Face("⊗(f,g)", fillers.fg(f, g)),
                   Face("(Γ⊗B) * 1", hcomp(T(gamma, g.src), Identity2(T(f.tgt, g))))]
        else:
            f, gamma = x, y.cell
            g, g2 = boundary(gamma)
            lhs = [Face("(A⊗Γ) * 1", hcomp(T(f.src, gamma), Identity2(T(f, g.tgt)))),
                   Face("⊗(f,g′)", fillers.fg(f, g2))]
            rhs = [Face("⊗(f,g)", fillers.fg(f, g)),
                   Face("1 * (A′⊗Γ)", hcomp(Identity2(T(f, g.src)), T(f.tgt, gamma)))]
        return Surface(lhs, rhs)


@register
class TensoratorNaturalityInComposite(Condition):
    """⊗_{f2,f1,B} and ⊗_{A,g2,g1} are natural in each of their two 1-cells."""

    id = ConditionId.TENS_NAT_2
    figure = "whiskered 2-cell slid through ⊗_{f′,f,B}, in either factor and on either side"

    def indices(self, domain):
        for ref in domain.twoCells:
            src = boundary(ref.cell)[0]
            after = _from(domain, src.tgt)
            before = _into(domain, src.src)
            for obj in domain.objects:
                for g in after:
                    yield (Tag("right-first"), ref, g, obj)
                for f in before:
                    yield (Tag("right-second"), f, ref, obj)
                for g in after:
                    yield (Tag("left-first"), obj, ref, g)
                for f in before:
                    yield (Tag("left-second"), obj, f, ref)

    def surface(self, domain, index, fillers):
        md = domain.md
        T = md.tensor
        variant = index[0].text
        if variant == "right-first":
            ref, g, b = index[1:]
            gamma = ref.cell
            f, f2 = boundary(gamma)
            lhs = [Face("(Γ⊗B) * 1", hcomp(T(gamma, b), Identity2(T(g, b)))), Face("⊗(g,f′,B)", fillers.ffB(g, f2, b))]
            rhs = [Face("⊗(g,f,B)", fillers.ffB(g, f, b)), Face("(Γ*g)⊗B", T(hcomp(gamma, Identity2(g)), b))]
        elif variant == "right-second":
            f, ref, b = index[1:]
            gamma = ref.cell
            g, g2 = boundary(gamma)
            lhs = [Face("1 * (Γ⊗B)", hcomp(Identity2(T(f, b)), T(gamma, b))), Face("⊗(g′,f,B)", fillers.ffB(g2, f, b))]
            rhs = [Face("⊗(g,f,B)", fillers.ffB(g, f, b)), Face("(f*Γ)⊗B", T(hcomp(Identity2(f), gamma), b))]
        elif variant == "left-first":
            a, ref, g = index[1:]
            gamma = ref.cell
            f, f2 = boundary(gamma)
            lhs = [Face("(A⊗Γ) * 1", hcomp(T(a, gamma), Identity2(T(a, g)))), Face("⊗(A,g,f′)", fillers.Agg(a, g, f2))]
            rhs = [Face("⊗(A,g,f)", fillers.Agg(a, g, f)), Face("A⊗(Γ*g)", T(a, hcomp(gamma, Identity2(g))))]
        else:
            a, f, ref = index[1:]
            gamma = ref.cell
            g, g2 = boundary(gamma)
            lhs = [Face("1 * (A⊗Γ)", hcomp(Identity2(T(a, f)), T(a, gamma))), Face("⊗(A,g′,f)", fillers.Agg(a, g2, f))]
            rhs = [Face("⊗(A,g,f)", fillers.Agg(a, g, f)), Face("A⊗(f*Γ)", T(a, hcomp(Identity2(f), gamma)))]
        return Surface(lhs, rhs)


@register
class TensoratorComposition(Condition):
    """⊗_{f,g} at a composite f·f′ (or g·g′) is the pasting of ⊗ at the two pieces."""

    id = ConditionId.TENS_NAT_3
    figure = "triangle prism: ⊗_{ff′,g} against ⊗_{f,g}, ⊗_{f′,g} and the joining tensorators"

    def indices(self, domain):
        for f, f2 in domain.splits(2):
            for g in domain.paths:
                yield (Tag("f"), f, f2, g)
        for f in domain.paths:
            for g, g2 in domain.splits(2):
                yield (Tag("g"), f, g, g2)

    def surface(self, domain, index, fillers):
        md = domain.md
        T = md.tensor
        variant = index[0].text
        if variant == "f":
            f, f2, g = index[1:]
            a, b, b2, a3 = f.src, g.src, g.tgt, f2.tgt
            lhs = [Face("1 * ⊗(f′,f,B′)", hcomp(Identity2(T(a, g)), fillers.ffB(f2, f, b2))),
                   Face("⊗(ff′,g)", fillers.fg(f.then(f2), g))]
            rhs = [Face("⊗(f,g) * 1", hcomp(fillers.fg(f, g), Identity2(T(f2, b2)))),
                   Face("1 * ⊗(f′,g)", hcomp(Identity2(T(f, b)), fillers.fg(f2, g))),
                   Face("⊗(f′,f,B) * 1", hcomp(fillers.ffB(f2, f, b), Identity2(T(a3, g))))]
        else:
            f, g, g2 = index[1:]
            a, a2, b, b3 = f.src, f.tgt, g.src, g2.tgt
            lhs = [Face("⊗(A,g′,g) * 1", hcomp(fillers.Agg(a, g2, g), Identity2(T(f, b3)))),
                   Face("⊗(f,gg′)", fillers.fg(f, g.then(g2)))]
            rhs = [Face("1 * ⊗(f,g′)", hcomp(Identity2(T(a, g)), fillers.fg(f, g2))),
                   Face("⊗(f,g) * 1", hcomp(fillers.fg(f, g), Identity2(T(a2, g2)))),
                   Face("1 * ⊗(A′,g′,g)", hcomp(Identity2(T(f, b)), fillers.Agg(a2, g2, g)))]
        return Surface(lhs, rhs)


@register
class TensoratorTetrahedron(Condition):
    """Joining three whiskered 1-cells: either bracketing of the tensorators agrees."""

    id = ConditionId.TENS_TRANSF
    figure = "tetrahedron over composable f, f′, f″ and an object"

    def indices(self, domain):
        for f, f2, f3 in domain.splits(3):
            for obj in domain.objects:
                yield (Tag("right"), f, f2, f3, obj)
        for obj in domain.objects:
            for g, g2, g3 in domain.splits(3):
                yield (Tag("left"), obj, g, g2, g3)

    def surface(self, domain, index, fillers):
        T = domain.md.tensor
        if index[0].text == "right":
            f, f2, f3, b = index[1:]
            lhs = [Face("⊗(f′,f,B) * 1", hcomp(fillers.ffB(f2, f, b), Identity2(T(f3, b)))),
                   Face("⊗(f″,ff′,B)", fillers.ffB(f3, f.then(f2), b))]
            rhs = [Face("1 * ⊗(f″,f′,B)", hcomp(Identity2(T(f, b)), fillers.ffB(f3, f2, b))),
                   Face("⊗(f′f″,f,B)", fillers.ffB(f2.then(f3), f, b))]
        else:
            a, g, g2, g3 = index[1:]
            lhs = [Face("⊗(A,g′,g) * 1", hcomp(fillers.Agg(a, g2, g), Identity2(T(a, g3)))),
                   Face("⊗(A,g″,gg′)", fillers.Agg(a, g3, g.then(g2)))]
            rhs = [Face("1 * ⊗(A,g″,g′)", hcomp(Identity2(T(a, g)), fillers.Agg(a, g3, g2))),
                   Face("⊗(A,g′g″,g)", fillers.Agg(a, g2.then(g3), g))]
        return Surface(lhs, rhs)
