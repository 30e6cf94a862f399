"""
The axioms proper: the Stasheff polytope over five objects and the two unit polytopes
over three. Each surface is swept face by face from its longest boundary path; hemispheres
meet on the shortest one.
"""

from m2c.core.cells import concat, inverse, whisker
from m2c.core.report import ConditionId
from .base import Condition, Face, Surface, register


@register
class Stasheff(Condition):
    id = ConditionId.STASHEFF
    figure = "Stasheff polytope over five objects: six pentagonators and three associator squares"

    def indices(self, domain):
        yield from domain.objectTuples(5)

    def surface(self, domain, index, fillers):
        md = domain.md
        T, a = md.tensor, md.assoc1
        A, B, C, D, E = index
        BC, CD, DE, AB = T(B, C), T(C, D), T(D, E), T(A, B)

        # longest boundary, (((AB)C)D)E to A(B(C(DE)))
        s1 = T(T(a(A, B, C), D), E)
        s2 = T(a(A, BC, D), E)
        s3 = T(T(A, a(B, C, D)), E)
        s4 = a(A, T(B, CD), E)
        s5 = T(A, a(B, CD, E))
        s6 = T(A, T(B, a(C, D, E)))
        # intermediate edges
        t1 = T(a(AB, C, D), E)
        u1 = a(AB, CD, E)
        x1 = a(A, T(BC, D), E)
        y2 = T(A, a(B, C, DE))
        z1 = a(T(A, BC), D, E)
        z2 = a(A, BC, DE)
        w1 = a(T(AB, C), D, E)
        v2 = a(A, B, T(C, DE))

        piE = fillers.hatRight(md.pent(A, B, C, D), E,
                               [T(a(A, B, C), D), a(A, BC, D), T(A, a(B, C, D))],
                               [a(AB, C, D), a(A, B, CD)])
        Api = fillers.hatLeft(A, md.pent(B, C, D, E),
                              [T(a(B, C, D), E), a(B, CD, E), T(B, a(C, D, E))],
                              [a(BC, D, E), a(B, C, DE)])

        lhs = [Face("π(A,B,C,D) ⊗̂ E", whisker(None, piE, concat(s4, s5, s6))),
               Face("π(A,B,CD,E)", whisker(t1, md.pent(A, B, CD, E), s6)),
               Face("α(A,B,a(C,D,E))⁻¹", whisker(concat(t1, u1), inverse(md.alpha(3, A, B, a(C, D, E))))),
               Face("π(AB,C,D,E)", whisker(None, md.pent(AB, C, D, E), v2))]
        rhs = [Face("α(A,a(B,C,D),E)", whisker(concat(s1, s2), md.alpha(2, A, a(B, C, D), E), concat(s5, s6))),
               Face("A ⊗̂ π(B,C,D,E)", whisker(concat(s1, s2, x1), Api)),
               Face("π(A,BC,D,E)", whisker(s1, md.pent(A, BC, D, E), y2)),
               Face("α(a(A,B,C),D,E)", whisker(None, md.alpha(1, a(A, B, C), D, E), concat(z2, y2))),
               Face("π(A,B,C,DE)", whisker(w1, md.pent(A, B, C, DE)))]
        return Surface(lhs, rhs)


class UnitPolytope(Condition):
    def indices(self, domain):
        yield from domain.objectTuples(3)


@register
class UnitPolytopeMiddle(UnitPolytope):
    """Unit in the second position: π(A,I,B,C) against μ, λ and α."""

    id = ConditionId.UNIT_POLY_1
    figure = "unit polytope with the unit second: π(A,I,B,C), μ(A,BC), A ⊗̂ λ(B,C), μ(A,B) ⊗̂ C"

    def surface(self, domain, index, fillers):
        md = domain.md
        T, a, I = md.tensor, md.assoc1, md.unit
        l, r = md.lunit1, md.runit1
        A, B, C = index
        BC = T(B, C)

        lhs = [Face("π(A,I,B,C)", whisker(None, md.pent(A, I, B, C), T(A, l(BC)))),
               Face("μ(A,BC)", whisker(a(T(A, I), B, C), md.u2_mu(A, BC))),
               Face("α(r(A),B,C)⁻¹", inverse(md.alpha(1, r(A), B, C)))]
        lam = fillers.hatLeft(A, md.u2_lambda(B, C), [a(I, B, C), l(BC)], [T(l(B), C)])
        mu = fillers.hatRight(md.u2_mu(A, B), C, [a(A, I, B), T(A, l(B))], [T(r(A), B)])
        rhs = [Face("A ⊗̂ λ(B,C)", whisker(concat(T(a(A, I, B), C), a(A, T(I, B), C)), lam)),
               Face("α(A,l(B),C)⁻¹", whisker(T(a(A, I, B), C), inverse(md.alpha(2, A, l(B), C)))),
               Face("μ(A,B) ⊗̂ C", whisker(None, mu, a(A, B, C)))]
        return Surface(lhs, rhs)


@register
class UnitPolytopeRight(UnitPolytope):
    """Unit in the third position: π(A,B,I,C) against μ, ρ and α."""

    id = ConditionId.UNIT_POLY_2
    figure = "unit polytope with the unit third: π(A,B,I,C), μ(AB,C), A ⊗̂ μ(B,C), ρ(A,B) ⊗̂ C"

    def surface(self, domain, index, fillers):
        md = domain.md
        T, a, I = md.tensor, md.assoc1, md.unit
        l, r = md.lunit1, md.runit1
        A, B, C = index
        AB = T(A, B)

        lhs = [Face("π(A,B,I,C)", whisker(None, md.pent(A, B, I, C), T(A, T(B, l(C))))),
               Face("α(A,B,l(C))⁻¹", whisker(a(AB, I, C), inverse(md.alpha(3, A, B, l(C))))),
               Face("μ(AB,C)", whisker(None, md.u2_mu(AB, C), a(A, B, C)))]
        mu = fillers.hatLeft(A, md.u2_mu(B, C), [a(B, I, C), T(B, l(C))], [T(r(B), C)])
        rho = fillers.hatRight(md.u2_rho(A, B), C, [a(A, B, I), T(A, r(B))], [r(AB)])
        rhs = [Face("A ⊗̂ μ(B,C)", whisker(concat(T(a(A, B, I), C), a(A, T(B, I), C)), mu)),
               Face("α(A,r(B),C)⁻¹", whisker(T(a(A, B, I), C), inverse(md.alpha(2, A, r(B), C)))),
               Face("ρ(A,B) ⊗̂ C", whisker(None, rho, a(A, B, C)))]
        return Surface(lhs, rhs)
