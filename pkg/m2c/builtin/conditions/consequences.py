"""
Consequences of φ_{A,B} = 1: unitor and associator components at identity 1-cells are
identities. Both follow from the functor axioms, so a failure here with the functor axioms
passing points at the structure data rather than the checker.
"""

from m2c.core.cells import Identity2, OneCellPath, hcomp, inverse, vcomp
from m2c.core.report import ConditionId
from .base import Condition, Face, Surface, Tag, register


@register
class UnitorAtIdentity(Condition):
    id = ConditionId.COR_R_ID
    figure = "r_{id_A} = 1 ⋆ φ_{A,I} (and the mirrored l_{id_A})"

    def indices(self, domain):
        for variant in ("l", "r"):
            for obj in domain.objects:
                yield (Tag(variant), obj)

    def surface(self, domain, index, fillers):
        md = domain.md
        variant, A = index
        idA = OneCellPath.identity(A)
        if variant.text == "r":
            cell, phi, unitor = md.runit2(idA), md.phi_unit(A, md.unit), md.runit1(A)
        else:
            cell, phi, unitor = md.lunit2(idA), md.phi_unit(md.unit, A), md.lunit1(A)
        return Surface([Face(f"{variant.text}(id)", cell)],
                       [Face("φ * 1", hcomp(phi, Identity2(unitor)))])


@register
class AssociatorAtIdentity(Condition):
    id = ConditionId.COR_ALPHA_ID
    figure = "α at identity 1-cells = (β ⋆ 1) ⊙ (1 ⋆ γ⁻¹) with β = φ_{AB,C} ⊙ (φ_{A,B} ⊗ C)"

    def indices(self, domain):
        for slot in (1, 2, 3):
            for objs in domain.objectTuples(3):
                yield (Tag(f"s{slot}"), *objs)

    def surface(self, domain, index, fillers):
        md = domain.md
        T = md.tensor
        slot = int(index[0].text[1:])
        A, B, C = index[1:]
        assoc = Identity2(md.assoc1(A, B, C))
        beta = vcomp(T(md.phi_unit(A, B), C), md.phi_unit(T(A, B), C))
        gamma = vcomp(T(A, md.phi_unit(B, C)), md.phi_unit(A, T(B, C)))
        return Surface([Face("α(id)", md.alpha(slot, A, B, C))],
                       [Face("β * 1", hcomp(beta, assoc)), Face("1 * γ⁻¹", hcomp(assoc, inverse(gamma)))])
