from m2c.core.report import ConditionId
from .base import Condition, naturalitySurface, register, transformationSurface


class UnitorNaturality(Condition):
    kind = ""

    def indices(self, domain):
        for ref in domain.twoCells:
            yield (ref,)

    def surface(self, domain, index, fillers):
        md = domain.md
        return naturalitySurface(md, md.transformation(self.kind), list(index), 0)


class UnitorTransformationAxiom(Condition):
    kind = ""

    def indices(self, domain):
        for first, second in domain.splits(2):
            yield (first, second)

    def surface(self, domain, index, fillers):
        first, second = index
        return transformationSurface(domain.md.transformation(self.kind), (first,), (second,))


@register
class LeftUnitorNaturality(UnitorNaturality):
    id = ConditionId.UNITOR_NAT_F_LEFT
    figure = "left unitor naturality cylinder over γ: f ⇒ f′"
    kind = "lf"


@register
class RightUnitorNaturality(UnitorNaturality):
    id = ConditionId.UNITOR_NAT_F_RIGHT
    figure = "right unitor naturality cylinder over γ: f ⇒ f′"
    kind = "rf"


@register
class LeftUnitorTransformationAxiom(UnitorTransformationAxiom):
    id = ConditionId.UNITOR_TRANSF_LEFT
    figure = "left unitor transformation-axiom triangle prism, κ built from φ and ψ = 1"
    kind = "lf"


@register
class RightUnitorTransformationAxiom(UnitorTransformationAxiom):
    id = ConditionId.UNITOR_TRANSF_RIGHT
    figure = "right unitor transformation-axiom triangle prism, κ built from φ and ψ = 1"
    kind = "rf"
