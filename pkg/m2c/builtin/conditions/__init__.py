from .base import CONDITIONS, FIGURES, Condition, Domain

from .functor import FunctorAxiom
from .associator import AssociatorNaturality, AssociatorObjectNaturality, AssociatorTransformationAxiom
from .unitor import (LeftUnitorNaturality, RightUnitorNaturality,
                     LeftUnitorTransformationAxiom, RightUnitorTransformationAxiom)
from .tensorator import (TensoratorNaturality, TensoratorNaturalityInComposite,
                         TensoratorComposition, TensoratorTetrahedron)
from .modification import (PentagonatorModification, LeftUnitorModification,
                           MiddleUnitorModification, RightUnitorModification)
from .axioms import Stasheff, UnitPolytopeMiddle, UnitPolytopeRight
from .consequences import UnitorAtIdentity, AssociatorAtIdentity
from .fillers import fillersFor
