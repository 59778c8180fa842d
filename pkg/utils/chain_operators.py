from comparability.forcing import orientation_to_poset, transitive_orient
from order.graph import Graph
from order.reduction import poset_equivalence_classes, reduce_poset
from representation.families import SetFamily, StarSubtreeRep
from representation.verifier import CONTAINMENT, verify
from utils.exceptions import InvariantViolation, RepresentationRejected


class ChainOperator:
    def __init__(self, next_operator):
        self.next_operator = next_operator

    def forward(self, data):
        raise NotImplementedError()

    def backward(self, data, addition):
        raise NotImplementedError()

    def __call__(self, data):
        data, addition = self.forward(data)
        data = self.next_operator(data)
        return self.backward(data, addition)


class BuildOperator:
    """Last link: turns a poset into a representation."""

    def __init__(self, builder):
        self.builder = builder

    def __call__(self, poset):
        return self.builder(poset)


class OrientationOperator(ChainOperator):
    """
        Graphs are replaced by one of their transitive orientations, read as a poset
        A containment representation of the poset also represents the graph
    """

    def forward(self, structure):
        if isinstance(structure, Graph):
            structure = orientation_to_poset(transitive_orient(structure))
        return structure, None

    def backward(self, rep, addition):
        return rep


class ReductionOperator(ChainOperator):
    """
        Build on the reduced poset, then give every member of an equivalence class the set of its
        class representative
    """

    def forward(self, poset):
        return reduce_poset(poset), (poset.labels, poset_equivalence_classes(poset))

    def backward(self, rep, addition):
        labels, classes = addition
        if isinstance(rep, StarSubtreeRep):
            rep = rep.as_family()
        if not isinstance(rep, SetFamily):
            raise InvariantViolation('Only set families can be multiplied back over equivalence classes')
        owner = {member: group[0] for group in classes for member in group}
        return SetFamily(labels, [rep.set_of(owner[x]) for x in labels])


class VerificationOperator(ChainOperator):
    """Refuses to pass on a representation the verifier rejects."""

    def __init__(self, next_operator, semantics=CONTAINMENT):
        super().__init__(next_operator)
        self.semantics = semantics

    def forward(self, structure):
        return structure, structure

    def backward(self, rep, structure):
        verdict = verify(structure, rep, self.semantics)
        if not verdict.ok:
            raise RepresentationRejected(verdict)
        return rep
