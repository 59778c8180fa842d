from dataclasses import dataclass
from typing import Optional

import numpy as np

from comparability.forcing import transitive_orient
from dimension.extensions import LinearOrder, Realizer, verify_realizer
from order.operations import comparability_graph, complement
from order.poset import Poset
from utils.exceptions import InvariantViolation, NotComparability


@dataclass(frozen=True)
class TwoDimensionalResult:
    ok: bool
    realizer: Optional[Realizer] = None

    def __bool__(self):
        return self.ok


def _total_order(p: Poset, relation) -> LinearOrder:
    # in a strict total order the rank of x is the number of elements below it
    below = relation.sum(axis=0)
    if sorted(below.tolist()) != list(range(p.n)):
        raise InvariantViolation('Merged relation is not a linear order')
    return LinearOrder(tuple(p.labels[i] for i in np.argsort(below, kind='stable')))


def is_two_dimensional(p: Poset) -> TwoDimensionalResult:
    """
    dim(p) <= 2 iff the incomparability graph is a comparability graph. With Q a
    transitive orientation of it, p + Q and p + Q^-1 are linear orders realizing p.
    """
    try:
        conjugate = transitive_orient(complement(comparability_graph(p)))
    except NotComparability:
        return TwoDimensionalResult(False)

    first = _total_order(p, p.lt | conjugate.matrix)
    second = _total_order(p, p.lt | conjugate.matrix.T)
    realizer = Realizer((first, second))
    if p.n > 0 and not verify_realizer(p, realizer):
        raise InvariantViolation('Conjugate orders do not realize the poset')
    return TwoDimensionalResult(True, realizer)
