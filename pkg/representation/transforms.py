from typing import List, Optional, Sequence

import numpy as np

from order.graph import Graph
from order.operations import complement, is_induced_subposet
from order.poset import Poset
from representation.families import SetFamily
from utils.exceptions import InvalidCount, NotNested


def composition_poset(sigma: SetFamily, k: int, prefix: Optional[int] = None) -> Poset:
    """
    Containment poset of k copies of each of the first prefix sets of sigma (all of
    them by default). Copy a of the set of v is named "v#a"; copies of one set are
    mutually incomparable.
    """
    if k < 1:
        raise InvalidCount(f'Multiplicity must be at least 1, got {k}')
    count = sigma.n if prefix is None else min(prefix, sigma.n)
    sets = sigma.sets[:count]
    labels = [f'{label}#{a}' for label in sigma.labels[:count] for a in range(1, k + 1)]
    origin = np.repeat(np.arange(count), k)
    proper = np.array([[s < t for t in sets] for s in sets], dtype=bool).reshape(count, count)
    return Poset(labels, proper[np.ix_(origin, origin)])


def composition_sequence(sigma: SetFamily, length: int) -> List[Poset]:
    """P_1 <= P_2 <= ...: P_k holds k copies each of the first k sets."""
    return [composition_poset(sigma, k, prefix=k) for k in range(1, length + 1)]


def composition_family(sequence: Sequence[Poset]) -> SetFamily:
    """
    Injective family for nested posets P_1 <= ... <= P_m: number the elements
    x_1, x_2, ... in the order they first appear and put S_k = {i : x_i <= x_k}.
    The family restricted to P_i's elements represents P_i.
    """
    sequence = list(sequence)
    for smaller, larger in zip(sequence, sequence[1:]):
        if not is_induced_subposet(smaller, larger):
            raise NotNested('Each poset must be an induced subposet of the next')
    last = sequence[-1]
    order = []
    for p in sequence:
        order += [x for x in p.labels if x not in order]
    idx = last.indices(order)
    le = (last.lt | np.eye(last.n, dtype=bool))[np.ix_(idx, idx)]
    return SetFamily(order, [(np.flatnonzero(le[:, k]) + 1).tolist() for k in range(len(order))],
                     injective=True)


def overlap_from_intersection(sigma: SetFamily) -> SetFamily:
    """
    T_i = S_i plus a fresh atom of its own. Distinct T_i and T_j overlap iff S_i
    and S_j intersect.
    """
    fresh = max(sigma.atoms(), default=0) + 1
    return SetFamily(sigma.labels, [s | {fresh + i} for i, s in enumerate(sigma.sets)], injective=True)


def disjointedness_complement(g: Graph) -> Graph:
    """f is a disjointedness representation of g iff it is an intersection representation of this."""
    return complement(g)
