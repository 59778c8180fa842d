from functools import reduce
from typing import Iterable, List, Union

import numpy as np

from order.graph import Graph
from order.poset import Poset
from utils.exceptions import LabelMismatch


def complement(g: Graph) -> Graph:
    adj = ~g.adj
    np.fill_diagonal(adj, False)
    return Graph(g.labels, adj)


def _keep_order(structure, keep: Iterable[str]):
    if isinstance(keep, (set, frozenset)):
        missing = [x for x in keep if x not in structure]
        structure.indices(missing)  # raises UnknownVertex
        return [x for x in structure.labels if x in keep]
    return list(keep)


def induced(structure: Union[Graph, Poset], keep: Iterable[str]):
    """
    Induced subgraph / subposet on keep. A set keeps declaration order, a sequence
    keeps its own order.
    """
    keep = _keep_order(structure, keep)
    order = structure.indices(keep)
    if isinstance(structure, Poset):
        return Poset(keep, structure.lt[np.ix_(order, order)])
    return Graph(keep, structure.adj[np.ix_(order, order)])


def is_induced_subgraph(g: Graph, h: Graph) -> bool:
    """g <= h: g's labels are vertices of h and g's edges are exactly those h induces."""
    if not all(x in h for x in g.labels):
        return False
    return induced(h, g.labels) == g


def is_induced_subposet(p: Poset, q: Poset) -> bool:
    if not all(x in q for x in p.labels):
        return False
    return induced(q, p.labels) == p


def _aligned_matrices(structures) -> List[np.ndarray]:
    if not structures:
        raise LabelMismatch('Need at least one structure')
    labels = structures[0].labels
    return [s.aligned(labels) for s in structures]


def graph_intersection(gs: List[Graph]) -> Graph:
    matrices = _aligned_matrices(gs)
    return Graph(gs[0].labels, reduce(np.logical_and, matrices))


def graph_union(gs: List[Graph]) -> Graph:
    matrices = _aligned_matrices(gs)
    return Graph(gs[0].labels, reduce(np.logical_or, matrices))


def poset_intersection(ps: List[Poset]) -> Poset:
    """x < y iff x < y in every input; an intersection of strict orders is again one."""
    matrices = _aligned_matrices(ps)
    return Poset(ps[0].labels, reduce(np.logical_and, matrices))


def comparability_graph(p: Poset) -> Graph:
    return Graph(p.labels, p.lt | p.lt.T)
