from typing import Dict, List, Tuple, Union

import numpy as np

from order.graph import Graph
from order.operations import induced
from order.poset import Poset
from utils.exceptions import InvalidCount, InvariantViolation
from utils.misc import add_items_to_group

MULTIPLICATION = 'multiplication'
EXPANSION = 'expansion'


def _classes_from_pairs(structure, pairs) -> List[Tuple[str, ...]]:
    groups = []
    for i, j in pairs:
        add_items_to_group([i, j], groups)
    grouped = set().union(*groups) if groups else set()
    groups += [{i} for i in range(structure.n) if i not in grouped]
    # members sorted by label, classes ordered by their first declared member
    groups.sort(key=min)
    return [tuple(sorted(structure.labels[i] for i in group)) for group in groups]


def poset_equivalence_classes(p: Poset) -> List[Tuple[str, ...]]:
    """x ~ y iff x, y are incomparable and have the same strict up-set and down-set."""
    inc = p.incomparable()
    pairs = [(i, j) for i in range(p.n) for j in range(i + 1, p.n)
             if inc[i, j] and np.array_equal(p.lt[i], p.lt[j]) and np.array_equal(p.lt[:, i], p.lt[:, j])]
    return _classes_from_pairs(p, pairs)


def graph_equivalence_classes(g: Graph, mode: str = MULTIPLICATION) -> List[Tuple[str, ...]]:
    """
    multiplication: v ~ w iff non-adjacent with equal neighbourhoods.
    expansion: v ~ w iff adjacent with equal closed neighbourhoods.
    """
    if mode == MULTIPLICATION:
        rows, want_adjacent = g.adj, False
    elif mode == EXPANSION:
        rows, want_adjacent = g.adj | np.eye(g.n, dtype=bool), True
    else:
        raise ValueError(f'Reduction mode {mode} not supported')
    pairs = [(i, j) for i in range(g.n) for j in range(i + 1, g.n)
             if g.adj[i, j] == want_adjacent and np.array_equal(rows[i], rows[j])]
    return _classes_from_pairs(g, pairs)


def representatives(classes) -> List[str]:
    return [group[0] for group in classes]


def reduce_poset(p: Poset) -> Poset:
    """Induced subposet on the first label of each class."""
    keep = set(representatives(poset_equivalence_classes(p)))
    return induced(p, frozenset(keep))


def reduce_graph(g: Graph, mode: str = MULTIPLICATION) -> Graph:
    """Keeps the first vertex of each class; mode picks which twins are merged."""
    keep = set(representatives(graph_equivalence_classes(g, mode)))
    return induced(g, frozenset(keep))


def copy_labels(label, count):
    if count < 1:
        raise InvalidCount(f'Count for {label!r} must be positive, got {count}')
    if count == 1:
        return [label]
    return [f'{label}#{k}' for k in range(1, count + 1)]


def _multiplied_index(structure, counts: Dict[str, int]):
    unknown = set(counts) - set(structure.labels)
    structure.indices(sorted(unknown))  # raises UnknownVertex
    labels, origin = [], []
    for i, label in enumerate(structure.labels):
        copies = copy_labels(label, counts.get(label, 1))
        labels += copies
        origin += [i] * len(copies)
    if len(set(labels)) != len(labels):
        raise InvariantViolation('Copy labels collide with existing labels')
    return labels, np.array(origin, dtype=int)


def multiply(structure: Union[Graph, Poset], counts: Dict[str, int]):
    """
    Replace each vertex v by counts[v] mutually incomparable (non-adjacent) copies
    related to the rest exactly as v was. Copies are named "v#k"; a count of 1 keeps v.
    """
    labels, origin = _multiplied_index(structure, counts)
    if isinstance(structure, Poset):
        return Poset(labels, structure.lt[np.ix_(origin, origin)])
    return Graph(labels, structure.adj[np.ix_(origin, origin)])


def expand(g: Graph, counts: Dict[str, int]) -> Graph:
    """Vertex expansion: like multiply, but the copies of a vertex are pairwise adjacent."""
    labels, origin = _multiplied_index(g, counts)
    adj = g.adj[np.ix_(origin, origin)] | (origin[:, None] == origin[None, :])
    np.fill_diagonal(adj, False)
    return Graph(labels, adj)


def origin_of(label: str) -> str:
    return label.rsplit('#', 1)[0] if '#' in label else label
