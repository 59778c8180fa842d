from typing import Iterable, Sequence, Tuple

import networkx as nx
import numpy as np

from order.graph import Labelled, frozen
from utils.exceptions import CycleDetected, InvariantViolation, LabelMismatch, UnknownVertex


def close_relation(relation):
    closed = np.array(relation, dtype=bool)
    for k in range(closed.shape[0]):
        closed |= np.outer(closed[:, k], closed[k, :])
    return closed


class Poset(Labelled):
    """
    Strict partial order over labelled elements.
    lt[i, j] is True iff labels[i] < labels[j]. The matrix is read-only and always
    transitively closed; use transitive_closure_build for unclosed input.
    """

    def __init__(self, labels: Sequence[str], lt=None):
        super().__init__(labels)
        n = len(self._labels)
        lt = np.zeros((n, n), dtype=bool) if lt is None else np.asarray(lt, dtype=bool)
        if lt.shape != (n, n):
            raise InvariantViolation(f'Relation must be {n}x{n}, got {lt.shape}')
        if np.any(np.diag(lt)):
            raise InvariantViolation('Strict order must be irreflexive')
        if np.any(lt & lt.T):
            raise InvariantViolation('Strict order must be antisymmetric')
        if not np.array_equal(close_relation(lt), lt):
            raise InvariantViolation('Strict order must be transitively closed')
        self._lt = frozen(lt)

    @property
    def lt(self):
        return self._lt

    def less(self, x, y):
        return bool(self._lt[self.index(x), self.index(y)])

    def comparable(self, x, y):
        i, j = self.index(x), self.index(y)
        return bool(self._lt[i, j] or self._lt[j, i])

    def relations(self):
        """All pairs (x, y) with x < y, row-major in declaration order."""
        rows, cols = np.nonzero(self._lt)
        return [(self._labels[i], self._labels[j]) for i, j in zip(rows, cols)]

    def incomparable(self):
        inc = ~(self._lt | self._lt.T)
        np.fill_diagonal(inc, False)
        return inc

    def below(self, x):
        return [self._labels[i] for i in np.flatnonzero(self._lt[:, self.index(x)])]

    def above(self, x):
        return [self._labels[j] for j in np.flatnonzero(self._lt[self.index(x)])]

    def is_chain(self):
        return not np.any(self.incomparable())

    def aligned(self, labels):
        if set(labels) != set(self._labels) or len(labels) != self.n:
            raise LabelMismatch(f'Label sets differ on {sorted(set(labels) ^ set(self._labels))}')
        order = self.indices(labels)
        return self._lt[np.ix_(order, order)]

    def to_networkx(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self._labels)
        graph.add_edges_from(self.relations())
        return graph

    def __eq__(self, other):
        return isinstance(other, Poset) and self._labels == other.labels and np.array_equal(self._lt, other.lt)

    def __hash__(self):
        return hash((self._labels, self._lt.tobytes()))

    def __repr__(self):
        return f'Poset(n={self.n}, relations={self.relations()})'


def transitive_closure_build(labels: Sequence[str], pairs: Iterable[Tuple[str, str]]) -> Poset:
    """Close the pairs (x, y) meaning x < y; a pair set whose closure has x < x is rejected."""
    labels = list(labels)
    index = {label: i for i, label in enumerate(labels)}
    if len(index) != len(labels):
        raise InvariantViolation('Vertex labels must be unique')
    pairs = list(pairs)
    relation = np.zeros((len(labels), len(labels)), dtype=bool)
    for x, y in pairs:
        for label in (x, y):
            if label not in index:
                raise UnknownVertex(label)
        relation[index[x], index[y]] = True

    closed = close_relation(relation)
    if np.any(np.diag(closed)):
        digraph = nx.DiGraph()
        digraph.add_edges_from(pairs)
        cycle = nx.find_cycle(digraph)
        raise CycleDetected([u for u, _ in cycle])
    return Poset(labels, closed)


def is_lattice(p: Poset) -> bool:
    le = p.lt | np.eye(p.n, dtype=bool)
    for i in range(p.n):
        for j in range(i + 1, p.n):
            upper = np.flatnonzero(le[i] & le[j])
            lower = np.flatnonzero(le[:, i] & le[:, j])
            if not any(np.all(le[c, upper]) for c in upper):
                return False
            if not any(np.all(le[lower, c]) for c in lower):
                return False
    return True
