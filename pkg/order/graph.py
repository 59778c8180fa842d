from typing import Iterable, Sequence, Tuple

import numpy as np

from utils.exceptions import InvariantViolation, LabelMismatch, UnknownVertex


def frozen(matrix):
    matrix = np.array(matrix, dtype=bool)
    matrix.setflags(write=False)
    return matrix


class Labelled:
    """
    Base for every structure indexed by vertex labels.
    Index i of every matrix row/column is the i-th declared label.
    """

    def __init__(self, labels: Sequence[str]):
        self._labels = tuple(str(x) for x in labels)
        self._index = {label: i for i, label in enumerate(self._labels)}
        if len(self._index) != len(self._labels):
            raise InvariantViolation('Vertex labels must be unique')

    @property
    def n(self):
        return len(self._labels)

    @property
    def labels(self):
        return self._labels

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertex(label)

    def indices(self, labels):
        return [self.index(x) for x in labels]

    def __contains__(self, label):
        return label in self._index

    def __len__(self):
        return len(self._labels)


class Graph(Labelled):
    """Undirected simple graph, adjacency stored as a read-only boolean matrix."""

    def __init__(self, labels: Sequence[str], adj=None):
        super().__init__(labels)
        n = len(self._labels)
        adj = np.zeros((n, n), dtype=bool) if adj is None else np.asarray(adj, dtype=bool)
        if adj.shape != (n, n):
            raise InvariantViolation(f'Adjacency must be {n}x{n}, got {adj.shape}')
        if np.any(np.diag(adj)):
            raise InvariantViolation('Graph has a self-loop')
        if not np.array_equal(adj, adj.T):
            raise InvariantViolation('Adjacency is not symmetric')
        self._adj = frozen(adj)

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[Tuple[str, str]]):
        labels = list(labels)
        index = {label: i for i, label in enumerate(labels)}
        adj = np.zeros((len(labels), len(labels)), dtype=bool)
        for u, v in edges:
            if u not in index:
                raise UnknownVertex(u)
            if v not in index:
                raise UnknownVertex(v)
            if u == v:
                raise InvariantViolation(f'Self-loop on {u!r}')
            adj[index[u], index[v]] = adj[index[v], index[u]] = True
        return cls(labels, adj)

    @property
    def adj(self):
        return self._adj

    def adjacent(self, u, v):
        return bool(self._adj[self.index(u), self.index(v)])

    def neighbours(self, v):
        return [self._labels[j] for j in np.flatnonzero(self._adj[self.index(v)])]

    def edges(self):
        """Edges as label pairs in declaration order, first endpoint declared first."""
        rows, cols = np.nonzero(np.triu(self._adj, 1))
        return [(self._labels[i], self._labels[j]) for i, j in zip(rows, cols)]

    @property
    def edge_count(self):
        return int(np.triu(self._adj, 1).sum())

    def aligned(self, labels):
        if set(labels) != set(self._labels) or len(labels) != self.n:
            raise LabelMismatch(f'Label sets differ on {sorted(set(labels) ^ set(self._labels))}')
        order = self.indices(labels)
        return self._adj[np.ix_(order, order)]

    def to_networkx(self):
        import networkx as nx

        graph = nx.Graph()
        graph.add_nodes_from(self._labels)
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other):
        return isinstance(other, Graph) and self._labels == other.labels and np.array_equal(self._adj, other.adj)

    def __hash__(self):
        return hash((self._labels, self._adj.tobytes()))

    def __repr__(self):
        return f'Graph(n={self.n}, edges={self.edges()})'
