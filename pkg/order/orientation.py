from typing import Iterable, Tuple

import numpy as np

from order.graph import Graph, frozen
from order.operations import induced
from utils.exceptions import InvariantViolation


class Orientation:
    """
    Orientation of every edge of a base graph.
    arcs[i, j] is True iff the edge {i, j} is directed i -> j.
    """

    def __init__(self, base: Graph, arcs=None):
        self._base = base
        arcs = np.zeros_like(base.adj) if arcs is None else np.asarray(arcs, dtype=bool)
        if arcs.shape != base.adj.shape:
            raise InvariantViolation('Orientation shape does not match its graph')
        if np.any(arcs & arcs.T):
            raise InvariantViolation('An edge is oriented both ways')
        if not np.array_equal(arcs | arcs.T, base.adj):
            raise InvariantViolation('Orientation must cover exactly the edges of its graph')
        self._arcs = frozen(arcs)

    @classmethod
    def from_arcs(cls, base: Graph, arcs: Iterable[Tuple[str, str]]):
        matrix = np.zeros_like(base.adj)
        for u, v in arcs:
            matrix[base.index(u), base.index(v)] = True
        return cls(base, matrix)

    @property
    def base(self):
        return self._base

    @property
    def labels(self):
        return self._base.labels

    @property
    def matrix(self):
        return self._arcs

    def points(self, u, v):
        """True iff the edge {u, v} is directed u -> v."""
        return bool(self._arcs[self._base.index(u), self._base.index(v)])

    def arcs(self):
        rows, cols = np.nonzero(self._arcs)
        return [(self.labels[i], self.labels[j]) for i, j in zip(rows, cols)]

    def is_transitive(self):
        # u -> v -> w must come with u -> w
        two_step = (self._arcs.astype(np.int64) @ self._arcs.astype(np.int64)) > 0
        return not np.any(two_step & ~self._arcs)

    def reversed(self):
        return Orientation(self._base, self._arcs.T)

    def restrict(self, labels):
        order = self._base.indices(labels)
        return Orientation(induced(self._base, labels), self._arcs[np.ix_(order, order)])

    def __eq__(self, other):
        return isinstance(other, Orientation) and self._base == other.base and \
            np.array_equal(self._arcs, other.matrix)

    def __hash__(self):
        return hash((self._base, self._arcs.tobytes()))

    def __repr__(self):
        return f'Orientation(arcs={self.arcs()})'
