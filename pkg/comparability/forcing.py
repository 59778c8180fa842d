from collections import deque
from typing import List, Sequence

import numpy as np

from comparability.certificate import find_odd_cycle_certificate
from order.graph import Graph
from order.operations import comparability_graph, is_induced_subgraph
from order.orientation import Orientation
from order.poset import Poset
from utils.exceptions import CapExceeded, InvariantViolation, NotComparability, NotNested, NotTransitive


def edge_order(g: Graph):
    """Edges as index pairs (i, j), label i < label j, sorted lexicographically by label."""
    pairs = []
    for i, j in zip(*np.nonzero(np.triu(g.adj, 1))):
        if g.labels[j] < g.labels[i]:
            i, j = j, i
        pairs.append((int(i), int(j)))
    return sorted(pairs, key=lambda e: (g.labels[e[0]], g.labels[e[1]]))


def implication_class(adj, start):
    """
    Directed edges forced together with start by the Gamma relation on the graph adj:
    a -> b forces a -> b' when b b' is a non-edge, and a' -> b when a a' is a non-edge.
    Returns the class and whether it contains some edge in both directions.
    """
    members = {start}
    queue = deque([start])
    while queue:
        a, b = queue.popleft()
        forced = [(a, c) for c in np.flatnonzero(adj[a]) if c != b and not adj[b, c]]
        forced += [(c, b) for c in np.flatnonzero(adj[b]) if c != a and not adj[a, c]]
        for arc in forced:
            arc = (int(arc[0]), int(arc[1]))
            if arc not in members:
                members.add(arc)
                queue.append(arc)
    conflict = any((b, a) in members for a, b in members)
    return members, conflict


def transitive_orient(g: Graph) -> Orientation:
    """
    Transitive orientation by successive implication classes: orient the first
    unoriented edge, take its implication class in the graph of the still
    unoriented edges, remove it and repeat. A class meeting its own reversal means
    the graph is not a comparability graph.
    """
    remaining = g.adj.copy()
    arcs = np.zeros_like(g.adj)
    for u, v in edge_order(g):
        if not remaining[u, v]:
            continue
        members, conflict = implication_class(remaining, (u, v))
        if conflict:
            raise NotComparability(find_odd_cycle_certificate(g))
        for a, b in members:
            arcs[a, b] = True
            remaining[a, b] = remaining[b, a] = False

    orientation = Orientation(g, arcs)
    if not orientation.is_transitive():
        raise InvariantViolation('Implication classes produced a non-transitive orientation')
    return orientation


def is_comparability(g: Graph) -> bool:
    try:
        transitive_orient(g)
    except NotComparability:
        return False
    return True


def _force(adj, arcs, start):
    """Orient start and everything the Gamma relation forces on the whole graph, None on conflict."""
    a, b = start
    if arcs[b, a]:
        return None
    arcs = arcs.copy()
    arcs[a, b] = True
    queue = deque([start])
    while queue:
        a, b = queue.popleft()
        forced = [(a, c) for c in np.flatnonzero(adj[a]) if c != b and not adj[b, c]]
        forced += [(c, b) for c in np.flatnonzero(adj[b]) if c != a and not adj[a, c]]
        for x, y in forced:
            if arcs[y, x]:
                return None
            if not arcs[x, y]:
                arcs[x, y] = True
                queue.append((x, y))
    return arcs


def _violates_transitivity(adj, arcs):
    two_step = (arcs.astype(np.int64) @ arcs.astype(np.int64)) > 0
    return bool(np.any(two_step & (~adj | arcs.T)))


class _Truncated(Exception):
    pass


def all_transitive_orientations(g: Graph, cap: int = 64, truncate=False) -> List[Orientation]:
    """
    Every transitive orientation, in lexicographic branching order. Past cap this
    raises CapExceeded, or with truncate=True returns the first cap found.
    """
    order = edge_order(g)
    found = []

    def search(arcs):
        if _violates_transitivity(g.adj, arcs):
            return
        pending = next(((u, v) for u, v in order if not (arcs[u, v] or arcs[v, u])), None)
        if pending is None:
            if len(found) == cap:
                if truncate:
                    raise _Truncated()
                raise CapExceeded(len(found) + 1, cap)
            found.append(Orientation(g, arcs))
            return
        u, v = pending
        for arc in ((u, v), (v, u)):
            forced = _force(g.adj, arcs, arc)
            if forced is not None:
                search(forced)

    try:
        search(np.zeros_like(g.adj))
    except _Truncated:
        pass
    return found


def orientation_to_poset(o: Orientation) -> Poset:
    """x -> y is read as x > y."""
    if not o.is_transitive():
        raise NotTransitive('Only a transitive orientation is a partial order')
    return Poset(o.labels, o.matrix.T)


def orientation_from_poset(p: Poset) -> Orientation:
    """Orientation of the comparability graph with x -> y iff x < y (the containment direction)."""
    return Orientation(comparability_graph(p), p.lt)


def coherent_orient(sequence: Sequence[Graph]) -> List[Orientation]:
    """
    Coherent transitive orientations of nested graphs G1 <= ... <= Gm. Only the last
    graph is oriented; every earlier one inherits the restriction, since extending
    an early orientation step by step can get stuck.
    """
    sequence = list(sequence)
    if not sequence:
        return []
    for smaller, larger in zip(sequence, sequence[1:]):
        if not is_induced_subgraph(smaller, larger):
            raise NotNested('Each graph must be an induced subgraph of the next')
    last = transitive_orient(sequence[-1])
    return [last.restrict(g.labels) for g in sequence[:-1]] + [last]
