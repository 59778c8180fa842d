from collections import deque
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from order.graph import Graph
from utils.exceptions import CertificateNotFound, IsComparability


@dataclass(frozen=True)
class OddCycleCertificate:
    """
    Closed walk v1 ... v(2k+1) (edges may be retraced) in which consecutive vertices
    are adjacent and no v(i) v(i+2) is an edge, indices taken cyclically.
    """
    walk: Tuple[str, ...]

    def __len__(self):
        return len(self.walk)

    def __str__(self):
        return ' '.join(self.walk)


def validate_certificate(g: Graph, certificate: OddCycleCertificate) -> bool:
    walk = certificate.walk
    length = len(walk)
    if length < 3 or length % 2 == 0:
        return False
    if not all(v in g for v in walk):
        return False
    idx = g.indices(walk)
    for i in range(length):
        a, b, c = idx[i], idx[(i + 1) % length], idx[(i + 2) % length]
        if not g.adj[a, b] or g.adj[a, c]:
            return False
    return True


def _walk_states(g: Graph):
    """
    Directed edges (a, b) in lexicographic label order and, for each, the states
    (b, c) a chordless walk may continue to: c adjacent to b and not to a.
    Returning to a retraces the edge, which the closed-walk criterion allows.
    """
    arcs = sorted(((i, j) for i in range(g.n) for j in np.flatnonzero(g.adj[i])),
                  key=lambda arc: (g.labels[arc[0]], g.labels[arc[1]]))
    state_id = {arc: s for s, arc in enumerate(arcs)}
    successors = []
    for a, b in arcs:
        successors.append([state_id[(b, c)] for c in np.flatnonzero(g.adj[b]) if not g.adj[a, c]])
    return arcs, successors


def _shortest_odd_return(start, successors, limit):
    """BFS over (state, parity) for the shortest odd closed walk through start."""
    parent = {(start, 0): None}
    queue = deque([(start, 0, 0)])
    while queue:
        state, parity, depth = queue.popleft()
        if limit is not None and depth >= limit:
            continue
        for nxt in successors[state]:
            node = (nxt, 1 - parity)
            if node in parent:
                continue
            parent[node] = (state, parity)
            if node == (start, 1):
                path = [start]
                current = parent[node]
                while current is not None:
                    path.append(current[0])
                    current = parent[current]
                # path runs from the goal back to the start; drop the duplicated start
                return list(reversed(path))[:-1]
            queue.append((nxt, 1 - parity, depth + 1))
    return None


def _search(g, arcs, successors, limit):
    best = None
    for start in range(len(arcs)):
        states = _shortest_odd_return(start, successors, limit)
        if states is not None and (best is None or len(states) < len(best)):
            best = states
            if len(best) == 5:
                break
    if best is None:
        return None
    return OddCycleCertificate(tuple(g.labels[arcs[s][0]] for s in best))


def find_odd_cycle_certificate(g: Graph, max_length: Optional[int] = None) -> OddCycleCertificate:
    """
    Odd closed walk with no triangular chord. A first pass looks for walks of
    length at most 2n + 1, then the (state, parity) search runs unbounded, which is
    complete. With max_length set, nothing longer is searched.
    """
    arcs, successors = _walk_states(g)
    short_limit = 2 * g.n + 1 if max_length is None else min(max_length, 2 * g.n + 1)
    certificate = _search(g, arcs, successors, short_limit)
    if certificate is None and (max_length is None or max_length > short_limit):
        certificate = _search(g, arcs, successors, max_length)
    if certificate is not None:
        return certificate
    if max_length is not None:
        raise CertificateNotFound(f'No odd walk without triangular chord of length <= {max_length}')
    raise IsComparability('Every odd closed walk has a triangular chord')
