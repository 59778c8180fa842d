"""
Brute-force references used by the acceptance sweep. None of them touches the
forcing or cover-search engines.
"""
import itertools

import networkx as nx
import numpy as np

from order.graph import Graph
from order.poset import Poset, close_relation


def brute_force_is_comparability(g: Graph) -> bool:
    """Try all 2^|E| orientations for a transitive one."""
    edges = g.edges()
    for flips in itertools.product((False, True), repeat=len(edges)):
        arcs = {(v, u) if flip else (u, v) for (u, v), flip in zip(edges, flips)}
        successors = {}
        for a, b in arcs:
            successors.setdefault(a, set()).add(b)
        if all((a, c) in arcs for a, b in arcs for c in successors.get(b, ())):
            return True
    return False


def brute_force_dimension(p: Poset) -> int:
    """Smallest number of linear extensions whose intersection is p."""
    extensions = list(nx.all_topological_sorts(p.to_networkx()))
    incomparable = [(x, y) for x in p.labels for y in p.labels if x != y and not p.comparable(x, y)]
    if not incomparable:
        return 1
    positions = [{label: i for i, label in enumerate(order)} for order in extensions]
    for k in range(2, len(extensions) + 1):
        for chosen in itertools.combinations(positions, k):
            if all(any(pos[x] > pos[y] for pos in chosen) for x, y in incomparable):
                return k
    return len(extensions)


def atlas_graphs(max_n):
    """Every graph up to isomorphism with 1 <= n <= max_n (max_n <= 7)."""
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_n:
            labels = [f'v{i}' for i in sorted(h.nodes)]
            yield Graph.from_edges(labels, [(f'v{u}', f'v{v}') for u, v in h.edges])


def random_graph(rng: np.random.Generator, n: int, density=0.5) -> Graph:
    upper = np.triu(rng.random((n, n)) < density, 1)
    return Graph([f'v{i}' for i in range(n)], upper | upper.T)


def random_poset(rng: np.random.Generator, n: int, density=0.35) -> Poset:
    """Close a random relation that goes forward in a random permutation."""
    forward = np.triu(rng.random((n, n)) < density, 1)
    perm = rng.permutation(n)
    return Poset([f'x{i}' for i in range(n)], close_relation(forward[np.ix_(perm, perm)]))
