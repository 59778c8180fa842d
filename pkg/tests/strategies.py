import hypothesis.strategies as st
import numpy as np

from order.graph import Graph
from order.poset import Poset, close_relation
from representation.families import SetFamily


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    labels = [f'v{i}' for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    adj = np.zeros((n, n), dtype=bool)
    for (i, j), keep in zip(pairs, chosen):
        adj[i, j] = adj[j, i] = keep
    return Graph(labels, adj)


@st.composite
def posets(draw, min_n=1, max_n=6):
    """Closure of a random relation that only points forward in a random permutation."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    perm = draw(st.permutations(range(n)))
    relation = np.zeros((n, n), dtype=bool)
    for a in range(n):
        for b in range(a + 1, n):
            if draw(st.booleans()):
                relation[perm[a], perm[b]] = True
    return Poset([f'x{i}' for i in range(n)], close_relation(relation))


def atom_sets(n, max_atom=4):
    return st.lists(st.frozensets(st.integers(min_value=1, max_value=max_atom), min_size=1), min_size=n, max_size=n)


@st.composite
def graph_and_family(draw, max_n=5, max_atom=4):
    g = draw(graphs(max_n=max_n))
    return g, SetFamily(g.labels, draw(atom_sets(g.n, max_atom)))
