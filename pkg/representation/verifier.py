from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Union

import numpy as np

from order.graph import Graph
from order.poset import Poset
from representation.families import BoxRep, SetFamily, StarSubtreeRep
from utils.exceptions import InvariantViolation, MissingVertex

CONTAINMENT = 'containment'
INTERSECTION = 'intersection'
OVERLAP = 'overlap'
DISJOINTEDNESS = 'disjointedness'
SEMANTICS = (CONTAINMENT, INTERSECTION, OVERLAP, DISJOINTEDNESS)


@dataclass(frozen=True, order=True)
class Violation:
    pair: Tuple[str, str]
    expected: str
    observed: str

    def __str__(self):
        return f'{self.pair[0]} {self.pair[1]} expected={self.expected} observed={self.observed}'


@dataclass(frozen=True)
class Verdict:
    violations: Tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class InjectivityReport:
    injective: bool
    duplicate_groups: Tuple[Tuple[str, ...], ...]

    def __bool__(self):
        return self.injective


def _sets_for(structure, f: SetFamily):
    missing = [x for x in structure.labels if x not in f]
    if missing:
        raise MissingVertex(missing[0])
    return [f.set_of(x) for x in structure.labels]


def containment_matrix(structure, rep) -> np.ndarray:
    """c[i, j] iff the object of vertex i is strictly contained in that of vertex j."""
    if isinstance(rep, StarSubtreeRep):
        rep = rep.as_family()
    if isinstance(rep, BoxRep):
        missing = [x for x in structure.labels if x not in rep]
        if missing:
            raise MissingVertex(missing[0])
        order = rep.indices(structure.labels)
        return rep.containment_matrix()[np.ix_(order, order)]
    sets = _sets_for(structure, rep)
    return np.array([[s < t for t in sets] for s in sets], dtype=bool).reshape(len(sets), len(sets))


def _relation_name(c, i, j):
    if c[i, j]:
        return 'inside'
    if c[j, i]:
        return 'contains'
    return 'incomparable'


def _collect(labels, pairs, expected, observed, name_expected, name_observed):
    violations = [Violation((labels[i], labels[j]), name_expected(i, j), name_observed(i, j))
                  for i, j in pairs if expected[i, j] != observed[i, j]]
    return Verdict(tuple(sorted(violations, key=lambda v: (labels.index(v.pair[0]), labels.index(v.pair[1])))))


def _unordered_pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _adjacency_name(g):
    return lambda i, j: 'adjacent' if g.adj[i, j] else 'non-adjacent'


def verify_containment_graph(g: Graph, rep: Union[SetFamily, BoxRep, StarSubtreeRep]) -> Verdict:
    c = containment_matrix(g, rep)
    nested = c | c.T
    return _collect(g.labels, _unordered_pairs(g.n), g.adj, nested, _adjacency_name(g),
                    lambda i, j: _relation_name(c, i, j))


def verify_containment_poset(p: Poset, rep: Union[SetFamily, BoxRep, StarSubtreeRep]) -> Verdict:
    c = containment_matrix(p, rep)
    pairs = [(i, j) for i in range(p.n) for j in range(p.n) if i != j]
    return _collect(p.labels, pairs, p.lt, c, lambda i, j: 'less' if p.lt[i, j] else 'not-less',
                    lambda i, j: _relation_name(c, i, j))


def _set_relation(s, t):
    if s == t:
        return 'equal'
    if s < t:
        return 'inside'
    if t < s:
        return 'contains'
    return 'overlap' if s & t else 'disjoint'


def semantic_matrix(structure, f: SetFamily, semantics: str) -> np.ndarray:
    """m[i, j] iff the sets of vertices i != j are related under the given semantics."""
    if semantics == CONTAINMENT:
        c = containment_matrix(structure, f)
        return c | c.T
    sets = _sets_for(structure, f)
    n = len(sets)
    m = np.zeros((n, n), dtype=bool)
    for i, j in _unordered_pairs(n):
        s, t = sets[i], sets[j]
        if semantics == INTERSECTION:
            related = bool(s & t)
        elif semantics == OVERLAP:
            related = bool(s & t) and not s <= t and not t <= s
        elif semantics == DISJOINTEDNESS:
            related = not s & t
        else:
            raise ValueError(f'Semantics {semantics} not supported')
        m[i, j] = m[j, i] = related
    return m


def _verify_sets(g: Graph, f: SetFamily, semantics: str) -> Verdict:
    observed = semantic_matrix(g, f, semantics)
    sets = _sets_for(g, f)
    return _collect(g.labels, _unordered_pairs(g.n), g.adj, observed, _adjacency_name(g),
                    lambda i, j: _set_relation(sets[i], sets[j]))


def verify_intersection(g: Graph, f: SetFamily) -> Verdict:
    return _verify_sets(g, f, INTERSECTION)


def verify_overlap(g: Graph, f: SetFamily) -> Verdict:
    return _verify_sets(g, f, OVERLAP)


def verify_disjointedness(g: Graph, f: SetFamily) -> Verdict:
    return _verify_sets(g, f, DISJOINTEDNESS)


def injectivity_audit(rep) -> InjectivityReport:
    groups: Dict[object, List[str]] = {}
    for label, key in zip(rep.labels, rep.keys()):
        groups.setdefault(key, []).append(label)
    duplicates = tuple(tuple(group) for group in groups.values() if len(group) > 1)
    return InjectivityReport(not duplicates, duplicates)


def derive_containment_order(f: SetFamily) -> Poset:
    if isinstance(f, StarSubtreeRep):
        f = f.as_family()
    if isinstance(f, BoxRep):
        return Poset(f.labels, f.containment_matrix())
    return Poset(f.labels, containment_matrix(f, f))


def derive_graph(f: SetFamily, semantics: str = CONTAINMENT) -> Graph:
    if semantics not in SEMANTICS:
        raise InvariantViolation(f'Unknown semantics {semantics}')
    return Graph(f.labels, semantic_matrix(f, f, semantics))


def verify(structure, rep, semantics: str = CONTAINMENT) -> Verdict:
    """Dispatch on semantics; posets are only checked under containment."""
    if semantics == CONTAINMENT:
        if isinstance(structure, Poset):
            return verify_containment_poset(structure, rep)
        return verify_containment_graph(structure, rep)
    if isinstance(structure, Poset):
        raise InvariantViolation(f'{semantics} semantics apply to graphs, not posets')
    if isinstance(rep, StarSubtreeRep):
        rep = rep.as_family()
    if not isinstance(rep, SetFamily):
        raise InvariantViolation(f'{semantics} semantics need a set family')
    return _verify_sets(structure, rep, semantics)
