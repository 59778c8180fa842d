from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from order.operations import poset_intersection
from order.poset import Poset
from utils.exceptions import CapExceeded, LabelMismatch


@dataclass(frozen=True)
class LinearOrder:
    """A permutation of the labels; position is rank, first is lowest."""
    order: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, 'order', tuple(self.order))

    def rank(self, label) -> int:
        """1-based rank."""
        return self.ranks()[label]

    def ranks(self) -> Dict[str, int]:
        return {label: i + 1 for i, label in enumerate(self.order)}

    def to_poset(self, labels: Sequence[str] = None) -> Poset:
        labels = list(self.order) if labels is None else list(labels)
        if sorted(labels) != sorted(self.order):
            raise LabelMismatch('Linear order is not a permutation of the labels')
        ranks = self.ranks()
        position = np.array([ranks[x] for x in labels])
        return Poset(labels, position[:, None] < position[None, :])

    def extends(self, p: Poset) -> bool:
        ranks = self.ranks()
        return all(ranks[x] < ranks[y] for x, y in p.relations())

    def __str__(self):
        return ' '.join(self.order)


@dataclass(frozen=True)
class Realizer:
    orders: Tuple[LinearOrder, ...]

    def __post_init__(self):
        object.__setattr__(self, 'orders', tuple(self.orders))

    def __len__(self):
        return len(self.orders)

    def __iter__(self):
        return iter(self.orders)


def iter_linear_extensions(p: Poset) -> Iterator[LinearOrder]:
    """Linear extensions in lexicographic order of declaration indices."""
    n = p.n
    preds = p.lt.sum(axis=0).astype(int)
    placed = np.zeros(n, dtype=bool)
    prefix = []

    def backtrack():
        if len(prefix) == n:
            yield LinearOrder(tuple(p.labels[i] for i in prefix))
            return
        for i in range(n):
            if placed[i] or preds[i] > 0:
                continue
            placed[i] = True
            prefix.append(i)
            preds[p.lt[i]] -= 1
            yield from backtrack()
            preds[p.lt[i]] += 1
            prefix.pop()
            placed[i] = False

    yield from backtrack()


def linear_extensions(p: Poset, cap: int = 20000) -> List[LinearOrder]:
    result = []
    for extension in iter_linear_extensions(p):
        if len(result) >= cap:
            raise CapExceeded(len(result), cap)
        result.append(extension)
    return result


def verify_realizer(p: Poset, r: Realizer) -> bool:
    """Every member extends p and the members intersect to exactly p."""
    for member in r:
        if sorted(member.order) != sorted(p.labels):
            raise LabelMismatch('Realizer member is not a permutation of the poset labels')
    if len(r) == 0:
        return False
    if not all(member.extends(p) for member in r):
        return False
    return poset_intersection([member.to_poset(p.labels) for member in r]) == p


def realizer_embedding(r: Realizer) -> Dict[str, Tuple[int, ...]]:
    """Rank vectors; x < y in the realized poset iff x's vector is below y's in every coordinate."""
    ranks = [member.ranks() for member in r]
    return {label: tuple(rank[label] for rank in ranks) for label in r.orders[0].order}
