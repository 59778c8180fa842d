from typing import Dict, Sequence, Tuple

import numpy as np

from comparability.forcing import orientation_from_poset
from dimension.extensions import Realizer, realizer_embedding
from dimension.realizer_search import dimension
from dimension.two_dimensional import is_two_dimensional
from order.orientation import Orientation
from order.poset import Poset
from order.reduction import copy_labels
from representation.families import BoxRep, IntervalRep, SetFamily, StarSubtreeRep
from utils.exceptions import BudgetExceeded, DimensionTooHigh, InvalidD, MalformedBox, NotTransitive


def downset_representation(p: Poset) -> SetFamily:
    """S_k = {i : x_i <= x_k} over 1-based declaration indices."""
    le = p.lt | np.eye(p.n, dtype=bool)
    return SetFamily(p.labels, [(np.flatnonzero(le[:, k]) + 1).tolist() for k in range(p.n)], injective=True)


def star_subtree_representation(o: Orientation) -> StarSubtreeRep:
    """Vertex j gets the center, its own leaf j and every leaf i with i -> j, so T_i < T_j iff i -> j."""
    if not o.is_transitive():
        raise NotTransitive('Star subtrees need a transitive orientation')
    arcs = o.matrix
    return StarSubtreeRep(o.labels, [{j + 1} | set((np.flatnonzero(arcs[:, j]) + 1).tolist())
                                     for j in range(len(o.labels))])


def poset_star_representation(p: Poset) -> StarSubtreeRep:
    return star_subtree_representation(orientation_from_poset(p))


def embedding_to_boxes(labels: Sequence[str], points: Dict[str, Tuple[int, ...]]) -> BoxRep:
    """
    Boxes from a 2d-dimensional embedding with distinct coordinates per axis: axis k
    of x is [m - q(2k-1), m + q(2k)], m the largest coordinate, so x < y in the
    dominance order iff the box of x lies inside the box of y.
    """
    coords = np.array([points[x] for x in labels], dtype=np.int64)
    if coords.ndim != 2 or coords.shape[1] % 2:
        raise MalformedBox('Embedding needs an even number of coordinates')
    m = int(coords.max())
    left = m - coords[:, 0::2]
    right = m + coords[:, 1::2]
    return BoxRep(labels, np.stack([left, right], axis=2))


def realizer_boxes(p: Poset, r: Realizer, d: int) -> BoxRep:
    """Pair consecutive orders (L1, L2), (L3, L4), ... into axes, padding with the last order."""
    orders = list(r.orders)
    orders += [orders[-1]] * (2 * d - len(orders))
    points = realizer_embedding(Realizer(tuple(orders)))
    boxes = embedding_to_boxes(p.labels, points)
    if d == 1:
        return IntervalRep(p.labels, boxes.boxes[:, 0, :])
    return boxes


def interval_representation(p: Poset) -> IntervalRep:
    """x gets [n - rank1(x), n + rank2(x)] from a 2-realizer (L1, L2)."""
    two = is_two_dimensional(p)
    if not two:
        raise DimensionTooHigh(3, 2)
    return realizer_boxes(p, two.realizer, 1)


def box_representation(p: Poset, d: int, cap: int = 20000) -> BoxRep:
    if d < 1:
        raise InvalidD(f'Box dimension must be at least 1, got {d}')
    if d == 1:
        return interval_representation(p)
    try:
        result = dimension(p, budget=2 * d, cap=cap)
    except BudgetExceeded as e:
        raise DimensionTooHigh(e.lower, 2 * d)
    return realizer_boxes(p, result.realizer, d)


def boxes_to_embedding(b: BoxRep) -> Dict[str, Tuple[int, ...]]:
    """
    Point (a1, m - b1, ..., ad, m - bd) per box [a_k, b_k], m one above every right
    endpoint. Box x lies inside box y iff y's point is strictly below x's.
    """
    m = b.max_endpoint() + 1
    points = {}
    for label, box in zip(b.labels, b.boxes):
        points[label] = tuple(int(c) for a, r in box for c in (a, m - r))
    return points


def embedding_order(labels: Sequence[str], points: Dict[str, Tuple[int, ...]], reverse=False) -> Poset:
    """Strict dominance order of points; reverse=True reads boxes_to_embedding output as containment."""
    coords = np.array([points[x] for x in labels], dtype=np.int64)
    below = np.all(coords[:, None, :] < coords[None, :, :], axis=2)
    return Poset(labels, below.T if reverse else below)


def multiply_family(f, counts: Dict[str, int]) -> SetFamily:
    """Copies "v#k" of a vertex all share its set; the result is not injective."""
    if isinstance(f, StarSubtreeRep):
        f = f.as_family()
    labels, sets = [], []
    for label, s in zip(f.labels, f.sets):
        copies = copy_labels(label, counts.get(label, 1))
        labels += copies
        sets += [s] * len(copies)
    return SetFamily(labels, sets)
