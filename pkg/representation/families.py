from typing import Dict, FrozenSet, Iterable, Sequence, Tuple

import numpy as np

from order.graph import Labelled
from utils.exceptions import InvariantViolation, MalformedBox


class SetFamily(Labelled):
    """
    Vertex-indexed nonempty sets of integer atoms. An injective family assigns
    pairwise distinct sets. Equality compares the assignment, not the flag.
    """

    def __init__(self, labels: Sequence[str], sets: Iterable[Iterable[int]], injective=False):
        super().__init__(labels)
        self._sets = tuple(frozenset(int(a) for a in s) for s in sets)
        if len(self._sets) != self.n:
            raise InvariantViolation(f'{self.n} labels but {len(self._sets)} sets')
        for label, s in zip(self._labels, self._sets):
            if not s:
                raise InvariantViolation(f'Set of {label!r} is empty')
        self._injective = bool(injective)
        if self._injective and len(set(self._sets)) != self.n:
            raise InvariantViolation('Injective family assigns the same set twice')

    @classmethod
    def from_mapping(cls, mapping: Dict[str, Iterable[int]], injective=False):
        return cls(list(mapping), list(mapping.values()), injective=injective)

    @property
    def sets(self) -> Tuple[FrozenSet[int], ...]:
        return self._sets

    @property
    def injective(self):
        return self._injective

    def set_of(self, label) -> FrozenSet[int]:
        return self._sets[self.index(label)]

    def atoms(self) -> FrozenSet[int]:
        return frozenset().union(*self._sets)

    def restrict(self, labels):
        return SetFamily(labels, [self.set_of(x) for x in labels], injective=self._injective)

    def keys(self):
        return self._sets

    def __eq__(self, other):
        return isinstance(other, SetFamily) and self._labels == other.labels and self._sets == other.sets

    def __hash__(self):
        return hash((self._labels, self._sets))

    def __repr__(self):
        body = ', '.join(f'{x}: {sorted(s)}' for x, s in zip(self._labels, self._sets))
        return f'SetFamily({body})'


class BoxRep(Labelled):
    """
    Per-vertex boxes: d integer intervals [l, r] with l < r. On every axis all left
    endpoints are distinct and all right endpoints are distinct, so containment
    between two boxes is always strict or absent.
    """

    def __init__(self, labels: Sequence[str], boxes):
        super().__init__(labels)
        boxes = np.asarray(boxes, dtype=np.int64)
        if boxes.ndim != 3 or boxes.shape[0] != self.n or boxes.shape[2] != 2:
            raise MalformedBox(f'Expected an array of shape ({self.n}, d, 2), got {boxes.shape}')
        if boxes.shape[1] < 1:
            raise MalformedBox('Boxes need at least one axis')
        if np.any(boxes[:, :, 0] >= boxes[:, :, 1]):
            raise MalformedBox('Every interval needs l < r')
        for axis in range(boxes.shape[1]):
            for side in (0, 1):
                if len(np.unique(boxes[:, axis, side])) != self.n:
                    raise MalformedBox(f'Repeated endpoint on axis {axis + 1}')
        boxes.setflags(write=False)
        self._boxes = boxes

    @property
    def d(self):
        return self._boxes.shape[1]

    @property
    def boxes(self):
        return self._boxes

    def box_of(self, label):
        return [tuple(int(e) for e in interval) for interval in self._boxes[self.index(label)]]

    def max_endpoint(self):
        return int(self._boxes.max()) if self.n else 0

    def containment_matrix(self):
        """c[i, j] iff box i lies strictly inside box j."""
        left, right = self._boxes[:, :, 0], self._boxes[:, :, 1]
        inside = (left[:, None, :] > left[None, :, :]) & (right[:, None, :] < right[None, :, :])
        return np.all(inside, axis=2)

    def keys(self):
        return [tuple(map(tuple, box.tolist())) for box in self._boxes]

    def __eq__(self, other):
        return isinstance(other, BoxRep) and type(self) is type(other) and \
            self._labels == other.labels and np.array_equal(self._boxes, other.boxes)

    def __hash__(self):
        return hash((self._labels, self._boxes.tobytes()))

    def __repr__(self):
        body = ', '.join(f'{x}: {self.box_of(x)}' for x in self._labels)
        return f'{type(self).__name__}({body})'


class IntervalRep(BoxRep):
    def __init__(self, labels: Sequence[str], intervals):
        intervals = np.asarray(intervals, dtype=np.int64)
        super().__init__(labels, intervals.reshape(len(labels), 1, 2) if intervals.size else
                         np.zeros((len(labels), 1, 2), dtype=np.int64))

    def interval_of(self, label):
        return self.box_of(label)[0]


class StarSubtreeRep(Labelled):
    """
    Subtrees of a star with center 0 and leaves 1..n. Vertex k (1-based, in label
    order) gets the subtree {0} + leaves[k], and leaves[k] contains k.
    """

    CENTER = 0

    def __init__(self, labels: Sequence[str], leaves: Iterable[Iterable[int]]):
        super().__init__(labels)
        self._leaves = tuple(frozenset(int(x) for x in s) for s in leaves)
        if len(self._leaves) != self.n:
            raise InvariantViolation(f'{self.n} labels but {len(self._leaves)} leaf sets')
        for k, leaf_set in enumerate(self._leaves, start=1):
            if k not in leaf_set:
                raise InvariantViolation(f'Subtree of {self._labels[k - 1]!r} misses its own leaf {k}')
            if any(x < 1 or x > self.n for x in leaf_set):
                raise InvariantViolation(f'Leaves must lie in 1..{self.n}')

    @property
    def leaves(self):
        return self._leaves

    def subtree(self, label) -> FrozenSet[int]:
        return self._leaves[self.index(label)] | {self.CENTER}

    def as_family(self) -> SetFamily:
        return SetFamily(self._labels, [s | {self.CENTER} for s in self._leaves], injective=True)

    def keys(self):
        return self._leaves

    def __eq__(self, other):
        return isinstance(other, StarSubtreeRep) and self._labels == other.labels and self._leaves == other.leaves

    def __hash__(self):
        return hash((self._labels, self._leaves))

    def __repr__(self):
        body = ', '.join(f'{x}: {sorted(self.subtree(x))}' for x in self._labels)
        return f'StarSubtreeRep({body})'
