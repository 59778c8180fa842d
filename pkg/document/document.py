from dataclasses import dataclass
from typing import Any, Tuple

GRAPH = 'graph'
POSET = 'poset'
FAMILY = 'family'
INTERVALS = 'intervals'
BOXES = 'boxes'
STAR = 'star'
REALIZER = 'realizer'
KINDS = (GRAPH, POSET, FAMILY, INTERVALS, BOXES, STAR, REALIZER)
REPRESENTATION_KINDS = (FAMILY, INTERVALS, BOXES, STAR)


@dataclass(frozen=True)
class Document:
    """
    Parsed file: kind tag, payload object (Graph, Poset, SetFamily, IntervalRep,
    BoxRep, StarSubtreeRep or Realizer) and the declared vertex order.
    """
    kind: str
    payload: Any
    labels: Tuple[str, ...]

    @classmethod
    def of(cls, kind, payload, labels=None):
        if labels is None:
            # a realizer carries no declaration order of its own; use its first order
            labels = payload.orders[0].order if kind == REALIZER and len(payload) else getattr(payload, 'labels', ())
        return cls(kind, payload, tuple(labels))
