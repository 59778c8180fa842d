import numpy as np

from dimension.extensions import Realizer
from document.document import BOXES, FAMILY, GRAPH, INTERVALS, POSET, REALIZER, STAR, Document
from order.graph import Graph
from order.poset import Poset
from representation.families import BoxRep, IntervalRep, SetFamily, StarSubtreeRep


def cover_relations(p: Poset):
    """Pairs x < y with nothing strictly between, row-major in declaration order."""
    lt = p.lt.astype(np.int64)
    covers = p.lt & ~((lt @ lt) > 0)
    rows, cols = np.nonzero(covers)
    return [(p.labels[i], p.labels[j]) for i, j in zip(rows, cols)]


def kind_of(payload) -> str:
    if isinstance(payload, Graph):
        return GRAPH
    if isinstance(payload, Poset):
        return POSET
    if isinstance(payload, SetFamily):
        return FAMILY
    if isinstance(payload, IntervalRep):
        return INTERVALS
    if isinstance(payload, BoxRep):
        return BOXES
    if isinstance(payload, StarSubtreeRep):
        return STAR
    if isinstance(payload, Realizer):
        return REALIZER
    raise TypeError(f'No document kind for {type(payload).__name__}')


def _numbers(values):
    return ' '.join(str(v) for v in values)


def _body(kind, payload):
    if kind == GRAPH:
        return [f'e {u} {v}' for u, v in payload.edges()]
    if kind == POSET:
        return [f'< {x} {y}' for x, y in cover_relations(payload)]
    if kind == FAMILY:
        return [f's {x} {_numbers(sorted(s))}' for x, s in zip(payload.labels, payload.sets)]
    if kind == INTERVALS:
        return [f'i {x} {_numbers(payload.interval_of(x))}' for x in payload.labels]
    if kind == BOXES:
        return [f'b {x} {_numbers(e for interval in payload.box_of(x) for e in interval)}' for x in payload.labels]
    if kind == STAR:
        return [f't {x} {_numbers(sorted(leaves))}' for x, leaves in zip(payload.labels, payload.leaves)]
    return [f'L {order}' for order in payload]


def print_document(doc: Document) -> str:
    header = f'{doc.kind} {len(doc.labels)}'
    if doc.kind == BOXES:
        header += f' {doc.payload.d}'
    lines = [header] + [f'v {x}' for x in doc.labels] + _body(doc.kind, doc.payload)
    return '\n'.join(lines) + '\n'


def to_document(payload, labels=None) -> Document:
    return Document.of(kind_of(payload), payload, labels)


def print_payload(payload, labels=None) -> str:
    return print_document(to_document(payload, labels))
