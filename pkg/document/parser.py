import itertools
from typing import Dict, List, Tuple

from dimension.extensions import LinearOrder, Realizer
from document.document import BOXES, FAMILY, GRAPH, INTERVALS, KINDS, POSET, REALIZER, REPRESENTATION_KINDS, \
    STAR, Document
from order.graph import Graph
from order.poset import transitive_closure_build
from representation.families import BoxRep, IntervalRep, SetFamily, StarSubtreeRep
from utils.exceptions import ParseError

RECORD_TAGS = {GRAPH: ('e',), POSET: ('<', '>'), FAMILY: ('s',), INTERVALS: ('i',), BOXES: ('b',),
               STAR: ('t',), REALIZER: ('L',)}


def _tokenize(text: str) -> List[Tuple[int, List[str]]]:
    lines = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        # a comment starts at a token beginning with '#'; copy labels like a#2 stay whole
        tokens = list(itertools.takewhile(lambda t: not t.startswith('#'), tokens))
        if tokens:
            lines.append((line_no, tokens))
    return lines


def _integers(line_no, tokens):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(line_no, f'Expected integers, got {" ".join(tokens)!r}')


def _header(line_no, tokens):
    kind = tokens[0]
    if kind not in KINDS:
        raise ParseError(line_no, f'Unknown document kind {kind!r}')
    expected = 3 if kind == BOXES else 2
    if len(tokens) != expected:
        usage = 'boxes <n> <d>' if kind == BOXES else f'{kind} <n>'
        raise ParseError(line_no, f'Header must read {usage!r}')
    sizes = _integers(line_no, tokens[1:])
    if any(s < 0 for s in sizes) or (kind == BOXES and sizes[1] < 1):
        raise ParseError(line_no, 'Header sizes out of range')
    return kind, sizes[0], (sizes[1] if kind == BOXES else None)


class _Reader:
    """Collects vertex declarations and per-kind records for one document."""

    def __init__(self, kind, n, d, header_line):
        self.kind = kind
        self.n = n
        self.d = d
        self.header_line = header_line
        self.labels: List[str] = []
        self.records: List[Tuple[int, str, List[str]]] = []

    def declare(self, line_no, tokens):
        if len(tokens) != 2:
            raise ParseError(line_no, 'Vertex line must read "v <label>"')
        if tokens[1] in self.labels:
            raise ParseError(line_no, f'Vertex {tokens[1]!r} declared twice')
        self.labels.append(tokens[1])

    def add(self, line_no, tokens):
        tag = tokens[0]
        if tag == 'v':
            return self.declare(line_no, tokens)
        if tag not in RECORD_TAGS[self.kind]:
            raise ParseError(line_no, f'Line tag {tag!r} is not valid in a {self.kind} document')
        self.records.append((line_no, tag, tokens[1:]))

    def known(self, line_no, label):
        if label not in self.labels:
            raise ParseError(line_no, f'Unknown vertex {label!r}')
        return label

    def check_count(self):
        if len(self.labels) != self.n:
            raise ParseError(self.header_line, f'Header announces {self.n} vertices, found {len(self.labels)}')

    def keyed_records(self) -> Dict[str, Tuple[int, List[str]]]:
        """Representation records by label; undeclared documents take their order from the records."""
        declared = bool(self.labels)
        keyed = {}
        for line_no, _, tokens in self.records:
            if not tokens:
                raise ParseError(line_no, 'Record needs a vertex label')
            label = tokens[0]
            if declared:
                self.known(line_no, label)
            elif label not in self.labels:
                self.labels.append(label)
            if label in keyed:
                raise ParseError(line_no, f'Second record for vertex {label!r}')
            keyed[label] = (line_no, tokens[1:])
        self.check_count()
        for label in self.labels:
            if label not in keyed:
                raise ParseError(self.header_line, f'No record for vertex {label!r}')
        return keyed


def _pair(reader, line_no, tokens):
    if len(tokens) != 2:
        raise ParseError(line_no, 'Expected exactly two vertex labels')
    return reader.known(line_no, tokens[0]), reader.known(line_no, tokens[1])


def _graph(reader):
    reader.check_count()
    edges = [_pair(reader, line_no, tokens) for line_no, _, tokens in reader.records]
    for line_no, _, tokens in reader.records:
        if tokens[0] == tokens[1]:
            raise ParseError(line_no, f'Self-loop on {tokens[0]!r}')
    return Graph.from_edges(reader.labels, edges)


def _poset(reader):
    reader.check_count()
    pairs = []
    for line_no, tag, tokens in reader.records:
        x, y = _pair(reader, line_no, tokens)
        # "> x y" lists the arc x -> y, that is y < x
        pairs.append((x, y) if tag == '<' else (y, x))
    return transitive_closure_build(reader.labels, pairs)


def _family(reader):
    keyed = reader.keyed_records()
    sets = []
    for label in reader.labels:
        line_no, tokens = keyed[label]
        if not tokens:
            raise ParseError(line_no, f'Set of {label!r} must not be empty')
        sets.append(_integers(line_no, tokens))
    return SetFamily(reader.labels, sets)


def _intervals(reader):
    keyed = reader.keyed_records()
    intervals = []
    for label in reader.labels:
        line_no, tokens = keyed[label]
        if len(tokens) != 2:
            raise ParseError(line_no, 'Interval line must read "i <label> <l> <r>"')
        intervals.append(_integers(line_no, tokens))
    return IntervalRep(reader.labels, intervals)


def _boxes(reader):
    keyed = reader.keyed_records()
    boxes = []
    for label in reader.labels:
        line_no, tokens = keyed[label]
        if len(tokens) != 2 * reader.d:
            raise ParseError(line_no, f'Box line needs {2 * reader.d} endpoints, got {len(tokens)}')
        values = _integers(line_no, tokens)
        boxes.append([values[i:i + 2] for i in range(0, len(values), 2)])
    return BoxRep(reader.labels, boxes)


def _star(reader):
    keyed = reader.keyed_records()
    leaves = []
    for label in reader.labels:
        line_no, tokens = keyed[label]
        leaves.append(_integers(line_no, tokens))
    return StarSubtreeRep(reader.labels, leaves)


def _realizer(reader):
    reader.check_count()
    orders = []
    for line_no, _, tokens in reader.records:
        for label in tokens:
            reader.known(line_no, label)
        if sorted(tokens) != sorted(reader.labels):
            raise ParseError(line_no, 'Linear order must list every vertex exactly once')
        orders.append(LinearOrder(tokens))
    return Realizer(orders)


BUILDERS = {GRAPH: _graph, POSET: _poset, FAMILY: _family, INTERVALS: _intervals, BOXES: _boxes, STAR: _star,
            REALIZER: _realizer}


def parse_text(text: str) -> Document:
    lines = _tokenize(text)
    if not lines:
        raise ParseError(1, 'Empty document')
    header_line, header_tokens = lines[0]
    kind, n, d = _header(header_line, header_tokens)
    reader = _Reader(kind, n, d, header_line)
    for line_no, tokens in lines[1:]:
        reader.add(line_no, tokens)
    payload = BUILDERS[kind](reader)
    labels = reader.labels if kind == REALIZER else None
    return Document.of(kind, payload, labels)


def parse(path: str) -> Document:
    with open(path, 'rb') as f:
        data = f.read()
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        raise ParseError(data[:e.start].count(b'\n') + 1, f'Invalid UTF-8 byte 0x{data[e.start]:02x}')
    return parse_text(text)


def is_representation(doc: Document) -> bool:
    return doc.kind in REPRESENTATION_KINDS
