from document.document import GRAPH, POSET, REALIZER, REPRESENTATION_KINDS
from document.parser import parse
from utils.exceptions import InvariantViolation


def load(path: str, kinds):
    """Parse a file and require one of the given document kinds."""
    doc = parse(path)
    if doc.kind not in kinds:
        raise InvariantViolation(f'{path} holds a {doc.kind} document, expected one of {", ".join(kinds)}')
    return doc


def get_structure(path: str):
    return load(path, (GRAPH, POSET)).payload


def get_graph(path: str):
    return load(path, (GRAPH,)).payload


def get_representation(path: str):
    return load(path, REPRESENTATION_KINDS).payload


def get_realizer(path: str):
    return load(path, (REALIZER,)).payload
