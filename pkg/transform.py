import sys

from document.document import FAMILY, GRAPH, POSET, STAR
from document.document_factory import get_graph, get_representation, get_structure, load
from document.printer import print_payload
from options.transform_options import MODES, TransformOptions
from order.graph import Graph
from order.operations import complement
from order.reduction import EXPANSION, expand, multiply, reduce_graph, reduce_poset
from representation.builders import multiply_family
from representation.families import SetFamily, StarSubtreeRep
from representation.transforms import overlap_from_intersection
from utils.exceptions import ContainmentError, InvalidCount, InvariantViolation
from utils.misc import report_error


def parse_counts(tokens):
    """LABEL=COUNT tokens to a dict."""
    counts = {}
    for token in tokens:
        label, sep, count = token.rpartition('=')
        if not sep or not label:
            raise InvalidCount(f'Count must read LABEL=COUNT, got {token!r}')
        try:
            counts[label] = int(count)
        except ValueError:
            raise InvalidCount(f'Count for {label!r} is not an integer: {count!r}')
    return counts


def _as_family(representation):
    if isinstance(representation, StarSubtreeRep):
        return representation.as_family()
    if not isinstance(representation, SetFamily):
        raise InvariantViolation('Only set families and star subtrees can be transformed')
    return representation


def transform(args):
    mode = MODES[args.mode]
    if args.overlap_from_intersection:
        return overlap_from_intersection(_as_family(get_representation(args.overlap_from_intersection)))
    if args.complement:
        return complement(get_graph(args.complement))
    if args.reduce:
        structure = get_structure(args.reduce)
        return reduce_graph(structure, mode) if isinstance(structure, Graph) else reduce_poset(structure)

    counts = parse_counts(args.counts)
    payload = load(args.multiply, (GRAPH, POSET, FAMILY, STAR)).payload
    if isinstance(payload, Graph):
        return expand(payload, counts) if mode == EXPANSION else multiply(payload, counts)
    if isinstance(payload, (SetFamily, StarSubtreeRep)):
        return multiply_family(payload, counts)
    return multiply(payload, counts)


def main(argv=None):
    args = TransformOptions().parse(argv)
    try:
        result = transform(args)
    except (ContainmentError, OSError) as e:
        return report_error(e)

    print(print_payload(result), end='')
    return 0


if __name__ == "__main__":
    sys.exit(main())
