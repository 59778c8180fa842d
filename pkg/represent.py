import sys

from comparability.forcing import orientation_to_poset, transitive_orient
from dimension.realizer_search import dimension
from document.document_factory import get_structure
from document.printer import print_payload
from options.represent_options import RepresentOptions
from order.graph import Graph
from representation.representation_factory import get_builder
from utils.chain_operators import BuildOperator, OrientationOperator, ReductionOperator, VerificationOperator
from utils.exceptions import ContainmentError, DimensionTooHigh, NotComparability, RepresentationRejected
from utils.misc import ceil_half, report_error

REDUCIBLE_KINDS = ('star', 'downset')


def smallest_box_dimension(structure, cap):
    poset = orientation_to_poset(transitive_orient(structure)) if isinstance(structure, Graph) else structure
    return max(1, ceil_half(dimension(poset, cap=cap).k))


def build_representer(kind, d, cap, reduce=False):
    # NOTE: The operators below should be read from bottom up
    representer = BuildOperator(get_builder(kind, d=d, cap=cap))
    if reduce:
        representer = ReductionOperator(representer)
    representer = OrientationOperator(representer)
    return VerificationOperator(representer)


def main(argv=None):
    args = RepresentOptions().parse(argv)
    if args.reduce and args.kind not in REDUCIBLE_KINDS:
        return report_error(f'--reduce works with --kind {" or ".join(REDUCIBLE_KINDS)} only')
    try:
        structure = get_structure(args.structure)
    except (ContainmentError, OSError) as e:
        return report_error(e)

    try:
        d = args.d
        if d is None:
            d = smallest_box_dimension(structure, args.cap) if args.kind == 'box' else 1
        representation = build_representer(args.kind, d, args.cap, args.reduce)(structure)
    except NotComparability:
        print('NOT-COMPARABILITY', file=sys.stderr)
        return 1
    except (DimensionTooHigh, RepresentationRejected) as e:
        return report_error(e, code=1)
    except ContainmentError as e:
        return report_error(e)

    print(print_payload(representation), end='')
    return 0


if __name__ == "__main__":
    sys.exit(main())
