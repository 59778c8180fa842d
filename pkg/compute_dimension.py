import sys

from comparability.forcing import orientation_to_poset, transitive_orient
from dimension.bounds import hiraguchi_bound
from dimension.realizer_search import dimension
from document.document_factory import get_structure
from options.dimension_options import DimensionOptions
from order.graph import Graph
from utils.exceptions import BudgetExceeded, ContainmentError, NotComparability
from utils.misc import ceil_half, report_error


def main(argv=None):
    args = DimensionOptions().parse(argv)
    try:
        structure = get_structure(args.structure)
    except (ContainmentError, OSError) as e:
        return report_error(e)

    poset = structure
    if isinstance(structure, Graph):
        # every transitive orientation has the same dimension
        try:
            poset = orientation_to_poset(transitive_orient(structure))
        except NotComparability:
            print('NOT-COMPARABILITY')
            return 1

    try:
        result = dimension(poset, budget=args.budget, cap=args.cap)
    except BudgetExceeded as e:
        print(f'dimension-above-budget {e.lower} {e.upper}')
        return 1
    except ContainmentError as e:
        return report_error(e)

    print(f'dimension {result.k}')
    for order in result.realizer:
        print(f'L {order}')
    print(f'hiraguchi {hiraguchi_bound(poset.n)}')
    print(f'box-dimension {max(1, ceil_half(result.k))}')
    return 0


if __name__ == "__main__":
    sys.exit(main())
