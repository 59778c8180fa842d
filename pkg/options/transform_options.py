from order.reduction import EXPANSION, MULTIPLICATION
from .base_options import BaseOptions

MODES = {'mult': MULTIPLICATION, 'exp': EXPANSION}


class TransformOptions(BaseOptions):
    def __init__(self):
        super().__init__('Apply a structural transform and print the resulting document')

    def initialize(self):
        BaseOptions.initialize(self)
        action = self._parser.add_mutually_exclusive_group(required=True)
        action.add_argument('--overlap-from-intersection', dest='overlap_from_intersection', type=str,
                            metavar='FAMILY', help='Family whose intersection graph is to be realised by overlaps')
        action.add_argument('--complement', type=str, metavar='GRAPH', help='Graph to complement')
        action.add_argument('--reduce', type=str, metavar='STRUCTURE', help='Poset or graph to reduce')
        action.add_argument('--multiply', type=str, metavar='DOCUMENT',
                            help='Poset, graph or family whose vertices get copied')
        self._parser.add_argument('--mode', type=str, default='mult', choices=list(MODES),
                                  help='Graph equivalence used by --reduce and copy adjacency used by --multiply')
        self._parser.add_argument('--counts', type=str, nargs='*', default=[], metavar='LABEL=COUNT',
                                  help='Copy counts for --multiply, missing labels keep one copy')
