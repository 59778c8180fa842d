from .base_options import BaseOptions


class DimensionOptions(BaseOptions):
    def __init__(self):
        super().__init__('Exact dimension of a poset or of a comparability graph')

    def initialize(self):
        BaseOptions.initialize(self)
        self._parser.add_argument('structure', type=str, help='Path to a poset or graph document')
        self._parser.add_argument('--budget', type=int, default=None, help='Give up above this dimension')
        self._parser.add_argument('--cap', type=int, default=20000,
                                  help='Maximum number of linear extensions to enumerate')
