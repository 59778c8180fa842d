from .base_options import BaseOptions


class RecognizeOptions(BaseOptions):
    def __init__(self):
        super().__init__('Decide whether a graph is a comparability graph')

    def initialize(self):
        BaseOptions.initialize(self)
        self._parser.add_argument('graph', type=str, help='Path to a graph document')
        self._parser.add_argument('--max_length', type=int, default=None,
                                  help='Longest odd cycle certificate to search for')
