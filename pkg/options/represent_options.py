from representation.representation_factory import KINDS
from .base_options import BaseOptions


class RepresentOptions(BaseOptions):
    def __init__(self):
        super().__init__('Build a verified containment representation')

    def initialize(self):
        BaseOptions.initialize(self)
        self._parser.add_argument('structure', type=str, help='Path to a poset or graph document')
        self._parser.add_argument('--kind', type=str, default='box', choices=KINDS)
        self._parser.add_argument('--d', type=int, default=None,
                                  help='Box dimension, defaults to the smallest one that fits')
        self._parser.add_argument('--reduce', action='store_true',
                                  help='Build on the reduced poset and multiply the result back')
        self._parser.add_argument('--cap', type=int, default=20000,
                                  help='Maximum number of linear extensions to enumerate')
