from representation.verifier import CONTAINMENT, SEMANTICS
from .base_options import BaseOptions


class VerifyOptions(BaseOptions):
    def __init__(self):
        super().__init__('Check a representation against a graph or poset')

    def initialize(self):
        BaseOptions.initialize(self)
        self._parser.add_argument('structure', type=str, help='Path to a poset or graph document')
        self._parser.add_argument('representation', type=str, help='Path to a representation document')
        self._parser.add_argument('--semantics', type=str, default=CONTAINMENT, choices=SEMANTICS)
        self._parser.add_argument('--injective', action='store_true', help='Also audit injectivity')
