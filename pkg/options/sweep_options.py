from .base_options import BaseOptions


class SweepOptions(BaseOptions):
    def __init__(self):
        super().__init__('Property sweeps over small graphs and posets against brute-force oracles')

    def initialize(self):
        BaseOptions.initialize(self)
        self._parser.add_argument('--checks', type=str, nargs='*', default=None,
                                  help='Subset of checks to run, all by default')
        self._parser.add_argument('--max_n', type=int, default=6, help='Largest exhaustive size')
        self._parser.add_argument('--n_random', type=int, default=200, help='Random cases per sampled check')
        self._parser.add_argument('--cap', type=int, default=20000,
                                  help='Maximum number of linear extensions to enumerate')
        self._parser.add_argument('--orientation_cap', type=int, default=64,
                                  help='Maximum number of transitive orientations to enumerate')
        self._parser.add_argument('--seed', type=int, default=0)
        self._parser.add_argument('--group', type=str, default='acceptance', help='Wandb group')
        self._parser.add_argument('--name', type=str, default='sweep', help='Wandb run name prefix')
        self._parser.add_argument('--wb_mode', type=str, default='disabled', help='Wandb sync mode')
        self._parser.add_argument('--wb_entity', type=str, default=None, help='Wandb entity name')
        self._parser.add_argument('--wb_project', type=str, default='containment-orders', help='Wandb project')
