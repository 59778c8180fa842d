import argparse
import sys


class BaseOptions:
    def __init__(self, description=None):
        self._parser = argparse.ArgumentParser(description=description)
        self._initialized = False
        self._opt = None

    def initialize(self):
        self._parser.add_argument('--verbose', action='store_true', help='Echo the parsed options to stderr')

        self._initialized = True

    def parse(self, argv=None):
        if not self._initialized:
            self.initialize()
        self._opt = self._parser.parse_args(argv)

        if self._opt.verbose:
            self._print(vars(self._opt))

        return self._opt

    @staticmethod
    def _print(args):
        # stdout is reserved for the canonical result
        print('------------ Options -------------', file=sys.stderr)
        for k, v in sorted(args.items()):
            print('%s: %s' % (str(k), str(v)), file=sys.stderr)
        print('-------------- End ----------------', file=sys.stderr)
