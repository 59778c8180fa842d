import sys

from comparability.certificate import find_odd_cycle_certificate
from comparability.forcing import transitive_orient
from document.document_factory import get_graph
from options.recognize_options import RecognizeOptions
from utils.exceptions import CertificateNotFound, ContainmentError, NotComparability
from utils.misc import report_error


def main(argv=None):
    args = RecognizeOptions().parse(argv)
    try:
        g = get_graph(args.graph)
    except (ContainmentError, OSError) as e:
        return report_error(e)

    try:
        orientation = transitive_orient(g)
    except NotComparability:
        print('NOT-COMPARABILITY')
        try:
            print(f'c {find_odd_cycle_certificate(g, args.max_length)}')
        except CertificateNotFound as e:
            report_error(e)
        return 1

    print('COMPARABILITY')
    for greater, lesser in orientation.arcs():
        print(f'> {greater} {lesser}')
    return 0


if __name__ == "__main__":
    sys.exit(main())
