import sys

from document.document_factory import get_representation, get_structure
from options.verify_options import VerifyOptions
from representation.verifier import injectivity_audit, verify
from utils.exceptions import ContainmentError
from utils.misc import report_error


def main(argv=None):
    args = VerifyOptions().parse(argv)
    try:
        structure = get_structure(args.structure)
        representation = get_representation(args.representation)
        verdict = verify(structure, representation, args.semantics)
    except (ContainmentError, OSError) as e:
        return report_error(e)

    if verdict.ok:
        print('OK')
    else:
        print(f'VIOLATIONS {len(verdict.violations)}')
        for violation in verdict.violations:
            print(f'! {violation}')

    injective = True
    if args.injective:
        report = injectivity_audit(representation)
        injective = report.injective
        print('INJECTIVE' if injective else 'NOT-INJECTIVE')
        for group in report.duplicate_groups:
            print(f'= {" ".join(group)}')

    return 0 if verdict.ok and injective else 1


if __name__ == "__main__":
    sys.exit(main())
