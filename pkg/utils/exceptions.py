class ContainmentError(Exception):
    pass


class UnknownVertex(ContainmentError):
    def __init__(self, label):
        super().__init__(f'Unknown vertex {label!r}')
        self.label = label


class MissingVertex(ContainmentError):
    def __init__(self, label):
        super().__init__(f'Representation assigns nothing to vertex {label!r}')
        self.label = label


class LabelMismatch(ContainmentError):
    pass


class InvalidCount(ContainmentError):
    pass


class InvariantViolation(ContainmentError):
    pass


class CycleDetected(ContainmentError):
    def __init__(self, cycle):
        super().__init__('Relation contains the cycle ' + ' < '.join(cycle + cycle[:1]))
        self.cycle = cycle


class NotComparability(ContainmentError):
    def __init__(self, certificate=None):
        super().__init__('Graph is not a comparability graph')
        self.certificate = certificate


class IsComparability(ContainmentError):
    pass


class CertificateNotFound(ContainmentError):
    pass


class NotTransitive(ContainmentError):
    pass


class NotNested(ContainmentError):
    pass


class CapExceeded(ContainmentError):
    def __init__(self, found, cap):
        super().__init__(f'More than {cap} items, stopped after {found}')
        self.found = found
        self.cap = cap


class BudgetExceeded(ContainmentError):
    def __init__(self, lower, upper):
        super().__init__(f'Dimension is between {lower} and {upper}, above the budget')
        self.lower = lower
        self.upper = upper


class EmptyInput(ContainmentError):
    pass


class DimensionTooHigh(ContainmentError):
    def __init__(self, dimension, limit):
        super().__init__(f'Dimension is at least {dimension}, which exceeds {limit}')
        self.dimension = dimension
        self.limit = limit


class InvalidD(ContainmentError):
    pass


class MalformedBox(ContainmentError):
    pass


class ParseError(ContainmentError):
    def __init__(self, line_no, message):
        super().__init__(f'line {line_no}: {message}')
        self.line_no = line_no


class RepresentationRejected(ContainmentError):
    def __init__(self, verdict):
        super().__init__(f'Representation failed verification with {len(verdict.violations)} violations')
        self.verdict = verdict
