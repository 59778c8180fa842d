from functools import partial

from representation.builders import box_representation, downset_representation, interval_representation, \
    poset_star_representation

KINDS = ['interval', 'box', 'star', 'downset']


def get_builder(kind: str, d=1, cap=20000):
    if kind == 'interval':
        return interval_representation
    elif kind == 'box':
        return partial(box_representation, d=d, cap=cap)
    elif kind == 'star':
        return poset_star_representation
    elif kind == 'downset':
        return downset_representation
    else:
        raise ValueError(f'Representation kind {kind} is not supported')
