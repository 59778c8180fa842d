import math
import sys
import time


def ceil_half(n):
    return math.ceil(n / 2)


def bits(indices):
    """Bitmask with the given bit positions set."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def display_terminal(start_time, name, report):
    t = (time.time() - start_time)
    output = "{}\tTime {:.2f}\t".format(name, t)
    for key in report:
        output += '{} {}\t'.format(key, report[key])
    return output


def add_items_to_group(items, groups):
    """
    Add list of items to groups,
    If there are no groups that match with the items, create a new group and put those item in this new group
    If there is only one matching group, add all these items to this group
    If there is more than one matching group, add all these items to the first group, then move items from
                other matching groups to this first group
    """
    reference_group = {}
    for g_id, group in enumerate(groups):
        for item in items:
            if item in group and g_id not in reference_group:
                reference_group[g_id] = group

    if len(reference_group) > 0:
        reference_ids = list(reference_group.keys())
        for item in items:
            reference_group[reference_ids[0]].add(item)
        for g_id in reference_ids[1:]:
            reference_group[reference_ids[0]].update(reference_group[g_id])
        # delete from the back so earlier indices stay valid
        for g_id in reversed(reference_ids[1:]):
            del groups[g_id]
    else:
        groups.append(set(items))


def report_error(error, code=2):
    print(f'error: {error}', file=sys.stderr)
    return code
