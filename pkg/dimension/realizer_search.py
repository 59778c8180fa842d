from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from dimension.extensions import LinearOrder, Realizer, linear_extensions
from dimension.two_dimensional import is_two_dimensional
from order.poset import Poset
from utils.exceptions import BudgetExceeded, EmptyInput
from utils.misc import bits


@dataclass(frozen=True)
class DimensionResult:
    k: int
    realizer: Realizer


def critical_pairs(p: Poset) -> List[Tuple[str, str]]:
    """
    Incomparable (x, y) with everything below x below y and everything above y
    above x. Linear extensions realize p iff each such pair is reversed (y before x)
    by one of them.
    """
    le = p.lt | np.eye(p.n, dtype=bool)
    inc = p.incomparable()
    pairs = []
    for x in range(p.n):
        for y in range(p.n):
            if not inc[x, y]:
                continue
            down_ok = np.all(le[:, y][p.lt[:, x]])
            up_ok = np.all(le[x][p.lt[y]])
            if down_ok and up_ok:
                pairs.append((p.labels[x], p.labels[y]))
    return pairs


def _reversal_masks(extensions, pairs):
    masks = []
    for extension in extensions:
        ranks = extension.ranks()
        masks.append(bits(i for i, (x, y) in enumerate(pairs) if ranks[y] < ranks[x]))
    return masks


def greedy_cover(masks, universe) -> List[int]:
    chosen, covered = [], 0
    while covered != universe:
        best = max(range(len(masks)), key=lambda i: (bin(masks[i] & ~covered).count('1'), -i))
        chosen.append(best)
        covered |= masks[best]
    return sorted(chosen)


def exact_cover(masks, universe, k) -> Optional[List[int]]:
    """
    Lexicographically first index set of at most k masks covering universe.
    Indices are tried in increasing order; a branch is cut when the masks from the
    next index on cannot reach the uncovered bits, or when k - len(chosen) of the
    widest of them fall short of the uncovered count.
    """
    n = len(masks)
    reach = [0] * (n + 1)
    widest = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        reach[i] = reach[i + 1] | masks[i]
        widest[i] = max(widest[i + 1], bin(masks[i]).count('1'))

    def search(start, chosen, covered):
        if covered == universe:
            return chosen
        left = k - len(chosen)
        uncovered = universe & ~covered
        if left == 0 or start == n or uncovered & ~reach[start] or bin(uncovered).count('1') > left * widest[start]:
            return None
        for i in range(start, n):
            if uncovered & ~reach[i]:
                return None
            if masks[i] & uncovered:
                found = search(i + 1, chosen + [i], covered | masks[i])
                if found is not None:
                    return found
        return None

    return search(0, [], 0)


def dimension(p: Poset, budget: Optional[int] = None, cap: int = 20000) -> DimensionResult:
    """
    Exact dimension with a witness realizer. Chains are 1, the conjugate-order
    test settles 2, and anything else goes to the exact cover search over all
    linear extensions. Among minimum realizers the witness is the lexicographically
    first by extension index; the greedy cover only bounds the budget report.
    """
    if p.n == 0:
        raise EmptyInput('Dimension of the empty poset is not defined')
    if p.is_chain():
        order = np.argsort(p.lt.sum(axis=0), kind='stable')
        return DimensionResult(1, Realizer((LinearOrder(tuple(p.labels[i] for i in order)),)))

    if budget is not None and budget < 2:
        raise BudgetExceeded(2, p.n)
    two = is_two_dimensional(p)
    if two:
        return DimensionResult(2, two.realizer)

    extensions = linear_extensions(p, cap)
    pairs = critical_pairs(p)
    masks = _reversal_masks(extensions, pairs)
    universe = (1 << len(pairs)) - 1
    upper = greedy_cover(masks, universe)

    k = 3
    while True:
        if budget is not None and k > budget:
            raise BudgetExceeded(k, len(upper))
        chosen = exact_cover(masks, universe, k)
        if chosen is not None:
            return DimensionResult(len(chosen), Realizer(tuple(extensions[i] for i in sorted(chosen))))
        k += 1
