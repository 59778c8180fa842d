import math
from dataclasses import dataclass
from typing import List, Optional

from comparability.forcing import all_transitive_orientations, orientation_to_poset, transitive_orient
from dimension.realizer_search import dimension
from order.graph import Graph
from order.orientation import Orientation
from utils.exceptions import EmptyInput
from utils.misc import ceil_half


def hiraguchi_bound(n: int) -> int:
    """ceil(n / 2), an upper bound on the dimension of any poset with n >= 4 elements."""
    if n < 1:
        raise EmptyInput('Bound needs at least one element')
    return ceil_half(n)


def graph_dimension(g: Graph, budget: Optional[int] = None, cap: int = 20000) -> int:
    """Dimension of one transitive orientation, which every other orientation shares."""
    return dimension(orientation_to_poset(transitive_orient(g)), budget=budget, cap=cap).k


def box_dimension(g: Graph, budget: Optional[int] = None, cap: int = 20000) -> int:
    """Least d such that g is a containment graph of boxes in d-space."""
    return max(1, ceil_half(graph_dimension(g, budget=budget, cap=cap)))


def box_dimension_bound(n: int) -> int:
    return max(1, math.ceil(n / 4))


@dataclass(frozen=True)
class OrientationReport:
    orientation: Orientation
    dimension: int
    representable: bool


def every_orientation_box_representable(g: Graph, d: int, orientation_cap: int = 64,
                                        cap: int = 20000) -> List[OrientationReport]:
    """Per transitive orientation: its dimension and whether it fits boxes in d-space."""
    reports = []
    for orientation in all_transitive_orientations(g, orientation_cap):
        k = dimension(orientation_to_poset(orientation), cap=cap).k
        reports.append(OrientationReport(orientation, k, k <= 2 * d))
    return reports
