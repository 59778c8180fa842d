import sys
import time

import numpy as np
import tqdm

from comparability.certificate import find_odd_cycle_certificate, validate_certificate
from comparability.forcing import all_transitive_orientations, is_comparability, orientation_to_poset, \
    transitive_orient
from dimension.bounds import box_dimension, box_dimension_bound, hiraguchi_bound
from dimension.realizer_search import dimension
from dimension.two_dimensional import is_two_dimensional
from options.sweep_options import SweepOptions
from order.operations import complement, is_induced_subposet
from order.poset import Poset
from order.reduction import multiply, origin_of, reduce_poset
from representation.builders import box_representation, boxes_to_embedding, downset_representation, \
    embedding_order, poset_star_representation
from representation.families import SetFamily
from representation.transforms import composition_sequence, overlap_from_intersection
from representation.verifier import verify, verify_disjointedness, verify_intersection, verify_overlap
from utils import wb_utils
from utils.misc import ceil_half, display_terminal
from utils.oracles import atlas_graphs, brute_force_dimension, brute_force_is_comparability, random_graph, \
    random_poset


def _comparability_graphs(max_n):
    return [g for g in atlas_graphs(max_n) if is_comparability(g)]


def check_oracle_agreement(args, rng):
    cases = list(atlas_graphs(args.max_n)) + [random_graph(rng, 7) for _ in range(args.n_random // 10)]
    return cases, lambda g: is_comparability(g) == brute_force_is_comparability(g)


def check_certificates(args, rng):
    cases = [g for g in atlas_graphs(args.max_n + 1) if not is_comparability(g)]
    return cases, lambda g: validate_certificate(g, find_odd_cycle_certificate(g))


def check_dimension_invariance(args, rng):
    def same_dimension(g):
        orientations = all_transitive_orientations(g, args.orientation_cap, truncate=True)
        return len({dimension(orientation_to_poset(o), cap=args.cap).k for o in orientations}) == 1

    return _comparability_graphs(args.max_n), same_dimension


def check_fast_path(args, rng):
    cases = [random_poset(rng, int(rng.integers(1, 8))) for _ in range(args.n_random)]

    def agrees(p):
        k = dimension(p, cap=args.cap).k
        if p.n <= 5 and k != brute_force_dimension(p):
            return False
        return bool(is_two_dimensional(p)) == (k <= 2)

    return cases, agrees


def check_box_round_trip(args, rng):
    cases = [random_poset(rng, int(rng.integers(1, 8))) for _ in range(args.n_random)]

    def round_trip(p):
        d = max(1, ceil_half(dimension(p, cap=args.cap).k))
        boxes = box_representation(p, d, cap=args.cap)
        return verify(p, boxes).ok and embedding_order(p.labels, boxes_to_embedding(boxes), reverse=True) == p

    return cases, round_trip


def check_subtree_cycle(args, rng):
    def both_verify(g):
        p = orientation_to_poset(transitive_orient(g))
        return verify(g, poset_star_representation(p)).ok and verify(g, downset_representation(p)).ok

    return _comparability_graphs(args.max_n), both_verify


def check_bounds(args, rng):
    cases = [random_poset(rng, int(rng.integers(4, 7))) for _ in range(args.n_random)]
    cases += _comparability_graphs(args.max_n)

    def within(structure):
        if isinstance(structure, Poset):
            return dimension(structure, cap=args.cap).k <= hiraguchi_bound(structure.n)
        return box_dimension(structure, cap=args.cap) <= box_dimension_bound(structure.n)

    return cases, within


def _random_family(rng, n, atoms=4):
    sets = []
    for _ in range(n):
        chosen = rng.random(atoms) < 0.5
        chosen[rng.integers(atoms)] = True
        sets.append((np.flatnonzero(chosen) + 1).tolist())
    return SetFamily([f'v{i}' for i in range(n)], sets)


def check_duality(args, rng):
    cases = []
    for _ in range(args.n_random):
        n = int(rng.integers(1, 6))
        cases.append((random_graph(rng, n), _random_family(rng, n)))

    def preserved(case):
        g, f = case
        disjoint = verify_disjointedness(g, f).ok == verify_intersection(complement(g), f).ok
        overlap = verify_intersection(g, f).ok == verify_overlap(g, overlap_from_intersection(f)).ok
        return disjoint and overlap

    return cases, preserved


def check_transforms(args, rng):
    cases = [random_poset(rng, int(rng.integers(1, 8))) for _ in range(args.n_random)]

    def consistent(p):
        counts = {x: int(rng.integers(1, 4)) for x in p.labels}
        reduced, again = reduce_poset(p), reduce_poset(multiply(p, counts))
        if [origin_of(x) for x in again.labels] != list(reduced.labels) or not np.array_equal(again.lt, reduced.lt):
            return False
        sequence = composition_sequence(downset_representation(p), min(p.n, 4))
        return all(is_induced_subposet(a, b) for a, b in zip(sequence, sequence[1:]))

    return cases, consistent


CHECKS = {
    'oracle_agreement': check_oracle_agreement,
    'certificates': check_certificates,
    'dimension_invariance': check_dimension_invariance,
    'fast_path': check_fast_path,
    'box_round_trip': check_box_round_trip,
    'subtree_cycle': check_subtree_cycle,
    'bounds': check_bounds,
    'duality': check_duality,
    'transforms': check_transforms,
}


def run_check(name, args, rng):
    cases, prop = CHECKS[name](args, rng)
    failures = [case for case in tqdm.tqdm(cases, desc=name) if not prop(case)]
    wb_utils.log_check(name, len(cases), failures)
    return len(cases), failures


def main(argv=None):
    args = SweepOptions().parse(argv)
    names = args.checks or list(CHECKS)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        print(f'error: unknown checks {", ".join(unknown)}', file=sys.stderr)
        return 2

    rng = np.random.default_rng(args.seed)
    run = wb_utils.init_run(args, 'acceptance')
    all_passed = True
    for name in names:
        start_time = time.time()
        checked, failures = run_check(name, args, rng)
        all_passed = all_passed and not failures
        print(display_terminal(start_time, name, {'checked': checked, 'failed': len(failures)}))
    run.finish()
    return 0 if all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
