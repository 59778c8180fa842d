import pytest
from hypothesis import given, settings, strategies as st

from comparability.forcing import is_comparability, orientation_to_poset, transitive_orient
from dimension.extensions import realizer_embedding
from dimension.realizer_search import dimension
from order.graph import Graph
from order.operations import complement, is_induced_subposet, poset_intersection
from order.orientation import Orientation
from order.poset import Poset, transitive_closure_build
from order.reduction import multiply
from representation.builders import box_representation, boxes_to_embedding, downset_representation, \
    embedding_order, embedding_to_boxes, interval_representation, multiply_family, poset_star_representation, \
    star_subtree_representation
from representation.families import BoxRep, IntervalRep, SetFamily, StarSubtreeRep
from representation.representation_factory import get_builder
from representation.transforms import composition_family, composition_poset, composition_sequence, \
    disjointedness_complement, overlap_from_intersection
from representation.verifier import injectivity_audit, verify, verify_disjointedness, verify_intersection, \
    verify_overlap
from tests.conftest import chain, load_fixture
from tests.strategies import graph_and_family, graphs, posets
from utils.exceptions import DimensionTooHigh, InvalidCount, InvalidD, InvariantViolation, MalformedBox, \
    NotNested, NotTransitive
from utils.misc import ceil_half


def sets_of(family):
    return [sorted(s) for s in family.sets]


class TestFamilies:
    def test_empty_set_rejected(self):
        with pytest.raises(InvariantViolation):
            SetFamily(['a'], [[]])

    def test_injective_flag_checked(self):
        with pytest.raises(InvariantViolation):
            SetFamily(['a', 'b'], [[1], [1]], injective=True)

    def test_interval_needs_left_below_right(self):
        with pytest.raises(MalformedBox):
            IntervalRep(['a'], [[3, 3]])

    def test_repeated_endpoint(self):
        with pytest.raises(MalformedBox):
            IntervalRep(['a', 'b'], [[1, 4], [1, 5]])

    def test_star_subtree_must_hold_own_leaf(self):
        with pytest.raises(InvariantViolation):
            StarSubtreeRep(['a', 'b'], [[2], [2]])


class TestDownsets:
    def test_chain(self):
        assert sets_of(downset_representation(chain(3))) == [[1], [1, 2], [1, 2, 3]]

    def test_antichain(self):
        assert sets_of(downset_representation(Poset(['a', 'b']))) == [[1], [2]]

    def test_two_below_one(self):
        p = transitive_closure_build(list('abc'), [('a', 'c'), ('b', 'c')])
        f = downset_representation(p)
        assert sets_of(f) == [[1], [2], [1, 2, 3]]
        assert verify(p, f).ok

    @given(posets())
    def test_always_verifies_and_is_injective(self, p):
        f = downset_representation(p)
        assert verify(p, f).ok
        assert injectivity_audit(f).injective


class TestStarSubtrees:
    def test_k2(self, k2):
        rep = star_subtree_representation(Orientation.from_arcs(k2, [('a', 'b')]))
        assert rep.subtree('a') == {0, 1}
        assert rep.subtree('b') == {0, 1, 2}
        assert verify(k2, rep).ok

    def test_antichain(self):
        rep = poset_star_representation(Poset(list('abc')))
        assert [rep.subtree(x) for x in 'abc'] == [{0, 1}, {0, 2}, {0, 3}]

    def test_chain(self):
        k3 = Graph.from_edges(list('abc'), [('a', 'b'), ('a', 'c'), ('b', 'c')])
        rep = star_subtree_representation(Orientation.from_arcs(k3, [('a', 'b'), ('b', 'c'), ('a', 'c')]))
        assert [rep.subtree(x) for x in 'abc'] == [{0, 1}, {0, 1, 2}, {0, 1, 2, 3}]
        assert verify(k3, rep).ok

    def test_not_transitive(self):
        p3 = Graph.from_edges(list('abc'), [('a', 'b'), ('b', 'c')])
        with pytest.raises(NotTransitive):
            star_subtree_representation(Orientation.from_arcs(p3, [('a', 'b'), ('b', 'c')]))

    def test_wheel(self):
        w8 = load_fixture('w8.graph')
        p = orientation_to_poset(transitive_orient(w8))
        assert verify(w8, poset_star_representation(p)).ok

    @given(graphs(max_n=6))
    def test_comparability_graphs_have_both_representations(self, g):
        if is_comparability(g):
            p = orientation_to_poset(transitive_orient(g))
            assert verify(g, poset_star_representation(p)).ok
            assert verify(g, downset_representation(p)).ok


class TestIntervals:
    def test_chain(self):
        rep = interval_representation(transitive_closure_build(list('abc'), [('a', 'b'), ('b', 'c')]))
        assert [rep.interval_of(x) for x in 'abc'] == [(2, 4), (1, 5), (0, 6)]

    def test_antichain(self, antichain3):
        rep = interval_representation(antichain3)
        assert [rep.interval_of(x) for x in 'abc'] == [(2, 6), (1, 5), (0, 4)]
        assert verify(antichain3, rep).ok

    def test_standard_example(self, s3):
        with pytest.raises(DimensionTooHigh) as info:
            interval_representation(s3)
        assert info.value.dimension == 3

    def test_rejection_skips_the_exact_search(self, s3, monkeypatch):
        def exhausted(*args, **kwargs):
            raise AssertionError('exact dimension was computed')

        monkeypatch.setattr('representation.builders.dimension', exhausted)
        with pytest.raises(DimensionTooHigh) as info:
            interval_representation(s3)
        assert info.value.limit == 2

    @given(posets(max_n=6))
    def test_box_at_one_is_interval(self, p):
        if dimension(p).k <= 2:
            assert box_representation(p, 1) == interval_representation(p)


class TestBoxes:
    def test_standard_example_in_the_plane(self, s3):
        boxes = box_representation(s3, 2)
        assert boxes.d == 2
        assert verify(s3, boxes).ok
        points = boxes_to_embedding(boxes)
        assert all(len(point) == 4 for point in points.values())
        assert embedding_order(s3.labels, points, reverse=True) == s3

    def test_eight_cycle_needs_the_plane(self):
        p = load_fixture('c8-orientation.poset')
        with pytest.raises(DimensionTooHigh):
            box_representation(p, 1)
        assert verify(p, box_representation(p, 2)).ok

    def test_invalid_d(self, s3):
        with pytest.raises(InvalidD):
            box_representation(s3, 0)

    def test_nested_intervals_to_points(self):
        rep = IntervalRep(['a', 'b'], [[2, 4], [1, 5]])
        assert boxes_to_embedding(rep) == {'a': (2, 2), 'b': (1, 1)}

    def test_identical_boxes_rejected(self):
        with pytest.raises(MalformedBox):
            BoxRep(['a', 'b'], [[[1, 3]], [[1, 3]]])

    def test_embedding_to_boxes(self, s3):
        r = dimension(s3).realizer
        points = realizer_embedding(r)
        points = {x: point + point[-1:] for x, point in points.items()}
        assert verify(s3, embedding_to_boxes(s3.labels, points)).ok

    @settings(max_examples=80, deadline=None)
    @given(posets(max_n=6))
    def test_round_trip(self, p):
        d = max(1, ceil_half(dimension(p).k))
        boxes = box_representation(p, d)
        assert verify(p, boxes).ok
        assert embedding_order(p.labels, boxes_to_embedding(boxes), reverse=True) == p

    def test_intersection_of_interval_orders(self):
        first = transitive_closure_build(list('abcd'), [('a', 'b'), ('c', 'd')])
        second = transitive_closure_build(list('abcd'), [('a', 'c'), ('b', 'd')])
        assert interval_representation(first) and interval_representation(second)
        p = poset_intersection([first, second])
        assert verify(p, box_representation(p, 2)).ok


class TestFactory:
    @pytest.mark.parametrize('kind', ['interval', 'box', 'star', 'downset'])
    def test_every_kind_verifies(self, kind, lattice2):
        assert verify(lattice2, get_builder(kind, d=1)(lattice2)).ok

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            get_builder('hexagon')


class TestCompositions:
    def test_copies_of_one_set(self):
        p = composition_poset(SetFamily(['s'], [[1]]), 2)
        assert p.labels == ('s#1', 's#2')
        assert p.relations() == []

    def test_two_chain(self):
        p = composition_poset(SetFamily(['s', 't'], [[1], [1, 2]]), 1)
        assert p.relations() == [('s#1', 't#1')]

    def test_two_copies_each(self):
        p = composition_poset(SetFamily(['s', 't'], [[1], [1, 2]]), 2)
        assert p.n == 4
        assert sorted(p.relations()) == [('s#1', 't#1'), ('s#1', 't#2'), ('s#2', 't#1'), ('s#2', 't#2')]

    def test_invalid_multiplicity(self):
        with pytest.raises(InvalidCount):
            composition_poset(SetFamily(['s'], [[1]]), 0)

    @given(posets(max_n=5))
    def test_sequence_is_nested(self, p):
        sequence = composition_sequence(downset_representation(p), min(p.n, 4))
        assert all(is_induced_subposet(a, b) for a, b in zip(sequence, sequence[1:]))

    def test_family_of_nested_sequence(self):
        sequence = composition_sequence(SetFamily(['s', 't', 'u'], [[1], [1, 2], [3]]), 3)
        f = composition_family(sequence)
        assert f.injective
        for p in sequence:
            assert verify(p, f.restrict(p.labels)).ok

    def test_family_rejects_unnested_sequence(self):
        with pytest.raises(NotNested):
            composition_family([chain(2), Poset(['x0', 'x1'])])


class TestTransforms:
    def test_shared_atom_overlaps(self):
        t = overlap_from_intersection(SetFamily(['a', 'b'], [[1], [1]]))
        assert sets_of(t) == [[1, 2], [1, 3]]
        assert verify_overlap(Graph.from_edges(['a', 'b'], [('a', 'b')]), t).ok

    def test_disjoint_sets_stay_apart(self):
        t = overlap_from_intersection(SetFamily(['a', 'b'], [[1], [2]]))
        assert verify_overlap(Graph(['a', 'b']), t).ok

    def test_containment_becomes_overlap(self, k2):
        sigma = SetFamily(['a', 'b'], [[1], [1, 2]])
        assert not verify_overlap(k2, sigma).ok
        assert verify_overlap(k2, overlap_from_intersection(sigma)).ok

    def test_fresh_atoms_are_private(self):
        sigma = SetFamily(list('abc'), [[1, 2], [2], [5]])
        t = overlap_from_intersection(sigma)
        fresh = [s - sigma.atoms() for s in t.sets]
        assert all(len(s) == 1 for s in fresh)
        assert len(set().union(*fresh)) == 3

    def test_disjointedness_complement(self, k2):
        assert disjointedness_complement(k2) == complement(k2)
        f = SetFamily(['a', 'b'], [[1], [2]])
        assert verify_disjointedness(k2, f).ok
        assert verify_intersection(disjointedness_complement(k2), f).ok

    def test_shared_atom_is_not_disjoint(self, k2):
        f = SetFamily(['a', 'b'], [[1], [1]])
        assert not verify_disjointedness(k2, f).ok
        assert verify_disjointedness(Graph(['a', 'b']), f).ok
        assert verify_intersection(k2, f).ok

    @given(graph_and_family())
    def test_duality(self, case):
        g, f = case
        assert verify_disjointedness(g, f).ok == verify_intersection(disjointedness_complement(g), f).ok

    @given(graph_and_family(max_n=6))
    def test_overlap_preserves_intersection_verdict(self, case):
        g, f = case
        assert verify_intersection(g, f).ok == verify_overlap(g, overlap_from_intersection(f)).ok


class TestMultiplyFamily:
    def test_copies_share_a_set(self, lattice2):
        f = multiply_family(downset_representation(lattice2), {'x': 2})
        assert f.labels == ('bot', 'x#1', 'x#2', 'y', 'top')
        report = injectivity_audit(f)
        assert not report.injective
        assert report.duplicate_groups == (('x#1', 'x#2'),)

    def test_star_input(self, antichain3):
        f = multiply_family(poset_star_representation(antichain3), {'a': 3})
        assert f.n == 5

    @given(posets(max_n=5), st.data())
    def test_represents_the_multiplied_poset(self, p, data):
        counts = {x: data.draw(st.integers(min_value=1, max_value=3)) for x in p.labels}
        assert verify(multiply(p, counts), multiply_family(downset_representation(p), counts)).ok
