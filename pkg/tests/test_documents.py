import os

import pytest

from dimension.realizer_search import dimension
from document.document import BOXES, GRAPH, REALIZER
from document.document_factory import get_graph, get_realizer, get_representation, get_structure
from document.parser import parse, parse_text
from document.printer import cover_relations, print_payload
from order.graph import Graph
from order.poset import Poset
from representation.builders import box_representation, downset_representation, interval_representation, \
    poset_star_representation
from representation.families import IntervalRep, SetFamily
from tests.conftest import FIXTURES_DIR, chain, fixture_path, load_fixture
from utils.exceptions import CycleDetected, InvariantViolation, ParseError


def parse_error_line(text):
    with pytest.raises(ParseError) as info:
        parse_text(text)
    return info.value.line_no


class TestParse:
    def test_k2(self, k2):
        doc = parse_text('graph 2\nv a\nv b\ne a b\n')
        assert doc.kind == GRAPH
        assert doc.payload == k2
        assert doc.labels == ('a', 'b')

    def test_comments_and_blank_lines(self, k2):
        assert parse_text('# pair\n\ngraph 2\nv a\n  # indented comment\nv b\ne a b\n').payload == k2

    def test_two_cycle(self):
        with pytest.raises(CycleDetected):
            parse_text('poset 2\nv a\nv b\n< a b\n< b a\n')

    def test_arc_lines(self):
        p = parse_text('poset 3\nv a\nv b\nv c\n> c b\n> b a\n').payload
        assert p.less('a', 'b') and p.less('a', 'c')

    def test_poset_is_closed(self):
        assert parse_text('poset 3\nv a\nv b\nv c\n< a b\n< b c\n').payload.less('a', 'c')

    def test_wheel(self):
        w8 = load_fixture('w8.graph')
        assert w8.n == 9 and w8.edge_count == 16

    def test_copy_labels(self):
        f = parse_text('family 2\ns a#1 1\ns a#2 1\n').payload
        assert f.labels == ('a#1', 'a#2')

    def test_trailing_comment(self, k2):
        assert parse_text('graph 2\nv a\nv b\ne a b # rim\n').payload == k2
        f = parse_text('family 2 #copies\ns a#1 1 # first\ns a#2 1\n').payload
        assert f.labels == ('a#1', 'a#2')

    def test_records_give_the_order(self):
        rep = parse_text('intervals 2\ni b 1 4\ni a 2 3\n').payload
        assert isinstance(rep, IntervalRep)
        assert rep.labels == ('b', 'a')

    def test_boxes(self):
        doc = parse_text('boxes 2 2\nv a\nv b\nb a 2 3 2 3\nb b 1 4 1 4\n')
        assert doc.kind == BOXES and doc.payload.d == 2
        assert doc.payload.box_of('a') == [(2, 3), (2, 3)]

    def test_star(self):
        rep = parse_text('star 2\nt a 1 2\nt b 2\n').payload
        assert rep.subtree('a') == {0, 1, 2}

    def test_realizer(self):
        doc = parse_text('realizer 2\nv a\nv b\nL a b\nL b a\n')
        assert doc.kind == REALIZER
        assert [str(order) for order in doc.payload] == ['a b', 'b a']


class TestParseErrors:
    def test_empty(self):
        assert parse_error_line('# nothing here\n') == 1

    def test_unknown_kind(self):
        assert parse_error_line('hypergraph 1\nv a\n') == 1

    def test_boxes_header_needs_d(self):
        assert parse_error_line('\nboxes 1\n') == 2

    def test_count_mismatch(self):
        assert parse_error_line('graph 3\nv a\nv b\n') == 1

    def test_duplicate_vertex(self):
        assert parse_error_line('graph 2\nv a\nv a\n') == 3

    def test_unknown_vertex(self):
        assert parse_error_line('graph 2\nv a\nv b\ne a c\n') == 4

    def test_self_loop(self):
        assert parse_error_line('graph 1\nv a\ne a a\n') == 3

    def test_foreign_tag(self):
        assert parse_error_line('graph 1\nv a\ns a 1\n') == 3

    def test_bad_integer(self):
        assert parse_error_line('family 1\ns a x\n') == 2

    def test_empty_set(self):
        assert parse_error_line('family 1\ns a\n') == 2

    def test_missing_record(self):
        assert parse_error_line('family 2\nv a\nv b\ns a 1\n') == 1

    def test_second_record(self):
        assert parse_error_line('family 1\ns a 1\ns a 2\n') == 3

    def test_box_arity(self):
        assert parse_error_line('boxes 1 2\nb a 1 2\n') == 2

    def test_realizer_repeats_a_vertex(self):
        assert parse_error_line('realizer 2\nv a\nv b\nL a a\n') == 4


class TestPrint:
    def test_k2(self, k2):
        assert print_payload(k2) == 'graph 2\nv a\nv b\ne a b\n'

    def test_chain_prints_covers_only(self):
        assert print_payload(chain(3)) == 'poset 3\nv x0\nv x1\nv x2\n< x0 x1\n< x1 x2\n'

    def test_cover_relations_of_lattice(self, lattice2):
        assert cover_relations(lattice2) == [('bot', 'x'), ('bot', 'y'), ('x', 'top'), ('y', 'top')]

    def test_family_sets_are_sorted(self):
        assert print_payload(SetFamily(['a'], [[3, 1, 2]])) == 'family 1\nv a\ns a 1 2 3\n'

    def test_intervals(self):
        assert print_payload(IntervalRep(['a'], [[0, 1]])) == 'intervals 1\nv a\ni a 0 1\n'

    def test_boxes_header_carries_d(self, s3):
        assert print_payload(box_representation(s3, 2)).startswith('boxes 6 2\n')

    def test_unknown_payload(self):
        with pytest.raises(TypeError):
            print_payload(object())

    def test_fixtures_are_canonical(self):
        for name in sorted(os.listdir(FIXTURES_DIR)):
            with open(fixture_path(name), encoding='utf-8') as f:
                body = ''.join(line for line in f if not line.startswith('#'))
            assert print_payload(load_fixture(name)) == body, name


class TestRoundTrip:
    def round_trip(self, payload):
        return parse_text(print_payload(payload)).payload

    def test_graph(self, c5):
        assert self.round_trip(c5) == c5

    def test_edgeless_graph(self):
        g = Graph(list('abc'))
        assert self.round_trip(g) == g

    def test_poset(self, s3, lattice2):
        assert self.round_trip(s3) == s3
        assert self.round_trip(lattice2) == lattice2

    def test_antichain(self, antichain3):
        assert self.round_trip(antichain3) == antichain3

    def test_family(self, lattice2):
        f = downset_representation(lattice2)
        assert self.round_trip(f) == f

    def test_intervals(self, antichain3):
        rep = interval_representation(antichain3)
        assert self.round_trip(rep) == rep

    def test_boxes(self, s3):
        rep = box_representation(s3, 2)
        assert self.round_trip(rep) == rep

    def test_star(self, s3):
        rep = poset_star_representation(s3)
        assert self.round_trip(rep) == rep

    def test_realizer(self, s3):
        r = dimension(s3).realizer
        assert self.round_trip(r) == r

    def test_realizer_keeps_declared_order(self):
        doc = parse_text('realizer 2\nv b\nv a\nL a b\n')
        assert print_payload(doc.payload, doc.labels) == 'realizer 2\nv b\nv a\nL a b\n'


class TestFactory:
    def test_kinds(self):
        assert isinstance(get_structure(fixture_path('s3.poset')), Poset)
        assert isinstance(get_graph(fixture_path('c5.graph')), Graph)

    def test_wrong_kind(self):
        with pytest.raises(InvariantViolation):
            get_graph(fixture_path('s3.poset'))

    def test_representation_and_realizer(self, tmp_path, s3):
        rep_path, realizer_path = tmp_path / 's3.family', tmp_path / 's3.realizer'
        rep_path.write_text(print_payload(downset_representation(s3)))
        realizer_path.write_text(print_payload(dimension(s3).realizer))
        assert get_representation(str(rep_path)) == downset_representation(s3)
        assert len(get_realizer(str(realizer_path))) == 3

    def test_missing_file(self):
        with pytest.raises(OSError):
            parse(fixture_path('absent.graph'))

    def test_invalid_utf8(self, tmp_path):
        path = tmp_path / 'latin.graph'
        path.write_bytes(b'graph 1\nv caf\xe9\n')
        with pytest.raises(ParseError) as info:
            parse(str(path))
        assert info.value.line_no == 2

    @pytest.mark.parametrize('text', ['family 1\ns a 1\n', 'intervals 1\ni a 0 1\n', 'star 1\nt a 1\n'])
    def test_structure_rejects_representations(self, text, tmp_path):
        path = tmp_path / 'doc.txt'
        path.write_text(text)
        with pytest.raises(InvariantViolation):
            get_structure(str(path))
