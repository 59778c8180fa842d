import os

import pytest

from document.parser import parse
from order.graph import Graph
from order.poset import Poset, transitive_closure_build

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'fixtures')


def fixture_path(name):
    return os.path.join(FIXTURES_DIR, name)


def load_fixture(name):
    return parse(fixture_path(name)).payload


def cycle(n):
    labels = [f'v{i}' for i in range(n)]
    return Graph.from_edges(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def chain(n):
    labels = [f'x{i}' for i in range(n)]
    return transitive_closure_build(labels, zip(labels, labels[1:]))


@pytest.fixture
def k2():
    return Graph.from_edges(['a', 'b'], [('a', 'b')])


@pytest.fixture
def c4():
    return Graph.from_edges(list('abcd'), [('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'a')])


@pytest.fixture
def c5():
    return load_fixture('c5.graph')


@pytest.fixture
def antichain3():
    return Poset(list('abc'))


@pytest.fixture
def s3():
    return load_fixture('s3.poset')


@pytest.fixture
def lattice2():
    return load_fixture('lattice-2.poset')
