import os
import sys

from document.printer import print_payload
from order.graph import Graph
from order.poset import Poset, transitive_closure_build

# run from the repository root: python -m script.generate_fixtures [output_dir]
out_dir = sys.argv[1] if len(sys.argv) > 1 else 'fixtures'
os.makedirs(out_dir, exist_ok=True)

rim = list('abcdefgh')
cycle_edges = [(rim[i], rim[(i + 1) % 8]) for i in range(8)]
zigzag = [(rim[i], rim[j]) for i in range(0, 8, 2) for j in ((i - 1) % 8, i + 1)]
standard = [f'a{i}' for i in range(1, 4)] + [f'b{i}' for i in range(1, 4)]

fixtures = {
    'c5.graph': ('5-cycle, the smallest odd cycle without triangular chords',
                 Graph.from_edges(list('abcde'), [('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'e'), ('e', 'a')])),
    'c8.graph': ('8-cycle', Graph.from_edges(rim, cycle_edges)),
    'c8-orientation.poset': ('zigzag transitive orientation of the 8-cycle: a, c, e, g below their neighbours',
                             transitive_closure_build(rim, zigzag)),
    'w8.graph': ('8-wheel: hub z joined to every vertex of the rim a..h',
                 Graph.from_edges(['z'] + rim, [('z', x) for x in rim] + cycle_edges)),
    's3.poset': ('standard example: a_i < b_j exactly when i != j',
                 transitive_closure_build(standard, [(f'a{i}', f'b{j}') for i in range(1, 4) for j in range(1, 4)
                                                     if i != j])),
    'lattice-2.poset': ('Boolean lattice on two atoms',
                        transitive_closure_build(['bot', 'x', 'y', 'top'],
                                                 [('bot', 'x'), ('bot', 'y'), ('x', 'top'), ('y', 'top')])),
    'antichain-3.poset': (None, Poset(list('abc'))),
    'greedy-g1.graph': ('induced subgraph of greedy-g2.graph; orienting it first as a -> b, c -> d\n'
                        'cannot be extended to a transitive orientation of greedy-g2.graph',
                        Graph.from_edges(list('abcd'), [('a', 'b'), ('c', 'd')])),
    'greedy-g2.graph': ('path a - b - x - c - d',
                        Graph.from_edges(['a', 'b', 'x', 'c', 'd'],
                                         [('a', 'b'), ('b', 'x'), ('x', 'c'), ('c', 'd')])),
}

for file_name, (comment, payload) in fixtures.items():
    header = ''.join(f'# {line}\n' for line in comment.splitlines()) if comment else ''
    with open(os.path.join(out_dir, file_name), 'w', encoding='utf-8') as f:
        f.write(header + print_payload(payload))
    print(f'wrote {file_name}')
