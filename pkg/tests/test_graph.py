from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest

from conftest import random_graph, to_nx
from propeller_spectra.graph import (
    DegreeSequence,
    Graph,
    GraphError,
    PropellerParams,
    SmithKind,
    bipartite_component_count,
    c4_count,
    components,
    has_two_disjoint_cycles,
    is_bipartite,
    is_connected,
    join_by_edge,
    line_graph,
    make_complete,
    make_cycle,
    make_infinity,
    make_path,
    make_propeller,
    make_smith,
    make_spider,
    propellers_of_order,
    spanning_tree_count,
    structure_summary,
    subdivision,
    triangle_count,
)


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])


def test_duplicate_edges_collapse():
    assert Graph(3, [(0, 1), (1, 0)]).m == 1


def test_propeller_shape():
    g = make_propeller((4, 3, 2))
    assert g.n == 8 and g.m == 9
    assert DegreeSequence.of(g) == (5, 2, 2, 2, 2, 2, 2, 1)
    assert g.degree(0) == 5
    assert triangle_count(g) == 1
    assert is_connected(g)


def test_propeller_params_canonicalize():
    assert PropellerParams(3, 5, 2) == PropellerParams(5, 3, 2)
    assert PropellerParams(3, 5, 2).n == 9
    with pytest.raises(ValueError):
        PropellerParams(2, 3, 1)
    with pytest.raises(ValueError):
        PropellerParams(3, 3, 0)


def test_propellers_of_order():
    got = propellers_of_order(9)
    brute = {
        PropellerParams(p, q, k)
        for p in range(3, 8)
        for q in range(3, p + 1)
        for k in range(1, 8)
        if p + q + k - 1 == 9
    }
    assert set(got) == brute and len(got) == len(brute)


def test_infinity_graph():
    g = make_infinity(4, 5)
    assert g.n == 8 and g.m == 9
    assert sorted(g.degrees()) == [2] * 7 + [4]


def test_join_by_edge():
    g = join_by_edge(make_infinity(3, 3), 0, make_path(2), 0)
    assert nx.is_isomorphic(to_nx(g), to_nx(make_propeller((3, 3, 2))))


def test_smith_graphs_shapes():
    assert DegreeSequence.of(make_smith("W0")) == (4, 1, 1, 1, 1)
    for k in range(1, 5):
        g = make_smith(f"W{k}")
        assert g.n == k + 5 and g.m == g.n - 1
    assert make_smith("C5") == make_cycle(5)
    assert make_smith("S1") == make_spider(2, 2, 2)
    assert SmithKind.parse("s3").tag == "S3"
    assert str(SmithKind.parse("W3")) == "W3"


def test_line_graph_matches_networkx(rng):
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 7))
        assert nx.is_isomorphic(to_nx(line_graph(g)), nx.line_graph(to_nx(g)))


def test_subdivision_is_bipartite_with_doubled_edges():
    g = make_complete(4)
    s = subdivision(g)
    assert s.n == g.n + g.m and s.m == 2 * g.m
    assert is_bipartite(s)


def test_structure_against_networkx(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 8))
        h = to_nx(g)
        assert len(components(g)) == nx.number_connected_components(h)
        assert triangle_count(g) == sum(nx.triangles(h).values()) // 3
        assert bipartite_component_count(g) == sum(
            nx.is_bipartite(h.subgraph(c)) for c in nx.connected_components(h)
        )


def _brute_c4(g: Graph) -> int:
    count = 0
    for quad in itertools.combinations(range(g.n), 4):
        a, b, c, d = quad
        for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if all(g.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4)):
                count += 1
    return count


def test_c4_count_counts_subgraphs(rng):
    assert c4_count(make_complete(4)) == 3
    for _ in range(30):
        g = random_graph(rng, rng.randint(4, 7), 0.5)
        assert c4_count(g) == _brute_c4(g)


def test_two_disjoint_cycles():
    assert not has_two_disjoint_cycles(make_propeller((3, 3, 2)))
    two = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert has_two_disjoint_cycles(two)
    # theta graphs have many cycles, all meeting
    theta = Graph(5, [(0, 1), (1, 2), (0, 3), (3, 2), (0, 4), (4, 2)])
    assert not has_two_disjoint_cycles(theta)


def _brute_spanning_trees(g: Graph) -> int:
    if g.n <= 1:
        return 1
    count = 0
    for es in itertools.combinations(g.edges, g.n - 1):
        if is_connected(Graph(g.n, es)):
            count += 1
    return count


def test_spanning_trees_against_brute_force(rng):
    assert spanning_tree_count(make_propeller((4, 3, 1))) == 12
    assert spanning_tree_count(make_complete(5)) == 125
    for _ in range(15):
        g = random_graph(rng, rng.randint(2, 6), 0.6)
        assert spanning_tree_count(g) == _brute_spanning_trees(g)


def test_degree_sequence_helpers():
    d = DegreeSequence([1, 5, 2, 2, 2, 2])
    assert d == (5, 2, 2, 2, 2, 1)
    assert d.format() == "(5, 2^4, 1)"
    assert d.power_sum(2) == 42
    assert DegreeSequence.from_counts({5: 1, 2: 4, 1: 1}) == d
    assert d.is_graphical()
    assert not DegreeSequence([3, 1]).is_graphical()


def test_graphical_against_networkx():
    for seq in itertools.product(range(5), repeat=5):
        assert DegreeSequence(seq).is_graphical() == nx.is_graphical(list(seq))


def test_structure_summary_round_trip():
    s = structure_summary(make_propeller((3, 3, 1)))
    d = s.to_dict()
    assert d["triangle_count"] == 2 and d["components"] == 1
    assert d["degree_sequence"] == [5, 2, 2, 2, 2, 1]


def test_relabel_preserves_structure():
    g = make_propeller((5, 3, 2))
    perm = list(range(g.n))
    random.Random(3).shuffle(perm)
    h = g.relabel(perm)
    assert DegreeSequence.of(h) == DegreeSequence.of(g)
    assert triangle_count(h) == triangle_count(g)
