from __future__ import annotations

import json
import random

import networkx as nx
import pytest

from conftest import random_graph, to_nx
from propeller_spectra.graph import Graph, GraphError, make_propeller
from propeller_spectra.io import (
    SCHEMA_VERSION,
    dumps,
    from_graph6,
    graph_from_json,
    graph_to_json,
    poly_from_json,
    poly_to_json,
    to_graph6,
)
from propeller_spectra.poly import IntPoly


def test_graph6_matches_networkx(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 12))
        ours = to_graph6(g)
        theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert ours == theirs
        assert from_graph6(ours) == g


def test_graph6_large_order():
    g = Graph(70, [(0, 69), (5, 6)])
    s = to_graph6(g)
    assert s.startswith("~")
    assert from_graph6(s) == g
    assert to_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_graph6_header_and_errors():
    assert from_graph6(">>graph6<<" + "Bw") == Graph(3, [(0, 1), (0, 2), (1, 2)])
    with pytest.raises(GraphError):
        from_graph6("")
    with pytest.raises(GraphError):
        from_graph6("Bww")


def test_graph_json_round_trip():
    g = make_propeller((3, 3, 2))
    assert graph_from_json(json.dumps(graph_to_json(g))) == g
    with pytest.raises(GraphError):
        graph_from_json({"edges": []})


def test_poly_json():
    p = IntPoly([0, -(10**30), 1])
    assert poly_to_json(p) == ["0", "-1000000000000000000000000000000", "1"]
    assert poly_from_json(json.dumps(poly_to_json(p))) == p


def test_dumps_stamps_schema_version():
    out = json.loads(dumps({"b": 1, "a": 2}))
    assert out["schema_version"] == SCHEMA_VERSION
    assert list(out) == sorted(out)
