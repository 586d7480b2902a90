from __future__ import annotations

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from propeller_spectra.charpoly import MatrixKind, berkowitz, charpoly, graph_matrix, principal_charpoly
from propeller_spectra.graph import Graph, make_cycle, make_path, make_propeller
from propeller_spectra.poly import IntPoly

import random


def _sympy_charpoly(mat) -> IntPoly:
    if not mat:
        return IntPoly.const(1)
    x = sympy.Symbol("x")
    poly = sympy.Matrix(mat).charpoly(x)
    return IntPoly(reversed([int(c) for c in poly.all_coeffs()]))


def test_empty_graph():
    assert charpoly(Graph(0, []), "L") == IntPoly.const(1)


def test_known_polynomials():
    x = IntPoly.x()
    assert charpoly(make_path(2), "L") == x**2 - 2 * x
    assert charpoly(make_cycle(3), "A") == (x - 2) * (x + 1) ** 2
    # Q-polynomial of propeller (4,4,1)
    assert charpoly(make_propeller((4, 4, 1)), "Q").to_json() == [
        "0", "-128", "592", "-1056", "948", "-468", "128", "-18", "1",
    ]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31), st.integers(1, 7), st.sampled_from(list(MatrixKind)))
def test_against_sympy(seed, n, kind):
    g = random_graph(random.Random(seed), n)
    assert charpoly(g, kind) == _sympy_charpoly(graph_matrix(g, kind))


def test_berkowitz_on_non_symmetric_matrix():
    mat = [[1, 2, 0], [3, -1, 4], [0, 5, 2]]
    assert berkowitz(mat) == _sympy_charpoly(mat)


def test_principal_charpoly_deletes_rows():
    g = make_path(5)
    full = graph_matrix(g, "L")
    keep = [1, 2, 3]
    sub = [[full[i][j] for j in keep] for i in keep]
    assert principal_charpoly(g, "L", [0, 4]) == _sympy_charpoly(sub)


def test_relabel_invariance():
    g = make_propeller((5, 4, 3))
    perm = list(range(g.n))
    random.Random(1).shuffle(perm)
    for kind in MatrixKind:
        assert charpoly(g.relabel(perm), kind) == charpoly(g, kind)


def test_kind_parse():
    assert MatrixKind.parse("q") is MatrixKind.Q
    assert MatrixKind.parse(MatrixKind.A) is MatrixKind.A
