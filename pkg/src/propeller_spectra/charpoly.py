"""Division-free characteristic polynomials of graph matrices."""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from .graph import Graph
from .poly import IntPoly


class MatrixKind(str, Enum):
    A = "A"
    L = "L"
    Q = "Q"

    @classmethod
    def parse(cls, value: "MatrixKind | str") -> "MatrixKind":
        if isinstance(value, MatrixKind):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(f"matrix kind must be one of A, L, Q (got {value!r})") from None


def graph_matrix(g: Graph, kind: MatrixKind | str) -> list[list[int]]:
    """Dense ``A``, ``L = D - A`` or ``Q = D + A``."""
    kind = MatrixKind.parse(kind)
    off = {MatrixKind.A: 1, MatrixKind.L: -1, MatrixKind.Q: 1}[kind]
    mat = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        mat[u][v] = mat[v][u] = off
    if kind is not MatrixKind.A:
        for v in range(g.n):
            mat[v][v] = g.degree(v)
    return mat


def _sparse_rows(mat: Sequence[Sequence[int]]) -> list[list[tuple[int, int]]]:
    return [[(j, a) for j, a in enumerate(row) if a] for row in mat]


def berkowitz(mat: Sequence[Sequence[int]]) -> IntPoly:
    """``det(xI - M)`` for a square integer matrix.

    Berkowitz's algorithm uses only ring operations. Working with sparse rows
    keeps the cost near ``O(n^2 * nnz)``, which matters for the larger line
    and subdivision graphs.
    """
    n = len(mat)
    rows = _sparse_rows(mat)
    # poly coefficients stored highest degree first while iterating
    poly = [1]
    for r in range(n):
        a = mat[r][r]
        # column C = M[0..r-1][r], row R = M[r][0..r-1]
        col = [mat[i][r] for i in range(r)]
        row = [(j, v) for j, v in rows[r] if j < r]
        toeplitz = [1, -a]
        vec = col
        for _ in range(r):
            s = 0
            for j, v in row:
                s += v * vec[j]
            toeplitz.append(-s)
            if len(toeplitz) > r + 1:
                break
            vec = [sum(v * vec[j] for j, v in rows[i] if j < r) for i in range(r)]
        new = [0] * (r + 2)
        for i in range(r + 2):
            s = 0
            for j in range(min(i, r) + 1):
                t = i - j
                if t < len(toeplitz):
                    s += toeplitz[t] * poly[j]
            new[i] = s
        poly = new
    return IntPoly(reversed(poly))


def charpoly(g: Graph, kind: MatrixKind | str) -> IntPoly:
    """Monic integer characteristic polynomial of the chosen graph matrix."""
    return berkowitz(graph_matrix(g, kind))


def principal_charpoly(g: Graph, kind: MatrixKind | str, deleted: Sequence[int]) -> IntPoly:
    """Characteristic polynomial of the matrix with rows/columns ``deleted`` removed."""
    drop = set(deleted)
    keep = [i for i in range(g.n) if i not in drop]
    mat = graph_matrix(g, kind)
    return berkowitz([[mat[i][j] for j in keep] for i in keep])
