"""Closed forms, recurrences and generating identities for propeller graphs.

The polynomials here are built from recurrences and explicit term tables, not
from determinants, so comparing them with :func:`charpoly` checks both sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Any

from .charpoly import MatrixKind, charpoly
from .graph import (
    DegreeSequence,
    Graph,
    PropellerParams,
    c4_count,
    components,
    make_propeller,
    triangle_count,
)
from .poly import IntPoly, LaurentPoly, laurent_from_charpoly

X = IntPoly.x()
EXPONENT_MARGIN = 8


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


# ---------------------------------------------------------------------------
# Path families


@lru_cache(maxsize=None)
def lpath(n: int) -> IntPoly:
    """Laplacian polynomial of ``P_n`` from the three-term recurrence (``P_0 = 0``)."""
    if n < 0:
        raise ValueError("path order must be non-negative")
    if n == 0:
        return IntPoly()
    if n == 1:
        return X
    return (X - 2) * lpath(n - 1) - lpath(n - 2)


@lru_cache(maxsize=None)
def bpoly(n: int) -> IntPoly:
    """Path Laplacian with one end row/column deleted: ``x B_n = P_{n+1} + P_n``."""
    return (lpath(n + 1) + lpath(n)).shift(-1)


@lru_cache(maxsize=None)
def upoly(n: int) -> IntPoly:
    """Path Laplacian with both end rows/columns deleted: ``P_{n+1} = x U_n``."""
    return lpath(n + 1).shift(-1)


@lru_cache(maxsize=None)
def lcycle(n: int) -> IntPoly:
    if n < 3:
        raise ValueError("cycle polynomial needs n >= 3")
    return (lpath(n + 1) - lpath(n - 1)).shift(-1) + 2 * _sign(n + 1)


@lru_cache(maxsize=None)
def apath(n: int) -> IntPoly:
    """Adjacency polynomial of ``P_n`` (``P_0`` is the empty graph, polynomial 1)."""
    if n < 0:
        raise ValueError("path order must be non-negative")
    if n == 0:
        return IntPoly.const(1)
    if n == 1:
        return X
    return X * apath(n - 1) - apath(n - 2)


@dataclass(frozen=True)
class PathPolyFamily:
    n: int
    phiP: IntPoly
    phiB: IntPoly
    phiU: IntPoly
    phiC: IntPoly | None


def path_family(n: int) -> PathPolyFamily:
    return PathPolyFamily(n, lpath(n), bpoly(n), upoly(n), lcycle(n) if n >= 3 else None)


def eval4_family(n: int) -> tuple[int, int, int, int]:
    """Values at 4 of the path, ``B_n``, ``U_n`` and cycle polynomials."""
    if n < 1:
        raise ValueError("n must be positive")
    return (4 * n, 2 * n + 1, n + 1, 2 + 2 * _sign(n + 1))


# ---------------------------------------------------------------------------
# Infinity graphs and propellers


def infinity_lpoly(p: int, q: int) -> IntPoly:
    if p < 3 or q < 3:
        raise ValueError("cycle lengths must be at least 3")
    up, uq = upoly(p - 1), upoly(q - 1)
    return (
        (X - 4) * up * uq
        - 2 * uq * (upoly(p - 2) + _sign(p))
        - 2 * up * (upoly(q - 2) + _sign(q))
    )


def infinity_l_at4(p: int, q: int) -> int:
    return 2 * (p + q) - 4 * p * q - 2 * (_sign(q) * p + _sign(p) * q)


def _params(p, q, k) -> PropellerParams:
    return PropellerParams(p, q, k)


def propeller_lpoly(p: int, q: int, k: int) -> IntPoly:
    """Laplacian polynomial via the edge-join of the infinity graph and ``P_k``."""
    pp = _params(p, q, k)
    inf = infinity_lpoly(pp.p, pp.q)
    return inf * lpath(k) - inf * bpoly(k - 1) - lpath(k) * upoly(pp.p - 1) * upoly(pp.q - 1)


def propeller_l_at4(p: int, q: int, k: int) -> int:
    return 2 * (2 * k + 1) * (p + q - _sign(q) * p - _sign(p) * q) - 4 * p * q * (3 * k + 1)


def propeller_apoly(p: int, q: int, k: int) -> IntPoly:
    """Adjacency polynomial via vertex-deletion expansion at the hub."""
    pp = _params(p, q, k)
    p, q = pp.p, pp.q
    a = apath
    return (
        X * a(p - 1) * a(q - 1) * a(k)
        - 2 * a(p - 2) * a(q - 1) * a(k)
        - 2 * a(p - 1) * a(q - 2) * a(k)
        - a(p - 1) * a(q - 1) * a(k - 1)
        - 2 * a(p - 1) * a(k)
        - 2 * a(q - 1) * a(k)
    )


def propeller_a_at2(p: int, q: int, k: int) -> int:
    return -(3 * k + 2) * p * q


# ---------------------------------------------------------------------------
# Generating identities in y


def _terms(pairs) -> LaurentPoly:
    return LaurentPoly(((e, c) for c, e in pairs))


def f_L(p: int, q: int, k: int) -> LaurentPoly:
    """Term table of the Laplacian generating polynomial of propeller ``(p, q, k)``."""
    pp = _params(p, q, k)
    p, q = pp.p, pp.q
    sp, sq = _sign(p), _sign(q)
    return _terms(
        [
            (-2 * sq, 2 * p + q + 2 * k + 3),
            (-2 * sp, 2 * q + p + 2 * k + 3),
            (2 * sq, 2 * p + q + 2 * k + 1),
            (2 * sp, p + 2 * q + 2 * k + 1),
            (3, 2 * p + 2 * q + 1),
            (3, 2 * p + 2 * q),
            (1, 2 * p + 3 + 2 * k),
            (1, 2 * q + 3 + 2 * k),
            (3, 2 * p + 2 * k + 2),
            (3, 2 * q + 2 * k + 2),
            (2, 2 * p + 1 + 2 * k),
            (2, 2 * q + 1 + 2 * k),
            (2 * sq, 2 * p + 2 + q),
            (2 * sp, 2 * q + 2 + p),
            (-2 * sq, 2 * p + q),
            (-2 * sp, 2 * q + p),
            (2 * sp, 3 + p + 2 * k),
            (2 * sq, 3 + q + 2 * k),
            (-2 * sp, p + 2 * k + 1),
            (-2 * sq, q + 2 * k + 1),
            (-2, 2 * p + 2),
            (-2, 2 * q + 2),
            (-3, 2 * p + 1),
            (-3, 2 * q + 1),
            (-1, 2 * p),
            (-1, 2 * q),
            (-3, 2 * k + 3),
            (-2 * sp, 2 + p),
            (-2 * sq, 2 + q),
            (2 * sp, p),
            (2 * sq, q),
            (-3, 2 * k + 2),
        ]
    )


def f_A(p: int, q: int, k: int) -> LaurentPoly:
    """Term table of the adjacency generating polynomial of propeller ``(p, q, k)``."""
    pp = _params(p, q, k)
    p, q = pp.p, pp.q
    return _terms(
        [
            (-2, 4 + 2 * k + p + 2 * q),
            (-2, 4 + 2 * k + q + 2 * p),
            (2, 2 * k + 2 + p + 2 * q),
            (2, 2 * k + 2 + q + 2 * p),
            (3, 2 * p + 2 * q),
            (2, 2 + p + 2 * q),
            (2, 2 + q + 2 * p),
            (-2, p + 2 * q),
            (-2, q + 2 * p),
            (-2, 2 + 2 * p),
            (-2, 2 + 2 * q),
            (-1, 2 * p),
            (-1, 2 * q),
            (1, 2 * k + 4 + 2 * p),
            (1, 2 * k + 4 + 2 * q),
            (2, 2 * k + 2 + 2 * p),
            (2, 2 * k + 2 + 2 * q),
            (2, 2 * k + 4 + p),
            (2, 2 * k + 4 + q),
            (-2, 2 * k + 2 + p),
            (-2, 2 * k + 2 + q),
            (-2, 2 + p),
            (-2, 2 + q),
            (2, p),
            (2, q),
            (-3, 2 * k + 4),
        ]
    )


def _y(*pairs: tuple[int, int]) -> LaurentPoly:
    return LaurentPoly({e: c for e, c in pairs})


def _check_range(poly: LaurentPoly, n: int) -> None:
    bound = 2 * n + EXPONENT_MARGIN
    if poly.terms and (poly.min_exponent < -bound or poly.max_exponent > bound):
        raise OverflowError(f"Laurent exponent outside +/-{bound}")


def fL_lhs(phi: IntPoly, n: int) -> LaurentPoly:
    """``y^n (y-1)^3 (y+1)^2 phi + 1 - 3y - 4y^2 + 4y^{2n+3} + 3y^{2n+4} - y^{2n+5}``.

    ``phi`` is any degree-``n`` polynomial in ``x`` read through the Laplacian
    substitution.
    """
    sub = laurent_from_charpoly(phi, "L")
    factor = _y((1, 1), (0, -1)) ** 3 * _y((1, 1), (0, 1)) ** 2
    tail = _y((0, 1), (1, -3), (2, -4), (2 * n + 3, 4), (2 * n + 4, 3), (2 * n + 5, -1))
    out = factor * sub + tail
    _check_range(out, n)
    return out


def fA_lhs(phi: IntPoly, n: int) -> LaurentPoly:
    """``y^n (y^2-1)^3 phi + 1 - 4y^2 - y^{2n+6} + 4y^{2n+4}`` under the adjacency substitution."""
    sub = laurent_from_charpoly(phi, "A")
    factor = _y((2, 1), (0, -1)) ** 3
    tail = _y((0, 1), (2, -4), (2 * n + 6, -1), (2 * n + 4, 4))
    out = factor * sub + tail
    _check_range(out, n)
    return out


@dataclass
class IdentityReport:
    identity: str
    params: dict[str, Any]
    lhs: LaurentPoly | IntPoly
    rhs: LaurentPoly | IntPoly
    equal: bool = field(init=False)

    def __post_init__(self):
        self.equal = self.lhs == self.rhs

    def first_mismatch_exponent(self) -> int | None:
        if self.equal:
            return None
        lhs, rhs = self.lhs, self.rhs
        if isinstance(lhs, IntPoly):
            lhs = LaurentPoly.from_intpoly(lhs)
        if isinstance(rhs, IntPoly):
            rhs = LaurentPoly.from_intpoly(rhs)
        return lhs.first_mismatch(rhs)

    def to_dict(self) -> dict[str, Any]:
        out = {"identity": self.identity, "params": self.params, "equal": self.equal}
        if not self.equal:
            out["first_mismatch_exponent"] = self.first_mismatch_exponent()
        return out


def verify_fL_identity(p: int, q: int, k: int) -> IdentityReport:
    pp = _params(p, q, k)
    phi = charpoly(make_propeller(pp), MatrixKind.L)
    return IdentityReport(
        "fL", {"p": pp.p, "q": pp.q, "k": pp.k}, fL_lhs(phi, pp.n), f_L(pp.p, pp.q, pp.k)
    )


def verify_fA_identity(p: int, q: int, k: int) -> IdentityReport:
    pp = _params(p, q, k)
    phi = charpoly(make_propeller(pp), MatrixKind.A)
    return IdentityReport(
        "fA", {"p": pp.p, "q": pp.q, "k": pp.k}, fA_lhs(phi, pp.n), f_A(pp.p, pp.q, pp.k)
    )


def path_closed_form_reports(n: int) -> list[IdentityReport]:
    """Closed forms in ``y`` for the path, ``B_n``, ``U_n`` and adjacency path polynomials.

    Each is checked after multiplying out the denominator, e.g.
    ``y^n (y - 1) phi(L(P_n)) = (y + 1)(y^{2n} - 1)``.
    """
    y1 = _y((1, 1), (0, -1))
    yy1 = _y((2, 1), (0, -1))
    out = []
    if n >= 1:
        out.append(
            IdentityReport(
                "path_L",
                {"n": n},
                laurent_from_charpoly(lpath(n), "L") * y1,
                _y((1, 1), (0, 1)) * _y((2 * n, 1), (0, -1)),
            )
        )
    out.append(
        IdentityReport(
            "B", {"n": n}, laurent_from_charpoly(bpoly(n), "L") * y1, _y((2 * n + 1, 1), (0, -1))
        )
    )
    out.append(
        IdentityReport(
            "U", {"n": n}, laurent_from_charpoly(upoly(n), "L") * yy1, _y((2 * n + 2, 1), (0, -1))
        )
    )
    if n >= 1:
        out.append(
            IdentityReport(
                "path_A",
                {"n": n},
                laurent_from_charpoly(apath(n), "A") * yy1,
                _y((2 * n + 2, 1), (0, -1)),
            )
        )
    return out


# ---------------------------------------------------------------------------
# Coefficient and moment formulas


def l_coefficient_formulas(g: Graph) -> tuple[int, int, int, int]:
    """Leading four Laplacian coefficients from degrees and the triangle count."""
    m = g.m
    d = g.degrees()
    s2 = sum(x * x for x in d)
    s3 = sum(x**3 for x in d)
    t = triangle_count(g)
    l2_twice = 4 * m * m - 2 * m - s2
    l3_thrice = -4 * m**3 + 6 * m * m + 3 * m * s2 - s3 - 3 * s2 + 6 * t
    assert l2_twice % 2 == 0 and l3_thrice % 3 == 0
    return 1, -2 * m, l2_twice // 2, l3_thrice // 3


def q_moment_formulas(g: Graph) -> tuple[int, int, int, int]:
    """Spectral moments ``T_0..T_3`` of the signless Laplacian."""
    d = g.degrees()
    s2 = sum(x * x for x in d)
    s3 = sum(x**3 for x in d)
    return g.n, 2 * g.m, 2 * g.m + s2, 6 * triangle_count(g) + 3 * s2 + s3


def fourth_moment_formula(g: Graph) -> int:
    """Closed 4-walk count ``trace(A^4)`` from ``C_4`` subgraphs and degrees."""
    counts = DegreeSequence.of(g).counts()
    return (
        8 * c4_count(g)
        + sum(k * x for k, x in counts.items())
        + 4 * sum(comb(k, 2) * x for k, x in counts.items() if k >= 2)
    )


def line_graph_fourth_moment(p: int, q: int, k: int) -> int:
    """Tabulated ``trace(A^4)`` of the line graph of a propeller with ``q >= 4``."""
    pp = _params(p, q, k)
    p, q, k, n = pp.p, pp.q, pp.k, pp.n
    if q < 4:
        raise ValueError("table only covers q >= 4")
    if p == q == 4:
        return 368 if k == 1 else 6 * n + 332
    if q == 4:
        return 6 * n + 312 if k == 1 else 6 * n + 324
    return 6 * n + 304 if k == 1 else 6 * n + 316


TU_MAX_ORDER = 8


def tu_coefficients(g: Graph) -> IntPoly:
    """Signless Laplacian polynomial from weighted TU-subgraph sums.

    A TU-subgraph is a spanning subgraph whose components are trees or
    odd-unicyclic graphs; its weight is ``4^c * prod(1 + |E(T_i)|)``. The
    coefficient of ``x^{n-j}`` is ``(-1)^j`` times the weight total over
    TU-subgraphs with ``j`` edges.
    """
    if g.n > TU_MAX_ORDER:
        raise ValueError(f"TU-subgraph enumeration is limited to n <= {TU_MAX_ORDER}")
    n = g.n
    edges = g.edges
    totals = [0] * (n + 1)

    # union-find with parity and a per-root "contains an (odd) cycle" flag
    parent = list(range(n))
    parity = [0] * n
    size_edges = [0] * n
    size_vertices = [1] * n
    cyclic = [False] * n

    def find(v: int) -> tuple[int, int]:
        par = 0
        while parent[v] != v:
            par ^= parity[v]
            v = parent[v]
        return v, par

    def weight() -> int:
        w = 1
        for r in range(n):
            if parent[r] == r:
                w *= 4 if cyclic[r] else 1 + size_edges[r]
        return w

    def rec(i: int, j: int) -> None:
        if i == len(edges):
            totals[j] += weight()
            return
        rec(i + 1, j)
        u, v = edges[i]
        ru, pu = find(u)
        rv, pv = find(v)
        if ru == rv:
            if cyclic[ru] or pu != pv:
                return  # second cycle, or an even cycle
            cyclic[ru] = True
            size_edges[ru] += 1
            rec(i + 1, j + 1)
            size_edges[ru] -= 1
            cyclic[ru] = False
            return
        if cyclic[ru] and cyclic[rv]:
            # merging two unicyclic parts would leave two cycles in one component
            return
        if size_vertices[ru] < size_vertices[rv]:
            ru, rv, pu, pv = rv, ru, pv, pu
        parent[rv] = ru
        parity[rv] = pu ^ pv ^ 1
        saved = (size_edges[ru], size_vertices[ru], cyclic[ru])
        size_edges[ru] += size_edges[rv] + 1
        size_vertices[ru] += size_vertices[rv]
        cyclic[ru] = cyclic[ru] or cyclic[rv]
        rec(i + 1, j + 1)
        size_edges[ru], size_vertices[ru], cyclic[ru] = saved
        parent[rv] = rv
        parity[rv] = 0

    rec(0, 0)
    coeffs = [0] * (n + 1)
    for j in range(n + 1):
        coeffs[n - j] = (-1) ** j * totals[j]
    return IntPoly(coeffs)


def q_subleading_formula(p: int, q: int, k: int) -> int:
    """Coefficient of ``x`` in the signless Laplacian polynomial of an even propeller."""
    pp = _params(p, q, k)
    n = pp.n
    return _sign(n - 1) * pp.p * pp.q * n


def edge_join_lpoly(g1: Graph, u: int, g2: Graph, v: int) -> IntPoly:
    """Laplacian polynomial of ``g1 + g2 + uv`` from the parts and their vertex-deleted minors."""
    from .charpoly import principal_charpoly

    l1, l2 = charpoly(g1, "L"), charpoly(g2, "L")
    return l1 * l2 - l1 * principal_charpoly(g2, "L", [v]) - l2 * principal_charpoly(g1, "L", [u])


def n_components(g: Graph) -> int:
    return len(components(g))
