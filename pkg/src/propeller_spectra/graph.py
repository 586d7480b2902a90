"""Simple undirected graphs and the graph families used throughout the package."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph or invalid family parameters."""


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Neighbour lists are stored sorted, so iteration order is deterministic.
    """

    __slots__ = ("n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(s)) for s in nbrs))
        object.__setattr__(
            self,
            "_edges",
            tuple((u, v) for u in range(n) for v in self._adj[u] if u < v),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        n = len(masks)
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1))

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def masks(self) -> list[int]:
        out = []
        for a in self._adj:
            mask = 0
            for v in a:
                mask |= 1 << v
            out.append(mask)
        return out

    def adjacency_matrix(self) -> list[list[int]]:
        mat = [[0] * self.n for _ in range(self.n)]
        for u, v in self._edges:
            mat[u][v] = mat[v][u] = 1
        return mat

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self._edges))

    def induced(self, vertices: Iterable[int]) -> Graph:
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            ((index[u], index[v]) for u, v in self._edges if u in index and v in index),
        )

    def remove_vertices(self, vertices: Iterable[int]) -> Graph:
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph(self.n, list(self._edges) + [(u, v)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)})"


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


def join_by_edge(g1: Graph, u: int, g2: Graph, v: int) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus the edge ``u``--``v``.

    Vertices of ``g2`` are shifted by ``g1.n``.
    """
    g = disjoint_union(g1, g2)
    return g.add_edge(u, g1.n + v)


# ---------------------------------------------------------------------------
# Families


def make_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("a path needs at least one vertex")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_star(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def make_complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def _cycles_through_hub(p: int, q: int) -> list[tuple[int, int]]:
    first = [0] + list(range(1, p))
    second = [0] + list(range(p, p + q - 1))
    edges = []
    for cyc in (first, second):
        edges.extend(zip(cyc, cyc[1:] + cyc[:1]))
    return edges


def make_infinity(p: int, q: int) -> Graph:
    """Two cycles ``C_p`` and ``C_q`` glued at vertex 0."""
    if p < 3 or q < 3:
        raise GraphError("both cycles of an infinity graph need length >= 3")
    return Graph(p + q - 1, _cycles_through_hub(p, q))


@dataclass(frozen=True, order=True)
class PropellerParams:
    """Cycle lengths ``p >= q >= 3`` and pendant path order ``k >= 1``."""

    p: int
    q: int
    k: int

    def __post_init__(self):
        if self.p < 3 or self.q < 3:
            raise GraphError("propeller cycles need length >= 3")
        if self.k < 1:
            raise GraphError("propeller path needs at least one vertex")
        if self.p < self.q:
            p, q = self.q, self.p
            object.__setattr__(self, "p", p)
            object.__setattr__(self, "q", q)

    @property
    def n(self) -> int:
        return self.p + self.q + self.k - 1

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.k)

    def __str__(self) -> str:
        return f"({self.p},{self.q},{self.k})"


def propellers_of_order(n: int) -> list[PropellerParams]:
    """All canonical propeller parameter triples with ``n`` vertices."""
    out = []
    for q in range(3, n):
        for p in range(q, n):
            k = n + 1 - p - q
            if k >= 1:
                out.append(PropellerParams(p, q, k))
    return sorted(out)


def make_propeller(params: PropellerParams | tuple[int, int, int]) -> Graph:
    """Infinity graph ``(p, q)`` with a ``k``-vertex path hanging off the hub.

    Labels: hub 0, first cycle ``1..p-1``, second cycle ``p..p+q-2``,
    path ``p+q-1..n-1`` starting next to the hub.
    """
    if not isinstance(params, PropellerParams):
        params = PropellerParams(*params)
    p, q, k = params.as_tuple()
    n = params.n
    edges = _cycles_through_hub(p, q)
    path = [0] + list(range(p + q - 1, n))
    edges.extend(zip(path, path[1:]))
    return Graph(n, edges)


def make_spider(*legs: int) -> Graph:
    """Tree with one centre and pendant paths of the given lengths."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


@dataclass(frozen=True)
class SmithKind:
    """One of the connected graphs with largest adjacency eigenvalue 2.

    ``tag`` is ``"C"`` (cycle, ``param`` = order), ``"W"`` (``param`` = length of
    the path joining the two branch vertices), or ``"S1"``, ``"S2"``, ``"S3"``.
    """

    tag: str
    param: int | None = None

    def __str__(self) -> str:
        return f"{self.tag}{'' if self.param is None else self.param}"

    @classmethod
    def parse(cls, text: str) -> SmithKind:
        t = text.strip().upper()
        if t in ("S1", "S2", "S3"):
            return cls(t)
        if t[:1] in ("C", "W") and t[1:].isdigit():
            return cls(t[0], int(t[1:]))
        raise GraphError(f"unknown Smith graph {text!r}")


# the three exceptional trees: spiders with legs (2,2,2), (1,3,3), (1,2,5)
_EXCEPTIONAL_LEGS = {"S1": (2, 2, 2), "S2": (1, 3, 3), "S3": (1, 2, 5)}


def make_smith(kind: SmithKind | str) -> Graph:
    if isinstance(kind, str):
        kind = SmithKind.parse(kind)
    if kind.tag == "C":
        if kind.param is None:
            raise GraphError("cycle Smith graph needs an order")
        return make_cycle(kind.param)
    if kind.tag == "W":
        k = kind.param
        if k is None or k < 0:
            raise GraphError("W_k needs k >= 0")
        if k == 0:
            return make_star(4)
        # branch vertices 0 and k joined by a path, two leaves on each
        edges = [(i, i + 1) for i in range(k)]
        edges += [(0, k + 1), (0, k + 2), (k, k + 3), (k, k + 4)]
        return Graph(k + 5, edges)
    if kind.tag in _EXCEPTIONAL_LEGS:
        return make_spider(*_EXCEPTIONAL_LEGS[kind.tag])
    raise GraphError(f"unknown Smith graph tag {kind.tag!r}")


def line_graph(g: Graph) -> Graph:
    edges = g.edges
    index = {e: i for i, e in enumerate(edges)}
    out = []
    for v in range(g.n):
        incident = [index[(min(v, w), max(v, w))] for w in g.neighbors(v)]
        out.extend(combinations(incident, 2))
    return Graph(len(edges), out)


def subdivision(g: Graph) -> Graph:
    """Replace every edge by a path of length two; new vertices follow the old."""
    out = []
    for i, (u, v) in enumerate(g.edges):
        w = g.n + i
        out += [(u, w), (w, v)]
    return Graph(g.n + g.m, out)


# ---------------------------------------------------------------------------
# Structure


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def _two_colour(g: Graph, comp: list[int]) -> bool:
    colour = {comp[0]: 0}
    stack = [comp[0]]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in colour:
                colour[w] = 1 - colour[v]
                stack.append(w)
            elif colour[w] == colour[v]:
                return False
    return True


def bipartite_component_count(g: Graph) -> int:
    return sum(_two_colour(g, c) for c in components(g))


def is_bipartite(g: Graph) -> bool:
    return bipartite_component_count(g) == len(components(g))


def triangle_count(g: Graph) -> int:
    masks = g.masks()
    total = 0
    for u, v in g.edges:
        common = masks[u] & masks[v]
        total += bin(common >> (v + 1)).count("1")
    return total


def c4_count(g: Graph) -> int:
    """Number of 4-cycles contained in ``g`` as subgraphs (not necessarily induced)."""
    masks = g.masks()
    twice = 0
    for u, v in combinations(range(g.n), 2):
        c = bin(masks[u] & masks[v]).count("1")
        twice += c * (c - 1) // 2
    return twice // 2


def simple_cycles(g: Graph) -> set[frozenset[int]]:
    """Vertex sets of all cycles of ``g``."""
    found: set[frozenset[int]] = set()
    for s in range(g.n):
        # cycles whose smallest vertex is s
        stack = [(s, [s], 1 << s)]
        while stack:
            v, path, used = stack.pop()
            for w in g.neighbors(v):
                if w == s and len(path) >= 3:
                    found.add(frozenset(path))
                elif w > s and not used >> w & 1:
                    stack.append((w, path + [w], used | 1 << w))
    return found


def _has_cycle(g: Graph, excluded: frozenset[int]) -> bool:
    keep = [v for v in range(g.n) if v not in excluded]
    sub = g.induced(keep)
    return sub.m > sub.n - len(components(sub))


def has_two_disjoint_cycles(g: Graph) -> bool:
    """Whether ``g`` contains two vertex-disjoint cycles."""
    if g.m - g.n + len(components(g)) < 2:
        return False
    for cyc in sorted(simple_cycles(g), key=lambda c: (len(c), sorted(c))):
        if _has_cycle(g, cyc):
            return True
    return False


class DegreeSequence(tuple):
    """Degree multiset stored in non-increasing order."""

    def __new__(cls, degrees: Iterable[int]):
        return super().__new__(cls, sorted((int(d) for d in degrees), reverse=True))

    @classmethod
    def of(cls, g: Graph) -> DegreeSequence:
        return cls(g.degrees())

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> DegreeSequence:
        return cls(d for d, c in counts.items() for _ in range(c))

    def counts(self) -> dict[int, int]:
        return dict(sorted(Counter(self).items(), reverse=True))

    def power_sum(self, k: int) -> int:
        return sum(d**k for d in self)

    def is_graphical(self) -> bool:
        """Erdos--Gallai test."""
        d = list(self)
        if sum(d) % 2:
            return False
        n = len(d)
        for r in range(1, n + 1):
            lhs = sum(d[:r])
            rhs = r * (r - 1) + sum(min(x, r) for x in d[r:])
            if lhs > rhs:
                return False
        return True

    def format(self) -> str:
        """Exponent notation, e.g. ``(5, 2^4, 1)``."""
        parts = [str(d) if c == 1 else f"{d}^{c}" for d, c in self.counts().items()]
        return "(" + ", ".join(parts) + ")"

    def __repr__(self) -> str:
        return f"DegreeSequence{self.format()}"


@dataclass(frozen=True)
class StructureSummary:
    components: int
    triangle_count: int
    c4_count: int
    degree_sequence: DegreeSequence
    bipartite_component_count: int
    has_two_disjoint_cycles: bool

    def to_dict(self) -> dict:
        return {
            "components": self.components,
            "triangle_count": self.triangle_count,
            "c4_count": self.c4_count,
            "degree_sequence": list(self.degree_sequence),
            "bipartite_component_count": self.bipartite_component_count,
            "has_two_disjoint_cycles": self.has_two_disjoint_cycles,
        }


def structure_summary(g: Graph) -> StructureSummary:
    return StructureSummary(
        components=len(components(g)),
        triangle_count=triangle_count(g),
        c4_count=c4_count(g),
        degree_sequence=DegreeSequence.of(g),
        bipartite_component_count=bipartite_component_count(g),
        has_two_disjoint_cycles=has_two_disjoint_cycles(g),
    )


def bareiss_determinant(mat: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; exact for integer matrices."""
    a = [row[:] for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def laplacian_matrix(g: Graph) -> list[list[int]]:
    mat = [[0] * g.n for _ in range(g.n)]
    for v in range(g.n):
        mat[v][v] = g.degree(v)
    for u, v in g.edges:
        mat[u][v] = mat[v][u] = -1
    return mat


def spanning_tree_count(g: Graph) -> int:
    """Matrix-Tree theorem: determinant of the Laplacian with one row/column removed."""
    if g.n == 0:
        return 0
    if not is_connected(g):
        return 0
    lap = laplacian_matrix(g)
    minor = [row[1:] for row in lap[1:]]
    return bareiss_determinant(minor)
