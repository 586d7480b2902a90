"""Canonical labelling of small graphs.

Individualisation--refinement search: equitable partition refinement, branch
on the first smallest non-singleton cell, and prune branches that lie in the
same orbit of automorphisms discovered at the leaves. The certificate is the
largest upper-triangle adjacency word over all leaves of the search tree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class Canonical:
    labeling: tuple[int, ...]  # labeling[v] = canonical position of vertex v
    certificate: tuple[int, int]  # (n, adjacency word)
    generators: tuple[tuple[int, ...], ...]  # automorphisms found along the way

    def graph(self, g: Graph) -> Graph:
        return g.relabel(self.labeling)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _refine(masks: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; order of new cells is label-invariant."""
    while True:
        cell_masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            cell_masks.append(m)
        new_cells: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                key = tuple(_popcount(masks[v] & cm) for cm in cell_masks)
                groups.setdefault(key, []).append(v)
            for key in sorted(groups):
                new_cells.append(groups[key])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _word(masks: list[int], order: list[int]) -> int:
    """Upper-triangle adjacency bits of the graph relabelled by ``order``."""
    n = len(order)
    w = 0
    for i in range(n):
        mi = masks[order[i]]
        for j in range(i + 1, n):
            w = (w << 1) | (mi >> order[j] & 1)
    return w


class _Search:
    def __init__(self, masks: list[int]):
        self.masks = masks
        self.n = len(masks)
        self.first_order: list[int] | None = None
        self.first_word: int | None = None
        self.best_order: list[int] | None = None
        self.best_word = -1
        self.generators: list[tuple[int, ...]] = []

    def _automorphism(self, a: list[int], b: list[int]) -> tuple[int, ...]:
        # maps a[i] -> b[i]
        perm = [0] * self.n
        for x, y in zip(a, b):
            perm[x] = y
        return tuple(perm)

    def _leaf(self, order: list[int]) -> None:
        w = _word(self.masks, order)
        if self.first_order is None:
            self.first_order, self.first_word = order, w
            self.best_order, self.best_word = order, w
            return
        if w == self.first_word:
            self.generators.append(self._automorphism(self.first_order, order))
        elif w == self.best_word:
            self.generators.append(self._automorphism(self.best_order, order))
        elif w > self.best_word:
            self.best_order, self.best_word = order, w

    def _orbits(self, fixed: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gen in self.generators:
            if all(gen[v] == v for v in fixed):
                for v, w in enumerate(gen):
                    a, b = find(v), find(w)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def run(self, cells: list[list[int]], fixed: list[int]) -> None:
        cells = _refine(self.masks, cells)
        if len(cells) == self.n:
            self._leaf([c[0] for c in cells])
            return
        target_index = min(
            (i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i)
        )
        target = cells[target_index]
        explored: list[int] = []
        for v in sorted(target):
            if explored:
                orbits = self._orbits(fixed)
                if any(orbits[u] == orbits[v] for u in explored):
                    continue
            child = (
                cells[:target_index]
                + [[v], [u for u in target if u != v]]
                + cells[target_index + 1 :]
            )
            self.run(child, fixed + [v])
            explored.append(v)


def canonical_form(g: Graph) -> Canonical:
    masks = g.masks()
    n = g.n
    if n == 0:
        return Canonical((), (0, 0), ())
    search = _Search(masks)
    search.run([list(range(n))], [])
    order = search.best_order
    labeling = [0] * n
    for pos, v in enumerate(order):
        labeling[v] = pos
    return Canonical(tuple(labeling), (n, search.best_word), tuple(search.generators))


def certificate(g: Graph) -> tuple[int, int]:
    return canonical_form(g).certificate


def canonicalize(g: Graph) -> tuple[Graph, tuple[int, int]]:
    """Canonically relabelled copy of ``g`` and its certificate."""
    c = canonical_form(g)
    return c.graph(g), c.certificate


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and certificate(g) == certificate(h)
