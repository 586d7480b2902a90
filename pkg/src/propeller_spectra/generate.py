"""Isomorph-free enumeration of small graphs.

Graphs with ``n`` vertices are grown one edge at a time from the empty graph.
Each level keeps one canonical representative per isomorphism class, and new
edges are only tried once per orbit of non-edges under the automorphisms found
while canonicalising. Every graph with ``j + 1`` edges arises from some graph
with ``j`` edges, so each level is complete.

When the target degree sequences are known, intermediate graphs whose degrees
cannot grow into any of them are dropped early.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .canon import canonical_form
from .config import check_ceiling, enumeration_ceiling
from .graph import DegreeSequence, Graph

log = logging.getLogger(__name__)

Masks = tuple[int, ...]


def _canonical_masks(masks: Sequence[int]) -> tuple[tuple[int, int], Masks, tuple]:
    g = Graph.from_masks(masks)
    c = canonical_form(g)
    lab = c.labeling
    # conjugate automorphisms into the canonical labelling
    gens = []
    for gen in c.generators:
        conj = [0] * len(lab)
        for v, w in enumerate(gen):
            conj[lab[v]] = lab[w]
        gens.append(tuple(conj))
    return c.certificate, tuple(c.graph(g).masks()), tuple(gens)


def _dominated(degrees: list[int], targets: tuple[tuple[int, ...], ...]) -> bool:
    d = sorted(degrees, reverse=True)
    return any(all(a <= b for a, b in zip(d, t)) for t in targets)


def _augment(
    masks: Masks, generators: tuple, targets: tuple[tuple[int, ...], ...] | None
) -> list[Masks]:
    n = len(masks)
    seen: set[tuple[int, int]] = set()
    out = []
    degrees = [bin(x).count("1") for x in masks]
    for u in range(n):
        for v in range(u + 1, n):
            if masks[u] >> v & 1 or (u, v) in seen:
                continue
            # mark the orbit of this non-edge under the known automorphisms
            orbit = {(u, v)}
            frontier = [(u, v)]
            while frontier:
                a, b = frontier.pop()
                for gen in generators:
                    x, y = gen[a], gen[b]
                    e = (x, y) if x < y else (y, x)
                    if e not in orbit:
                        orbit.add(e)
                        frontier.append(e)
            seen |= orbit
            if targets is not None:
                degrees[u] += 1
                degrees[v] += 1
                ok = _dominated(degrees, targets)
                degrees[u] -= 1
                degrees[v] -= 1
                if not ok:
                    continue
            new = list(masks)
            new[u] |= 1 << v
            new[v] |= 1 << u
            out.append(tuple(new))
    return out


def _expand_chunk(args) -> list[tuple[tuple[int, int], Masks, tuple]]:
    chunk, targets = args
    found: dict[tuple[int, int], tuple[Masks, tuple]] = {}
    for masks, gens in chunk:
        for child in _augment(masks, gens, targets):
            cert, canon, cgens = _canonical_masks(child)
            if cert not in found:
                found[cert] = (canon, cgens)
    return [(c, m, g) for c, (m, g) in found.items()]


class _Levels:
    """Lazily grown edge levels for a fixed ``(n, targets)``."""

    def __init__(self, n: int, targets: tuple[tuple[int, ...], ...] | None):
        self.n = n
        self.targets = targets
        cert, masks, gens = _canonical_masks([0] * n)
        self.levels: list[list[tuple[tuple[int, int], Masks, tuple]]] = [[(cert, masks, gens)]]

    def get(self, m: int, jobs: int = 1) -> list[tuple[tuple[int, int], Masks, tuple]]:
        while len(self.levels) <= m:
            self.levels.append(self._next(self.levels[-1], jobs))
            log.debug("n=%d level %d: %d classes", self.n, len(self.levels) - 1, len(self.levels[-1]))
        return self.levels[m]

    def _next(self, level, jobs: int):
        items = [(masks, gens) for _, masks, gens in level]
        if jobs > 1 and len(items) > 8 * jobs:
            size = -(-len(items) // (4 * jobs))
            chunks = [(items[i : i + size], self.targets) for i in range(0, len(items), size)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_expand_chunk, chunks))
        else:
            parts = [_expand_chunk((items, self.targets))]
        merged: dict[tuple[int, int], tuple[Masks, tuple]] = {}
        for part in parts:
            for cert, masks, gens in part:
                merged.setdefault(cert, (masks, gens))
        return [(c, *merged[c]) for c in sorted(merged)]


@lru_cache(maxsize=64)
def _levels_for(n: int, targets: tuple[tuple[int, ...], ...] | None) -> _Levels:
    return _Levels(n, targets)


def _targets(n: int, m: int, degree_sequences: Iterable[Sequence[int]] | None):
    if degree_sequences is None:
        return None
    out = set()
    for ds in degree_sequences:
        ds = tuple(DegreeSequence(ds))
        if len(ds) == n and sum(ds) == 2 * m:
            out.add(ds)
    return tuple(sorted(out))


def enumerate_graphs(
    n: int,
    m: int,
    filter: Callable[[Graph], bool] | None = None,
    *,
    degree_sequences: Iterable[Sequence[int]] | None = None,
    jobs: int = 1,
    ceiling: int | None = None,
) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of ``(n, m)`` graphs.

    ``degree_sequences`` restricts the output to those degree multisets and is
    also used to prune the search. ``filter`` is applied to each result.
    Output is sorted by certificate, so it is reproducible run to run.
    """
    limit = enumeration_ceiling() if ceiling is None else ceiling
    check_ceiling(n, limit, "graph enumeration")
    if n < 0 or not 0 <= m <= n * (n - 1) // 2:
        raise ValueError(f"no simple graphs with n={n}, m={m}")
    targets = _targets(n, m, degree_sequences)
    if targets is not None and not targets:
        return
    level = _levels_for(n, targets).get(m, jobs)
    for _, masks, _ in level:
        g = Graph.from_masks(masks)
        if targets is not None and tuple(DegreeSequence.of(g)) not in targets:
            continue
        if filter is None or filter(g):
            yield g


def enumerate_all(n: int, filter: Callable[[Graph], bool] | None = None) -> Iterator[Graph]:
    """Every isomorphism class on ``n`` vertices, by increasing edge count."""
    for m in range(n * (n - 1) // 2 + 1):
        yield from enumerate_graphs(n, m, filter)


def class_count(n: int, m: int) -> int:
    return sum(1 for _ in enumerate_graphs(n, m))
