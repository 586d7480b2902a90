"""Spectral summaries and exhaustive cospectral-mate searches for propeller graphs."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterable

from .canon import certificate
from .charpoly import MatrixKind, charpoly
from .config import check_ceiling, mate_ceiling
from .degseq import (
    MIN_SOLVER_ORDER,
    candidate_degree_sequences,
    equal_moment_sequences,
    is_feasible_count,
    propeller_degree_sequence,
    triangle_feasibility,
)
from .generate import enumerate_graphs
from .graph import (
    DegreeSequence,
    Graph,
    PropellerParams,
    has_two_disjoint_cycles,
    is_connected,
    make_propeller,
    propellers_of_order,
    subdivision,
    triangle_count,
)
from .io import to_graph6
from .poly import IntPoly, count_roots_greater, eval_at, power_sums, zero_multiplicity

log = logging.getLogger(__name__)

DS = "DS-at-this-order"
MATE_FOUND = "mate-found"


@dataclass(frozen=True)
class SpectralSummary:
    """Invariants read off a characteristic polynomial alone."""

    kind: MatrixKind
    n: int
    m: int
    moments: tuple[int, ...]
    charpoly: IntPoly
    component_count: int | None = None
    spanning_trees: int | None = None
    bipartite_components: int | None = None

    def to_dict(self) -> dict[str, Any]:
        out = {
            "kind": self.kind.value,
            "n": self.n,
            "m": self.m,
            "moments": [str(t) for t in self.moments],
            "charpoly": self.charpoly.to_json(),
        }
        if self.component_count is not None:
            out["component_count"] = self.component_count
            out["spanning_trees"] = str(self.spanning_trees)
        if self.bipartite_components is not None:
            out["bipartite_components"] = self.bipartite_components
        return out


def summary_from_charpoly(p: IntPoly, kind: MatrixKind | str) -> SpectralSummary:
    kind = MatrixKind.parse(kind)
    n = p.degree
    sums = tuple(power_sums(p, 4))
    if kind is MatrixKind.L:
        m = -p[n - 1] // 2 if n >= 1 else 0
        comps = zero_multiplicity(p)
        trees = abs(p[1]) // n if comps == 1 else 0
        return SpectralSummary(kind, n, m, sums, p, component_count=comps, spanning_trees=trees)
    if kind is MatrixKind.Q:
        return SpectralSummary(
            kind, n, sums[1] // 2, sums, p, bipartite_components=zero_multiplicity(p)
        )
    return SpectralSummary(kind, n, sums[2] // 2, sums, p)


def summarize(g: Graph, kind: MatrixKind | str) -> SpectralSummary:
    return summary_from_charpoly(charpoly(g, kind), kind)


def lambda2_below_2(g: Graph) -> bool:
    """Second largest adjacency eigenvalue strictly below 2 (exact)."""
    if g.n == 0:
        return True
    return count_roots_greater(charpoly(g, MatrixKind.A), 2, strict=False) <= 1


# ---------------------------------------------------------------------------


@lru_cache(maxsize=200_000)
def _cached_charpoly(g: Graph, kind: MatrixKind) -> IntPoly:
    return charpoly(g, kind)


def mate_search(
    g: Graph,
    kind: MatrixKind | str,
    restrict_degseq: Iterable[Iterable[int]] | None = None,
    *,
    prefilter=None,
    jobs: int = 1,
    ceiling: int | None = None,
) -> list[Graph]:
    """All graphs non-isomorphic to ``g`` with the same characteristic polynomial.

    Cospectral graphs share ``n`` and ``m``, so only ``(n, m)`` classes are
    scanned. ``restrict_degseq`` limits (and prunes) the scan to those degree
    sequences; ``prefilter`` rejects classes before any polynomial is computed.
    """
    kind = MatrixKind.parse(kind)
    limit = mate_ceiling() if ceiling is None else ceiling
    check_ceiling(g.n, limit, "mate search")
    target = _cached_charpoly(g, kind)
    own = certificate(g)
    mates = []
    for h in enumerate_graphs(
        g.n, g.m, degree_sequences=restrict_degseq, jobs=jobs, ceiling=max(limit, g.n)
    ):
        if prefilter is not None and not prefilter(h):
            continue
        if _cached_charpoly(h, kind) == target and certificate(h) != own:
            mates.append(h)
    return sorted(mates, key=certificate)


def propeller_pairwise_distinct(n: int, kind: MatrixKind | str) -> bool:
    """Whether all propellers of order ``n`` have pairwise distinct polynomials."""
    kind = MatrixKind.parse(kind)
    polys = [charpoly(make_propeller(pp), kind) for pp in propellers_of_order(n)]
    return len(set(polys)) == len(polys)


# ---------------------------------------------------------------------------


@dataclass
class DsReport:
    params: PropellerParams
    kind: MatrixKind
    ceiling: int
    summary: SpectralSummary
    candidates: list[DegreeSequence]
    filtered: list[DegreeSequence]
    mates: list[Graph] = field(default_factory=list)
    scanned: int = 0
    passed_filters: int = 0

    @property
    def verdict(self) -> str:
        return MATE_FOUND if self.mates else DS

    def to_dict(self) -> dict[str, Any]:
        return {
            "params": {"p": self.params.p, "q": self.params.q, "k": self.params.k},
            "kind": self.kind.value,
            "ceiling": self.ceiling,
            "summary": self.summary.to_dict(),
            "candidates": [list(d) for d in self.candidates],
            "filtered": [list(d) for d in self.filtered],
            "scanned": self.scanned,
            "passed_filters": self.passed_filters,
            "mates": [to_graph6(h) for h in self.mates],
            "verdict": self.verdict,
        }


def _candidate_sequences(n: int, kind: MatrixKind) -> list[DegreeSequence]:
    if n >= MIN_SOLVER_ORDER:
        cands = candidate_degree_sequences(n, kind)
    else:
        # below the solver's range, enumerate the equal-moment multisets directly
        min_degree = 1 if kind is MatrixKind.L else 0
        cands = equal_moment_sequences(propeller_degree_sequence(n), min_degree)
    return sorted(cands, reverse=True)


def ds_verify(
    params: PropellerParams | tuple[int, int, int],
    kind: MatrixKind | str,
    *,
    jobs: int = 1,
    ceiling: int | None = None,
) -> DsReport:
    """Search exhaustively for a cospectral mate of a propeller at its own order.

    Pipeline: spectral summary, candidate degree sequences (equal ``sum d`` and
    ``sum d^2``), triangle-count feasibility, structural filters (connected for
    ``L``; no two vertex-disjoint cycles for ``Q``), then exact polynomial
    comparison over every surviving isomorphism class.
    """
    if not isinstance(params, PropellerParams):
        params = PropellerParams(*params)
    kind = MatrixKind.parse(kind)
    if kind is MatrixKind.A:
        raise ValueError("DS verification is provided for the L and Q kinds only")
    limit = mate_ceiling() if ceiling is None else ceiling
    check_ceiling(params.n, limit, "DS verification")

    g = make_propeller(params)
    summary = summarize(g, kind)
    n3 = triangle_count(g)
    candidates = _candidate_sequences(params.n, kind)
    filtered = [
        d for d in candidates if is_feasible_count(triangle_feasibility(n3, d, kind)[0])
    ]
    report = DsReport(params, kind, limit, summary, candidates, filtered)

    s3_target = 6 * n3 + (-1 if kind is MatrixKind.L else 1) * sum(d**3 for d in g.degrees())

    def structural(h: Graph) -> bool:
        report.scanned += 1
        sign = -1 if kind is MatrixKind.L else 1
        if 6 * triangle_count(h) + sign * sum(d**3 for d in h.degrees()) != s3_target:
            return False
        if kind is MatrixKind.L and not is_connected(h):
            return False
        if kind is MatrixKind.Q and has_two_disjoint_cycles(h):
            return False
        report.passed_filters += 1
        return True

    report.mates = mate_search(
        g, kind, restrict_degseq=filtered, prefilter=structural, jobs=jobs, ceiling=limit
    )
    log.info("ds_verify %s %s: %s", params, kind.value, report.verdict)
    return report


# ---------------------------------------------------------------------------


def is_smith(g: Graph) -> bool:
    """Connected with largest adjacency eigenvalue exactly 2."""
    if not is_connected(g):
        return False
    p = charpoly(g, MatrixKind.A)
    return eval_at(p, 2) == 0 and count_roots_greater(p, 2, strict=True) == 0


def smith_census(n_max: int, *, ceiling: int | None = None) -> list[Graph]:
    """Every connected graph on at most ``n_max`` vertices with largest eigenvalue 2.

    The average degree never exceeds the largest eigenvalue, so ``m <= n``
    and only ``m`` in ``{n - 1, n}`` needs scanning.
    """
    out = []
    for n in range(1, n_max + 1):
        for m in (n - 1, n):
            if m < 0 or m > n * (n - 1) // 2:
                continue
            for h in enumerate_graphs(n, m, is_connected, ceiling=ceiling):
                if is_smith(h):
                    out.append(h)
    return out


def subdivision_lambda2_check(params: PropellerParams) -> tuple[bool, bool]:
    g = make_propeller(params)
    return lambda2_below_2(g), lambda2_below_2(subdivision(g))
