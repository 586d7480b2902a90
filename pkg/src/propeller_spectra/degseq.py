"""Degree sequences that a Laplacian or signless-Laplacian mate of a propeller may have.

A cospectral mate ``H`` of ``G`` keeps ``sum(d)`` and ``sum(d^2)``. Writing
``deg(H) = deg(G) + t`` with ``deg(G) = (5, 2^{n-2}, 1)``, this becomes

    t_1^2 + 6 t_1 + a = 0,   a = sum(t_mid^2) + t_n^2 - 2 t_n,

so ``t_1 = -3 +/- sqrt(9 - a)``. Only ``a`` in ``{0, 5, 8, 9}`` gives integer
``t_1`` once ``a >= -1``. For each admissible ``(t_1, t_n)`` the middle entries
are a bounded multiset problem, which is solved exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Iterator

from .charpoly import MatrixKind
from .graph import DegreeSequence

MIN_SOLVER_ORDER = 12

# lower bounds on (t_1, t_mid, t_n): degree >= 1 for L (connected mate),
# degree >= 0 for Q (isolated vertices allowed)
_LOWER = {MatrixKind.L: (-4, -1, 0), MatrixKind.Q: (-5, -2, -1)}


def propeller_degree_sequence(n: int) -> DegreeSequence:
    return DegreeSequence([5] + [2] * (n - 2) + [1])


@dataclass(frozen=True)
class DegSeqCandidate:
    t1: int
    tn: int
    middle: tuple[tuple[int, int], ...]  # (value, multiplicity) for non-zero middle entries
    degree_sequence: DegreeSequence

    def middle_format(self, n: int) -> str:
        zeros = n - 2 - sum(c for _, c in self.middle)
        parts = [f"{v}^{c}" for v, c in self.middle] + [f"0^{zeros}"]
        return "(" + ", ".join(parts) + ")"


@dataclass(frozen=True)
class TableRow:
    a: int
    t1: int
    tn: int
    solutions: tuple[DegSeqCandidate, ...]

    @property
    def feasible(self) -> bool:
        return bool(self.solutions)


def _middle_multisets(
    count: int, lower: int, sum1: int, sum2: int
) -> Iterator[tuple[tuple[int, int], ...]]:
    """Multisets of ``count`` integers ``>= lower`` with given sum and sum of squares.

    Only non-zero values are reported, as ``(value, multiplicity)`` pairs in
    decreasing value order.
    """
    if sum2 < 0:
        return
    top = isqrt(sum2)
    values = [v for v in range(top, max(lower, -top) - 1, -1) if v != 0]

    def rec(i: int, left: int, s1: int, s2: int, acc: list[tuple[int, int]]):
        if s2 == 0:
            if s1 == 0:
                yield tuple(acc)
            return
        if i == len(values) or left == 0:
            return
        v = values[i]
        # every remaining entry has |entry| <= |values[i:]|, so s2 bounds |s1|
        if abs(s1) > s2:
            return
        max_c = min(left, s2 // (v * v))
        for c in range(max_c, -1, -1):
            if c:
                acc.append((v, c))
            yield from rec(i + 1, left - c, s1 - c * v, s2 - c * v * v, acc)
            if c:
                acc.pop()

    yield from rec(0, count, sum1, sum2, [])


def solver_tables(n: int, kind: MatrixKind | str) -> list[TableRow]:
    """Every ``(a, t_1, t_n)`` case with its middle-entry solutions, in case order."""
    kind = MatrixKind.parse(kind)
    if kind not in _LOWER:
        raise ValueError("degree-sequence solver covers the L and Q kinds")
    if n < MIN_SOLVER_ORDER:
        raise ValueError(f"solver needs n >= {MIN_SOLVER_ORDER}")
    lo1, lomid, lon = _LOWER[kind]
    rows = []
    for a in range(-1, 10):
        disc = 9 - a
        r = isqrt(disc)
        if r * r != disc:
            continue
        t1s = sorted({-3 + r, -3 - r}, reverse=True)
        for t1 in t1s:
            if t1 < lo1 or 5 + t1 > n - 1:
                continue
            tn_values = [t for t in range(lon, n) if t * t - 2 * t <= a]
            for tn in tn_values:
                sols = []
                for middle in _middle_multisets(n - 2, lomid, -t1 - tn, a - (tn * tn - 2 * tn)):
                    degrees = [5 + t1, 1 + tn]
                    nonzero = 0
                    for v, c in middle:
                        degrees += [2 + v] * c
                        nonzero += c
                    degrees += [2] * (n - 2 - nonzero)
                    if max(degrees) > n - 1:
                        continue
                    sols.append(DegSeqCandidate(t1, tn, middle, DegreeSequence(degrees)))
                rows.append(TableRow(a, t1, tn, tuple(sols)))
    return rows


def candidate_degree_sequences(
    base: Iterable[int] | int, kind: MatrixKind | str
) -> set[DegreeSequence]:
    """Degree sequences a mate of the propeller with degree sequence ``base`` could have.

    ``base`` may also be given as the order ``n``.
    """
    if isinstance(base, int):
        n = base
    else:
        base = DegreeSequence(base)
        n = len(base)
        if base != propeller_degree_sequence(n):
            raise ValueError("solver expects a propeller degree sequence (5, 2^{n-2}, 1)")
    return {c.degree_sequence for row in solver_tables(n, kind) for c in row.solutions}


def equal_moment_sequences(base: Iterable[int], min_degree: int) -> set[DegreeSequence]:
    """All degree multisets with the same length, sum and sum of squares as ``base``.

    Plain enumeration of non-increasing sequences; no case analysis.
    """
    base = DegreeSequence(base)
    n, s1, s2 = len(base), sum(base), base.power_sum(2)
    out: set[DegreeSequence] = set()

    def rec(prefix: list[int], cap: int, left: int, r1: int, r2: int):
        if left == 0:
            if r1 == 0 and r2 == 0:
                out.add(DegreeSequence(prefix))
            return
        # remaining entries lie in [min_degree, cap]
        if r1 < left * min_degree or r2 < left * min_degree * min_degree:
            return
        if r1 > left * cap:
            return
        for d in range(min(cap, r1 - (left - 1) * min_degree), min_degree - 1, -1):
            if d * d > r2:
                continue
            prefix.append(d)
            rec(prefix, d, left - 1, r1 - d, r2 - d * d)
            prefix.pop()

    rec([], n - 1, n, s1, s2)
    return out


def triangle_feasibility(
    base_n3: int | Iterable[int],
    candidate: Iterable[int],
    kind: MatrixKind | str,
    base: Iterable[int] | None = None,
) -> list[int | Fraction]:
    """Triangle counts forced on a mate with degree sequence ``candidate``.

    For ``L`` the invariant is ``6 n_3 - sum(d^3)``; for ``Q`` it is
    ``6 n_3 + sum(d^3)``. A negative or fractional result rules the candidate out.
    ``base`` defaults to the propeller sequence of the same order.
    """
    kind = MatrixKind.parse(kind)
    cand = DegreeSequence(candidate)
    base = propeller_degree_sequence(len(cand)) if base is None else DegreeSequence(base)
    diff = cand.power_sum(3) - base.power_sum(3)
    if kind is MatrixKind.Q:
        diff = -diff
    elif kind is not MatrixKind.L:
        raise ValueError("triangle feasibility covers the L and Q kinds")
    n3s = [base_n3] if isinstance(base_n3, int) else list(base_n3)
    out: list[int | Fraction] = []
    for n3 in n3s:
        v = Fraction(6 * n3 + diff, 6)
        out.append(int(v) if v.denominator == 1 else v)
    return out


def is_feasible_count(value: int | Fraction) -> bool:
    return isinstance(value, int) and value >= 0
