"""Acceptance criteria 1-10, one test each.

Every test records a single ``criterion N: PASS|FAIL ...`` line, shown in
the terminal summary. Run this file directly to print the lines without pytest.
"""

from __future__ import annotations

import contextlib
import time
from collections import defaultdict

from conftest import ACCEPTANCE_LINES
from propeller_spectra import formulas as F
from propeller_spectra.canon import certificate
from propeller_spectra.charpoly import charpoly, principal_charpoly
from propeller_spectra.degseq import candidate_degree_sequences, solver_tables
from propeller_spectra.generate import enumerate_graphs
from propeller_spectra.graph import (
    DegreeSequence,
    has_two_disjoint_cycles,
    is_bipartite,
    line_graph,
    make_cycle,
    make_infinity,
    make_path,
    make_propeller,
    make_smith,
    propellers_of_order,
    subdivision,
    triangle_count,
)
from propeller_spectra.io import to_graph6
from propeller_spectra.poly import IntPoly, count_roots_greater, power_sums
from propeller_spectra.verifier import (
    lambda2_below_2,
    mate_search,
    propeller_pairwise_distinct,
    smith_census,
)

X = IntPoly.x()


@contextlib.contextmanager
def criterion(number: int):
    """Collect failures for one criterion and record a single result line."""
    failures: list[str] = []
    start = time.perf_counter()
    try:
        yield failures
    except Exception as exc:  # a crash is a failure of the criterion
        failures.append(f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    status = "PASS" if not failures else "FAIL"
    detail = "" if not failures else " - " + "; ".join(failures[:5])
    line = f"criterion {number}: {status} ({elapsed:.1f}s){detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line


def _all_graphs(n: int):
    return [g for m in range(n * (n - 1) // 2 + 1) for g in enumerate_graphs(n, m)]


def test_criterion_1_q_polynomial_regression():
    with criterion(1) as bad:
        got = charpoly(make_propeller((4, 4, 1)), "Q")
        want = X**8 - 18 * X**7 + 128 * X**6 - 468 * X**5 + 948 * X**4 - 1056 * X**3 + 592 * X**2 - 128 * X
        if got != want:
            bad.append(f"propeller(4,4,1) Q polynomial {got}")
        # the 6-vertex core: degrees (4, 3^3, 2, 1), three triangles, no two disjoint cycles
        core_deg = [DegreeSequence([4, 3, 3, 3, 2, 1])]
        cores = [
            h
            for h in enumerate_graphs(6, 8, degree_sequences=core_deg)
            if triangle_count(h) == 3 and not has_two_disjoint_cycles(h)
        ]
        polys = {charpoly(h, "Q") for h in cores}
        target = X**6 - 16 * X**5 + 96 * X**4 - 276 * X**3 + 396 * X**2 - 262 * X + 60
        if polys != {target}:
            bad.append(f"core polynomials {sorted(map(str, polys))}")


def test_criterion_2_evaluation_identities():
    with criterion(2) as bad:
        for p in range(3, 13):
            for q in range(3, p + 1):
                phi = charpoly(make_infinity(p, q), "L")
                if phi(4) != F.infinity_l_at4(p, q):
                    bad.append(f"infinity ({p},{q})")
                for k in range(1, 13):
                    g = make_propeller((p, q, k))
                    if charpoly(g, "L")(4) != F.propeller_l_at4(p, q, k):
                        bad.append(f"L at 4 ({p},{q},{k})")
                    if charpoly(g, "A")(2) != -(3 * k + 2) * p * q:
                        bad.append(f"A at 2 ({p},{q},{k})")


def test_criterion_3_path_families():
    with criterion(3) as bad:
        P = {n: charpoly(make_path(n), "L") for n in range(1, 23)}
        P[0] = IntPoly()

        def B(n):
            return IntPoly.const(1) if n == 0 else principal_charpoly(make_path(n + 1), "L", [0])

        def U(n):
            return IntPoly.const(1) if n == 0 else principal_charpoly(make_path(n + 2), "L", [0, n + 1])

        for n in range(0, 21):
            if n >= 1 and P[n + 1] != (X - 2) * P[n] - P[n - 1]:
                bad.append(f"(a) n={n}")
            if X * B(n) != P[n + 1] + P[n]:
                bad.append(f"(b) n={n}")
            if n >= 1 and P[n] != X * U(n - 1):
                bad.append(f"(c) n={n}")
            if n >= 3:
                cyc = charpoly(make_cycle(n), "L")
                if X * (cyc - 2 * (-1) ** (n + 1)) != P[n + 1] - P[n - 1]:
                    bad.append(f"(d) n={n}")
            if n >= 1:
                values = (P[n](4), B(n)(4), U(n)(4))
                if values != (4 * n, 2 * n + 1, n + 1):
                    bad.append(f"values at 4, n={n}")
                if n >= 3 and charpoly(make_cycle(n), "L")(4) != 2 + 2 * (-1) ** (n + 1):
                    bad.append(f"cycle at 4, n={n}")
        for n in range(0, 13):
            for r in F.path_closed_form_reports(n):
                if not r.equal:
                    bad.append(f"closed form {r.identity} n={n}")


def test_criterion_4_generating_identities():
    with criterion(4) as bad:
        for p in range(3, 9):
            for q in range(3, p + 1):
                for k in range(1, 9):
                    for verify in (F.verify_fL_identity, F.verify_fA_identity):
                        r = verify(p, q, k)
                        if not r.equal:
                            bad.append(f"{r.identity}({p},{q},{k}) at y^{r.first_mismatch_exponent()}")


def test_criterion_5_coefficient_and_moment_formulas():
    with criterion(5) as bad:
        for n in range(1, 8):
            for g in _all_graphs(n):
                lphi, qphi, aphi = charpoly(g, "L"), charpoly(g, "Q"), charpoly(g, "A")
                tag = to_graph6(g)
                if F.l_coefficient_formulas(g) != tuple(lphi[n - j] if n - j >= 0 else 0 for j in range(4)):
                    bad.append(f"L coefficients {tag}")
                if F.q_moment_formulas(g) != tuple(power_sums(qphi, 3)):
                    bad.append(f"Q moments {tag}")
                if F.fourth_moment_formula(g) != power_sums(aphi, 4)[4]:
                    bad.append(f"A fourth moment {tag}")
                if n <= 6 and F.tu_coefficients(g) != qphi:
                    bad.append(f"TU subgraphs {tag}")
        lg = line_graph(make_propeller((4, 4, 1)))
        if power_sums(charpoly(lg, "A"), 4)[4] != 368 or F.line_graph_fourth_moment(4, 4, 1) != 368:
            bad.append("line graph fourth moment of (4,4,1) is not 368")


def test_criterion_6_degree_sequence_solver():
    def seq(**counts):
        return DegreeSequence.from_counts({int(k[1:]): v for k, v in counts.items()})

    n = 12
    L = {
        seq(d5=1, d2=n - 2, d1=1),
        seq(d4=2, d2=n - 4, d1=2),
        seq(d4=1, d3=3, d2=n - 7, d1=3),
        seq(d3=6, d2=n - 10, d1=4),
    }
    Q = L | {seq(d4=1, d3=2, d2=n - 4, d0=1), seq(d3=5, d2=n - 7, d1=1, d0=1)}
    with criterion(6) as bad:
        if candidate_degree_sequences(n, "L") != L:
            bad.append("L set")
        if candidate_degree_sequences(n, "Q") != Q:
            bad.append("Q set")
        infeasible = {(r.a, r.t1, r.tn) for r in solver_tables(n, "L") if not r.feasible}
        if infeasible != {(0, 0, 2), (8, -2, 4)}:
            bad.append(f"infeasible rows {sorted(infeasible)}")


def test_criterion_7_exhaustive_ds_verification():
    with criterion(7) as bad:
        for n in range(6, 10):
            for pp in propellers_of_order(n):
                g = make_propeller(pp)
                for kind in ("L", "Q"):
                    mates = mate_search(g, kind)
                    if mates:
                        bad.append(
                            f"{kind}-mate of propeller{pp.as_tuple()}: {[to_graph6(h) for h in mates]}"
                        )


def test_criterion_8_pairwise_distinctness():
    with criterion(8) as bad:
        for n in range(6, 15):
            for kind in ("A", "L", "Q"):
                if not propeller_pairwise_distinct(n, kind):
                    bad.append(f"{kind} at n={n}")


def test_criterion_9_interlacing_and_smith_graphs():
    with criterion(9) as bad:
        for n in range(6, 10):
            for pp in propellers_of_order(n):
                g = make_propeller(pp)
                if not lambda2_below_2(g):
                    bad.append(f"lambda2 {pp.as_tuple()}")
                if not lambda2_below_2(subdivision(g)):
                    bad.append(f"lambda2 of subdivision {pp.as_tuple()}")
        found = smith_census(9)
        tags = [f"C{n}" for n in range(3, 10)] + [f"W{k}" for k in range(5)] + ["S1", "S2", "S3"]
        expected = sorted(certificate(make_smith(t)) for t in tags)
        if sorted(certificate(h) for h in found) != expected:
            bad.append(f"census found {len(found)} graphs, expected {len(expected)}")
        for h in found:
            phi = charpoly(h, "A")
            if phi(2) != 0 or count_roots_greater(phi, 2) != 0:
                bad.append(f"Smith graph {to_graph6(h)}")


def test_criterion_10_cross_oracle_transfers():
    with criterion(10) as bad:
        for n in range(1, 7):
            by_q: dict = defaultdict(set)
            by_s: dict = defaultdict(set)
            for g in _all_graphs(n):
                c = certificate(g)
                qphi = charpoly(g, "Q")
                by_q[qphi].add(c)
                by_s[charpoly(subdivision(g), "A")].add(c)
                if is_bipartite(g) and qphi != charpoly(g, "L"):
                    bad.append(f"bipartite Q != L for {to_graph6(g)}")
            if sorted(map(sorted, by_q.values())) != sorted(map(sorted, by_s.values())):
                bad.append(f"Q classes differ from subdivision A classes at n={n}")


if __name__ == "__main__":
    tests = [(name, fn) for name, fn in globals().items() if name.startswith("test_criterion_")]
    for _, fn in sorted(tests, key=lambda t: int(t[0].split("_")[2])):
        try:
            fn()
        except AssertionError:
            pass
