"""Exact spectral tools for propeller graphs: characteristic polynomials,
closed-form identities, degree-sequence analysis and exhaustive mate search."""

from .canon import are_isomorphic, canonicalize, certificate
from .charpoly import MatrixKind, charpoly
from .generate import enumerate_graphs
from .graph import (
    DegreeSequence,
    Graph,
    PropellerParams,
    SmithKind,
    line_graph,
    make_cycle,
    make_infinity,
    make_path,
    make_propeller,
    make_smith,
    spanning_tree_count,
    structure_summary,
    subdivision,
)
from .poly import IntPoly, LaurentPoly, count_roots_greater, eval_at, laurent_from_charpoly, moments, zero_multiplicity
from .verifier import ds_verify, lambda2_below_2, mate_search, smith_census, summarize

__version__ = "0.1.0"
