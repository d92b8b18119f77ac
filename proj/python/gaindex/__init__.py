"""Exact geometric-arithmetic index GA1, related degree-based indices, line
graphs and inequality checkers."""

from ._core import (
    Graph,
    GraphError,
    LimitError,
    ParseError,
    StandingAssumptionError,
    chi_alpha,
    check,
    checker_ids,
    classify_line_small_values,
    classify_small_values,
    enumerate_connected,
    enumerate_trees,
    find_line_preimages,
    forgotten,
    ga1,
    harmonic,
    inverse_degree,
    line_graph,
    m1,
    m1_alpha,
    m1_line_identity,
    m2,
    m2_alpha,
    randic,
    sum_connectivity,
    sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
