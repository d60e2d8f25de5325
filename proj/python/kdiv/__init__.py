"""Divisions of graphs along k-simplicial elimination orders, with exact
oracles for small graphs."""

from ._kdiv import (
    CapExceeded,
    Error,
    Graph,
    OrderNotFound,
    ParseError,
    TheoremViolation,
    chromatic_number,
    clique_number,
    color_by_division,
    divide,
    elimination_order,
    encode_graph6,
    find_k_simplicial,
    gen,
    independence_number,
    is_even_hole_free,
    is_k_divisible,
    is_perfect,
    is_perfectly_divisible,
    max_clique,
    parse_graph6,
    required_t_scan,
    search_k4_free,
    shortest_even_hole,
    verify_counterexample,
)

__version__ = "0.1.0"
