"""Exact counts of series-parallel matroids by size and rank."""

from ._core import (
    assoc_stirling1,
    binomial,
    c_closed,
    double_factorial,
    e_closed,
    e_from_c,
    e_special,
    factorial,
    first_row,
    g_closed,
    h_value,
    oracle_counts,
    parse_bfile,
    render_table,
    stirling2,
    table,
    verify,
)

__all__ = [
    "assoc_stirling1",
    "binomial",
    "c_closed",
    "double_factorial",
    "e_closed",
    "e_from_c",
    "e_special",
    "factorial",
    "first_row",
    "g_closed",
    "h_value",
    "oracle_counts",
    "parse_bfile",
    "render_table",
    "stirling2",
    "table",
    "verify",
]
