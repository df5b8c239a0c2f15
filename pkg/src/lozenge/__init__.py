"""Exact enumeration of partial lozenge tilings of the equilateral triangle."""

from .closedforms import FormulaId, binomial_upper_bound, eval_formula
from .counting import CountVector, count_brute_force, count_dp, max_lozenge_count, row_sum
from .geometry import build_grid, tri_number

__all__ = [
    "CountVector",
    "FormulaId",
    "binomial_upper_bound",
    "build_grid",
    "count_brute_force",
    "count_dp",
    "eval_formula",
    "max_lozenge_count",
    "row_sum",
    "tri_number",
]
