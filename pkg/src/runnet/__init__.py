"""Counting permutations by increasing-run structure with run networks.

Exact truncated power series over ``Q[t]``, matrix inversion over them, and
the two-inversion pipeline that turns a run network into generating
functions for words, permutations, and alternating-run analogues.
"""
from .coeffring import InexactDivision, Poly, parse_poly, poly
from .compositions import (
    alt_descent_composition,
    comp_from_descent_set,
    compositions,
    descent_composition,
    descent_set_from_comp,
    ribbon_count,
)
from .engine import Hom, compute, counting_matrix, entry_sum, v_matrix, weight_matrix
from .euler import euler_numbers
from .powerseries import Series
from .recipes import get_recipe, run_recipe
from .runnetwork import LengthSet, RunNetwork, WeightRule, load_network, validate_network
from .seriesmatrix import SeriesMatrix, mat_inverse

__all__ = [
    "InexactDivision", "Poly", "parse_poly", "poly",
    "alt_descent_composition", "comp_from_descent_set", "compositions",
    "descent_composition", "descent_set_from_comp", "ribbon_count",
    "Hom", "compute", "counting_matrix", "entry_sum", "v_matrix", "weight_matrix",
    "euler_numbers", "Series", "get_recipe", "run_recipe",
    "LengthSet", "RunNetwork", "WeightRule", "load_network", "validate_network",
    "SeriesMatrix", "mat_inverse",
]

__version__ = "0.1.0"
