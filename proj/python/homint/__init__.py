"""Homogeneous polynomial interpolation over the integers."""

from _homint import (
    construct_witness,
    evaluate,
    factor,
    feasible_degree,
    in_image,
    min_degree,
    mod_witness,
    periodic_obstruction,
    snf,
    solve_diophantine,
    totient,
)

__all__ = [
    "construct_witness",
    "evaluate",
    "factor",
    "feasible_degree",
    "in_image",
    "min_degree",
    "mod_witness",
    "periodic_obstruction",
    "snf",
    "solve_diophantine",
    "totient",
]
