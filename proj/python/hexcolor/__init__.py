"""Optimal hexagon shapes for k-colorings of hexagonal tilings."""

from ._core import (
    ColorScheme,
    Fraction,
    SolveOptions,
    SolveResult,
    Triple,
    classify,
    cubic_f,
    min_distance,
    quartic_dsq,
    reference_distances,
    regular_d,
    regular_dsq,
    schemes,
    solve,
    solve_all,
)

__all__ = [
    "ColorScheme",
    "Fraction",
    "SolveOptions",
    "SolveResult",
    "Triple",
    "classify",
    "cubic_f",
    "min_distance",
    "quartic_dsq",
    "reference_distances",
    "regular_d",
    "regular_dsq",
    "schemes",
    "solve",
    "solve_all",
]
