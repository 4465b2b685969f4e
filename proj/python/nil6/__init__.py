"""Moduli, classification and curvature of metric 2-step nilpotent Lie
algebras of dimension up to 6."""

from ._nil6 import (  # noqa: F401
    canonical_coeffs,
    classify,
    curvature,
    degenerate,
    format_salamon,
    infinitesimal_rank,
    invariants,
    is_two_step,
    jacobi_defect,
    retract_invariants,
    sample_point,
    set_tolerance,
    stratum,
    structure_equations,
    t_interval,
)

__all__ = [
    "canonical_coeffs",
    "classify",
    "curvature",
    "degenerate",
    "format_salamon",
    "infinitesimal_rank",
    "invariants",
    "is_two_step",
    "jacobi_defect",
    "retract_invariants",
    "sample_point",
    "set_tolerance",
    "stratum",
    "structure_equations",
    "t_interval",
]
