"""Sums and differences of powers of 2 and 3."""

from ._core import (
    __version__,
    abs_diff_collisions,
    derive_a_from_b,
    enumerate_sums,
    find_duplicates,
    guided_search,
    known_duplicates,
    rn_solutions,
    run_cli,
    signed_diff_collisions,
    solve_y_positive,
    solve_y_zero,
    v2_pow3_minus1,
    v3_pow2_minus1,
    vp,
)

__all__ = [
    "abs_diff_collisions",
    "derive_a_from_b",
    "enumerate_sums",
    "find_duplicates",
    "guided_search",
    "known_duplicates",
    "rn_solutions",
    "run_cli",
    "signed_diff_collisions",
    "solve_y_positive",
    "solve_y_zero",
    "v2_pow3_minus1",
    "v3_pow2_minus1",
    "vp",
]
