"""Totally nonnegative cells: restoration, Cauchon diagrams and minor families."""

from ._tnn_cells import (
    bruhat_leq,
    classify,
    compute_mc,
    compute_mw,
    count_diagrams,
    delete_derivations,
    diagrams,
    is_tnn,
    match_families,
    restore,
    restricted_perms,
    vanishing_family,
)

__all__ = [
    "bruhat_leq",
    "classify",
    "compute_mc",
    "compute_mw",
    "count_diagrams",
    "delete_derivations",
    "diagrams",
    "is_tnn",
    "match_families",
    "restore",
    "restricted_perms",
    "vanishing_family",
]
