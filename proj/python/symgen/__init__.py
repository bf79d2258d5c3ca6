"""Permutation groups, coset enumeration and double coset enumeration.

Points and labels are 1-indexed on this side.
"""

from ._symgen import (
    CapExceeded,
    CosetTable,
    Permutation,
    PermutationError,
    PermutationGroup,
    PresentationError,
    WordParseError,
    cayley_graph_dot,
    double_cosets,
    enumerate,
    m22_presentation,
    verify_m22,
)

__all__ = [
    "CapExceeded",
    "CosetTable",
    "Permutation",
    "PermutationError",
    "PermutationGroup",
    "PresentationError",
    "WordParseError",
    "cayley_graph_dot",
    "double_cosets",
    "enumerate",
    "m22_presentation",
    "verify_m22",
]
