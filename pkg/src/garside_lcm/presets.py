"""Built-in Artin-Tits presentations.

Names are shell-safe: a trailing ``t`` marks an affine (tilde) type, so
``A2t`` is the affine type Ã₂.  Generators are named ``a, b, c, ...``.
Unlisted pairs of generators commute.
"""

from __future__ import annotations

import functools

from .errors import PresentationError
from .presentation import CoxeterMatrix, Presentation, build_artin_tits

_NAMES = "abcde"

# (rank, {(i, j): m}) with generator indices into _NAMES
_GRAPHS = {
    # spherical
    "A2": (2, {(0, 1): 3}),
    "A3": (3, {(0, 2): 3, (2, 1): 3}),  # a - c - b
    "B3": (3, {(0, 2): 4, (2, 1): 3}),  # a =4= c - b
    # affine
    "A2t": (3, {(0, 1): 3, (1, 2): 3, (0, 2): 3}),
    "A3t": (4, {(0, 1): 3, (1, 2): 3, (2, 3): 3, (0, 3): 3}),
    "A4t": (5, {(0, 1): 3, (1, 2): 3, (2, 3): 3, (3, 4): 3, (0, 4): 3}),
    "C2t": (3, {(0, 1): 4, (1, 2): 4}),  # a =4= b =4= c
    "C3t": (4, {(0, 1): 4, (1, 2): 3, (2, 3): 4}),  # a =4= b - c =4= d
    "B3t": (4, {(0, 2): 3, (1, 2): 3, (2, 3): 4}),  # a, b - c =4= d
    "G2t": (3, {(0, 1): 6, (1, 2): 3}),  # a =6= b - c
    "D4t": (5, {(0, 4): 3, (1, 4): 3, (2, 4): 3, (3, 4): 3}),  # e is the branch node
}

SPHERICAL = ("A2", "A3", "B3")
AFFINE = ("A2t", "A3t", "A4t", "B3t", "C2t", "C3t", "G2t", "D4t")
PRESET_NAMES = SPHERICAL + AFFINE

DISPLAY_NAMES = {
    "A2": "A₂", "A3": "A₃", "B3": "B₃",
    "A2t": "Ã₂", "A3t": "Ã₃", "A4t": "Ã₄", "B3t": "B̃₃",
    "C2t": "C̃₂", "C3t": "C̃₃", "G2t": "G̃₂", "D4t": "D̃₄",
}


def coxeter_matrix(name: str) -> CoxeterMatrix:
    try:
        rank, edges = _GRAPHS[name]
    except KeyError:
        raise PresentationError(
            f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}"
        ) from None
    return CoxeterMatrix.from_edges(rank, edges)


@functools.lru_cache(maxsize=None)
def preset(name: str) -> Presentation:
    matrix = coxeter_matrix(name)
    return build_artin_tits(matrix, _NAMES[: matrix.n], name)
