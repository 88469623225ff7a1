"""Reference matrices with hand-verified inverses and order counterexamples.

``DEMO_4X4`` is a 4-by-4 index-2 matrix on which the six displayed inverses
are pairwise distinct.  The frozen expected values were checked by hand
against the defining equations; the test suite re-derives every one of them
independently.  The order pairs pin down which implications between the
orders fail:

* ``WG_PREORDER_PAIR``: WG-comparable in both directions although A != B
  (the WG order is not anti-symmetric), and the Drazin order fails.
* ``DRAZIN_NOT_WG_PAIR``: Drazin and C-N comparable, but neither WG nor C-E.
* ``SQUARING_PAIR``: WG-comparable, but the squared pair is not.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .matcore import as_matrix

__all__ = [
    "DEMO_4X4",
    "DEMO_4X4_INDEX",
    "DEMO_4X4_INVERSES",
    "WG_PREORDER_PAIR",
    "DRAZIN_NOT_WG_PAIR",
    "SQUARING_PAIR",
    "fixture_path",
]

DEMO_4X4 = as_matrix(
    [
        [1, 0, 1, 0],
        [0, 1, 0, 1],
        [0, 0, 0, 1],
        [0, 0, 0, 0],
    ]
)

DEMO_4X4_INDEX = 2

DEMO_4X4_INVERSES = {
    "mp": as_matrix(
        [
            [0.5, 0, 0, 0],
            [0, 1, -1, 0],
            [0.5, 0, 0, 0],
            [0, 0, 1, 0],
        ]
    ),
    "drazin": as_matrix(
        [
            [1, 0, 1, 1],
            [0, 1, 0, 1],
            [0, 0, 0, 0],
            [0, 0, 0, 0],
        ]
    ),
    "dmp": as_matrix(
        [
            [1, 0, 1, 0],
            [0, 1, 0, 0],
            [0, 0, 0, 0],
            [0, 0, 0, 0],
        ]
    ),
    "bt": as_matrix(
        [
            [0.5, 0, 0, 0],
            [0, 1, 0, 0],
            [0.5, 0, 0, 0],
            [0, 0, 0, 0],
        ]
    ),
    "core-ep": as_matrix(
        [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 0, 0],
            [0, 0, 0, 0],
        ]
    ),
    "wg": as_matrix(
        [
            [1, 0, 1, 0],
            [0, 1, 0, 1],
            [0, 0, 0, 0],
            [0, 0, 0, 0],
        ]
    ),
}

WG_PREORDER_PAIR = (
    as_matrix([[1, 1, 1], [0, 0, 1], [0, 0, 0]]),
    as_matrix([[1, 1, 1], [0, 0, 2], [0, 0, 0]]),
)

# A = P diag(1,0,0) P^-1 and B = P (diag(1,0,0) + E_23) P^-1 with
# P = [[1,-2,0],[0,1,0],[0,0,1]]: Drazin-comparable, not WG-comparable.
DRAZIN_NOT_WG_PAIR = (
    as_matrix([[1, 2, 0], [0, 0, 0], [0, 0, 0]]),
    as_matrix([[1, 2, -2], [0, 0, 1], [0, 0, 0]]),
)

SQUARING_PAIR = (
    as_matrix([[1, 1, 1], [0, 0, 0], [0, 0, 0]]),
    as_matrix([[1, 1, 1], [0, 0, 2], [0, 0, 0]]),
)


def fixture_path(name: str) -> Path:
    """Path of a bundled matrix file (for CLI demos and tests)."""
    path = resources.files("ginv").joinpath("data", name)
    return Path(str(path))
