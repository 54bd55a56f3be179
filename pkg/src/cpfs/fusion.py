"""Condense many point evaluations into one circular value.

Given the evaluations of several experts for the same object -- a collection
of plain :class:`~cpfs.values.PFV` -- the fused :class:`~cpfs.values.CPFV`
takes the quadratic mean of the components as its center,

    mu = sqrt(mean(mu_j**2)),   nu = sqrt(mean(nu_j**2)),

and the largest distance from that center to any input point as its radius
(clamped to 1).  The center is always a valid point: its quadratic sum is
the mean of the inputs' quadratic sums.  Every input lies inside or on the
resulting circle unless the clamp was active.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import DimensionMismatch, EmptyInput
from .values import CPFV, PFV

__all__ = ["fuse", "build_circular_matrix"]


def fuse(collection: Sequence[PFV]) -> CPFV:
    """Fuse a non-empty collection of point values into one circular value."""
    k = len(collection)
    if k == 0:
        raise EmptyInput("cannot fuse an empty collection")
    mu = math.sqrt(math.fsum(p.mu * p.mu for p in collection) / k)
    nu = math.sqrt(math.fsum(p.nu * p.nu for p in collection) / k)
    r = max(math.hypot(mu - p.mu, nu - p.nu) for p in collection)
    return CPFV.of(mu, nu, min(r, 1.0))


def build_circular_matrix(
    expert_matrices: Sequence[Sequence[Sequence[PFV]]],
) -> list[list[CPFV]]:
    """Fuse a stack of expert matrices cellwise.

    ``expert_matrices[e][i][j]`` is expert ``e``'s evaluation of alternative
    ``i`` under criterion ``j``; all expert matrices must share one
    rectangular shape.  Returns the alternatives x criteria matrix of fused
    circular values.
    """
    if len(expert_matrices) == 0:
        raise EmptyInput("need at least one expert matrix")
    shape = _shape_of(expert_matrices[0])
    for e, matrix in enumerate(expert_matrices):
        if _shape_of(matrix) != shape:
            raise DimensionMismatch(
                f"expert matrix {e} has shape {_shape_of(matrix)}, expected {shape}"
            )
    n_alt, n_crit = shape
    return [
        [fuse([matrix[i][j] for matrix in expert_matrices]) for j in range(n_crit)]
        for i in range(n_alt)
    ]


def _shape_of(matrix: Sequence[Sequence[PFV]]) -> tuple[int, ...]:
    rows = len(matrix)
    widths = {len(row) for row in matrix}
    if len(widths) > 1:
        raise DimensionMismatch(f"matrix is ragged: row widths {sorted(widths)}")
    return (rows, widths.pop() if widths else 0)
