"""Certify walk-regularity by exact closed-walk counts.

A graph is walk-regular when, for every length ``k >= 2``, all vertices
carry the same number of closed walks of length ``k`` (the diagonal of the
k-th adjacency power is constant). Checking ``k`` up to ``n - 1`` suffices:
every higher power of the adjacency matrix is a linear combination of the
powers below ``n``, so constant diagonals there force constancy for all k.

Counts are computed in exact integer arithmetic; they grow exponentially
and float comparison would be meaningless.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import NonUnitConductance
from .network import Network
from .solver import hitting_time_matrix

__all__ = [
    "WalkCountMismatch",
    "WalkRegularityReport",
    "check_walk_regular",
    "hitting_symmetry_defect",
]


@dataclass(frozen=True)
class WalkCountMismatch:
    """Witness of non-walk-regularity: at walk length ``k``, vertices ``x``
    and ``y`` have different closed-walk counts."""

    k: int
    x: int
    y: int


@dataclass(frozen=True)
class WalkRegularityReport:
    """Outcome of the closed-walk-count check.

    ``first_violation`` is set only when the graph is regular but fails the
    walk-count test; an irregular degree sequence is reported through
    ``is_regular`` alone. ``checked_k_max`` is the largest walk length whose
    diagonal was verified constant.
    """

    is_regular: bool
    is_walk_regular: bool
    first_violation: Optional[WalkCountMismatch]
    checked_k_max: int


def _int_matmul(left: list[list[int]], right: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*right))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in left]


def check_walk_regular(net: Network) -> WalkRegularityReport:
    """Decide walk-regularity of a unit-conductance network.

    Raises:
        NonUnitConductance: the check is combinatorial and only defined for
            the unweighted graph.
    """
    if not net.is_unit_conductance:
        raise NonUnitConductance("walk-regularity is defined on unit-conductance graphs")
    n = net.vertex_count
    degrees = [net.degree(z) for z in range(n)]
    if len(set(degrees)) > 1:
        return WalkRegularityReport(
            is_regular=False, is_walk_regular=False, first_violation=None, checked_k_max=1
        )
    adjacency = [[0] * n for _ in range(n)]
    for a, b, _ in net.edges:
        adjacency[a][b] = 1
        adjacency[b][a] = 1
    power = adjacency
    for k in range(2, n):
        power = _int_matmul(power, adjacency)
        diagonal = [power[i][i] for i in range(n)]
        for y in range(1, n):
            if diagonal[y] != diagonal[0]:
                return WalkRegularityReport(
                    is_regular=True,
                    is_walk_regular=False,
                    first_violation=WalkCountMismatch(k=k, x=0, y=y),
                    checked_k_max=k - 1,
                )
    return WalkRegularityReport(
        is_regular=True, is_walk_regular=True, first_violation=None, checked_k_max=max(1, n - 1)
    )


def hitting_symmetry_defect(net: Network) -> float:
    """Largest relative asymmetry ``|E_aT_b - E_bT_a| / max(1, E_aT_b)``.

    A numerical witness: walk-regular graphs have symmetric hitting times,
    so a certified graph must score ~0 here. The converse does not hold;
    this is a diagnostic, not a certificate.
    """
    hitting = hitting_time_matrix(net).hitting
    gap = np.abs(hitting - hitting.T) / np.maximum(1.0, hitting)
    return float(gap.max())
