"""Exact network quantities by dense linear algebra.

Two independent routes are implemented on purpose:

* effective resistances come from the pseudoinverse of the weighted
  Laplacian (eigendecomposition, one zero mode);
* hitting times come from one grounded first-step linear solve per target
  vertex. A pseudoinverse-based hitting formula is also provided so tests
  can cross-check the two routes against each other.

Everything here is deterministic and pure; inputs are never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadParameter, BadVertexId, DisconnectedGraph, NumericalFailure
from .network import Network

__all__ = [
    "ResistanceReport",
    "HittingReport",
    "effective_resistance_matrix",
    "kirchhoff_index_from_spectrum",
    "hitting_time_matrix",
    "hitting_times_from_pseudoinverse",
    "return_time",
    "commute_time",
]

# Eigenvalues below RANK_TOL * (largest eigenvalue) count as the zero mode.
RANK_TOL = 1e-10


@dataclass(frozen=True)
class ResistanceReport:
    """Pairwise effective resistances and their sum.

    Attributes:
        resistance: symmetric ``n x n`` matrix, zero diagonal; read-only.
        kirchhoff_index: sum of resistances over unordered pairs.
    """

    resistance: np.ndarray
    kirchhoff_index: float


@dataclass(frozen=True)
class HittingReport:
    """Expected first-passage steps between all vertex pairs.

    Attributes:
        hitting: ``hitting[a, b]`` is the expected steps from a to b.
        commute: ``hitting + hitting.T``.
        return_time: per-vertex expected first return, via the first-step
            relation ``1 + sum_y P[z, y] * hitting[y, z]``.
    """

    hitting: np.ndarray
    commute: np.ndarray
    return_time: np.ndarray


def _require_multivertex(net: Network) -> None:
    if net.vertex_count < 2:
        raise BadParameter("network quantities need at least two vertices")


def _laplacian(net: Network) -> np.ndarray:
    """Weighted Laplacian: diagonal of vertex strengths minus conductances."""
    n = net.vertex_count
    lap = np.zeros((n, n))
    for a, b, c in net.edges:
        lap[a, b] -= c
        lap[b, a] -= c
        lap[a, a] += c
        lap[b, b] += c
    return lap


def _split_zero_mode(eigenvalues: np.ndarray) -> np.ndarray:
    """Boolean mask of nonzero eigenvalues; enforces exactly one zero mode."""
    largest = float(eigenvalues[-1])
    if largest <= 0.0:
        raise NumericalFailure("Laplacian spectrum is not positive")
    nonzero = eigenvalues > RANK_TOL * largest
    zero_count = int(np.count_nonzero(~nonzero))
    if zero_count > 1:
        raise DisconnectedGraph(f"Laplacian has {zero_count} (near-)zero eigenvalues")
    if zero_count == 0:
        raise NumericalFailure("Laplacian lost its zero mode; eigen-solve is suspect")
    return nonzero


def _pseudoinverse(net: Network) -> np.ndarray:
    lap = _laplacian(net)
    try:
        eigenvalues, vectors = np.linalg.eigh(lap)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigendecomposition failed: {exc}") from exc
    nonzero = _split_zero_mode(eigenvalues)
    inverted = np.zeros_like(eigenvalues)
    inverted[nonzero] = 1.0 / eigenvalues[nonzero]
    pinv = (vectors * inverted) @ vectors.T
    return (pinv + pinv.T) / 2.0


def effective_resistance_matrix(net: Network) -> ResistanceReport:
    """All pairwise effective resistances plus the Kirchhoff index.

    Resistances come from the Laplacian pseudoinverse via
    ``R_ab = P_aa + P_bb - 2 P_ab``; the Kirchhoff index is the plain sum
    over unordered pairs of that matrix.
    """
    _require_multivertex(net)
    pinv = _pseudoinverse(net)
    diag = np.diag(pinv)
    resistance = diag[:, None] + diag[None, :] - 2.0 * pinv
    np.fill_diagonal(resistance, 0.0)
    n = net.vertex_count
    kirchhoff = float(resistance[np.triu_indices(n, k=1)].sum())
    resistance.setflags(write=False)
    return ResistanceReport(resistance=resistance, kirchhoff_index=kirchhoff)


def kirchhoff_index_from_spectrum(net: Network) -> float:
    """Kirchhoff index as ``n * sum(1 / mu)`` over nonzero Laplacian eigenvalues.

    Independent of the pairwise-resistance route; used as a cross-check.
    """
    _require_multivertex(net)
    try:
        eigenvalues = np.linalg.eigvalsh(_laplacian(net))
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigenvalue computation failed: {exc}") from exc
    nonzero = _split_zero_mode(eigenvalues)
    return float(net.vertex_count * np.sum(1.0 / eigenvalues[nonzero]))


def _transition_matrix(net: Network) -> np.ndarray:
    n = net.vertex_count
    weights = np.zeros((n, n))
    for a, b, c in net.edges:
        weights[a, b] = c
        weights[b, a] = c
    strengths = weights.sum(axis=1)
    return weights / strengths[:, None]


def _hitting_to_target(transition: np.ndarray, b: int) -> np.ndarray:
    """Expected steps to reach ``b`` from every vertex, by one grounded solve."""
    n = transition.shape[0]
    system = np.eye(n) - transition
    system[b, :] = 0.0
    system[b, b] = 1.0
    rhs = np.ones(n)
    rhs[b] = 0.0
    try:
        hit = np.linalg.solve(system, rhs)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"grounded first-step system is singular: {exc}") from exc
    hit[b] = 0.0
    return hit


def hitting_time_matrix(net: Network) -> HittingReport:
    """Hitting, commute, and return times by per-target grounded solves."""
    _require_multivertex(net)
    n = net.vertex_count
    transition = _transition_matrix(net)
    hitting = np.zeros((n, n))
    for b in range(n):
        hitting[:, b] = _hitting_to_target(transition, b)
    commute = hitting + hitting.T
    returns = 1.0 + np.diag(transition @ hitting)
    hitting.setflags(write=False)
    commute.setflags(write=False)
    returns.setflags(write=False)
    return HittingReport(hitting=hitting, commute=commute, return_time=returns)


def hitting_times_from_pseudoinverse(net: Network) -> np.ndarray:
    """Hitting-time matrix from the Laplacian pseudoinverse.

    For target ``b`` the hitting vector solves ``L h = s - C e_b`` pinned at
    ``h[b] = 0``, where ``s`` is the vertex-strength vector and ``C`` the
    total strength. This is the cross-check route for
    :func:`hitting_time_matrix`; the two must agree to solver tolerance.
    """
    _require_multivertex(net)
    n = net.vertex_count
    pinv = _pseudoinverse(net)
    strengths = np.array([net.vertex_strength(z) for z in range(n)])
    total = net.total_strength
    base = pinv @ strengths
    hitting = base[:, None] - base[None, :] - total * pinv + total * np.diag(pinv)[None, :]
    np.fill_diagonal(hitting, 0.0)
    return hitting


def return_time(net: Network, z: int) -> float:
    """Expected first-return steps at ``z``: total strength over vertex strength.

    This closed form is the primary path; the first-step value in
    :class:`HittingReport` is the oracle it must match.
    """
    _require_multivertex(net)
    net._require_vertex(z)
    return net.total_strength / net.vertex_strength(z)


def commute_time(net: Network, a: int, b: int) -> float:
    """Expected round trip a -> b -> a, by two grounded solves.

    Equals ``total_strength * R_ab`` (2|E| R_ab for unit conductances).
    """
    _require_multivertex(net)
    net._require_vertex(a)
    net._require_vertex(b)
    if a == b:
        raise BadVertexId("commute time needs two distinct vertices")
    transition = _transition_matrix(net)
    forward = _hitting_to_target(transition, b)[a]
    backward = _hitting_to_target(transition, a)[b]
    return float(forward + backward)
