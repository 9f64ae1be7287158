"""Constructors for the named graph families used as fixtures and oracles.

All generators produce unit-conductance networks.
"""

from __future__ import annotations

import math

from .errors import BadParameter
from .network import Network, build_network

__all__ = ["cycle", "complete", "hypercube", "unitary_cayley", "petersen", "totient"]


def cycle(n: int) -> Network:
    """The cycle on ``n`` vertices, ``i ~ (i + 1) mod n``."""
    if n < 3:
        raise BadParameter(f"cycle needs n >= 3, got {n}")
    return build_network(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Network:
    """The complete graph on ``n`` vertices."""
    if n < 2:
        raise BadParameter(f"complete needs n >= 2, got {n}")
    return build_network(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def hypercube(d: int) -> Network:
    """The ``d``-dimensional cube: vertices are ``0..2^d - 1`` read as bit
    strings, with edges between strings at Hamming distance 1."""
    if d < 1:
        raise BadParameter(f"hypercube needs d >= 1, got {d}")
    n = 1 << d
    edges = [(v, v ^ (1 << j)) for v in range(n) for j in range(d) if v < v ^ (1 << j)]
    return build_network(n, edges)


def unitary_cayley(n: int) -> Network:
    """Circulant graph on ``Z_n`` joining x and y iff gcd(x - y, n) = 1.

    The result is totient(n)-regular and always contains the n-cycle
    through consecutive residues, hence connected.
    """
    if n < 3:
        raise BadParameter(f"unitary_cayley needs n >= 3, got {n}")
    edges = [(x, y) for x in range(n) for y in range(x + 1, n) if math.gcd(y - x, n) == 1]
    return build_network(n, edges)


def petersen() -> Network:
    """The Petersen graph: outer 5-cycle, inner pentagram, five spokes."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_network(10, outer + inner + spokes)


def totient(n: int) -> int:
    """Euler's totient by trial-division factorization."""
    if n < 1:
        raise BadParameter(f"totient needs n >= 1, got {n}")
    result = n
    remaining = n
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            while remaining % p == 0:
                remaining //= p
            result -= result // p
        p += 1
    if remaining > 1:
        result -= result // remaining
    return result
