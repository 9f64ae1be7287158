"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's own code paths:
connectivity uses union-find (the library uses BFS / low-link), and the
exact hitting-time oracle runs Gaussian elimination over ``Fraction``
(the library uses floating-point numpy solves).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np

from ohmwalk import Network, build_network

# 3-regular, connected, 8 vertices: one triangle (0-1-2) feeding a
# triangle-free tail, so per-vertex closed-3-walk counts are (2,2,2,0,...).
CUBIC_UNEVEN_TRIANGLES = [
    (0, 1), (1, 2), (0, 2),
    (0, 3), (1, 4), (2, 5),
    (3, 6), (3, 7), (4, 6), (4, 7), (5, 6), (5, 7),
]

WEIGHTED_TRIANGLE = [(0, 1, 1.0), (0, 2, 2.0), (1, 2, 3.0)]

STAR_K13 = [(0, 1), (0, 2), (0, 3)]


def union_find_connected(n: int, edges) -> bool:
    """Connectivity oracle independent of the library's BFS."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = n
    for a, b, *_ in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            components -= 1
    return components == 1


def connected_graphs_on(n: int):
    """All connected simple graphs on n labeled vertices, as edge lists."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(edges) >= n - 1 and union_find_connected(n, edges):
            yield edges


def dyadic_conductance(rng: np.random.Generator) -> float:
    # Multiples of 1/64 keep strength sums exactly representable.
    return int(rng.integers(1, 641)) / 64.0


def random_connected_network(rng: np.random.Generator, n_min: int = 2, n_max: int = 30) -> Network:
    """Random spanning tree plus extra edges, dyadic positive conductances."""
    n = int(rng.integers(n_min, n_max + 1))
    edges = []
    present = set()
    for v in range(1, n):
        u = int(rng.integers(0, v))
        edges.append((u, v, dyadic_conductance(rng)))
        present.add((u, v))
    spare = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in present]
    extra = int(rng.integers(0, max(1, len(spare) // 3) + 1))
    for index in rng.permutation(len(spare))[:extra]:
        a, b = spare[index]
        edges.append((a, b, dyadic_conductance(rng)))
    return build_network(n, edges)


def random_corpus(count: int = 200, seed: int = 8201) -> list[Network]:
    rng = np.random.default_rng(seed)
    return [random_connected_network(rng) for _ in range(count)]


def hitting_times_by_fractions(net: Network, target: int) -> list[Fraction]:
    """Exact expected steps to ``target``, by rational Gaussian elimination.

    Solves the first-step equations h(v) = 1 + sum_y P[v, y] h(y) with
    h(target) = 0 over Fractions; independent of numpy entirely.
    """
    n = net.vertex_count
    rows = []
    for v in range(n):
        row = [Fraction(0)] * (n + 1)
        if v == target:
            row[v] = Fraction(1)
        else:
            strength = Fraction(0)
            for _, c in net.neighbors(v):
                strength += Fraction(c)
            row[v] = Fraction(1)
            for y, c in net.neighbors(v):
                row[y] -= Fraction(c) / strength
            row[n] = Fraction(1)
        rows.append(row)
    for col in range(n):
        pivot = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col]
        rows[col] = [x / inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return [rows[r][n] for r in range(n)]
