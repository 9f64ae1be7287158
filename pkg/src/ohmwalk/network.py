"""Immutable model of a finite connected electric network.

A network is a simple undirected graph on vertices ``0..n-1`` whose edges
carry positive conductances. It doubles as the induced Markov chain: a walk
at ``y`` steps to neighbor ``z`` with probability ``C_yz / C_y``, where
``C_y`` is the sum of conductances incident to ``y``.

All surgery operations (edge removal, pendant attachment) return new
networks; existing values are never mutated, so they are safe to share
across threads.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BadParameter,
    BadVertexId,
    DisconnectedGraph,
    InvalidEdge,
    NoSuchEdge,
    WouldDisconnect,
)

__all__ = ["Network", "EdgeRef", "build_network"]


@dataclass(frozen=True)
class EdgeRef:
    """An unordered vertex pair naming an edge; stored with ``a < b``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise BadVertexId(f"edge endpoints must differ, got ({self.a}, {self.b})")
        if self.a < 0 or self.b < 0:
            raise BadVertexId(f"vertex ids must be nonnegative, got ({self.a}, {self.b})")
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)


@dataclass(frozen=True)
class Network:
    """A connected simple graph with positive edge conductances.

    Attributes:
        vertex_count: number of vertices ``n``; ids are ``0..n-1``.
        edges: canonical edge tuple, each entry ``(a, b, conductance)`` with
            ``a < b``, sorted lexicographically. Treat as read-only.

    Construction validates everything: vertex ids in range, no self-loops,
    no duplicate pairs, conductances positive and finite, and connectivity.
    Prefer :func:`build_network` for building from raw edge lists.
    """

    vertex_count: int
    edges: tuple[tuple[int, int, float], ...]

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise BadParameter(f"vertex_count must be positive, got {n}")
        canonical = []
        seen: set[tuple[int, int]] = set()
        for edge in self.edges:
            try:
                a, b, c = edge
            except (TypeError, ValueError):
                raise InvalidEdge(f"expected (a, b, conductance) triple, got {edge!r}") from None
            if not (0 <= a < n) or not (0 <= b < n):
                raise BadVertexId(f"edge ({a}, {b}) references a vertex outside 0..{n - 1}")
            if a == b:
                raise InvalidEdge(f"self-loop at vertex {a}")
            c = float(c)
            if not math.isfinite(c) or c <= 0.0:
                raise InvalidEdge(f"edge ({a}, {b}) has nonpositive or non-finite conductance {c}")
            if a > b:
                a, b = b, a
            if (a, b) in seen:
                raise InvalidEdge(f"duplicate edge ({a}, {b})")
            seen.add((a, b))
            canonical.append((a, b, c))
        canonical.sort()
        object.__setattr__(self, "edges", tuple(canonical))
        self._check_connected()

    # -- structural queries -------------------------------------------------

    @cached_property
    def _adjacency(self) -> tuple[tuple[tuple[int, float], ...], ...]:
        """Per-vertex tuple of (neighbor, conductance), sorted by neighbor."""
        lists: list[list[tuple[int, float]]] = [[] for _ in range(self.vertex_count)]
        for a, b, c in self.edges:
            lists[a].append((b, c))
            lists[b].append((a, c))
        return tuple(tuple(sorted(nbrs)) for nbrs in lists)

    @cached_property
    def _conductance_by_pair(self) -> dict[tuple[int, int], float]:
        return {(a, b): c for a, b, c in self.edges}

    @property
    def edge_count(self) -> int:
        """Number of edges ``m``."""
        return len(self.edges)

    @property
    def is_unit_conductance(self) -> bool:
        """True iff every edge has conductance exactly 1."""
        return all(c == 1.0 for _, _, c in self.edges)

    def _require_vertex(self, z: int) -> int:
        try:
            z = operator.index(z)
        except TypeError:
            raise BadVertexId(f"vertex id must be an integer, got {z!r}") from None
        if not 0 <= z < self.vertex_count:
            raise BadVertexId(f"vertex {z} outside 0..{self.vertex_count - 1}")
        return z

    def neighbors(self, z: int) -> tuple[tuple[int, float], ...]:
        """(neighbor, conductance) pairs incident to ``z``."""
        return self._adjacency[self._require_vertex(z)]

    def degree(self, z: int) -> int:
        """Number of edges incident to ``z``."""
        return len(self._adjacency[self._require_vertex(z)])

    def has_edge(self, a: int, b: int) -> bool:
        """True iff {a, b} is an edge."""
        a = self._require_vertex(a)
        b = self._require_vertex(b)
        return (min(a, b), max(a, b)) in self._conductance_by_pair

    def conductance(self, a: int, b: int) -> float:
        """Conductance of edge {a, b}; raises NoSuchEdge if absent."""
        a = self._require_vertex(a)
        b = self._require_vertex(b)
        try:
            return self._conductance_by_pair[(min(a, b), max(a, b))]
        except KeyError:
            raise NoSuchEdge(f"({a}, {b}) is not an edge") from None

    def vertex_strength(self, z: int) -> float:
        """Sum of conductances incident to ``z`` (degree for unit conductance)."""
        return math.fsum(c for _, c in self._adjacency[self._require_vertex(z)])

    @cached_property
    def total_strength(self) -> float:
        """Sum of all vertex strengths; twice the conductance total, 2m for unit edges."""
        # Doubling is exact in binary floating point, so this equals the
        # correctly rounded sum of the per-endpoint multiset.
        return 2.0 * math.fsum(c for _, _, c in self.edges)

    def _check_connected(self) -> None:
        n = self.vertex_count
        if n == 1:
            return
        first_seen = [False] * n
        first_seen[0] = True
        stack = [0]
        reached = 1
        adjacency: list[list[int]] = [[] for _ in range(n)]
        for a, b, _ in self.edges:
            adjacency[a].append(b)
            adjacency[b].append(a)
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if not first_seen[w]:
                    first_seen[w] = True
                    reached += 1
                    stack.append(w)
        if reached != n:
            raise DisconnectedGraph(f"graph has {n} vertices but only {reached} are reachable from 0")

    # -- cut edges ------------------------------------------------------------

    @cached_property
    def _bridges(self) -> frozenset[tuple[int, int]]:
        """All cut-edges, found by an iterative depth-first low-link pass."""
        n = self.vertex_count
        pre = [-1] * n
        low = [0] * n
        bridges: set[tuple[int, int]] = set()
        counter = 0
        for root in range(n):
            if pre[root] != -1:
                continue
            pre[root] = low[root] = counter
            counter += 1
            stack: list[tuple[int, int, Iterable[tuple[int, float]]]] = [
                (root, -1, iter(self._adjacency[root]))
            ]
            while stack:
                v, parent, it = stack[-1]
                pushed = False
                for w, _ in it:
                    if pre[w] == -1:
                        pre[w] = low[w] = counter
                        counter += 1
                        stack.append((w, v, iter(self._adjacency[w])))
                        pushed = True
                        break
                    if w != parent:
                        low[v] = min(low[v], pre[w])
                if not pushed:
                    stack.pop()
                    if stack:
                        p = stack[-1][0]
                        low[p] = min(low[p], low[v])
                        if low[v] > pre[p]:
                            bridges.add((min(p, v), max(p, v)))
        return frozenset(bridges)

    def is_cut_edge(self, a: int, b: int) -> bool:
        """True iff deleting edge {a, b} would disconnect the graph."""
        if not self.has_edge(a, b):
            raise NoSuchEdge(f"({a}, {b}) is not an edge")
        return (min(a, b), max(a, b)) in self._bridges

    # -- surgeries ------------------------------------------------------------

    def remove_edge(self, a: int, b: int) -> "Network":
        """Return a new network with edge {a, b} deleted.

        Raises:
            NoSuchEdge: the pair is not an edge.
            WouldDisconnect: the edge is a cut-edge.
        """
        a = self._require_vertex(a)
        b = self._require_vertex(b)
        if not self.has_edge(a, b):
            raise NoSuchEdge(f"({a}, {b}) is not an edge")
        if self.is_cut_edge(a, b):
            raise WouldDisconnect(f"({a}, {b}) is a cut-edge; removal would disconnect the graph")
        key = (min(a, b), max(a, b))
        kept = tuple(e for e in self.edges if (e[0], e[1]) != key)
        return Network(self.vertex_count, kept)

    def add_pendant_vertex(self, z: int, conductance: float = 1.0) -> tuple["Network", int]:
        """Attach a fresh degree-1 vertex to ``z`` and return (network, new id).

        The new vertex gets id ``n`` and a single edge to ``z`` with the given
        conductance; total strength grows by twice that conductance.
        """
        z = self._require_vertex(z)
        new_id = self.vertex_count
        extended = self.edges + ((z, new_id, float(conductance)),)
        return Network(self.vertex_count + 1, extended), new_id


def build_network(
    vertex_count: int,
    weighted_edges: Iterable[Sequence],
) -> Network:
    """Validate and build a :class:`Network` from an edge list.

    Args:
        vertex_count: number of vertices; ids must lie in ``0..n-1``.
        weighted_edges: iterable of ``(a, b)`` or ``(a, b, conductance)``;
            omitted conductances default to 1.

    Returns:
        The validated network.

    Raises:
        BadVertexId: an endpoint is out of range.
        InvalidEdge: self-loop, duplicate pair, or bad conductance.
        DisconnectedGraph: the edges do not connect all vertices.
    """
    triples = []
    for item in weighted_edges:
        if len(item) == 2:
            a, b = item
            triples.append((int(a), int(b), 1.0))
        elif len(item) == 3:
            a, b, c = item
            triples.append((int(a), int(b), float(c)))
        else:
            raise InvalidEdge(f"expected (a, b) or (a, b, conductance), got {tuple(item)!r}")
    return Network(int(vertex_count), tuple(triples))
