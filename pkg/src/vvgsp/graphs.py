"""Finite graphs, standard families, and their matrices A, D, L and the
normalized Laplacian.

Vertices are 1-based everywhere on the interface, matching the usual
linear-algebra indexing of graph matrices. Matrices are dense numpy arrays
(desk scale only).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DirectedUnsupported, IsolatedVertex, UnsupportedDirected

FAMILIES = ("path", "star", "cycle", "complete")


@dataclass(frozen=True)
class Graph:
    """A finite simple graph without loops.

    ``edges`` holds ordered pairs (i, j), 1-based. For undirected graphs both
    orientations of every edge are stored, so (i, j) in edges iff (j, i) is.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)
    directed: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        pairs = set()
        for i, j in self.edges:
            i, j = int(i), int(j)
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge ({i},{j}) out of range 1..{self.n}")
            if i == j:
                raise ValueError(f"loop ({i},{i}) not allowed")
            pairs.add((i, j))
            if not self.directed:
                pairs.add((j, i))
        object.__setattr__(self, "edges", frozenset(pairs))

    def degree(self, vertex: int) -> int:
        return sum(1 for (i, _) in self.edges if i == vertex)

    def degrees(self) -> np.ndarray:
        out = np.zeros(self.n, dtype=int)
        for i, _ in self.edges:
            out[i - 1] += 1
        return out


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((k, k + 1) for k in range(1, n)))


def star_graph(n: int) -> Graph:
    # center is vertex 1
    return Graph(n, frozenset((1, k) for k in range(2, n + 1)))


def cycle_graph(n: int, directed: bool = False) -> Graph:
    if n < 2:
        raise ValueError("cycle graph needs at least two vertices")
    edges = frozenset((k, k % n + 1) for k in range(1, n + 1))
    return Graph(n, edges, directed=directed)


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j))


def standard_graph(family: str, n: int, directed: bool = False) -> Graph:
    """Build one of the standard families: path, star, cycle, complete."""
    family = family.lower()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if directed and family != "cycle":
        raise UnsupportedDirected(f"directed {family} graphs are not supported")
    if family == "path":
        return path_graph(n)
    if family == "star":
        return star_graph(n)
    if family == "cycle":
        return cycle_graph(n, directed=directed)
    return complete_graph(n)


def adjacency(g: Graph) -> np.ndarray:
    out = np.zeros((g.n, g.n))
    for i, j in g.edges:
        out[i - 1, j - 1] = 1.0
    return out


def degree_matrix(g: Graph) -> np.ndarray:
    if g.directed:
        raise DirectedUnsupported("degree matrix requires an undirected graph")
    return np.diag(g.degrees().astype(float))


def laplacian(g: Graph) -> np.ndarray:
    if g.directed:
        raise DirectedUnsupported("Laplacian requires an undirected graph")
    return degree_matrix(g) - adjacency(g)


def normalized_laplacian(g: Graph) -> np.ndarray:
    if g.directed:
        raise DirectedUnsupported("normalized Laplacian requires an undirected graph")
    deg = g.degrees()
    if np.any(deg == 0):
        isolated = [v + 1 for v in np.flatnonzero(deg == 0)]
        raise IsolatedVertex(f"vertices {isolated} have degree 0")
    out = np.eye(g.n)
    for i, j in g.edges:
        out[i - 1, j - 1] = -1.0 / np.sqrt(deg[i - 1] * deg[j - 1])
    return out
