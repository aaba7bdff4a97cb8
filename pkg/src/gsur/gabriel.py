"""Gabriel graphs in R^d: construction, connectivity, spanning trees.

The Gabriel graph joins x and y when the closed ball with diameter xy
contains no other point.  A point exactly on that ball's boundary blocks
the edge.  The graph is connected for every finite point set, which is what
makes its spanning trees usable as ball range systems.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .core import PointSet
from .errors import Disconnected

# Relative slack on the blocking test for non-representable coordinates.
_RTOL = 1e-12


@dataclass(frozen=True)
class Graph:
    """Undirected graph on vertices 0..n-1; edges are sorted index pairs.

    `near_boundary` lists (i, j, k) triples where point k sat within
    tolerance of the diametral ball boundary of (i, j) -- degenerate
    cocircular inputs are allowed but worth flagging.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    near_boundary: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((min(i, j), max(i, j)) for i, j in self.edges)
        )
        object.__setattr__(
            self, "near_boundary", tuple(tuple(t) for t in self.near_boundary)
        )
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={self.n}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for nbrs in adj:
            nbrs.sort()
        return adj


def gabriel_graph(ps: PointSet) -> Graph:
    """Brute-force Gabriel graph: O(n^3) pairwise blocking checks.

    Point w lies in the closed diametral ball of (u, v) iff
    (w-u).(w-v) <= 0, which is exact for integer coordinates.
    """
    pts = ps.coords()
    n = ps.n
    # D[i, w] = P[w] - P[i]; S[i, j, w] = (P[w]-P[i]).(P[w]-P[j])
    diffs = pts[None, :, :] - pts[:, None, :]
    s = np.einsum("iwk,jwk->ijw", diffs, diffs)
    scale = np.sum(diffs * diffs, axis=2)  # |u-v|^2 at [i, j]

    idx = np.arange(n)
    edges = []
    near = []
    for i in range(n):
        for j in range(i + 1, n):
            others = (idx != i) & (idx != j)
            row = s[i, j]
            tol = _RTOL * scale[i, j]
            if not (row[others] <= tol).any():
                edges.append((i, j))
            close = others & (np.abs(row) <= tol)
            for k in idx[close]:
                near.append((i, j, int(k)))
    return Graph(n=n, edges=tuple(edges), near_boundary=tuple(near))


def is_connected(g: Graph) -> bool:
    """Standard BFS connectivity."""
    if g.n == 0:
        return True
    adj = g.adjacency()
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def spanning_tree(g: Graph) -> Graph:
    """Deterministic BFS spanning tree from vertex 0, neighbors in index order.

    Edges are listed in discovery order.  Raises Disconnected otherwise.
    """
    adj = g.adjacency()
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    tree_edges: list[tuple[int, int]] = []
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                tree_edges.append((v, w))
                queue.append(w)
    if len(tree_edges) != g.n - 1:
        raise Disconnected(f"graph has {g.n} vertices but BFS reached {len(tree_edges) + 1}")
    return Graph(n=g.n, edges=tuple(tree_edges))


def edge_list_text(g: Graph) -> str:
    """One 'i j' pair per line."""
    return "\n".join(f"{i} {j}" for i, j in g.edges) + ("\n" if g.edges else "")
