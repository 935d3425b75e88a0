"""All-pairs shortest-path distances, exact.

Unweighted graphs go through breadth-first search; weighted graphs through
Floyd-Warshall over exact rationals. Unreachable pairs are marked ``None``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from cgtportal.errors import InvalidParameterError
from cgtportal.graphs.graph import Graph


@dataclass(frozen=True)
class DistanceMatrix:
    """n x n matrix of exact shortest-path distances; ``None`` marks unreachable."""

    n: int
    d: tuple[tuple[int | Fraction | None, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> int | Fraction | None:
        u, v = uv
        return self.d[u][v]

    def eccentricity(self, u: int) -> int | Fraction | None:
        row = [x for x in self.d[u] if x is not None]
        if len(row) < self.n:
            return None
        return max(row)

    def diameter(self) -> int | Fraction | None:
        """Largest finite distance; ``None`` if any pair is unreachable."""
        best: int | Fraction = 0
        for u in range(self.n):
            ecc = self.eccentricity(u)
            if ecc is None:
                return None
            if ecc > best:
                best = ecc
        return best


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Single-source hop counts; -1 marks unreachable. Internal fast path."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def all_pairs_bfs(g: Graph) -> DistanceMatrix:
    """BFS from every vertex: d[u][v] = minimum edge count of a u-v path."""
    if g.weights is not None:
        raise InvalidParameterError("all_pairs_bfs requires an unweighted graph")
    rows = []
    for s in range(g.n):
        dist = bfs_distances(g, s)
        rows.append(tuple(x if x >= 0 else None for x in dist))
    return DistanceMatrix(g.n, tuple(rows))


def all_pairs_floyd_warshall(g: Graph) -> DistanceMatrix:
    """Floyd-Warshall under exact rational arithmetic.

    On an unweighted graph (unit weights) the result equals
    :func:`all_pairs_bfs` bit for bit: distances stay plain integers.
    """
    n = g.n
    INF = float("inf")  # sentinel only; never mixed into finite distances
    d: list[list] = [[INF] * n for _ in range(n)]
    for i in range(n):
        d[i][i] = 0
    for u, v in g.edges:
        w = g.weight(u, v)
        if w < d[u][v]:
            d[u][v] = w
            d[v][u] = w
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    rows = tuple(tuple(x if x != INF else None for x in row) for row in d)
    return DistanceMatrix(n, rows)
