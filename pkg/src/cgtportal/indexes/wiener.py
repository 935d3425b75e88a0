"""Wiener index and Hosoya-Wiener polynomial.

The Wiener index is the sum of shortest-path distances over all unordered
vertex pairs of a connected graph. The Hosoya-Wiener polynomial collects the
pair counts by distance: sum(c_d * t^d) with c_d the number of unordered
pairs at distance exactly d; its derivative at t = 1 is the Wiener index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cgtportal.errors import DisconnectedGraphError, InvalidParameterError
from cgtportal.graphs.graph import Graph, is_connected
from cgtportal.indexes.distances import all_pairs_floyd_warshall, bfs_distances


@dataclass(frozen=True)
class HosoyaWienerPolynomial:
    """Map distance d >= 1 -> count of unordered vertex pairs at distance d."""

    coeffs: tuple[tuple[int, int], ...]  # sorted (distance, count) pairs

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "HosoyaWienerPolynomial":
        return cls(tuple(sorted((d, c) for d, c in counts.items() if c)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def coefficient(self, d: int) -> int:
        return self.as_dict().get(d, 0)

    def pair_count(self) -> int:
        """Sum of coefficients; equals C(n, 2) on a connected n-vertex graph."""
        return sum(c for _, c in self.coeffs)

    def derivative_at_one(self) -> int:
        """sum(d * c_d): the Wiener index of the underlying graph."""
        return sum(d * c for d, c in self.coeffs)

    def evaluate(self, t: Fraction | int) -> Fraction | int:
        return sum(c * t**d for d, c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in self.coeffs:
            parts.append(f"{c} t" if d == 1 else f"{c} t^{d}")
        return " + ".join(parts)


def wiener(g: Graph) -> int | Fraction:
    """Exact Wiener index W(g) = sum of d(u, v) over unordered pairs u < v.

    Undefined on disconnected graphs: raises :class:`DisconnectedGraphError`
    rather than returning a sentinel.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("Wiener index is undefined on a disconnected graph")
    if g.weights is not None:
        matrix = all_pairs_floyd_warshall(g)
        total: int | Fraction = 0
        for u in range(g.n):
            row = matrix.d[u]
            for v in range(u + 1, g.n):
                total += row[v]
        return total
    total = 0
    for u in range(g.n):
        dist = bfs_distances(g, u)
        total += sum(dist)
    # each unordered pair was counted from both endpoints
    assert total % 2 == 0
    return total // 2


def hosoya_wiener(g: Graph) -> HosoyaWienerPolynomial:
    """Distance distribution of a connected unweighted graph."""
    if g.weights is not None:
        raise InvalidParameterError("Hosoya-Wiener polynomial requires an unweighted graph")
    if not is_connected(g):
        raise DisconnectedGraphError("Hosoya-Wiener polynomial is undefined on a disconnected graph")
    counts: dict[int, int] = {}
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            d = dist[v]
            counts[d] = counts.get(d, 0) + 1
    return HosoyaWienerPolynomial.from_counts(counts)
