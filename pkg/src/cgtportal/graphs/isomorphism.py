"""Exact graph isomorphism by pruned backtracking.

Intended for the small graphs the portal works with (spanning trees, family
instances up to a few hundred vertices). The search is exact, never
probabilistic: degree sequences and neighborhood-degree profiles only prune,
the backtracking decides.
"""

from __future__ import annotations

from typing import Sequence

from cgtportal.errors import InvalidParameterError
from cgtportal.graphs.graph import Graph


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a vertex permutation: vertex v of ``g`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise InvalidParameterError("relabel: perm must be a permutation of 0..n-1")
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    labels = None
    if g.labels is not None:
        labels = [""] * g.n
        for v in range(g.n):
            labels[perm[v]] = g.labels[v]
    weights = None
    if g.weights is not None:
        weights = {(perm[u], perm[v]): w for (u, v), w in g.weights.items()}
    return Graph.from_edges(g.n, edges, labels=labels, weights=weights)


def _neighbor_degree_profile(g: Graph) -> list[tuple[int, ...]]:
    deg = [len(a) for a in g.adjacency]
    return [tuple(sorted(deg[w] for w in g.adjacency[v])) for v in range(g.n)]


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """True iff an edge-preserving vertex bijection between g1 and g2 exists."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    n = g1.n
    if n == 0:
        return True
    deg1 = [len(a) for a in g1.adjacency]
    deg2 = [len(a) for a in g2.adjacency]
    if sorted(deg1) != sorted(deg2):
        return False
    prof1 = _neighbor_degree_profile(g1)
    prof2 = _neighbor_degree_profile(g2)
    if sorted(prof1) != sorted(prof2):
        return False

    adj1 = [set(a) for a in g1.adjacency]
    adj2 = [set(a) for a in g2.adjacency]

    # Order g1's vertices so each one (after the first) touches the already
    # mapped prefix where possible; keeps the partial mapping constrained.
    order: list[int] = []
    placed = [False] * n
    for start in sorted(range(n), key=lambda v: (-deg1[v], v)):
        if placed[start]:
            continue
        stack = [start]
        placed[start] = True
        while stack:
            v = stack.pop()
            order.append(v)
            for w in sorted(adj1[v], key=lambda w: (-deg1[w], w)):
                if not placed[w]:
                    placed[w] = True
                    stack.append(w)

    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        mapped_neighbors = [mapping[w] for w in adj1[v] if mapping[w] >= 0]
        for cand in range(n):
            if used[cand] or deg2[cand] != deg1[v] or prof2[cand] != prof1[v]:
                continue
            if any(t not in adj2[cand] for t in mapped_neighbors):
                continue
            # the candidate must not be adjacent to images of v's non-neighbors
            ok = True
            for w in range(n):
                if mapping[w] >= 0 and w not in adj1[v] and mapping[w] in adj2[cand]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = cand
            used[cand] = True
            if extend(i + 1):
                return True
            mapping[v] = -1
            used[cand] = False
        return False

    return extend(0)
