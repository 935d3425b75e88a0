"""Spanning-tree counting and isomorphism-classed enumeration.

Counting goes through the matrix-tree theorem with fraction-free (Bareiss)
integer elimination, so the determinant is exact at any size. Enumeration is
a deletion/contraction recursion intended for Petersen-scale inputs; the
resulting labeled trees are grouped into isomorphism classes keyed first by
a cheap fingerprint (degree sequence + distance multiset) with an exact
isomorphism search deciding inside each bucket.
"""

from __future__ import annotations

from dataclasses import dataclass

from cgtportal.errors import DisconnectedGraphError, SizeLimitExceededError
from cgtportal.graphs.graph import Graph, is_connected
from cgtportal.graphs.isomorphism import are_isomorphic
from cgtportal.indexes.distances import bfs_distances
from cgtportal.indexes.wiener import wiener

# Soft guard for the census: deletion/contraction on larger inputs explodes.
CENSUS_MAX_VERTICES = 12
CENSUS_MAX_EDGES = 20


def _bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def spanning_tree_count(g: Graph) -> int:
    """Number of labeled spanning trees, by the matrix-tree theorem.

    Any principal (n-1) x (n-1) minor of the Laplacian works; we drop the
    last row and column. Disconnected graphs count 0.
    """
    if g.n <= 1:
        return 1
    if not is_connected(g):
        return 0
    n = g.n
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    minor = [row[: n - 1] for row in lap[: n - 1]]
    return _bareiss_determinant(minor)


def _enumerate_spanning_trees(g: Graph) -> list[frozenset[int]]:
    """All labeled spanning trees as frozensets of edge ids (sorted-edge order).

    Deletion/contraction: the first live edge either joins the tree (contract
    it) or is discarded (delete it, if the rest stays connected). Contraction
    merges endpoint classes; edges inside one class become loops and drop out.
    """
    edge_list = g.sorted_edges()
    n = g.n

    parent = list(range(n))

    def find(x: int, parent: list[int]) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    results: list[frozenset[int]] = []

    def connected_components(live: list[int], merged: list[int]) -> int:
        roots = {find(v, merged) for v in range(n)}
        cls = {r: i for i, r in enumerate(roots)}
        adj: dict[int, set[int]] = {i: set() for i in range(len(roots))}
        for eid in live:
            u, v = edge_list[eid]
            cu, cv = cls[find(u, merged)], cls[find(v, merged)]
            if cu != cv:
                adj[cu].add(cv)
                adj[cv].add(cu)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(roots) - len(seen)

    def recurse(live: list[int], merged: list[int], chosen: list[int], classes: int) -> None:
        if classes == 1:
            results.append(frozenset(chosen))
            return
        # drop loops, pick the first live non-loop edge
        pruned = []
        pick = None
        for eid in live:
            u, v = edge_list[eid]
            if find(u, merged) == find(v, merged):
                continue
            if pick is None:
                pick = eid
            pruned.append(eid)
        if pick is None:
            return
        u, v = edge_list[pick]
        rest = [eid for eid in pruned if eid != pick]

        # include pick: contract its endpoints
        contracted = merged[:]
        contracted[find(u, contracted)] = find(v, contracted)
        recurse(rest, contracted, chosen + [pick], classes - 1)

        # exclude pick: only viable if the remaining edges still connect everything
        if connected_components(rest, merged[:]) == 0:
            recurse(rest, merged, chosen, classes)

    recurse(list(range(len(edge_list))), parent, [], n)
    return results


@dataclass(frozen=True)
class TreeClass:
    """One isomorphism class of spanning trees."""

    representative: Graph
    multiplicity: int
    wiener: int


def _tree_fingerprint(tree: Graph) -> tuple:
    deg = tuple(sorted(len(a) for a in tree.adjacency))
    dists: list[int] = []
    for v in range(tree.n):
        dists.extend(bfs_distances(tree, v))
    return (deg, tuple(sorted(dists)))


def spanning_tree_census(
    g: Graph, override_size_limit: bool = False
) -> list[TreeClass]:
    """Enumerate spanning trees up to isomorphism.

    Returns one representative per class with the class size (number of
    labeled trees) and the representative's Wiener index, in a deterministic
    order: ascending Wiener index, then degree sequence, then multiplicity.
    The multiplicities sum to :func:`spanning_tree_count`.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("spanning-tree census requires a connected graph")
    if not override_size_limit and (g.n > CENSUS_MAX_VERTICES or g.m > CENSUS_MAX_EDGES):
        raise SizeLimitExceededError(
            f"census guard: {g.n} vertices / {g.m} edges exceeds "
            f"{CENSUS_MAX_VERTICES}/{CENSUS_MAX_EDGES}; pass override_size_limit=True to force"
        )
    edge_list = g.sorted_edges()
    buckets: dict[tuple, list[tuple[Graph, int]]] = {}
    for tree_edges in _enumerate_spanning_trees(g):
        tree = Graph.from_edges(g.n, [edge_list[eid] for eid in tree_edges])
        fp = _tree_fingerprint(tree)
        bucket = buckets.setdefault(fp, [])
        for i, (rep, count) in enumerate(bucket):
            if are_isomorphic(rep, tree):
                bucket[i] = (rep, count + 1)
                break
        else:
            bucket.append((tree, 1))
    classes = []
    for fp, bucket in buckets.items():
        for rep, count in bucket:
            classes.append(TreeClass(representative=rep, multiplicity=count, wiener=int(wiener(rep))))
    classes.sort(
        key=lambda c: (
            c.wiener,
            tuple(sorted(len(a) for a in c.representative.adjacency)),
            c.multiplicity,
            c.representative.sorted_edges(),
        )
    )
    return classes
