"""Shared test helpers: independent oracles and seeded generators.

The oracles here deliberately avoid the library code paths they check:
distances come from boolean adjacency powers, tree isomorphism from AHU
canonical forms, spanning trees from exhaustive edge-subset enumeration.
"""

from __future__ import annotations

import random
from itertools import combinations

from cgtportal.graphs import Graph
from cgtportal.content.model import (
    ColorCode,
    Construction,
    LogicalPage,
    MoreRef,
    PageProperty,
    PrerequisiteBox,
    Remark,
)
from cgtportal.graphs.families import FamilySpec


def random_connected_graph(rng: random.Random, max_n: int = 12) -> Graph:
    """Random connected graph: a random spanning tree plus random extra edges."""
    n = rng.randint(2, max_n)
    edges = set()
    for v in range(1, n):
        edges.add(tuple(sorted((v, rng.randrange(v)))))
    extra = rng.randint(0, n)
    possible = [e for e in combinations(range(n), 2) if e not in edges]
    rng.shuffle(possible)
    edges.update(possible[:extra])
    return Graph.from_edges(n, edges)


def power_distances(g: Graph) -> list[list[int | None]]:
    """Distance oracle via boolean adjacency powers: d(u,v) = least k with A^k reaching v."""
    n = g.n
    adj = [[False] * n for _ in range(n)]
    for u, v in g.edges:
        adj[u][v] = True
        adj[v][u] = True
    dist: list[list[int | None]] = [[None] * n for _ in range(n)]
    for u in range(n):
        dist[u][u] = 0
    reach = [row[:] for row in adj]
    for k in range(1, n):
        changed = False
        for u in range(n):
            for v in range(n):
                if reach[u][v] and dist[u][v] is None:
                    dist[u][v] = k
                    changed = True
        if not changed:
            break
        nxt = [[False] * n for _ in range(n)]
        for u in range(n):
            for w in range(n):
                if reach[u][w]:
                    for v in range(n):
                        if adj[w][v]:
                            nxt[u][v] = True
        reach = nxt
    return dist


def ahu_canonical(tree: Graph) -> str:
    """Canonical form of a free tree (AHU encoding rooted at the centers)."""
    n = tree.n
    if n == 1:
        return "()"
    adj = [list(a) for a in tree.adjacency]
    # peel leaves to find the 1 or 2 centers
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] == 1]
    removed = 0
    alive = [True] * n
    while n - removed > 2:
        nxt = []
        for leaf in layer:
            alive[leaf] = False
            removed += 1
            for w in adj[leaf]:
                if alive[w]:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [v for v in range(n) if alive[v]]

    def encode(root: int, parent: int) -> str:
        parts = sorted(encode(w, root) for w in tree.adjacency[root] if w != parent)
        return "(" + "".join(parts) + ")"

    return min(encode(c, -1) for c in centers)


def spanning_trees_by_subsets(g: Graph) -> list[frozenset[tuple[int, int]]]:
    """Exhaustive oracle: every (n-1)-edge subset that is connected and spanning."""
    edges = g.sorted_edges()
    n = g.n
    trees = []
    for subset in combinations(edges, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        merged = 0
        ok = True
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
            merged += 1
        if ok and merged == n - 1:
            trees.append(frozenset(subset))
    return trees


# --- page fuzzing -------------------------------------------------------------

_WORDS = (
    "graph", "vertex", "edge", "cycle", "degree", "regular", "distance", "index",
    "spanning", "tree", "hub", "square", "subset", "family", "level", "construction",
    "count", "exact", "class", "portal", "course", "exercise", "proof", "claim",
)

_TERMS = (
    "graphs", "trees", "isomorphism", "recurrence relations", "power set",
    "cycles in graphs", "distance in graphs", "k-regular graphs",
    "perfect graphs", "planarity and embeddings",
)

_FAMILY_CHOICES = (
    FamilySpec("wheel", (6,)),
    FamilySpec("cycle", (5,)),
    FamilySpec("petersen", ()),
    FamilySpec("odd", (3,)),
    FamilySpec("hypercube", (3,)),
    FamilySpec("block", (1,)),
)


def _sentence(rng: random.Random, lines: int = 1) -> str:
    out = []
    for _ in range(lines):
        out.append(" ".join(rng.choice(_WORDS) for _ in range(rng.randint(2, 8))) + ".")
    return "\n".join(out)


def random_page(rng: random.Random, known_ids: tuple[str, ...] = ()) -> LogicalPage:
    """A random exportable page for round-trip fuzzing (not necessarily valid)."""
    colors = (ColorCode.IN_COURSE, ColorCode.OUTSIDE_COURSE, None)
    page_id = f"ACGT-{rng.randrange(1000000):06d}"
    term_pool = list(_TERMS)
    rng.shuffle(term_pool)
    boxes = tuple(
        PrerequisiteBox(
            terms=tuple(term_pool[i * 2: i * 2 + rng.randint(1, 2)]) or (term_pool[0],),
            declared_type=rng.choice(("P1", "P2")),
        )
        for i in range(rng.randint(0, 2))
    )
    return LogicalPage(
        id=page_id,
        title=_sentence(rng).rstrip("."),
        kind=rng.choice(("special-graph", "graph-class", "combinatorial-object")),
        definition=_sentence(rng, rng.randint(1, 3)),
        figures=tuple(f"figures/{rng.choice(_WORDS)}-{rng.randrange(99)}.svg" for _ in range(rng.randint(0, 2))),
        constructions=tuple(
            Construction(_sentence(rng), rng.choice(_FAMILY_CHOICES) if rng.random() < 0.5 else None)
            for _ in range(rng.randint(0, 2))
        ),
        properties=tuple(
            PageProperty(_sentence(rng, rng.randint(1, 2)), rng.choice(colors))
            for _ in range(rng.randint(0, 4))
        ),
        related=tuple(rng.sample(known_ids, k=min(len(known_ids), rng.randint(0, 2)))),
        more_to_explore=tuple(
            MoreRef(_sentence(rng), f"https://example.edu/{rng.choice(_WORDS)}" if rng.random() < 0.5 else None)
            for _ in range(rng.randint(0, 2))
        ),
        historical_notes=_sentence(rng) if rng.random() < 0.5 else "",
        remarks=tuple(
            Remark(f"user{rng.randrange(50)}", _sentence(rng, rng.randint(1, 2)))
            for _ in range(rng.randint(0, 2))
        ),
        prereq_boxes=boxes,
        color=rng.choice(colors),
        prereq_courses=tuple(
            f"{rng.choice(_WORDS)} course" for _ in range(rng.randint(0, 2))
        ),
        computed=tuple(
            (f"key{rng.randrange(9)}", str(rng.randrange(10**6))) for _ in range(rng.randint(0, 2))
        ),
        status=rng.choice(("Draft", "Published")),
    )
