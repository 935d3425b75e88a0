"""Generators for the graph families covered by the portal.

Every generator is deterministic: a given parameter list always yields the
identical vertex numbering and edge set, so edge-list exports are bit-stable
across runs. Conventions that are not forced by a definition are documented
on the generator that adopts them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from cgtportal.errors import InvalidParameterError
from cgtportal.graphs.graph import Graph


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParameterError(message)


def complete(n: int) -> Graph:
    """Complete graph K_n on vertices 0..n-1."""
    _require(n >= 1, f"complete: n must be >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: part A = 0..m-1, part B = m..m+n-1."""
    _require(m >= 1 and n >= 1, f"complete-bipartite: parts must be >= 1, got ({m}, {n})")
    return Graph.from_edges(m + n, ((a, m + b) for a in range(m) for b in range(n)))


def cycle(m: int) -> Graph:
    """Cycle C_m: 0-1-...-(m-1)-0."""
    _require(m >= 3, f"cycle: m must be >= 3, got {m}")
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def star(n: int) -> Graph:
    """Star S_n = K_{1,n}: center 0, leaves 1..n (n+1 vertices)."""
    _require(n >= 1, f"star: n must be >= 1, got {n}")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def ladder(n: int) -> Graph:
    """Ladder L_n = P_n x K_2: rails 0..n-1 and n..2n-1, rung (i, n+i)."""
    _require(n >= 1, f"ladder: n must be >= 1, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(n + i, n + i + 1) for i in range(n - 1)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def hypercube(n: int) -> Graph:
    """Binary n-hypercube: vertex i is the n-bit word of i; edges at Hamming distance 1."""
    _require(n >= 1, f"hypercube: n must be >= 1, got {n}")
    edges = []
    for v in range(1 << n):
        for bit in range(n):
            u = v ^ (1 << bit)
            if u > v:
                edges.append((v, u))
    labels = tuple(format(v, f"0{n}b") for v in range(1 << n))
    return Graph.from_edges(1 << n, edges, labels=labels)


def wheel(n: int) -> Graph:
    """Wheel W_n: cycle C_{n-1} on vertices 1..n-1 joined to hub vertex 0."""
    _require(n >= 4, f"wheel: n must be >= 4, got {n}")
    rim = list(range(1, n))
    edges = [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    edges += [(0, v) for v in rim]
    return Graph.from_edges(n, edges)


def gear(n: int) -> Graph:
    """Gear graph: wheel W_n with one new vertex subdividing each rim edge.

    Vertices 0..n-1 as in :func:`wheel`; subdividers n..2n-2 follow the rim
    edges in ascending order. V = 2n-1, E = 3(n-1).
    """
    _require(n >= 4, f"gear: n must be >= 4, got {n}")
    rim = list(range(1, n))
    edges = [(0, v) for v in rim]
    for i in range(len(rim)):
        a, b = rim[i], rim[(i + 1) % len(rim)]
        mid = n + i
        edges += [(a, mid), (mid, b)]
    return Graph.from_edges(2 * n - 1, edges)


def petersen() -> Graph:
    """Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes (i, i+5)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    labels = tuple(f"o{i}" for i in range(5)) + tuple(f"i{i}" for i in range(5))
    return Graph.from_edges(10, edges, labels=labels)


def odd_graph(n: int) -> Graph:
    """Odd graph O_n: one vertex per (n-1)-subset of {1..2n-1}, edges between disjoint subsets.

    Vertices are numbered by the lexicographic order of the subsets; O_2 is
    the triangle and O_3 the Petersen graph.
    """
    _require(n >= 2, f"odd: n must be >= 2, got {n}")
    subsets = list(combinations(range(1, 2 * n), n - 1))
    index = {s: i for i, s in enumerate(subsets)}
    sets = [frozenset(s) for s in subsets]
    edges = []
    for i, a in enumerate(sets):
        for j in range(i + 1, len(sets)):
            if a.isdisjoint(sets[j]):
                edges.append((i, j))
    labels = tuple("{" + ",".join(map(str, s)) + "}" for s in subsets)
    assert len(index) == len(subsets)
    return Graph.from_edges(len(subsets), edges, labels=labels)


def fibonacci_tree(n: int) -> Graph:
    """Fibonacci tree: T_1 = T_2 = a single vertex; T_n = root with subtrees T_{n-1}, T_{n-2}.

    Vertices are numbered in preorder, larger subtree first.
    """
    _require(n >= 1, f"fibonacci-tree: n must be >= 1, got {n}")
    edges: list[tuple[int, int]] = []
    counter = [0]

    def build(k: int) -> int:
        root = counter[0]
        counter[0] += 1
        if k > 2:
            left = build(k - 1)
            right = build(k - 2)
            edges.append((root, left))
            edges.append((root, right))
        return root

    build(n)
    return Graph.from_edges(counter[0], edges)


# --- the doubled 3-regular block families -----------------------------------

# Basic block on {r, A..F}: the root r has degree 2, every other vertex degree 3.
_BLOCK_LETTERS = ["r", "A", "B", "C", "D", "E", "F"]
_BLOCK_EDGES = ["rA", "rB", "AC", "AD", "BE", "BF", "CD", "CE", "DF", "EF"]

# Extended basic block: adds G..N, drops the C/D/E/F cross edges, and wires the
# new level so every non-root vertex keeps degree 3 (15 vertices, 22 edges).
_EXT_LETTERS = _BLOCK_LETTERS + ["G", "H", "I", "J", "K", "L", "M", "N"]
_EXT_REMOVED = ["CD", "CE", "DF", "EF"]
_EXT_ADDED = [
    "CG", "CH", "DI", "DJ", "EK", "EL", "FM", "FN",
    "GH", "IJ", "KL", "MN", "GI", "HJ", "KM", "LN",
]


def _letter_edges(letters: list[str], pairs: list[str]) -> list[tuple[int, int]]:
    pos = {c: i for i, c in enumerate(letters)}
    return [(pos[p[0]], pos[p[1]]) for p in pairs]


def basic_block() -> Graph:
    """The level-1 building block: root r of degree 2, six degree-3 vertices."""
    return Graph.from_edges(7, _letter_edges(_BLOCK_LETTERS, _BLOCK_EDGES), labels=tuple(_BLOCK_LETTERS))


def extended_basic_block() -> Graph:
    """Basic block grown by one level of vertices G..N; 15 vertices, root degree 2."""
    pairs = [p for p in _BLOCK_EDGES if p not in _EXT_REMOVED] + _EXT_ADDED
    return Graph.from_edges(15, _letter_edges(_EXT_LETTERS, pairs), labels=tuple(_EXT_LETTERS))


def _doubled_family(base: Graph, root: int, n: int) -> Graph:
    """Shared doubling scheme for the 3-regular block families.

    Level 1 joins two base blocks by an edge between their roots. To go one
    level up, the current joining edge (a, b) is replaced by the path a-x-b
    through a new center vertex x, two copies of the result are laid side by
    side, and the two centers are joined. Joining a degree-2 root/center to
    its twin is what restores 3-regularity at every level.
    """
    size = base.n
    edges = set(base.edges)
    edges |= {(u + size, v + size) for u, v in base.edges}
    edges.add((root, root + size))
    labels = [f"L:{base.label(v)}" for v in range(size)] + [f"R:{base.label(v)}" for v in range(size)]
    joining = (root, root + size)
    nv = 2 * size
    for level in range(2, n + 1):
        edges.discard(joining)
        x = nv
        a, b = joining
        edges.add((a, x))
        edges.add((b, x))
        labels.append(f"x{level - 1}")
        nv += 1
        edges = set(edges) | {(u + nv, v + nv) for u, v in edges}
        labels = [f"L:{s}" for s in labels] + [f"R:{s}" for s in labels]
        joining = (x, x + nv)
        edges.add(joining)
        nv *= 2
    return Graph.from_edges(nv, edges, labels=tuple(labels))


def block_family(n: int) -> Graph:
    """The 3-regular family built by doubling the basic block; V_1 = 14, E_1 = 21.

    Counts obey V_n = 2(V_{n-1}+1) and E_n = 2 E_{n-1} + 3.
    """
    _require(n >= 1, f"block: n must be >= 1, got {n}")
    return _doubled_family(basic_block(), 0, n)


def extended_block_family(n: int) -> Graph:
    """Same doubling scheme applied to the extended basic block; V_1 = 30, E_1 = 45."""
    _require(n >= 1, f"extended-block: n must be >= 1, got {n}")
    return _doubled_family(extended_basic_block(), 0, n)


def g_family(k: int, closed: bool = False) -> Graph:
    """The 4-regular-targeting square-of-squares family; V = 16k + 4.

    Canonical port-square scheme. The base square 0..3 is braced by its two
    diagonals; its four vertices are the level-0 ports. Each level attaches
    one new square per port: square vertices q0..q3 form a 4-cycle with chord
    (q1, q3), the port connects to q0, and consecutive squares are braced by
    the two edges (q2_i, q0_{i+1}) and (q3_i, q1_{i+1}). Each square's q2
    ends with degree 3 and becomes the next level's port; every other vertex
    has degree exactly 4. With ``closed`` the two opposite port pairs are
    joined, making the graph exactly 4-regular (no further level attaches).
    """
    _require(k >= 1, f"gk: k must be >= 1, got {k}")
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)]
    labels = ["B0", "B1", "B2", "B3"]
    ports = [0, 1, 2, 3]
    nv = 4
    for level in range(1, k + 1):
        bases = []
        for i, port in enumerate(ports):
            q = [nv, nv + 1, nv + 2, nv + 3]
            nv += 4
            bases.append(q)
            labels += [f"S{level}.{i}.{j}" for j in range(4)]
            edges += [(q[0], q[1]), (q[1], q[2]), (q[2], q[3]), (q[0], q[3])]
            edges.append((q[1], q[3]))
            edges.append((port, q[0]))
        for i in range(4):
            nxt = bases[(i + 1) % 4]
            edges.append((bases[i][2], nxt[0]))
            edges.append((bases[i][3], nxt[1]))
        ports = [q[2] for q in bases]
    if closed:
        edges.append((ports[0], ports[2]))
        edges.append((ports[1], ports[3]))
    return Graph.from_edges(nv, edges, labels=tuple(labels))


# --- uniform family handle ---------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Uniform handle for a named family instance: family name plus integer params."""

    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))


@dataclass(frozen=True)
class _FamilyInfo:
    arity: int
    build: Callable[..., Graph]
    params_doc: str


FAMILIES: dict[str, _FamilyInfo] = {
    "complete": _FamilyInfo(1, complete, "n >= 1"),
    "complete-bipartite": _FamilyInfo(2, complete_bipartite, "m >= 1, n >= 1"),
    "cycle": _FamilyInfo(1, cycle, "m >= 3"),
    "star": _FamilyInfo(1, star, "n >= 1 (leaf count)"),
    "ladder": _FamilyInfo(1, ladder, "n >= 1 (rung count)"),
    "hypercube": _FamilyInfo(1, hypercube, "n >= 1"),
    "wheel": _FamilyInfo(1, wheel, "n >= 4 (total vertices)"),
    "gear": _FamilyInfo(1, gear, "n >= 4 (wheel parameter)"),
    "petersen": _FamilyInfo(0, petersen, "no parameters"),
    "odd": _FamilyInfo(1, odd_graph, "n >= 2"),
    "fibonacci-tree": _FamilyInfo(1, fibonacci_tree, "n >= 1"),
    "block": _FamilyInfo(1, block_family, "n >= 1"),
    "extended-block": _FamilyInfo(1, extended_block_family, "n >= 1"),
    "gk-open": _FamilyInfo(1, lambda k: g_family(k, closed=False), "k >= 1"),
    "gk-closed": _FamilyInfo(1, lambda k: g_family(k, closed=True), "k >= 1"),
}


def generate(spec: FamilySpec) -> Graph:
    """Build the canonical labeled instance for ``spec``.

    Raises :class:`InvalidParameterError` for unknown families, wrong arity,
    or out-of-range parameters; nothing is constructed on error.
    """
    info = FAMILIES.get(spec.family)
    if info is None:
        raise InvalidParameterError(f"unknown family {spec.family!r}")
    if len(spec.params) != info.arity:
        raise InvalidParameterError(
            f"{spec.family} takes {info.arity} parameter(s) ({info.params_doc}), got {len(spec.params)}"
        )
    return info.build(*spec.params)
