"""Immutable simple-graph container and basic structural queries.

Vertices are indices ``0..n-1``. Edges are unordered index pairs stored once
as ``(u, v)`` with ``u < v``. Weights, when present, are exact positive
rationals keyed by the normalized edge pair. Instances never change after
construction, so they are safe to share across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from cgtportal.errors import InvalidParameterError, ParseError


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected labeled graph with optional edge weights."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)
    labels: tuple[str, ...] | None = None
    weights: Mapping[tuple[int, int], Fraction] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameterError("vertex count must be nonnegative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameterError(f"edge ({u}, {v}) endpoint out of range")
            norm.add(_normalize_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.n:
                raise InvalidParameterError("label count must equal vertex count")
            object.__setattr__(self, "labels", labels)
        if self.weights is not None:
            weights: dict[tuple[int, int], Fraction] = {}
            for (u, v), w in self.weights.items():
                e = _normalize_edge(u, v)
                if e not in self.edges:
                    raise InvalidParameterError(f"weight for non-edge ({u}, {v})")
                w = Fraction(w)
                if w <= 0:
                    raise InvalidParameterError(f"non-positive weight on edge {e}")
                weights[e] = w
            if set(weights) != self.edges:
                raise InvalidParameterError("weights must cover every edge")
            object.__setattr__(self, "weights", weights)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Iterable[str] | None = None,
        weights: Mapping[tuple[int, int], Fraction | int] | None = None,
    ) -> "Graph":
        return cls(
            n=n,
            edges=frozenset(_normalize_edge(u, v) for u, v in edges),
            labels=tuple(labels) if labels is not None else None,
            weights=dict(weights) if weights is not None else None,
        )

    @property
    def m(self) -> int:
        """Edge count."""
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples, indexed by vertex."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(neighbors)) for neighbors in adj)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def weight(self, u: int, v: int) -> Fraction | int:
        if self.weights is None:
            return 1
        return self.weights[_normalize_edge(u, v)]

    def label(self, u: int) -> str:
        return self.labels[u] if self.labels is not None else str(u)


def degrees(g: Graph) -> list[int]:
    """Per-vertex degree, indexed by vertex."""
    return [len(neigh) for neigh in g.adjacency]


def is_k_regular(g: Graph, k: int) -> bool:
    """True iff every vertex has degree exactly ``k``."""
    return all(len(neigh) == k for neigh in g.adjacency)


def is_connected(g: Graph) -> bool:
    """True iff one traversal reaches all vertices; vacuously true for n <= 1."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def _format_weight(w: Fraction | int) -> str:
    w = Fraction(w)
    if w.denominator == 1:
        return str(w.numerator)
    return f"{w.numerator}/{w.denominator}"


def _parse_weight(token: str, lineno: int) -> Fraction:
    try:
        if "/" in token:
            num, den = token.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad weight {token!r}: {exc}", lineno) from exc


def to_edge_list_text(g: Graph) -> str:
    """Render the universal edge-list format.

    First line is ``n m``; each following line is ``u v`` with ``u < v`` in
    ascending order, plus a third weight column when the graph is weighted.
    Weights print as integers or exact fractions ``p/q``. Newline-terminated.
    """
    lines = [f"{g.n} {g.m}"]
    for u, v in g.sorted_edges():
        if g.weights is not None:
            lines.append(f"{u} {v} {_format_weight(g.weights[(u, v)])}")
        else:
            lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format; inverse of :func:`to_edge_list_text`.

    Weights may be exact decimals (``0.5``) or fractions (``1/2``); either
    parses to an exact rational.
    """
    lines = [ln for ln in text.splitlines()]
    meaningful = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not meaningful:
        raise ParseError("empty edge-list input", 1)
    header_no, header = meaningful[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"header must be 'n m', got {header!r}", header_no)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ParseError(f"bad header {header!r}", header_no) from exc
    edges: set[tuple[int, int]] = set()
    weights: dict[tuple[int, int], Fraction] = {}
    weighted = None
    for lineno, line in meaningful[1:]:
        cols = line.split()
        if len(cols) not in (2, 3):
            raise ParseError(f"edge line must be 'u v [w]', got {line!r}", lineno)
        try:
            u, v = int(cols[0]), int(cols[1])
        except ValueError as exc:
            raise ParseError(f"bad edge line {line!r}", lineno) from exc
        has_weight = len(cols) == 3
        if weighted is None:
            weighted = has_weight
        elif weighted != has_weight:
            raise ParseError("mixed weighted and unweighted edge lines", lineno)
        e = _normalize_edge(u, v)
        if e in edges:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno)
        edges.add(e)
        if has_weight:
            weights[e] = _parse_weight(cols[2], lineno)
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", header_no)
    try:
        return Graph.from_edges(n, edges, weights=weights if weighted else None)
    except InvalidParameterError as exc:
        raise ParseError(str(exc), header_no) from exc
