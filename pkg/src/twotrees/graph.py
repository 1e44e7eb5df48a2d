"""Simple undirected graphs, 2-tree construction primitives and the 2-tree verifier."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .degseq import DegreeSequence

__all__ = [
    "GraphError",
    "SimpleGraph",
    "EarTrace",
    "TwoTreeCheck",
    "triangle",
    "attach_ear",
    "cone",
    "degree_sequence",
    "is_connected",
    "is_tree",
    "is_two_tree",
    "check_two_tree",
    "ear_adjacency_witness",
    "format_edge_list",
    "parse_edge_list",
    "to_dot",
]


class GraphError(ValueError):
    """Invalid graph input or a violated graph precondition."""


class SimpleGraph:
    """A finite simple undirected graph on the vertices ``0 .. vertex_count - 1``.

    Edges are stored as two parallel endpoint lists; adjacency sets and the
    degree table are derived lazily.  Instances are never mutated after
    construction.
    """

    __slots__ = ("_n", "_us", "_vs", "_adj", "_deg")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise GraphError("vertex count must be non-negative")
        us: list[int] = []
        vs: list[int] = []
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"parallel edge {key}")
            seen.add(key)
            us.append(key[0])
            vs.append(key[1])
        self._n = vertex_count
        self._us = us
        self._vs = vs
        self._adj: Optional[list[set[int]]] = None
        self._deg: Optional[list[int]] = None

    @classmethod
    def _trusted(cls, vertex_count: int, us: list[int], vs: list[int]) -> SimpleGraph:
        # Caller guarantees a simple graph; skips the O(m) duplicate check.
        g = cls.__new__(cls)
        g._n = vertex_count
        g._us = us
        g._vs = vs
        g._adj = None
        g._deg = None
        return g

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._us)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return sorted((u, v) if u < v else (v, u) for u, v in zip(self._us, self._vs))

    def _adjacency(self) -> list[set[int]]:
        if self._adj is None:
            adj: list[set[int]] = [set() for _ in range(self._n)]
            for u, v in zip(self._us, self._vs):
                adj[u].add(v)
                adj[v].add(u)
            self._adj = adj
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self._adjacency()[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency()[u]

    def degrees(self) -> list[int]:
        if self._deg is None:
            deg = [0] * self._n
            for u in self._us:
                deg[u] += 1
            for v in self._vs:
                deg[v] += 1
            self._deg = deg
        return list(self._deg)

    def degree(self, v: int) -> int:
        if self._deg is None:
            self.degrees()
        return self._deg[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._n == other._n and self.edges() == other.edges()

    def __hash__(self) -> int:
        return hash((self._n, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"SimpleGraph(vertex_count={self._n}, edge_count={self.edge_count})"


class _Builder:
    """Append-only edge accumulator used by the constructions."""

    __slots__ = ("n", "us", "vs")

    def __init__(self, n: int = 0):
        self.n = n
        self.us: list[int] = []
        self.vs: list[int] = []

    @classmethod
    def from_graph(cls, g: SimpleGraph) -> _Builder:
        b = cls(g.vertex_count)
        b.us = list(g._us)
        b.vs = list(g._vs)
        return b

    def add_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, v: int) -> None:
        self.us.append(u)
        self.vs.append(v)

    def attach(self, a: int, b: int) -> int:
        """Attach one new vertex to the edge ``ab``; return it."""
        u = self.n
        self.n = u + 1
        self.us.append(a)
        self.vs.append(u)
        self.us.append(b)
        self.vs.append(u)
        return u

    def attach_many(self, a: int, b: int, count: int) -> int:
        """Attach ``count`` new vertices to ``ab``; return the first one (or -1)."""
        if count <= 0:
            return -1
        if count == 1:
            return self.attach(a, b)
        first = self.n
        stop = first + count
        new = range(first, stop)
        self.us.extend([a] * count)
        self.vs.extend(new)
        self.us.extend([b] * count)
        self.vs.extend(new)
        self.n = stop
        return first

    def build(self) -> SimpleGraph:
        return SimpleGraph._trusted(self.n, self.us, self.vs)


def triangle() -> SimpleGraph:
    return SimpleGraph(3, [(0, 1), (0, 2), (1, 2)])


def attach_ear(g: SimpleGraph, u: int, v: int) -> tuple[SimpleGraph, int]:
    """Add a new vertex adjacent to both ends of the edge ``uv``."""
    if not (0 <= u < g.vertex_count and 0 <= v < g.vertex_count) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    b = _Builder.from_graph(g)
    w = b.attach(u, v)
    return b.build(), w


def is_connected(g: SimpleGraph) -> bool:
    n = g.vertex_count
    if n == 0:
        return True
    adj = g._adjacency()
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n


def is_tree(g: SimpleGraph) -> bool:
    return g.vertex_count >= 1 and g.edge_count == g.vertex_count - 1 and is_connected(g)


def cone(tree: SimpleGraph) -> SimpleGraph:
    """Add an apex adjacent to every vertex of ``tree``; the apex is the last vertex."""
    if tree.vertex_count < 2 or not is_tree(tree):
        raise GraphError("cone needs a tree on at least two vertices")
    b = _Builder.from_graph(tree)
    apex = b.add_vertex()
    for v in range(tree.vertex_count):
        b.add_edge(v, apex)
    return b.build()


def degree_sequence(g: SimpleGraph) -> DegreeSequence:
    counts: dict[int, int] = {}
    for d in g.degrees():
        counts[d] = counts.get(d, 0) + 1
    if 0 in counts:
        raise GraphError("graph has isolated vertices; degree sequences hold positive values")
    return DegreeSequence.from_counts(counts)


# -- verification -------------------------------------------------------------

NOT_ENOUGH_VERTICES = "fewer than three vertices"
NO_DEGREE_TWO = "no vertex of degree 2"
NON_ADJACENT_NEIGHBORS = "degree-2 vertex with non-adjacent neighbors"
DISCONNECTED = "disconnected"
WRONG_EDGE_COUNT = "edge count differs from 2n-3"
STUCK = "elimination stalled before reaching a triangle"


@dataclass(frozen=True)
class EarTrace:
    """Ear elimination order ending in a triangle.

    ``steps`` lists ``(ear, a, b)`` in elimination order; replaying them in
    reverse from ``triangle`` rebuilds the graph with the same labels.
    """

    vertex_count: int
    triangle: tuple[int, int, int]
    steps: tuple[tuple[int, int, int], ...]

    def replay(self) -> SimpleGraph:
        x, y, z = self.triangle
        b = _Builder(self.vertex_count)
        b.add_edge(x, y)
        b.add_edge(x, z)
        b.add_edge(y, z)
        for ear, a, c in reversed(self.steps):
            b.add_edge(ear, a)
            b.add_edge(ear, c)
        return SimpleGraph(self.vertex_count, zip(b.us, b.vs))


@dataclass(frozen=True)
class TwoTreeCheck:
    ok: bool
    reason: Optional[str] = None
    trace: Optional[EarTrace] = None

    def __bool__(self) -> bool:
        return self.ok


def check_two_tree(g: SimpleGraph, rng: Optional[random.Random] = None) -> TwoTreeCheck:
    """Decide whether ``g`` is a 2-tree by greedy ear elimination.

    Every degree-2 vertex of a 2-tree is an ear and removing it leaves a
    2-tree, so the elimination never needs to backtrack.  ``rng`` randomizes
    which pending degree-2 vertex is eliminated next.
    """
    n = g.vertex_count
    if n < 3:
        return TwoTreeCheck(False, NOT_ENOUGH_VERTICES)
    adj = [set(s) for s in g._adjacency()]
    deg = [len(s) for s in adj]
    work = [v for v in range(n) if deg[v] == 2]
    if not work:
        return TwoTreeCheck(False, NO_DEGREE_TWO)
    for v in work:
        a, b = adj[v]
        if b not in adj[a]:
            return TwoTreeCheck(False, NON_ADJACENT_NEIGHBORS)
    if not is_connected(g):
        return TwoTreeCheck(False, DISCONNECTED)
    if g.edge_count != 2 * n - 3:
        return TwoTreeCheck(False, WRONG_EDGE_COUNT)

    removed = [False] * n
    remaining = n
    steps: list[tuple[int, int, int]] = []
    while remaining > 3:
        if not work:
            return TwoTreeCheck(False, STUCK)
        if rng is None:
            u = work.pop()
        else:
            i = rng.randrange(len(work))
            work[i], work[-1] = work[-1], work[i]
            u = work.pop()
        if removed[u] or deg[u] != 2:
            continue
        a, b = adj[u]
        if b not in adj[a]:
            return TwoTreeCheck(False, NON_ADJACENT_NEIGHBORS)
        removed[u] = True
        remaining -= 1
        adj[a].discard(u)
        adj[b].discard(u)
        adj[u].clear()
        deg[u] = 0
        deg[a] -= 1
        deg[b] -= 1
        steps.append((u, min(a, b), max(a, b)))
        if deg[a] == 2:
            work.append(a)
        if deg[b] == 2:
            work.append(b)
    x, y, z = (v for v in range(n) if not removed[v])
    if not (y in adj[x] and z in adj[x] and z in adj[y]):
        return TwoTreeCheck(False, STUCK)
    return TwoTreeCheck(True, None, EarTrace(n, (x, y, z), tuple(steps)))


def is_two_tree(g: SimpleGraph) -> bool:
    return check_two_tree(g).ok


def ear_adjacency_witness(g: SimpleGraph, ell: int) -> Optional[tuple[int, int]]:
    """Return ``(v, e)`` with ``deg v == ell``, ``deg e == 2`` and ``ve`` an edge, if any."""
    if not is_two_tree(g):
        raise GraphError("ear_adjacency_witness needs a 2-tree")
    deg = g.degrees()
    adj = g._adjacency()
    for v in range(g.vertex_count):
        if deg[v] == ell:
            ears = [e for e in adj[v] if deg[e] == 2]
            if ears:
                return v, min(ears)
    return None


# -- text formats -------------------------------------------------------------

def format_edge_list(g: SimpleGraph) -> str:
    edges = g.edges()
    lines = [f"{g.vertex_count} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse the ``n m`` header plus ``u v`` lines; ``key=value`` and ``#`` lines are skipped."""
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or "=" in line:
            continue
        rows.append(line)
    if not rows:
        raise GraphError("empty edge list")
    try:
        header = [int(t) for t in rows[0].split()]
        if len(header) != 2:
            raise ValueError
        n, m = header
        edges = []
        for line in rows[1:]:
            u, v = (int(t) for t in line.split())
            edges.append((u, v))
    except ValueError:
        raise GraphError("malformed edge list") from None
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return SimpleGraph(n, edges)


def to_dot(g: SimpleGraph) -> str:
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.vertex_count))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
