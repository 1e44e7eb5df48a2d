"""Exhaustive enumeration of small 2-trees up to isomorphism.

Level ``n`` is produced from level ``n - 1`` by attaching an ear to every edge
of every representative and keeping one graph per isomorphism class.  Classes
are identified by a canonical code: the lexicographically smallest adjacency
bit string over all vertex orderings that list vertices by an isomorphism
invariant colour.  The search is exact; the colouring only prunes it.

This is a correctness oracle, so the bound :data:`MAX_ORACLE_N` is small on
purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .degseq import DegreeSequence
from .graph import SimpleGraph, _Builder
from .recognizer import recognize

__all__ = [
    "MAX_ORACLE_N",
    "OracleBoundError",
    "CanonicalGraph",
    "CensusEntry",
    "canonical_form",
    "enumerate_two_trees",
    "degree_census",
    "census_entries",
    "accepted_sequences",
    "candidate_sequences",
]

#: Largest ``n`` the enumerator accepts.  Level 12 has 9368 classes and takes
#: several seconds; level 13 already takes most of a minute.
MAX_ORACLE_N = 12


class OracleBoundError(ValueError):
    """``n`` is outside ``3..MAX_ORACLE_N``."""


@dataclass(frozen=True, order=True)
class CanonicalGraph:
    """An unlabeled graph: vertex count plus canonical adjacency code.

    Bit ``j * (j - 1) // 2 + i`` of ``code`` (for ``i < j``) is set when the
    vertices in canonical positions ``i`` and ``j`` are adjacent.
    """

    n: int
    code: int

    def edges(self) -> list[tuple[int, int]]:
        out = []
        bit = 0
        for j in range(1, self.n):
            for i in range(j):
                if self.code >> bit & 1:
                    out.append((i, j))
                bit += 1
        return sorted(out)

    def to_graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.edges())

    def degree_sequence(self) -> DegreeSequence:
        deg = [0] * self.n
        for u, v in self.edges():
            deg[u] += 1
            deg[v] += 1
        return DegreeSequence.from_elements(deg)


@dataclass(frozen=True)
class CensusEntry:
    graph: CanonicalGraph
    sequence: DegreeSequence


def _colours(adj: list[set[int]]) -> list[tuple]:
    deg = [len(a) for a in adj]
    return [(deg[v], tuple(sorted(deg[u] for u in adj[v]))) for v in range(len(adj))]


def canonical_form(g: SimpleGraph) -> CanonicalGraph:
    """Canonical code of ``g``; equal for two graphs exactly when they are isomorphic."""
    n = g.vertex_count
    adj = [set(a) for a in g._adjacency()]
    colour = _colours(adj)
    # slot i of an admissible ordering holds a vertex of colour slot_colour[i]
    slot_colour = sorted(colour)
    pools = {c: [v for v in range(n) if colour[v] == c] for c in set(colour)}
    open_key = [frozenset(a) for a in adj]
    closed_key = [frozenset(a | {v}) for v, a in enumerate(adj)]

    # cols[s] is the column of slot s read top-down as a binary number, so
    # comparing the lists compares the bit strings lexicographically.
    cols: list[int] = []
    placed: list[int] = []
    used = [False] * n
    best: list[int] = []

    def search(slot: int) -> None:
        nonlocal best
        if slot == n:
            if not best or cols < best:
                best = list(cols)
            return
        tried_open: set[frozenset] = set()
        tried_closed: set[frozenset] = set()
        for v in pools[slot_colour[slot]]:
            # swapping twins is an automorphism fixing everything placed
            if used[v] or open_key[v] in tried_open or closed_key[v] in tried_closed:
                continue
            tried_open.add(open_key[v])
            tried_closed.add(closed_key[v])
            nb = adj[v]
            col = 0
            for u in placed:
                col = col << 1 | (u in nb)
            cols.append(col)
            if not best or cols <= best[: slot + 1]:
                used[v] = True
                placed.append(v)
                search(slot + 1)
                placed.pop()
                used[v] = False
            cols.pop()

    search(0)

    code = 0
    bit = 0
    for slot in range(1, n):
        col = best[slot]
        for i in range(slot):
            if col >> (slot - 1 - i) & 1:
                code |= 1 << (bit + i)
        bit += slot
    return CanonicalGraph(n, code)


def _check_bound(n: int) -> None:
    if not isinstance(n, int) or not 3 <= n <= MAX_ORACLE_N:
        raise OracleBoundError(f"n must be in 3..{MAX_ORACLE_N}, got {n!r}")


@lru_cache(maxsize=None)
def _level(n: int) -> frozenset[CanonicalGraph]:
    if n == 3:
        return frozenset({canonical_form(SimpleGraph(3, [(0, 1), (0, 2), (1, 2)]))})
    out = set()
    for parent in sorted(_level(n - 1)):
        edges = parent.edges()
        for a, c in edges:
            b = _Builder(parent.n)
            for u, v in edges:
                b.add_edge(u, v)
            b.attach(a, c)
            out.add(canonical_form(b.build()))
    return frozenset(out)


def enumerate_two_trees(n: int) -> frozenset[CanonicalGraph]:
    """One canonical representative of every 2-tree on ``n`` vertices."""
    _check_bound(n)
    return _level(n)


def degree_census(n: int) -> frozenset[DegreeSequence]:
    """Degree sequences of all 2-trees on ``n`` vertices."""
    return frozenset(g.degree_sequence() for g in enumerate_two_trees(n))


def census_entries(n: int) -> list[CensusEntry]:
    """Every class at level ``n`` with its degree sequence, sorted by sequence then code."""
    entries = [CensusEntry(g, g.degree_sequence()) for g in enumerate_two_trees(n)]
    entries.sort(key=lambda e: (e.sequence.elements(), e.graph.code))
    return entries


def candidate_sequences(n: int) -> Iterator[DegreeSequence]:
    """Multisets of ``n`` values in ``2..n-1`` summing to ``4n - 6``.

    Generated as non-increasing lists; a branch is cut as soon as the
    remaining slots can no longer reach, or would overshoot, the target.
    """
    if n < 3:
        return
    target = 4 * n - 6
    top = max(n - 1, 2)
    values: list[int] = []

    def walk(slots: int, remaining: int, cap: int) -> Iterator[DegreeSequence]:
        if slots == 0:
            if remaining == 0:
                yield DegreeSequence.from_elements(values)
            return
        hi = min(cap, remaining - 2 * (slots - 1))
        lo = max(2, -(-remaining // slots))
        for v in range(hi, lo - 1, -1):
            values.append(v)
            yield from walk(slots - 1, remaining - v, v)
            values.pop()

    yield from walk(n, target, top)


def accepted_sequences(n: int) -> frozenset[DegreeSequence]:
    """The candidates of length ``n`` that :func:`recognize` accepts."""
    return frozenset(d for d in candidate_sequences(n) if recognize(d).accepted)

