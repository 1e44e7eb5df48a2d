"""Tree realizations with a prescribed adjacent pair, and the coned 2-tree built from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .degseq import DegreeSequence
from .graph import GraphError, SimpleGraph, _Builder, is_tree

__all__ = [
    "TreeRealizationError",
    "MarkedGraph",
    "Realization",
    "build_tree",
    "realize_tree",
    "swap_subtrees",
    "realize_with_dominating",
]


class TreeRealizationError(ValueError):
    """A precondition of a tree or dominating-vertex realization failed.

    ``tag`` names the failed precondition so callers can branch on it.
    """

    def __init__(self, tag: str, message: str):
        super().__init__(message)
        self.tag = tag


@dataclass(frozen=True)
class MarkedGraph:
    """A graph with two distinct marked vertices realizing the requested degrees."""

    graph: SimpleGraph
    ell_vertex: int
    k_vertex: int


@dataclass(frozen=True)
class Realization:
    """A 2-tree realizing a sequence, with its ear-adjacency witnesses.

    ``ell_vertex`` has the requested degree and ``witness_ear`` is a degree-2
    neighbour of it.  When the outermost construction step was a reduction,
    ``k_vertex``/``k_ear`` record the second vertex that step left next to an
    ear.  ``base_case`` and ``steps`` describe the path the construction took.
    """

    graph: SimpleGraph
    ell_vertex: int
    witness_ear: Optional[int]
    k_vertex: Optional[int] = None
    k_ear: Optional[int] = None
    base_case: Optional[str] = None
    steps: tuple[str, ...] = field(default=())


def _greedy_tree(values: list[int]) -> list[set[int]]:
    # Repeatedly hang a leaf on the current internal vertex; a vertex whose
    # residual degree hits 1 becomes the next leaf.  Leaves form a stack.
    n = len(values)
    adj: list[set[int]] = [set() for _ in range(n)]
    residual = list(values)
    leaves = [v for v in range(n) if residual[v] == 1]
    internal = [v for v in range(n) if residual[v] > 1]
    for _ in range(n - 2):
        leaf = leaves.pop()
        x = internal[-1]
        adj[leaf].add(x)
        adj[x].add(leaf)
        residual[x] -= 1
        if residual[x] == 1:
            internal.pop()
            leaves.append(x)
    a, b = leaves
    adj[a].add(b)
    adj[b].add(a)
    return adj


def _to_graph(adj: list[set[int]]) -> SimpleGraph:
    us, vs = [], []
    for u, nbrs in enumerate(adj):
        for v in nbrs:
            if u < v:
                us.append(u)
                vs.append(v)
    return SimpleGraph._trusted(len(adj), us, vs)


def _check_tree_sequence(seq: DegreeSequence) -> None:
    if seq.n < 2:
        raise TreeRealizationError("too-short", "a tree sequence needs at least two elements")
    if seq.sum() != 2 * seq.n - 2:
        raise TreeRealizationError("sum", f"sum {seq.sum()} differs from 2n-2 = {2 * seq.n - 2}")


def build_tree(seq: DegreeSequence) -> SimpleGraph:
    """Some tree realizing ``seq``; vertex ``i`` gets the ``i``-th smallest degree."""
    _check_tree_sequence(seq)
    return _to_graph(_greedy_tree(list(seq)))


def _swap(adj: list[set[int]], r: int, y: int) -> None:
    # Root at r.  Exchange the subtree at y with the subtree at a child x of r
    # that does not contain y: drop rx and py, add px and ry.
    n = len(adj)
    parent = [-1] * n
    parent[r] = r
    stack = [r]
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if parent[b] < 0:
                parent[b] = a
                stack.append(b)
    p = parent[y]
    c = y
    while parent[c] != r:
        c = parent[c]
    x = next(z for z in adj[r] if z != c)
    adj[r].discard(x)
    adj[x].discard(r)
    adj[p].discard(y)
    adj[y].discard(p)
    adj[p].add(x)
    adj[x].add(p)
    adj[r].add(y)
    adj[y].add(r)


def swap_subtrees(tree: SimpleGraph, root: int, y: int) -> SimpleGraph:
    """Move the subtree at ``y`` under ``root`` by exchanging it with a sibling subtree of ``root``.

    The degree of every vertex is unchanged.  Requires ``root`` of degree at
    least 2 and ``y`` not adjacent to ``root``.
    """
    if not is_tree(tree):
        raise GraphError("swap_subtrees needs a tree")
    if root == y or tree.has_edge(root, y) or tree.degree(root) < 2:
        raise GraphError("swap needs a root of degree >= 2 not adjacent to y")
    adj = [set(s) for s in tree._adjacency()]
    _swap(adj, root, y)
    return _to_graph(adj)


def _check_marks(seq: DegreeSequence, ell: int, k: int) -> None:
    if ell not in seq:
        raise TreeRealizationError("ell-missing", f"{ell} does not occur in the sequence")
    if k not in seq:
        raise TreeRealizationError("k-missing", f"{k} does not occur in the sequence")
    if ell == k and seq.multiplicity(ell) < 2:
        raise TreeRealizationError(
            "same-occurrence", f"ell = k = {ell} needs two occurrences of {ell}"
        )


def realize_tree(seq: DegreeSequence, ell: int, k: int) -> MarkedGraph:
    """A tree realizing ``seq`` in which a degree-``ell`` vertex is adjacent to a degree-``k`` vertex.

    Impossible exactly when ``n > 2`` and ``ell == k == 1``.
    """
    _check_tree_sequence(seq)
    _check_marks(seq, ell, k)
    if seq.n > 2 and ell == k == 1:
        raise TreeRealizationError("leaf-pair", "two leaves cannot be adjacent in a tree with n > 2")

    values = list(seq)
    adj = _greedy_tree(values)
    for u in range(len(adj)):
        if values[u] != ell:
            continue
        for v in adj[u]:
            if values[v] == k:
                return MarkedGraph(_to_graph(adj), u, v)

    low, high = (ell, k) if ell <= k else (k, ell)
    y = values.index(low)
    r = next(v for v in range(len(values)) if values[v] == high and v != y)
    _swap(adj, r, y)
    v_ell, v_k = (y, r) if ell <= k else (r, y)
    return MarkedGraph(_to_graph(adj), v_ell, v_k)


def realize_with_dominating(seq: DegreeSequence, ell: int, k: int) -> MarkedGraph:
    """A 2-tree realizing ``seq`` with a degree-``ell`` vertex adjacent to a degree-``k`` vertex.

    ``seq`` must contain ``n - 1``; the result is a cone over a tree that
    realizes the sequence with one ``n - 1`` removed and every other element
    decremented.
    """
    n = seq.n
    if n < 3 or seq.min() < 2:
        raise TreeRealizationError("min", "elements must be at least 2 and n at least 3")
    if seq.sum() != 4 * n - 6:
        raise TreeRealizationError("sum", f"sum {seq.sum()} differs from 4n-6 = {4 * n - 6}")
    if (n - 1) not in seq:
        raise TreeRealizationError("no-dominating", f"{n - 1} does not occur in the sequence")
    _check_marks(seq, ell, k)
    if n > 3 and ell == k == 2:
        raise TreeRealizationError("ear-pair", "two degree-2 vertices are never adjacent when n > 3")
    if n == 3:
        b = _Builder(3)
        b.add_edge(0, 1)
        b.add_edge(0, 2)
        b.add_edge(1, 2)
        return MarkedGraph(b.build(), 0, 1)

    high, low = (ell, k) if ell >= k else (k, ell)
    reduced = DegreeSequence.from_counts(
        {v - 1: m for v, m in seq.remove(n - 1, 1).runs}
    )
    if high == n - 1:
        tree_adj = _greedy_tree(list(reduced))
        apex = n - 1
        if low == n - 1:
            other = next(v for v in range(n - 1) if len(tree_adj[v]) == n - 2)
        else:
            other = next(v for v in range(n - 1) if len(tree_adj[v]) == low - 1)
        v_high, v_low = apex, other
        tree = _to_graph(tree_adj)
    else:
        marked = realize_tree(reduced, high - 1, low - 1)
        tree, v_high, v_low = marked.graph, marked.ell_vertex, marked.k_vertex

    b = _Builder.from_graph(tree)
    apex = b.add_vertex()
    for v in range(n - 1):
        b.add_edge(v, apex)
    if ell >= k:
        return MarkedGraph(b.build(), v_high, v_low)
    return MarkedGraph(b.build(), v_low, v_high)
