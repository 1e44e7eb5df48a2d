"""Constructive realization of 2-tree degree sequences in linear time.

The construction peels the sequence down to one of seven explicit base
families, recording one reduction per step, then replays the matching
expansions in reverse on the base graph.  Every step reads and edits the run
encoding through :class:`_Work`, a mutable counting-sort table whose distinct
values are threaded on a doubly linked list, so each step costs O(1) plus the
distance a reduced value travels down the list.
"""

from __future__ import annotations

import gc
import random
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .degseq import DegreeSequence
from .graph import GraphError, SimpleGraph, _Builder
from .recognizer import recognize
from .tree_realizer import Realization, realize_with_dominating

__all__ = [
    "NotRealizableError",
    "InvariantError",
    "SequenceClass",
    "BaseCase",
    "Realization",
    "realize",
    "match_base_case",
    "classify",
    "choose_k",
    "reduce",
    "expand",
    "build_L9",
    "build_L10",
    "build_L11",
    "build_L12",
    "l10_ear_counts",
    "l12_ear_counts",
    "random_two_tree",
]


class NotRealizableError(ValueError):
    """The sequence is rejected by the recognizer; ``condition`` names the failed test."""

    def __init__(self, condition: str):
        super().__init__(f"not the degree sequence of a 2-tree (condition {condition})")
        self.condition = condition


class InvariantError(RuntimeError):
    """An internal consistency check of the construction failed (a bug, not bad input)."""


class SequenceClass(Enum):
    FLAT = "flat"
    SPECIAL_EVEN = "special-even"
    SPECIAL_ODD = "special-odd-pair"
    TYPICAL = "typical"

    @property
    def tag(self) -> str:
        return "special" if self.is_special else self.value

    @property
    def is_special(self) -> bool:
        return self in (SequenceClass.SPECIAL_EVEN, SequenceClass.SPECIAL_ODD)


_FLAT = SequenceClass.FLAT
_TYPICAL = SequenceClass.TYPICAL
_SPECIAL_EVEN = SequenceClass.SPECIAL_EVEN
_SPECIAL_ODD = SequenceClass.SPECIAL_ODD


@dataclass(frozen=True)
class BaseCase:
    """A matched base family.  ``params`` holds ``(x, d)`` for L11, ``(d,)`` for
    L12 and ``(r, x, y)`` for L14; it is empty otherwise."""

    tag: str
    params: tuple[int, ...] = ()


# -- working multiset ----------------------------------------------------------

class _Work:
    """Mutable run encoding: ``count[v]`` plus an ascending linked list of present values.

    Slot 0 is the list sentinel, so ``nxt[0]`` is the minimum and ``prv[0]``
    the maximum.
    """

    __slots__ = ("count", "nxt", "prv", "n", "n_odd", "total", "p")

    def __init__(self, seq: DegreeSequence):
        size = (seq.max() if seq.n else 0) + 2
        count = [0] * size
        nxt = [0] * size
        prv = [0] * size
        last = 0
        for v, m in seq.runs:
            count[v] = m
            nxt[last] = v
            prv[v] = last
            last = v
        nxt[last] = 0
        prv[0] = last
        self.count = count
        self.nxt = nxt
        self.prv = prv
        self.n = seq.n
        self.n_odd = seq.n_odd
        self.total = seq.sum()
        self.p = seq.distinct_count()

    def to_sequence(self) -> DegreeSequence:
        runs = []
        v = self.nxt[0]
        while v:
            runs.append((v, self.count[v]))
            v = self.nxt[v]
        return DegreeSequence(runs)

    def _unlink(self, v: int) -> None:
        a = self.prv[v]
        b = self.nxt[v]
        self.nxt[a] = b
        self.prv[b] = a
        self.p -= 1

    def remove(self, v: int, c: int) -> None:
        if c <= 0:
            return
        left = self.count[v] - c
        if left < 0:
            raise InvariantError(f"cannot remove {c} copies of {v}")
        self.count[v] = left
        if left == 0:
            self._unlink(v)
        self.n -= c
        self.total -= v * c
        if v & 1:
            self.n_odd -= c

    def decrease(self, v: int, delta: int) -> None:
        """Move one occurrence of ``v`` to ``v - delta``; walks at most ``delta`` list nodes."""
        if delta == 0:
            return
        count = self.count
        cv = count[v]
        if cv < 1:
            raise InvariantError(f"{v} is not present")
        w = v - delta
        cw = count[w]
        if cw == 0:
            prv = self.prv
            nxt = self.nxt
            a = prv[v]
            while a > w:
                a = prv[a]
            b = nxt[a]
            nxt[a] = w
            prv[w] = a
            nxt[w] = b
            prv[b] = w
            self.p += 1
        count[w] = cw + 1
        count[v] = cv - 1
        if cv == 1:
            self._unlink(v)
        self.total -= delta
        if (v ^ w) & 1:
            self.n_odd += 1 if w & 1 else -1

    def in_delta(self) -> bool:
        """Conditions (a)-(e) evaluated on the counters in O(1)."""
        n = self.n
        if n < 3:
            return False
        lo = self.nxt[0]
        hi = self.prv[0]
        n2 = self.count[2]
        if lo != 2 or n2 < 2:
            return False
        if self.total != 4 * n - 6 or hi > n - 1:
            return False
        if self.p == 2 and n2 == n - 4 and hi >= 5:
            return False
        if self.n_odd == 0 and 3 * n2 < n + 3:
            return False
        return True

    def large_elements(self) -> list[int]:
        """Elements greater than 2 in ascending order (callers keep this short)."""
        out = []
        v = self.nxt[2] if self.count[2] else self.nxt[0]
        while v:
            out.extend([v] * self.count[v])
            v = self.nxt[v]
        return out

    def top_values(self, limit: int) -> list[int]:
        out = []
        v = self.prv[0]
        while v and len(out) < limit:
            out.append(v)
            v = self.prv[v]
        return out


# -- base cases -----------------------------------------------------------------

def _match_l11(large: list[int]) -> Optional[tuple[int, int]]:
    # large: the five elements above 2, ascending
    for d in sorted(set(large)):
        if d < 5 or large.count(d) < 3:
            continue
        rest = list(large)
        for _ in range(3):
            rest.remove(d)
        p, q = rest
        if p >= 3 and q == d + p - 2:
            return p, d
        if q >= 3 and p == d + q - 2:
            return q, d
    return None


def _match_l14(w: _Work, ell: int) -> Optional[tuple[int, int, int]]:
    # The witness n-r-1 is only tried among the three largest values; larger
    # witnesses mean smaller r, which only relaxes the other constraints.
    n = w.n
    count = w.count
    n2 = count[2]
    if n2 < 1 or ell < 3:
        return None
    hi = w.prv[0]
    r_min = n - 1 - hi
    if r_min > n2 or ell - r_min < 2 or hi - r_min < 2:
        return None
    ys = [y for y in w.top_values(4) if y != ell]
    for b in w.top_values(3):
        r = n - 1 - b
        if r < 1 or r > n2 or ell - r < 2:
            continue
        for y in ys:
            if y - r < 2:
                break
            left = count[b] - (b == ell) - (b == y) - (r if b == 2 else 0)
            if left >= 1:
                return r, ell, y
    return None


def _match_base(w: _Work, ell: int) -> Optional[BaseCase]:
    n = w.n
    big = n - w.count[2]
    if n == 3:
        return BaseCase("L8")
    if big == 2:
        return BaseCase("L9")
    if big == 3:
        return BaseCase("L10")
    if big == 5:
        large = w.large_elements()
        l11 = _match_l11(large)
        if l11 is not None:
            return BaseCase("L11", l11)
        if large[0] == large[4] and large[0] >= 5:
            return BaseCase("L12", (large[0],))
    if w.prv[0] == n - 1:
        return BaseCase("L13")
    l14 = _match_l14(w, ell)
    if l14 is not None:
        return BaseCase("L14", l14)
    return None


def _require_accepted(seq: DegreeSequence) -> None:
    verdict = recognize(seq)
    if not verdict.accepted:
        raise NotRealizableError(verdict.violated)


def match_base_case(seq: DegreeSequence, ell: Optional[int] = None) -> Optional[BaseCase]:
    """First base family (L8 ... L14, in that order) that realizes ``seq`` with
    a degree-``ell`` vertex next to an ear, or ``None``."""
    _require_accepted(seq)
    if ell is None:
        ell = seq.max()
    return _match_base(_Work(seq), ell)


def l10_ear_counts(x: int, y: int, z: int) -> tuple[int, int, int]:
    """Ears on the triangle edges ab, ac, bc so that a, b, c get degrees x, y, z."""
    return (x + y - z - 2) // 2, (x - y + z - 2) // 2, (-x + y + z - 2) // 2


def l12_ear_counts(d: int) -> tuple[int, int, int, int, int]:
    """Ears on v1v2, v1v5, v3v4, v2v3, v4v5 of the five-vertex fan."""
    return (d - 4) // 2, (d - 4) // 2, (d - 6) // 2, d // 2, d // 2


Marks = dict[int, tuple[int, int]]


def _triangle(b: _Builder) -> tuple[int, int, int]:
    a, c, e = b.add_vertex(), b.add_vertex(), b.add_vertex()
    b.add_edge(a, c)
    b.add_edge(a, e)
    b.add_edge(c, e)
    return a, c, e


def _fan5(b: _Builder) -> tuple[int, int, int, int, int]:
    # v1 adjacent to the path v2 v3 v4 v5; degrees 4, 2, 3, 3, 2
    v = [b.add_vertex() for _ in range(5)]
    for i in range(1, 5):
        b.add_edge(v[0], v[i])
    b.add_edge(v[1], v[2])
    b.add_edge(v[2], v[3])
    b.add_edge(v[3], v[4])
    return tuple(v)


def _base_l9(seq: DegreeSequence, b: _Builder) -> Marks:
    a, c, e = _triangle(b)
    b.attach_many(a, c, seq.n - 3)
    return {seq.n - 1: (a, e)}


def _base_l10(seq: DegreeSequence, b: _Builder) -> Marks:
    x, y, z = list(seq)[-3:]
    e1, e2, e3 = l10_ear_counts(x, y, z)
    if min(e1, e2, e3) < 0:
        raise InvariantError(f"negative ear count for {x}, {y}, {z}")
    a, c, e = _triangle(b)
    f1 = b.attach_many(a, c, e1)
    f2 = b.attach_many(a, e, e2)
    f3 = b.attach_many(c, e, e3)
    marks = {}
    marks[x] = (a, f1 if e1 else f2)
    marks[y] = (c, f1 if e1 else f3)
    marks[z] = (e, f2 if e2 else f3)
    return marks


def _base_l11(x: int, d: int, b: _Builder) -> Marks:
    v1, v2, v3, v4, v5 = _fan5(b)
    t1 = b.attach(v2, v3)
    t2 = b.attach(v4, v5)
    b.attach_many(v3, v4, d - 4)
    b.attach_many(v1, v2, x - 3)
    t3 = b.attach_many(v1, v5, d - 3)
    return {x: (v2, t1), d: (v4, t2), d + x - 2: (v1, t3)}


def _base_l12(d: int, b: _Builder) -> Marks:
    c12, c15, c34, c23, c45 = l12_ear_counts(d)
    v1, v2, v3, v4, v5 = _fan5(b)
    s1 = b.attach_many(v1, v2, c12)
    b.attach_many(v1, v5, c15)
    b.attach_many(v3, v4, c34)
    b.attach_many(v2, v3, c23)
    b.attach_many(v4, v5, c45)
    return {d: (v1, s1)}


def _into(b: _Builder, g: SimpleGraph) -> None:
    b.n = g.vertex_count
    b.us = list(g._us)
    b.vs = list(g._vs)


def _build_base(
    case: BaseCase, seq: DegreeSequence, ell: int, b: _Builder
) -> tuple[tuple[int, int], Optional[tuple[int, int]]]:
    """Build ``case`` into the empty builder ``b``; return the ``ell`` witness and,
    for L14, the second ear-adjacent vertex."""
    tag = case.tag
    if tag == "L8":
        _triangle(b)
        return (0, 1), None
    if tag == "L9":
        marks = _base_l9(seq, b)
    elif tag == "L10":
        marks = _base_l10(seq, b)
    elif tag == "L11":
        marks = _base_l11(*case.params, b)
    elif tag == "L12":
        marks = _base_l12(*case.params, b)
    elif tag == "L13":
        marked = realize_with_dominating(seq, ell, 2)
        _into(b, marked.graph)
        return (marked.ell_vertex, marked.k_vertex), None
    elif tag == "L14":
        r, x, y = case.params
        reduced = seq.remove(2, r).decrease(x, r).decrease(y, r)
        marked = realize_with_dominating(reduced, x - r, y - r)
        _into(b, marked.graph)
        ear = b.attach_many(marked.ell_vertex, marked.k_vertex, r)
        return (marked.ell_vertex, ear), (marked.k_vertex, ear)
    else:
        raise InvariantError(f"unknown base case {tag}")
    if ell not in marks:
        raise InvariantError(f"{tag} construction has no vertex of degree {ell}")
    return marks[ell], None


def _realization_from_base(seq: DegreeSequence, case: BaseCase, ell: int) -> Realization:
    b = _Builder()
    (v, e), dual = _build_base(case, seq, ell, b)
    kv, ke = dual if dual else (None, None)
    return Realization(b.build(), v, e, kv, ke, base_case=case.tag)


def _build_named(seq: DegreeSequence, tag: str, ell: Optional[int]) -> Realization:
    _require_accepted(seq)
    if ell is None:
        ell = seq.max()
    large = [v for v in seq if v > 2]
    case = None
    if tag == "L9" and len(large) == 2:
        case = BaseCase("L9")
    elif tag == "L10" and len(large) == 3:
        case = BaseCase("L10")
    elif tag == "L11" and len(large) == 5:
        params = _match_l11(large)
        if params is not None:
            case = BaseCase("L11", params)
    elif tag == "L12" and len(large) == 5 and large[0] == large[4] >= 5:
        case = BaseCase("L12", (large[0],))
    if case is None:
        raise ValueError(f"sequence {seq} does not match the {tag} pattern")
    return _realization_from_base(seq, case, ell)


def build_L9(seq: DegreeSequence, ell: Optional[int] = None) -> Realization:
    """``<2^(n-2), n-1, n-1>``: a triangle with ``n - 3`` ears on one edge."""
    return _build_named(seq, "L9", ell)


def build_L10(seq: DegreeSequence, ell: Optional[int] = None) -> Realization:
    """``<2^(n-3), x, y, z>``: ears distributed over the three triangle edges."""
    return _build_named(seq, "L10", ell)


def build_L11(seq: DegreeSequence, ell: Optional[int] = None) -> Realization:
    """``<2^(n-5), x, d, d, d, d+x-2>`` on the five-vertex fan."""
    return _build_named(seq, "L11", ell)


def build_L12(seq: DegreeSequence, ell: Optional[int] = None) -> Realization:
    """``<2^(n-5), d^5>`` on the five-vertex fan."""
    return _build_named(seq, "L12", ell)


# -- induction step ----------------------------------------------------------------

def _classify(w: _Work, ell: int) -> SequenceClass:
    if w.p <= 2:
        return _FLAT
    count = w.count
    if len(count) > 4 and count[4] >= 3:
        if w.n_odd == 0:
            return _SPECIAL_EVEN
        if w.n_odd == 2 and count[3] == 1 and ell & 1 and ell >= 5:
            return _SPECIAL_ODD
    return _TYPICAL


def _choose_k(w: _Work, ell: int, cls: SequenceClass) -> tuple[int, int, bool]:
    """Return ``(k, ell, swapped)``; ``swapped`` means the requested value became ``k``."""
    alpha = w.nxt[2]
    if cls is _FLAT:
        return alpha, ell, False
    if cls is _SPECIAL_ODD:
        return 4, ell, False
    if ell == alpha:
        return alpha, w.nxt[alpha], True
    return alpha, ell, False


def _reduce(w: _Work, ell: int, k: int, cls: SequenceClass) -> int:
    """Edit ``w`` in place into the smaller sequence; return the value to request next."""
    if cls is _FLAT:
        d = k
        if w.count[2] < 2 * d - 7 or w.count[d] < 6:
            raise InvariantError(f"flat sequence too thin to reduce (d={d})")
        w.remove(2, 2 * d - 7)
        w.remove(d, 2)
        w.decrease(d, d - 2)
        w.decrease(d, d - 4)
        return 4
    if cls is _TYPICAL:
        w.remove(2, k - 2)
        w.decrease(k, k - 2)
        w.decrease(ell, k - 2)
        return ell - k + 2
    w.remove(2, 2)
    w.remove(4, 1)
    w.decrease(k, 2)
    w.decrease(ell, 2)
    return ell - 2


def _expand(
    b: _Builder, v: int, w: int, ell: int, k: int, cls: SequenceClass
) -> tuple[int, int, int, int]:
    """Grow ``b`` around the edge ``vw`` (``w`` an ear of ``v``).

    Returns ``(ell_vertex, its ear, k_vertex, its ear)``.
    """
    if cls is _TYPICAL:
        u = b.attach_many(v, w, k - 2)
        return v, u, w, u
    if cls is _FLAT:
        d = ell
        u = b.attach_many(v, w, d - 4)
        q = b.attach(w, u)
        z = b.attach(w, q)
        b.attach_many(u, q, d - 3)
        return w, z, q, z
    u = b.attach(v, w)
    a = b.attach(v, u)
    c = b.attach(w, u)
    return v, a, w, c


def classify(seq: DegreeSequence, ell: int) -> SequenceClass:
    """Flat, special (even / odd pair) or typical, for a non-base-case sequence."""
    _require_accepted(seq)
    return _classify(_Work(seq), ell)


def choose_k(seq: DegreeSequence, ell: int, cls: SequenceClass) -> tuple[int, int]:
    """The partner value ``k`` and the possibly redefined ``ell``."""
    k, ell, _ = _choose_k(_Work(seq), ell, cls)
    return k, ell


def reduce(seq: DegreeSequence, ell: int, k: int, cls: SequenceClass) -> tuple[DegreeSequence, int]:
    """The reduced sequence and the value requested from its realization."""
    w = _Work(seq)
    nxt_ell = _reduce(w, ell, k, cls)
    return w.to_sequence(), nxt_ell


def expand(sub: Realization, ell: int, k: int, cls: SequenceClass) -> Realization:
    """Rebuild the larger 2-tree from a realization of the reduced sequence.

    ``sub.ell_vertex`` must have the requested degree of the reduced sequence
    and ``sub.witness_ear`` must be an ear adjacent to it.
    """
    if sub.witness_ear is None:
        raise InvariantError("expansion needs an ear next to the witness vertex")
    b = _Builder.from_graph(sub.graph)
    lv, le, kv, ke = _expand(b, sub.ell_vertex, sub.witness_ear, ell, k, cls)
    return Realization(b.build(), lv, le, kv, ke, steps=(cls.value,) + sub.steps)


# -- driver ---------------------------------------------------------------------------

def _maybe_base(w: _Work, ell: int) -> bool:
    # Necessary condition for _match_base to succeed, in a handful of loads.
    n = w.n
    n2 = w.count[2]
    big = n - n2
    if n == 3 or big == 2 or big == 3 or big == 5:
        return True
    hi = w.prv[0]
    if hi == n - 1:
        return True
    r_min = n - 1 - hi
    return not (r_min > n2 or ell - r_min < 2 or hi - r_min < 2)


def _peel(
    w: _Work, ell: int, check: bool
) -> tuple[BaseCase, list[tuple[SequenceClass, int, int, bool, int]]]:
    """Reduce ``w`` in place until a base case matches.

    Returns the base case and one ``(class, ell, k, swapped, next_ell)``
    record per reduction, outermost first.

    Typical reductions dominate long runs, so they are applied here on local
    copies of the counters; every other step syncs ``w`` and goes through
    :func:`_reduce`.
    """
    pending: list[tuple[SequenceClass, int, int, bool, int]] = []
    push = pending.append
    count, nxt, prv = w.count, w.nxt, w.prv
    n, n_odd, total, p = w.n, w.n_odd, w.total, w.p
    has4 = len(count) > 4
    typical = _TYPICAL
    while True:
        n2 = count[2]
        big = n - n2
        hi = prv[0]
        r_min = n - 1 - hi
        if (
            n == 3 or big == 2 or big == 3 or big == 5 or hi == n - 1
            or not (r_min > n2 or ell - r_min < 2 or hi - r_min < 2)
        ):
            w.n, w.n_odd, w.total, w.p = n, n_odd, total, p
            case = _match_base(w, ell)
            if case is not None:
                return case, pending

        if p <= 2:
            cls = _FLAT
        elif has4 and count[4] >= 3 and (
            n_odd == 0 or (n_odd == 2 and count[3] == 1 and ell & 1 and ell >= 5)
        ):
            cls = _SPECIAL_EVEN if n_odd == 0 else _SPECIAL_ODD
        else:
            cls = typical

        n_before = n
        if cls is typical:
            k = nxt[2]
            swapped = ell == k
            if swapped:
                ell = nxt[k]
            delta = k - 2
            # remove delta twos
            left = n2 - delta
            if left < 0:
                raise InvariantError(f"cannot remove {delta} copies of 2")
            count[2] = left
            if left == 0:
                a_, b_ = prv[2], nxt[2]
                nxt[a_] = b_
                prv[b_] = a_
                p -= 1
            n -= delta
            total -= 2 * delta
            # decrease one k and one ell by delta
            for v in (k, ell):
                cv = count[v]
                if cv < 1:
                    raise InvariantError(f"{v} is not present")
                t = v - delta
                ct = count[t]
                if ct == 0:
                    a_ = prv[v]
                    while a_ > t:
                        a_ = prv[a_]
                    b_ = nxt[a_]
                    nxt[a_] = t
                    prv[t] = a_
                    nxt[t] = b_
                    prv[b_] = t
                    p += 1
                count[t] = ct + 1
                count[v] = cv - 1
                if cv == 1:
                    a_, b_ = prv[v], nxt[v]
                    nxt[a_] = b_
                    prv[b_] = a_
                    p -= 1
                if delta & 1:
                    n_odd += 1 if t & 1 else -1
            total -= 2 * delta
            nxt_ell = ell - delta
        else:
            w.n, w.n_odd, w.total, w.p = n, n_odd, total, p
            k, ell, swapped = _choose_k(w, ell, cls)
            nxt_ell = _reduce(w, ell, k, cls)
            n, n_odd, total, p = w.n, w.n_odd, w.total, w.p

        if check:
            # _Work.in_delta on the local counters
            n2 = count[2]
            hi = prv[0]
            if (
                n < 3 or nxt[0] != 2 or n2 < 2 or total != 4 * n - 6 or hi > n - 1
                or (p == 2 and n2 == n - 4 and hi >= 5)
                or (n_odd == 0 and 3 * n2 < n + 3)
            ):
                w.n, w.n_odd, w.total, w.p = n, n_odd, total, p
                raise InvariantError(f"reduced sequence {w.to_sequence()} left the class")
            if n >= n_before or nxt_ell < 3 or count[nxt_ell] < 1:
                raise InvariantError("reduction made no progress or lost the requested value")
        push((cls, ell, k, swapped, nxt_ell))
        ell = nxt_ell


def realize(
    seq: DegreeSequence, ell: Optional[int] = None, *, check: Optional[bool] = None
) -> Realization:
    """Build a 2-tree with degree sequence ``seq`` in which a degree-``ell``
    vertex is adjacent to a degree-2 vertex.

    ``ell`` defaults to ``max(seq)``.  With ``check`` (default: ``__debug__``)
    every intermediate sequence is re-validated against conditions (a)-(e).
    """
    if check is None:
        check = __debug__
    _require_accepted(seq)
    n = seq.n
    if ell is None:
        ell = seq.max()
    if ell not in seq:
        raise ValueError(f"{ell} does not occur in the sequence")
    if n == 3:
        return _realization_from_base(seq, BaseCase("L8"), 2)
    if ell < 3:
        raise ValueError("the witness degree must be at least 3")

    # Large inputs allocate millions of small tuples that never form cycles;
    # generational GC passes over them dominate the runtime otherwise.
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        return _realize(seq, ell, check)
    finally:
        if was_enabled:
            gc.enable()


def _realize(seq: DegreeSequence, ell: int, check: bool) -> Realization:
    w = _Work(seq)
    case, pending = _peel(w, ell, check)
    if pending:
        ell = pending[-1][4]

    b = _Builder()
    (v, e), dual = _build_base(case, w.to_sequence(), ell, b)
    steps = []
    add_u, add_v = b.us.append, b.vs.append
    typical = _TYPICAL
    dv = de = None
    if dual:
        dv, de = dual
    nv = b.n
    for cls, big, k, swapped, _ in reversed(pending):
        if cls is typical:
            # inline of _expand: k - 2 ears on the edge ve, the first one u
            u = nv
            nv = u + k - 2
            for x in range(u, nv):
                add_u(v)
                add_v(x)
                add_u(e)
                add_v(x)
            if swapped:
                v, e, dv, de = e, u, v, u
            else:
                dv, de, e = e, u, u
        else:
            b.n = nv
            lv, le, kv, ke = _expand(b, v, e, big, k, cls)
            nv = b.n
            if swapped:
                v, e, dv, de = kv, ke, lv, le
            else:
                v, e, dv, de = lv, le, kv, ke
        steps.append(cls.value)
    b.n = nv
    steps.reverse()
    return Realization(b.build(), v, e, dv, de, base_case=case.tag, steps=tuple(steps))


def random_two_tree(n: int, seed: int) -> SimpleGraph:
    """A 2-tree grown from a triangle by ``n - 3`` ears on uniformly random edges."""
    if n < 3:
        raise GraphError("a 2-tree has at least three vertices")
    rng = random.Random(seed)
    b = _Builder()
    _triangle(b)
    for _ in range(n - 3):
        i = rng.randrange(len(b.us))
        b.attach(b.us[i], b.vs[i])
    return b.build()
