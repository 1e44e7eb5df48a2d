"""Screening sequences against known necessary conditions for k-tree degree sequences.

For ``k >= 3`` these conditions are only necessary: an empty violation list
means the sequence *passes necessary conditions*, nothing more.  For ``k = 2``
they coincide with the exact characterization used by :func:`recognize`.

The conditions, with ``n = len(D)``:

* (i) ``sum(D) == 2kn - k(k + 1)``
* (ii) ``max(D) <= n - 1``
* (iii) ``min(D) == k`` and ``k`` occurs at least twice
* (iv) ``D`` is not ``<k^(n-k-2), (d+k-2)^4, (n-1)^(k-2)>`` for any ``d >= 5``
* (v) if ``D`` holds ``k - 2`` copies of ``n - 1`` and every other element has
  the parity of ``k``, then ``3 * n_k >= n - k + 5``
* (vi) if ``d = k(n+1)/(k+2)`` is an integer, ``D`` is not ``<k^(n-k-2), d^(k+2)>``

Conditions (iv)-(vi) apply for ``k >= 2`` only.
"""

from __future__ import annotations

from .degseq import DegreeSequence, SequenceError

__all__ = [
    "KTREE_CONDITIONS",
    "PASS_MESSAGE",
    "ProjectionError",
    "check_ktree_necessary",
    "passes_necessary_conditions",
    "lift",
    "project",
]

KTREE_CONDITIONS = ("i", "ii", "iii", "iv", "v", "vi")

PASS_MESSAGE = "passes all known necessary conditions (not sufficient for k ≥ 3)"


class ProjectionError(ValueError):
    """``project`` was given a sequence without an ``n - 1`` or with another element below 2."""


def _strip_block(seq: DegreeSequence, k: int):
    """``seq`` minus ``k - 2`` copies of ``n - 1``, or ``None`` when they are not all present."""
    block = k - 2
    if block == 0:
        return seq
    if seq.multiplicity(seq.n - 1) < block:
        return None
    return seq.remove(seq.n - 1, block)


def _cond_iv(seq: DegreeSequence, k: int) -> bool:
    rest = _strip_block(seq, k)
    if rest is None:
        return True
    n = seq.n
    runs = rest.runs
    if len(runs) != 2:
        return True
    (low, n_low), (high, n_high) = runs
    # high plays the role of d + k - 2 with d >= 5
    return not (low == k and n_low == n - k - 2 and n_high == 4 and high >= k + 3)


def _cond_v(seq: DegreeSequence, k: int) -> bool:
    rest = _strip_block(seq, k)
    if rest is None:
        return True
    if any((v - k) & 1 for v, _ in rest.runs):
        return True
    return 3 * rest.multiplicity(k) >= seq.n - k + 5


def _cond_vi(seq: DegreeSequence, k: int) -> bool:
    n = seq.n
    num = k * (n + 1)
    if num % (k + 2):
        return True
    d = num // (k + 2)
    # d == k forces n == k + 1, where the pattern has no valid length
    if d < 1 or n - k - 2 < 0 or d == k:
        return True
    return seq != DegreeSequence.from_counts({k: n - k - 2, d: k + 2})


def check_ktree_necessary(seq: DegreeSequence, k: int) -> list[str]:
    """Tags of the violated conditions, in ``KTREE_CONDITIONS`` order."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = seq.n
    out = []
    if seq.sum() != 2 * k * n - k * (k + 1):
        out.append("i")
    if n and seq.max() > n - 1:
        out.append("ii")
    if not n or seq.min() != k or seq.multiplicity(k) < 2:
        out.append("iii")
    if k >= 2:
        if not _cond_iv(seq, k):
            out.append("iv")
        if not _cond_v(seq, k):
            out.append("v")
        if not _cond_vi(seq, k):
            out.append("vi")
    return out


def passes_necessary_conditions(seq: DegreeSequence, k: int) -> bool:
    return not check_ktree_necessary(seq, k)


def lift(seq: DegreeSequence) -> DegreeSequence:
    """Add one to every element and append ``n`` (the new length minus one).

    ``D`` is the degree sequence of a (k-1)-tree exactly when ``lift(D)`` is
    one of a k-tree: cone a new vertex over the whole graph.
    """
    if seq.n == 0:
        raise SequenceError("cannot lift an empty sequence")
    counts: dict[int, int] = {v + 1: m for v, m in seq.runs}
    counts[seq.n] = counts.get(seq.n, 0) + 1
    return DegreeSequence.from_counts(counts)


def project(seq: DegreeSequence) -> DegreeSequence:
    """Inverse of :func:`lift`: drop one ``n - 1`` and subtract one from the rest."""
    n = seq.n
    if n < 2 or (n - 1) not in seq:
        raise ProjectionError(f"sequence needs an element equal to n - 1 = {n - 1}")
    rest = seq.remove(n - 1, 1)
    # the removed n - 1 may itself be 1 (lift of a one-element sequence)
    if rest.min() < 2:
        raise ProjectionError("every element other than the removed n - 1 must be at least 2")
    return DegreeSequence.from_counts({v - 1: m for v, m in rest.runs})
