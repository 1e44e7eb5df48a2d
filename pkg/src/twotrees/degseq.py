"""Run-length encoded multisets of positive integers.

A :class:`DegreeSequence` stores a sorted multiset as ``(value, multiplicity)``
runs in ascending value order, together with the element count and the number
of odd elements.  Instances are immutable; the editing operations return new
sequences.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Iterator

__all__ = ["DegreeSequence", "SequenceError", "parse_sequence", "format_sequence"]


class SequenceError(ValueError):
    """Raised for malformed sequences or impossible multiset edits."""


class DegreeSequence:
    __slots__ = ("_runs", "_index", "_n", "_n_odd", "_total")

    def __init__(self, runs: Iterable[tuple[int, int]] = ()):
        runs = tuple((int(v), int(m)) for v, m in runs)
        prev = 0
        n = n_odd = total = 0
        for value, mult in runs:
            if value < 1:
                raise SequenceError(f"elements must be positive, got {value}")
            if mult < 1:
                raise SequenceError(f"multiplicity of {value} must be positive, got {mult}")
            if value <= prev:
                raise SequenceError("runs must be strictly increasing by value")
            prev = value
            n += mult
            total += value * mult
            if value & 1:
                n_odd += mult
        self._runs = runs
        self._index = {v: m for v, m in runs}
        self._n = n
        self._n_odd = n_odd
        self._total = total

    # -- construction -----------------------------------------------------

    @classmethod
    def from_elements(cls, values: Iterable[int]) -> DegreeSequence:
        """Build the canonical run form of ``values`` (order is irrelevant)."""
        counts = Counter()
        for v in values:
            v = int(v)
            if v < 1:
                raise SequenceError(f"elements must be positive, got {v}")
            counts[v] += 1
        return cls(sorted(counts.items()))

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> DegreeSequence:
        return cls(sorted((v, m) for v, m in counts.items() if m))

    @classmethod
    def parse(cls, text: str) -> DegreeSequence:
        return parse_sequence(text)

    # -- basic queries ----------------------------------------------------

    @property
    def runs(self) -> tuple[tuple[int, int], ...]:
        return self._runs

    @property
    def n(self) -> int:
        return self._n

    @property
    def n_odd(self) -> int:
        return self._n_odd

    def __len__(self) -> int:
        return self._n

    def __iter__(self) -> Iterator[int]:
        for value, mult in self._runs:
            for _ in range(mult):
                yield value

    def __contains__(self, value: object) -> bool:
        return value in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DegreeSequence):
            return NotImplemented
        return self._runs == other._runs

    def __hash__(self) -> int:
        return hash(self._runs)

    def __lt__(self, other: DegreeSequence) -> bool:
        return self.elements() < other.elements()

    def __repr__(self) -> str:
        return f"DegreeSequence({format_sequence(self)!r})"

    def __str__(self) -> str:
        return format_sequence(self)

    def elements(self) -> tuple[int, ...]:
        return tuple(self)

    def multiplicity(self, value: int) -> int:
        return self._index.get(value, 0)

    def sum(self) -> int:
        return self._total

    def max(self) -> int:
        if not self._runs:
            raise SequenceError("max of an empty sequence")
        return self._runs[-1][0]

    def min(self) -> int:
        if not self._runs:
            raise SequenceError("min of an empty sequence")
        return self._runs[0][0]

    def is_even(self) -> bool:
        return self._n_odd == 0

    def distinct_count(self) -> int:
        return len(self._runs)

    # -- edits ------------------------------------------------------------

    def remove(self, value: int, count: int = 1) -> DegreeSequence:
        """Delete ``count`` occurrences of ``value``."""
        have = self.multiplicity(value)
        if count < 0 or have < count:
            raise SequenceError(f"cannot remove {count} copies of {value}: only {have} present")
        counts = dict(self._index)
        counts[value] = have - count
        return DegreeSequence.from_counts(counts)

    def decrease(self, value: int, delta: int) -> DegreeSequence:
        """Replace one occurrence of ``value`` by ``value - delta``."""
        if self.multiplicity(value) < 1:
            raise SequenceError(f"{value} does not occur in the sequence")
        if value - delta < 1:
            raise SequenceError(f"decreasing {value} by {delta} leaves a non-positive element")
        if delta == 0:
            return self
        counts = dict(self._index)
        counts[value] -= 1
        counts[value - delta] = counts.get(value - delta, 0) + 1
        return DegreeSequence.from_counts(counts)

    def add(self, value: int, count: int = 1) -> DegreeSequence:
        if value < 1:
            raise SequenceError(f"elements must be positive, got {value}")
        counts = dict(self._index)
        counts[value] = counts.get(value, 0) + count
        return DegreeSequence.from_counts(counts)


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_sequence(text: str) -> DegreeSequence:
    """Parse ``"2^5 3 3, 5^6"``-style text: whitespace/comma separated, ``v^m`` runs."""
    counts: Counter[int] = Counter()
    for token in re.split(r"[\s,]+", text.strip()):
        if not token:
            continue
        match = _TOKEN.match(token)
        if match is None:
            raise SequenceError(f"malformed sequence token {token!r}")
        value = int(match.group(1))
        mult = int(match.group(2)) if match.group(2) is not None else 1
        if value < 1:
            raise SequenceError(f"elements must be positive, got {value}")
        if mult < 1:
            raise SequenceError(f"run multiplicity must be positive in {token!r}")
        counts[value] += mult
    return DegreeSequence.from_counts(counts)


def format_sequence(seq: DegreeSequence) -> str:
    return " ".join(str(v) if m == 1 else f"{v}^{m}" for v, m in seq.runs)
