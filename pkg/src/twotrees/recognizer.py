"""Membership test for the degree sequences of 2-trees.

A sequence ``D`` of ``n`` integers belongs to the class when

* (a) ``sum(D) == 4n - 6``
* (b) ``max(D) <= n - 1``
* (c) ``min(D) == 2`` and at least two elements equal 2
* (d) ``D`` is not ``<2^(n-4), d^4>`` for any ``d >= 5``
* (e) when every element is even, ``n2 >= n/3 + 1``

Each test reads only the run encoding, so the cost is linear in the number of
runs and constant for conditions (a)-(e) themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .degseq import DegreeSequence

__all__ = [
    "CONDITION_ORDER",
    "RecognitionVerdict",
    "recognize",
    "recognize_tree",
    "in_domain",
    "condition_a",
    "condition_b",
    "condition_c",
    "condition_d",
    "condition_e",
    "violated_conditions",
]

CONDITION_ORDER = ("domain", "a", "b", "c", "d", "e")


@dataclass(frozen=True)
class RecognitionVerdict:
    accepted: bool
    violated: Optional[str] = None

    def __post_init__(self):
        if self.accepted == (self.violated is not None):
            raise ValueError("a verdict is either accepted or names one violated condition")

    def __bool__(self) -> bool:
        return self.accepted


def in_domain(seq: DegreeSequence) -> bool:
    """At least three elements, none below 2."""
    return seq.n >= 3 and seq.min() >= 2


def condition_a(seq: DegreeSequence) -> bool:
    return seq.sum() == 4 * seq.n - 6


def condition_b(seq: DegreeSequence) -> bool:
    return seq.n == 0 or seq.max() <= seq.n - 1


def condition_c(seq: DegreeSequence) -> bool:
    return seq.n > 0 and seq.min() == 2 and seq.multiplicity(2) >= 2


def condition_d(seq: DegreeSequence) -> bool:
    runs = seq.runs
    if len(runs) != 2:
        return True
    (low, n_low), (high, n_high) = runs
    return not (low == 2 and n_low == seq.n - 4 and n_high == 4 and high >= 5)


def condition_e(seq: DegreeSequence) -> bool:
    # n2 >= n/3 + 1, kept in integers
    return not seq.is_even() or 3 * seq.multiplicity(2) >= seq.n + 3


_CHECKS = (
    ("domain", in_domain),
    ("a", condition_a),
    ("b", condition_b),
    ("c", condition_c),
    ("d", condition_d),
    ("e", condition_e),
)


def recognize(seq: DegreeSequence) -> RecognitionVerdict:
    """Accept ``seq`` or report the first failing condition in ``CONDITION_ORDER``."""
    for tag, check in _CHECKS:
        if not check(seq):
            return RecognitionVerdict(False, tag)
    return RecognitionVerdict(True)


def violated_conditions(seq: DegreeSequence) -> list[str]:
    """All failing condition tags; ``domain`` failures short-circuit the rest."""
    if not in_domain(seq):
        return ["domain"]
    return [tag for tag, check in _CHECKS[1:] if not check(seq)]


def recognize_tree(seq: DegreeSequence) -> bool:
    """Tree degree sequences: positive elements summing to ``2n - 2``."""
    return seq.n >= 1 and seq.min() >= 1 and seq.sum() == 2 * seq.n - 2
