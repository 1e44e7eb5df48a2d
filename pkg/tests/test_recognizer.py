import itertools

import pytest

from twotrees import DegreeSequence, parse_sequence, recognize, recognize_tree
from twotrees.recognizer import (
    CONDITION_ORDER,
    RecognitionVerdict,
    condition_a,
    condition_b,
    condition_c,
    condition_d,
    condition_e,
    in_domain,
    violated_conditions,
)

P = parse_sequence


@pytest.mark.parametrize(
    "text, violated",
    [
        ("2 2 2", None),
        ("2^5 5^4", "d"),
        ("2^3 4^4", "e"),
        ("2 2 2 4 4", None),
        ("2 2 4", "a"),
        ("2 2", "domain"),
        ("1 2 3", "domain"),
        ("2 2 2 2 6", "b"),
        ("2 3 3 3 3", "c"),
        ("3 3 3 3 4", "a"),
    ],
)
def test_examples(text, violated):
    v = recognize(P(text))
    assert v.accepted == (violated is None)
    assert v.violated == violated
    assert bool(v) == v.accepted


def test_verdict_validation():
    with pytest.raises(ValueError):
        RecognitionVerdict(True, "a")
    with pytest.raises(ValueError):
        RecognitionVerdict(False)


def test_first_violation_follows_order():
    # sum wrong and max too large: (a) is reported first
    seq = P("2 2 2 2 9")
    assert violated_conditions(seq) == ["a", "b"]
    assert recognize(seq).violated == "a"
    assert CONDITION_ORDER[0] == "domain"


def test_violated_conditions_domain_short_circuits():
    assert violated_conditions(P("1 1")) == ["domain"]
    assert violated_conditions(DegreeSequence()) == ["domain"]


def test_individual_conditions():
    d = P("2^5 5^4")
    assert condition_a(d) and condition_b(d) and condition_c(d)
    assert not condition_d(d) and condition_e(d)
    e = P("2^3 4^4")
    assert condition_d(e) and not condition_e(e)
    assert in_domain(P("2 2 2")) and not in_domain(P("2 2"))
    # (d) needs exactly four copies and d >= 5
    assert condition_d(P("2^3 4^4"))
    assert condition_d(P("2^2 3^4"))


def test_recognize_tree():
    assert recognize_tree(P("1 1"))
    assert recognize_tree(P("1 1 1 3"))
    assert not recognize_tree(P("2 2 2"))
    assert not recognize_tree(DegreeSequence())
    assert not recognize_tree(P("1 1 1"))


def test_conditions_are_cheap_on_huge_runs():
    seq = DegreeSequence([(2, 10**12), (10**12, 2)])
    # decided from the runs alone, without expanding 10^12 elements
    assert recognize(seq).violated == "a"


def test_matches_brute_definition_small():
    # a direct restatement of (a)-(e) over explicit element lists
    def brute(values):
        n = len(values)
        if n < 3 or min(values) < 2:
            return False
        n2 = values.count(2)
        if sum(values) != 4 * n - 6 or max(values) > n - 1 or n2 < 2:
            return False
        big = [v for v in values if v != 2]
        if len(big) == 4 and len(set(big)) == 1 and big[0] >= 5:
            return False
        if all(v % 2 == 0 for v in values) and 3 * n2 < n + 3:
            return False
        return True

    for n in range(1, 9):
        for combo in itertools.combinations_with_replacement(range(1, n + 1), n):
            seq = DegreeSequence.from_elements(combo)
            assert recognize(seq).accepted == brute(list(combo)), combo
