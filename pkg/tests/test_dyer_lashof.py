"""The Adem rewriting engine: relations, normal forms, confluence."""

import math

import pytest

from loopalgebra.dyer_lashof import (
    adem_pair,
    compose_and_normalize,
    degree,
    excess,
    is_admissible,
    normalize,
)
from loopalgebra.suites import _all_sequences, normalize_by_steps


def test_excess_and_admissibility():
    assert excess(()) == math.inf
    assert excess((5,)) == 5
    assert excess((3, 2)) == 1
    assert is_admissible(())
    assert is_admissible((2, 1)) and not is_admissible((3, 1))
    assert is_admissible((0, 0, 0)) and not is_admissible((1, 0))


def test_adem_pair_examples():
    assert adem_pair(4, 1) == frozenset({(3, 2)})
    assert adem_pair(3, 1) == frozenset()
    assert adem_pair(2, 0) == frozenset({(1, 1)})
    assert adem_pair(4, 0) == frozenset({(2, 2), (1, 3)})


def test_adem_pair_rejects_admissible():
    with pytest.raises(ValueError):
        adem_pair(2, 1)
    with pytest.raises(ValueError):
        adem_pair(0, 0)


def test_adem_pair_structure():
    # every term (a, b): sum preserved, b > s, excess a-b <= s
    for r in range(1, 20):
        for s in range((r - 1) // 2 + 1):
            for a, b in adem_pair(r, s):
                assert a + b == r + s
                assert b > s
                assert a - b <= s < r - s
                assert is_admissible((a, b))


def test_normalize_examples():
    assert normalize((2, 1)) == frozenset({(2, 1)})
    assert normalize((7, 3)) == frozenset()
    assert normalize((7, 4, 1)) == frozenset()
    assert normalize((2, 0)) == frozenset({(1, 1)})
    assert normalize((1, 0)) == frozenset()
    assert normalize((5, 2)) == frozenset()
    assert normalize((5, 1)) == frozenset({(3, 3)})
    assert normalize(()) == frozenset({()})
    assert normalize((0, 0)) == frozenset({(0, 0)})


def test_normalize_rejects_bad_entries():
    with pytest.raises(ValueError):
        normalize((1, -2))


def test_compose_examples():
    assert compose_and_normalize((7,), (4, 1)) == frozenset()
    assert compose_and_normalize((), (3, 1)) == frozenset()
    assert compose_and_normalize((5,), ()) == frozenset({(5,)})


def test_normal_form_properties_bounded():
    # production normalizer vs the single-step worklist oracle, both orders
    for seq in _all_sequences(12, 4):
        nf = normalize(seq)
        for term in nf:
            assert is_admissible(term)
            assert degree(term) == degree(seq)
            assert len(term) == len(seq)
            assert excess(term) <= excess(seq)
            assert normalize(term) == frozenset({term})
        assert normalize_by_steps(seq, leftmost=True) == nf
        assert normalize_by_steps(seq, leftmost=False) == nf


def test_normal_form_properties_degree_24_short():
    # wider degree range at shorter lengths
    for seq in _all_sequences(24, 3):
        nf = normalize(seq)
        for term in nf:
            assert is_admissible(term)
            assert degree(term) == degree(seq)
            assert excess(term) <= excess(seq)
            assert normalize(term) == frozenset({term})
