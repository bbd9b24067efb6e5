"""Base-space bases, generator enumeration, instability rules."""

import itertools
import math

import pytest

from loopalgebra.loop_homology import (
    BaseClass,
    Resolution,
    Space,
    admissible_sequences,
    base_basis,
    dim_base,
    eval_unstable,
    q_generators,
    sq_lower,
    verify_bo2_basis,
)

E = lambda i: BaseClass(Space.BO1, i, 0)


def test_base_basis_examples():
    assert [x.name for x in base_basis(Space.POINT, 0)] == ["[1]"]
    assert base_basis(Space.POINT, 3) == []
    assert [x.name for x in base_basis(Space.BO1, 5)] == ["e_5"]
    assert [x.name for x in base_basis(Space.BO2, 4)] == ["b_{0,4}", "b_{1,3}", "b_{2,2}"]
    assert dim_base(Space.BO2, 7) == 4


def _brute_admissible(d, floor):
    # oracle: filter all compositions of d
    if d == 0:
        return [()]
    out = []
    for length in range(1, d + 1):
        for cuts in itertools.combinations(range(1, d), length - 1):
            parts = []
            prev = 0
            for c in cuts + (d,):
                parts.append(c - prev)
                prev = c
            seq = tuple(parts)
            if all(seq[k] <= 2 * seq[k + 1] for k in range(len(seq) - 1)):
                if seq[0] - sum(seq[1:]) > floor:
                    out.append(seq)
    return sorted(out)


def test_admissible_sequences_against_brute_force():
    for d in range(0, 14):
        for floor in range(0, 6):
            assert sorted(admissible_sequences(d, floor)) == _brute_admissible(d, floor)


def test_q_generators_examples():
    assert [g.name for g in q_generators(Space.POINT, 1)] == ["Q^1([1])"]
    assert [g.name for g in q_generators(Space.BO1, 2)] == ["Q^2(e_0)", "e_2"]
    bo2_1 = q_generators(Space.BO2, 1)
    assert [g.name for g in bo2_1] == ["Q^1(b_{0,0})", "b_{0,1}"]
    assert len(bo2_1) == 2


def test_q_generator_counts():
    # frozen counts, cross-checked by hand and by the brute enumerator above
    assert [len(q_generators(Space.POINT, n)) for n in range(1, 9)] == [1, 1, 2, 1, 2, 2, 3, 2]
    assert [len(q_generators(Space.BO1, n)) for n in range(1, 9)] == [2, 2, 4, 3, 5, 5, 8, 6]
    assert [len(q_generators(Space.BO2, n)) for n in range(1, 9)] == [2, 3, 5, 5, 8, 9, 13, 12]


def test_q_generators_canonical_order():
    for space in Space:
        for n in (3, 5, 8):
            gens = q_generators(space, n)
            keys = [(g.base.degree, g.base.index, g.seq) for g in gens]
            assert keys == sorted(keys)
            assert all(g.degree == n for g in gens)
            assert all(g.seq == () or g.seq[0] - sum(g.seq[1:]) > g.base.degree for g in gens)


def test_translation_powers():
    g = q_generators(Space.BO1, 2)[0]  # Q^2(e_0)
    assert g.translation_power == 4
    pt = q_generators(Space.POINT, 2)[0]  # Q^2([1])
    assert pt.translation_power == 2


def test_eval_unstable_examples():
    assert eval_unstable((1,), E(2)) is Resolution.ZERO
    assert eval_unstable((1,), E(1)) is Resolution.SQUARE
    assert eval_unstable((3,), E(1)) is Resolution.GENERATOR
    assert eval_unstable((), E(4)) is Resolution.GENERATOR  # empty sequence, excess +inf
    with pytest.raises(ValueError):
        eval_unstable((3, 1), E(0))


def test_verify_bo2_basis():
    for n in range(0, 25):
        assert verify_bo2_basis(n)


def test_sq_lower():
    for b in range(0, 8):
        assert sq_lower(0, b) == frozenset({E(b)})
    assert sq_lower(1, 2) == frozenset({E(1)})
    assert sq_lower(1, 3) == frozenset()
    assert sq_lower(5, 3) == frozenset()
    # binomial oracle for a non-example pair
    expected = frozenset({E(5)}) if math.comb(5, 2) % 2 else frozenset()
    assert sq_lower(2, 7) == expected
