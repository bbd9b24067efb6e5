"""Hopf-structure operations on the BO(1) model."""

import pytest

from loopalgebra.hopf import (
    HopfElement,
    TruncationError,
    antipode,
    coproduct,
    counit,
    from_base,
    project_indecomposables,
    q_apply,
    q_of_base,
    unit,
    _mono,
)
from loopalgebra.loop_homology import BaseClass, QGenerator, Space

T = 10


def E(i):
    return BaseClass(Space.BO1, i, 0)


def elem(*monos):
    return HopfElement(Space.BO1, monos, T)


def e(i):
    return from_base(E(i), T)


def test_product_examples():
    x = e(1)
    assert unit(Space.BO1, 0, T) * x == x
    shifted = x * unit(Space.BO1, -1, T)
    assert shifted.terms == frozenset({_mono((QGenerator((), E(1)),), 0)})
    sq = x * x
    assert sq.terms == frozenset({_mono((QGenerator((), E(1)),) * 2, 2)})


def test_product_truncation_overflow():
    a = from_base(E(6), 10)
    with pytest.raises(TruncationError):
        a * a * a


def test_product_requires_same_model():
    with pytest.raises(ValueError):
        e(1) * unit(Space.POINT, 0, T)
    with pytest.raises(ValueError):
        e(1) * unit(Space.BO1, 0, T + 1)


def test_coproduct_grouplike():
    for n in (-2, 0, 1, 5):
        u = unit(Space.BO1, n, T)
        assert coproduct(u).pairs == frozenset({(_mono((), n), _mono((), n))})


def test_coproduct_base_classes():
    # diagonal of e_m dual to the rank-1 polynomial cohomology: all terms present
    got = coproduct(e(1)).pairs
    one = _mono((), 1)
    g1 = _mono((QGenerator((), E(1)),), 1)
    assert got == frozenset({(one, g1), (g1, one)})
    got2 = coproduct(e(2)).pairs
    g2 = _mono((QGenerator((), E(2)),), 1)
    assert got2 == frozenset({(one, g2), (g1, g1), (g2, one)})


def test_coproduct_multiplicative():
    x, y = e(1), e(2)
    lhs = coproduct(x * y).pairs
    rhs = frozenset()
    for u1, v1 in coproduct(x).pairs:
        for u2, v2 in coproduct(y).pairs:
            pair = (
                _mono(u1.gens + u2.gens, u1.component + u2.component),
                _mono(v1.gens + v2.gens, v1.component + v2.component),
            )
            rhs = rhs ^ {pair}
    assert lhs == rhs


def test_counit():
    assert counit(unit(Space.BO1, 3, T)) == 1
    assert counit(e(1)) == 0
    assert counit(unit(Space.BO1, 1, T) + unit(Space.BO1, 2, T)) == 0


def test_antipode_examples():
    for n in (-3, 0, 2):
        assert antipode(unit(Space.BO1, n, T)) == unit(Space.BO1, -n, T)
    # chi(e_1) = e_1 * [-2] on the nose
    assert antipode(e(1)) == e(1) * unit(Space.BO1, -2, T)
    # chi(e_2) = e_2 * [-2] modulo decomposables
    chi2 = antipode(e(2))
    assert project_indecomposables(chi2) == frozenset({QGenerator((), E(2))})


def test_antipode_defining_identity():
    # m (chi x id) psi kills positive degree, e.g. on e_2 * [-1]
    x = e(2) * unit(Space.BO1, -1, T)
    total = HopfElement(Space.BO1, (), T)
    for u, v in coproduct(x).pairs:
        total = total + antipode(elem(u)) * elem(v)
    assert not total


def test_q_apply_matches_q_of_base():
    for s in range(0, 5):
        for m in range(0, 4):
            assert q_apply(s, e(m) if m else unit(Space.BO1, 1, T)) == q_of_base(s, E(m), T)


def test_q_of_base_resolutions():
    assert not q_of_base(1, E(2), T)  # below degree: zero
    assert q_of_base(1, E(1), T) == e(1) * e(1)  # at degree: square
    assert q_of_base(3, E(1), T).terms == frozenset({_mono((QGenerator((3,), E(1)),), 2)})
    assert q_of_base(0, E(0), T) == unit(Space.BO1, 2, T)  # [1]^2


def test_q_apply_cartan_on_product():
    # Q^2(e_1 * e_1) = sum Q^a(e_1) Q^b(e_1); only a = b = 1 survives
    sq = e(1) * e(1)
    assert q_apply(2, sq) == q_of_base(1, E(1), T) * q_of_base(1, E(1), T)


def test_q_apply_truncation():
    with pytest.raises(TruncationError):
        q_apply(T, e(1))


def test_project_indecomposables():
    g = q_of_base(3, E(1), T)
    assert project_indecomposables(g) == frozenset({QGenerator((3,), E(1))})
    assert project_indecomposables(e(1) * e(1)) == frozenset()
    assert project_indecomposables(q_of_base(1, E(1), T)) == frozenset()  # a square
    with pytest.raises(ValueError):
        project_indecomposables(e(1) + e(2))  # not homogeneous
    with pytest.raises(ValueError):
        project_indecomposables(unit(Space.BO1, 1, T))  # degree 0
