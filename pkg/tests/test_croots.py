"""Restriction map, fibers, extreme weights."""

import itertools

import pytest

import sphroots.rootsystem as rsmod
from sphroots import croots
from sphroots.errors import EmptyFiber, NotARoot

from helpers import levi


def test_restrict_examples():
    L = levi("B", 3, complement=(3,))
    assert croots.restrict(L, (1, 2, 2)) == (2,)
    L = levi("A", 3, complement=(1, 3))
    assert croots.restrict(L, (1, 1, 1)) == (1, 1)
    L = levi("B", 3, complement=(2, 3))
    assert croots.restrict(L, (0, 1, 2)) == (1, 2)
    with pytest.raises(NotARoot):
        croots.restrict(L, (1, 0, 1))


def test_phi_plus_examples():
    assert levi("A", 3, (1, 3)).phi_plus == ((0, 1), (1, 0), (1, 1))
    assert levi("B", 3, (3,)).phi_plus == ((1,), (2,))
    # trivial Levi: restriction is the identity on coefficients
    L = croots.levi_datum(rsmod.build("A", 2), ())
    assert L.phi_plus == ((0, 1), (1, 0), (1, 1))


def test_fiber_examples():
    L = levi("B", 3, (3,))
    assert croots.fiber(L, (1,)) == ((0, 0, 1), (0, 1, 1), (1, 1, 1))
    assert croots.fiber(L, (2,)) == ((0, 1, 2), (1, 1, 2), (1, 2, 2))
    assert len(croots.fiber(L, (2,))) == 3  # dim of the wedge-square piece
    La = levi("A", 3, (1, 3))
    assert croots.fiber(La, (1, 1)) == ((1, 1, 1),)
    # negative restricted roots give the negated fiber
    assert croots.fiber(L, (-1,)) == tuple(
        tuple(-x for x in r) for r in croots.fiber(L, (1,)))
    with pytest.raises(EmptyFiber):
        croots.fiber(L, (5,))


def test_extreme_weights_examples():
    L = levi("B", 3, (3,))
    assert croots.extreme_weights(L, (1,)) == ((1, 1, 1), (0, 0, 1))
    La = levi("A", 3, (1, 3))
    assert croots.extreme_weights(La, (1, 0)) == ((1, 1, 0), (1, 0, 0))
    # empty Levi: every fiber is a single root
    L0 = croots.levi_datum(rsmod.build("A", 2), ())
    for lam in L0.phi_plus:
        hat, tilde = croots.extreme_weights(L0, lam)
        assert hat == tilde == croots.fiber(L0, lam)[0]


def test_croot_support_examples():
    L = levi("B", 3, (2, 3))
    assert croots.croot_support(L, (0, 1)) == frozenset({3})
    assert croots.croot_support(L, (1, 1)) == frozenset({1, 2, 3})
    assert croots.croot_support(levi("B", 3, (3,)), (1,)) == frozenset({1, 2, 3})


@pytest.mark.parametrize("family,n", [("A", 4), ("B", 4), ("C", 3),
                                      ("D", 4), ("F4", 4), ("G2", 2)])
def test_fiber_partition(family, n):
    # fibers partition the positive roots outside the Levi
    rs = rsmod.build(family, n)
    for size in (1, 2):
        for complement in itertools.combinations(range(1, n + 1), size):
            L = levi(family, n, complement)
            total = sum(len(croots.fiber(L, lam)) for lam in L.phi_plus)
            assert total == len(rs.positive_roots) - len(L.delta_l_plus)
            for lam in L.phi_plus:
                assert any(lam) and all(x >= 0 for x in lam)


@pytest.mark.parametrize("family,n", [("B", 4), ("C", 4), ("F4", 4), ("A", 5)])
def test_bracket_relation(family, n):
    # whenever mu + nu is a restricted root, every root in its fiber splits
    # as a sum of one root from each summand fiber
    for complement in itertools.combinations(range(1, n + 1), 2):
        L = levi(family, n, complement)
        phi = set(L.phi_plus)
        for mu, nu in itertools.combinations_with_replacement(L.phi_plus, 2):
            total = tuple(a + b for a, b in zip(mu, nu))
            if total not in phi:
                continue
            fa = croots.fiber(L, mu)
            fb = croots.fiber(L, nu)
            sums = {tuple(a + b for a, b in zip(x, y))
                    for x in fa for y in fb}
            for gamma in croots.fiber(L, total):
                assert gamma in sums


@pytest.mark.parametrize("family,n", [("B", 4), ("D", 5), ("E6", 6)])
def test_hat_dominates_fiber(family, n):
    for complement in itertools.combinations(range(1, n + 1), 2):
        L = levi(family, n, complement)
        for lam in L.phi_plus:
            hat, tilde = croots.extreme_weights(L, lam)
            union = frozenset()
            for delta in croots.fiber(L, lam):
                diff = tuple(h - x for h, x in zip(hat, delta))
                assert all(d >= 0 for d in diff)
                assert all(diff[a - 1] == 0 for a in L.complement)
                supp, _ = rsmod.support_and_height(delta)
                union |= supp
            assert croots.croot_support(L, lam) == union
            down = tuple(x - t for x, t in zip(hat, tilde))
            assert all(d >= 0 for d in down)


def test_croot_support_restricts_to_nonzero_entries():
    L = levi("C", 4, (2, 4))
    for lam in L.phi_plus:
        supp = croots.croot_support(L, lam)
        expected = {a for a, x in zip(L.complement, lam) if x}
        assert supp & set(L.complement) == expected
