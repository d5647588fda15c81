"""Weight-multiset reduction: verdicts, ranks, choice independence."""

import itertools
import random

import pytest

import sphroots.rootsystem as rsmod
from sphroots.croots import levi_datum
from sphroots.errors import ClosureViolation
from sphroots.sphericity import (
    integer_rank,
    is_spherical_and_rank,
    knop_reduce,
    linearly_independent,
    theta_witness,
)
from sphroots.subgroup import make_subgroup

from helpers import datum, levi


def test_integer_rank():
    assert integer_rank([]) == 0
    assert integer_rank([(0, 0)]) == 0
    assert integer_rank([(2, 4), (1, 2)]) == 1
    assert integer_rank([(1, 0, 1), (0, 1, 1), (1, 1, 2)]) == 2
    assert linearly_independent([(1, 0), (0, 1)])
    assert not linearly_independent([(1, 1), (1, 1)])


def test_reduction_c2_example():
    rs = rsmod.build("C", 2)
    L = levi_datum(rs, (1,))
    w = knop_reduce(rs, (1,), L.delta_l_plus, [(0, 1), (1, 1), (2, 1)])
    assert w.theta == ((2, 1), (0, 1))
    assert w.spherical and w.rank == 2


def test_reduction_b3_example():
    rs = rsmod.build("B", 3)
    L = levi_datum(rs, (1, 2))
    omega = [r for r in rs.positive_roots if r[2] >= 1]
    w = knop_reduce(rs, (1, 2), L.delta_l_plus, omega)
    assert w.theta == ((1, 2, 2), (1, 1, 1), (0, 0, 1))
    assert w.spherical and w.rank == 3
    # trace records the Levi shrinking at each step
    assert w.trace[0].pi_m == (1,)
    assert w.trace[1].pi_m == ()


def test_reduction_single_weight():
    rs = rsmod.build("A", 2)
    w = knop_reduce(rs, (), (), [(0, 1)])
    assert w.theta == ((0, 1),) and w.spherical and w.rank == 1


def test_reduction_empty_multiset():
    rs = rsmod.build("A", 2)
    w = knop_reduce(rs, (), (), [])
    assert w.theta == () and w.spherical and w.rank == 0


def test_is_spherical_examples():
    assert is_spherical_and_rank(datum("B", 3, (3,), [(1,), (2,)])) == (True, 3)
    assert is_spherical_and_rank(datum("C", 4, (2,), [(1,), (2,)])) == (False, None)
    assert is_spherical_and_rank(datum("B", 3, (3,), [])) == (True, 0)


def test_nonspherical_g2_second_node():
    assert is_spherical_and_rank(datum("G2", 2, (2,), [(1,)]))[0] is False


def test_theta_lies_in_root_lattice_span():
    H = datum("C", 4, (1, 3), [(1, 0), (0, 1)])
    w = theta_witness(H)
    assert w.spherical
    u = set(H.u_roots)
    for t in w.theta:
        assert len(t) == 4
    assert set(w.trace[0].removed) <= u | set(w.theta)


def _random_chooser(rng):
    def choose(candidates):
        return rng.choice(candidates)
    return choose


@pytest.mark.parametrize("family,n", [("B", 3), ("C", 3), ("A", 4), ("D", 4)])
def test_tie_break_independence(family, n):
    # verdict and reduction length survive randomized maximal-weight choices
    rng = random.Random(20240809)
    rs = rsmod.build(family, n)
    cases = []
    for size in (1, 2):
        for complement in itertools.combinations(range(1, n + 1), size):
            L = levi(family, n, complement)
            units = sorted({L.restrict(rs.simple_root(a)) for a in complement})
            pool = [(lam,) for lam in units]
            pool += [tuple(sorted((lam, mu))) for lam in units
                     for mu in L.phi_plus if mu != lam]
            for psi in pool:
                try:
                    cases.append(make_subgroup(L, psi))
                except ClosureViolation:
                    continue
    assert len(cases) > 20
    for H in cases:
        baseline = is_spherical_and_rank(H)
        for _ in range(3):
            trial = is_spherical_and_rank(H, choose=_random_chooser(rng))
            assert trial == baseline


def test_submodule_monotonicity():
    # dropping whole fibers from a spherical datum keeps it spherical
    for family, n in (("B", 4), ("C", 4), ("A", 5)):
        rs = rsmod.build(family, n)
        for size in (1, 2):
            for complement in itertools.combinations(range(1, n + 1), size):
                L = levi(family, n, complement)
                units = sorted({L.restrict(rs.simple_root(a))
                                for a in complement})
                for lam in units:
                    for mu in L.phi_plus:
                        if mu == lam:
                            continue
                        try:
                            H = make_subgroup(L, (lam, mu))
                        except ClosureViolation:
                            continue
                        if not is_spherical_and_rank(H)[0]:
                            continue
                        for sub_psi in ((lam,), (mu,)):
                            try:
                                sub = make_subgroup(L, sub_psi)
                            except ClosureViolation:
                                continue
                            assert is_spherical_and_rank(sub)[0]
