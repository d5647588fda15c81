"""Delta-strings and the limit construction."""

import pytest

import sphroots.rootsystem as rsmod
from sphroots.degeneration import degenerate, delta_strings, track_component
from sphroots.errors import LambdaNotActive
from sphroots.subgroup import sm_decomposition

from helpers import datum


def test_delta_strings_b3_example():
    rs = rsmod.build("B", 3)
    strings = delta_strings(rs, (1, 1, 1))
    lengths = sorted(len(s.lines) for s in strings)
    assert lengths == [1, 1, 1, 1, 3, 3, 3, 3, 3]
    by_top = {s.top: s for s in strings}
    alpha1 = by_top[(1, 0, 0)]
    assert alpha1.p == 2
    assert [line.root for line in alpha1.lines] == \
        [(1, 0, 0), (0, -1, -1), (-1, -2, -2)]
    delta_string = by_top[(1, 1, 1)]
    assert [line.root for line in delta_string.lines] == \
        [(1, 1, 1), None, (-1, -1, -1)]


def test_delta_strings_a2_example():
    rs = rsmod.build("A", 2)
    strings = delta_strings(rs, (1, 0))
    by_top = {s.top: s for s in strings}
    assert [line.root for line in by_top[(1, 1)].lines] == [(1, 1), (0, 1)]
    assert by_top[(1, 1)].p == 1


@pytest.mark.parametrize("family,n", [("B", 3), ("C", 3), ("G2", 2),
                                      ("F4", 4), ("A", 4), ("D", 4)])
def test_delta_strings_partition(family, n):
    rs = rsmod.build(family, n)
    for delta in rs.positive_roots:
        strings = delta_strings(rs, delta)
        roots_seen = [line.root for s in strings for line in s.lines
                      if line.root is not None]
        cartans = sum(1 for s in strings for line in s.lines if line.is_cartan)
        assert cartans == 1
        assert len(roots_seen) == len(set(roots_seen)) == \
            2 * len(rs.positive_roots)


def test_degenerate_first_pivot_b3():
    H = datum("B", 3, (3,), [(1,), (2,)])
    d = degenerate(H, (1,))
    assert d.delta == (1, 1, 1)
    assert d.pi_m == (2,)
    assert d.target.L.complement == (1, 3)
    assert d.target.psi == ((0, 1), (0, 2))
    assert d.u_infinity == ((0, 0, 1), (0, 1, 1), (0, 1, 2))


def test_degenerate_second_pivot_b3():
    H = datum("B", 3, (3,), [(1,), (2,)])
    d = degenerate(H, (2,))
    assert d.delta == (1, 2, 2)
    assert d.pi_m == (1,)
    assert d.target.L.complement == (2, 3)
    assert d.target.psi == ((0, 1), (1, 1))


def test_degenerate_full_fiber_shift():
    H = datum("B", 3, (2, 3), [(1, 1), (0, 1)])
    d = degenerate(H, (0, 1))
    assert d.delta == (0, 0, 1)
    assert d.pi_m == (1,)
    assert d.u_infinity == ((0, 1, 0), (1, 1, 0))  # the whole target fiber
    assert d.target.psi == ((1, 0),)
    # fiber lines moved by one step of delta
    assert d.shift_map[(0, 1, 1)].root == (0, 1, 0)
    assert d.shift_map[(1, 1, 1)].root == (1, 1, 0)


def test_degenerate_to_parabolic():
    H = datum("A", 2, (1,), [(1,)])
    d = degenerate(H, (1,))
    assert d.delta == (1, 1)
    assert d.pi_m == ()
    assert d.u_infinity == ()
    assert d.target.psi == ()


def test_degenerate_requires_active_pivot():
    H = datum("B", 3, (3,), [(1,), (2,)])
    with pytest.raises(LambdaNotActive):
        degenerate(H, (3,))


def test_shift_monotonicity():
    # every moved line drops by a nonnegative multiple of delta
    for family, n, complement, psi in (
            ("B", 3, (3,), [(1,), (2,)]),
            ("C", 4, (1, 3), [(1, 0), (0, 1)]),
            ("F4", 4, (3,), [(1,), (3,)])):
        H = datum(family, n, complement, psi)
        for lam in H.psi:
            d = degenerate(H, lam)
            for src, line in d.shift_map.items():
                if line.root is None:
                    continue
                diff = tuple(a - b for a, b in zip(src, line.root))
                height = sum(diff)
                delta_height = sum(d.delta)
                assert height % delta_height == 0
                k = height // delta_height
                assert k >= 0
                assert diff == tuple(k * x for x in d.delta)


def test_track_component_examples():
    H = datum("B", 3, (2, 3), [(1, 1), (0, 1)])
    blocks = sm_decomposition(H).components
    assert blocks == (((0, 1),), ((1, 1),))
    d = degenerate(H, (0, 1))
    j = track_component(d, 1)
    assert sm_decomposition(d.target).components[j] == ((1, 0),)
    with pytest.raises(LambdaNotActive):
        track_component(d, 0)  # the pivot's own block

    H2 = datum("A", 2, (1, 2), [(1, 0), (0, 1)])
    d2 = degenerate(H2, (1, 0))
    j2 = track_component(d2, sm_decomposition(H2).block_of((0, 1)))
    assert sm_decomposition(d2.target).components[j2] == ((0, 1),)


@pytest.mark.parametrize("family,n,complement,psi", [
    ("B", 4, (4,), [(1,), (2,)]),
    ("C", 4, (1, 3), [(1, 0), (0, 1)]),
    ("D", 5, (1, 5), [(1, 0), (0, 1)]),
    ("E6", 6, (1, 6), [(1, 0), (0, 1)]),
])
def test_degeneration_checks_pass_along_full_orbits(family, n, complement, psi):
    # exercise every pivot at every level of the recursion with checks on
    H = datum(family, n, complement, psi)
    stack = [H]
    seen = set()
    while stack:
        current = stack.pop()
        if current.key in seen or len(current.psi) <= 1:
            continue
        seen.add(current.key)
        for lam in current.psi:
            d = degenerate(current, lam, check=True)
            stack.append(d.target)
