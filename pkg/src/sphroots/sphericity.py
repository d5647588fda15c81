"""Sphericity test for Levi modules via iterated highest-weight reduction.

Given the weight multiset of a module over a standard Levi, repeatedly pick
a weight that cannot be raised by any simple Levi root (a highest weight of
some simple summand), cut the Levi down to its stabilizer, and strike the
picked weight together with its images under the discarded positive Levi
roots.  The module is spherical iff the sequence of picked weights is
linearly independent, in which case its length is the rank.

All linear algebra is fraction-free integer elimination; there is no
floating point anywhere.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import rootsystem as rsmod
from .errors import InvariantViolation, NoMaximalWeight
from .rootsystem import RootSystem, Vector
from .subgroup import SubgroupDatum


@dataclass(frozen=True)
class ReductionStep:
    """One loop turn: the weight picked, the surviving Levi, the removals."""

    omega: Vector
    pi_m: tuple[int, ...]
    removed: tuple[Vector, ...]


@dataclass(frozen=True)
class ThetaWitness:
    """Outcome of the reduction: picked weights and the sphericity verdict."""

    theta: tuple[Vector, ...]
    spherical: bool
    rank: Optional[int]
    trace: tuple[ReductionStep, ...] = field(repr=False, default=())


def integer_rank(vectors: Iterable[Vector]) -> int:
    """Rank over the rationals by fraction-free integer elimination."""
    rows = [list(v) for v in vectors if any(v)]
    rank = 0
    cols = len(rows[0]) if rows else 0
    col = 0
    while rank < len(rows) and col < cols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col]
                rows[r] = [lead * x - factor * y
                           for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def linearly_independent(vectors: Iterable[Vector]) -> bool:
    vs = list(vectors)
    if len({tuple(v) for v in vs}) < len(vs):
        return False
    return integer_rank(vs) == len(vs)


def knop_reduce(rs: RootSystem, pi_l: Iterable[int],
                delta_l_plus: Iterable[Vector], omega: Iterable[Vector],
                choose: Optional[Callable] = None) -> ThetaWitness:
    """Run the highest-weight reduction on a weight multiset.

    ``choose`` picks among the maximal weights at each step (ascending lex
    order); the default takes the lexicographically largest.  The verdict
    and the number of picked weights are independent of this choice.
    """
    pi = tuple(sorted(set(pi_l)))
    dl = tuple(tuple(v) for v in delta_l_plus)
    pool = Counter(tuple(v) for v in omega)
    theta: list[Vector] = []
    trace: list[ReductionStep] = []
    while pool:
        simples = {a: rs.simple_root(a) for a in pi}
        maximal = sorted(
            w for w in pool
            if all(tuple(x + y for x, y in zip(w, simples[a])) not in pool
                   for a in pi))
        if not maximal:
            raise NoMaximalWeight(f"no maximal weight in {sorted(pool)}")
        w = choose(maximal) if choose is not None else maximal[-1]
        pairings = {gamma: rsmod.coroot_pairing(rs, gamma, w) for gamma in dl}
        if any(v < 0 for v in pairings.values()):
            raise InvariantViolation(f"picked weight {w} is not dominant")
        pi_m = tuple(a for a in pi if rsmod.pairing(rs, a, w) == 0)
        dropped = [gamma for gamma in dl if pairings[gamma] > 0]
        removals = [w] + [tuple(x - y for x, y in zip(w, gamma))
                          for gamma in dropped]
        removed = []
        for v in removals:
            if pool[v] > 0:
                pool[v] -= 1
                if pool[v] == 0:
                    del pool[v]
                removed.append(v)
        theta.append(w)
        trace.append(ReductionStep(w, pi_m, tuple(removed)))
        pi = pi_m
        dl = tuple(gamma for gamma in dl if pairings[gamma] == 0)
    spherical = linearly_independent(theta)
    return ThetaWitness(tuple(theta), spherical,
                        len(theta) if spherical else None, tuple(trace))


_rank_cache: dict[tuple, tuple[bool, Optional[int]]] = {}


def is_spherical_and_rank(H: SubgroupDatum,
                          choose: Optional[Callable] = None
                          ) -> tuple[bool, Optional[int]]:
    """Sphericity of the datum and, when spherical, the number of its
    spherical roots (the reduction length)."""
    if choose is None and H.key in _rank_cache:
        return _rank_cache[H.key]
    witness = knop_reduce(H.rs, H.L.levi, H.L.delta_l_plus, H.u_roots,
                          choose=choose)
    result = (witness.spherical, witness.rank)
    if choose is None:
        _rank_cache[H.key] = result
    return result


def theta_witness(H: SubgroupDatum) -> ThetaWitness:
    """Full reduction data for the datum's module."""
    return knop_reduce(H.rs, H.L.levi, H.L.delta_l_plus, H.u_roots)
