"""Restriction of roots to the connected center of a standard Levi.

A standard Levi subgroup is a subset of the simple roots.  Restricting a
root to the center of the Levi amounts to forgetting the coefficients on
the Levi nodes; two roots restrict equally iff they agree on the
complement.  We therefore represent a restricted root ("C-root") by its
coefficient subvector on the complement nodes, in ascending node order.
The fiber of a C-root is the weight set of a simple Levi module, so it has
unique highest and lowest elements.
"""

from __future__ import annotations

from typing import Iterable

from . import rootsystem as rsmod
from .errors import DimensionMismatch, EmptyFiber, NonUniqueExtreme, NotARoot
from .rootsystem import RootSystem, Vector, support_and_height


class LeviDatum:
    """A root system together with a standard Levi subset of its nodes.

    Precomputes the positive restricted roots, their fibers, and the
    highest/lowest weight of each fiber.  Immutable once built; use
    :func:`levi_datum` to get interned instances.
    """

    def __init__(self, rs: RootSystem, levi: Iterable[int]):
        self.rs = rs
        self.levi = frozenset(levi)
        if any(a < 1 or a > rs.rank for a in self.levi):
            raise DimensionMismatch(
                f"Levi nodes {sorted(self.levi)} out of range for rank {rs.rank}")
        self.complement = tuple(a for a in range(1, rs.rank + 1)
                                if a not in self.levi)
        self.levi_subsystem = rsmod.subsystem(rs, self.levi)
        self.delta_l_plus = tuple(
            self.levi_subsystem.embed(r, rs.rank)
            for r in self.levi_subsystem.system.positive_roots)
        self._delta_l_set = frozenset(self.delta_l_plus)

        fibers: dict[Vector, list[Vector]] = {}
        for beta in rs.positive_roots:
            lam = self.restrict(beta)
            if any(lam):
                fibers.setdefault(lam, []).append(beta)
        self._fibers = {lam: tuple(sorted(v, key=lambda r: (sum(r), r)))
                        for lam, v in fibers.items()}
        self.phi_plus = tuple(sorted(self._fibers))
        self._phi_set = frozenset(self.phi_plus)
        self._hat: dict[Vector, Vector] = {}
        self._tilde: dict[Vector, Vector] = {}
        for lam, fib in self._fibers.items():
            self._hat[lam] = self._unique_extreme(fib, sign=+1)
            self._tilde[lam] = self._unique_extreme(fib, sign=-1)
        # decompositions of each positive C-root as an unordered sum of two
        self.decompositions: dict[Vector, list[tuple[Vector, Vector]]] = {
            lam: [] for lam in self.phi_plus}
        for i, a in enumerate(self.phi_plus):
            for b in self.phi_plus[i:]:
                total = tuple(x + y for x, y in zip(a, b))
                if total in self._phi_set:
                    self.decompositions[total].append((a, b))
        self.key = (rs.cartan, tuple(sorted(self.levi)))

    def _unique_extreme(self, fib: tuple[Vector, ...], sign: int) -> Vector:
        rs = self.rs
        found = None
        for delta in fib:
            moved = (tuple(d + sign * (1 if j + 1 == a else 0)
                           for j, d in enumerate(delta))
                     for a in self.levi)
            if all(not rsmod.is_root(rs, v) for v in moved):
                if found is not None:
                    raise NonUniqueExtreme(f"fiber {fib} has two extremes")
                found = delta
        if found is None:
            raise NonUniqueExtreme(f"fiber {fib} has no extreme element")
        return found

    def restrict(self, beta: Iterable[int]) -> Vector:
        """Coefficient subvector of a root on the complement nodes."""
        b = tuple(beta)
        return tuple(b[a - 1] for a in self.complement)

    def in_levi(self, beta: Vector) -> bool:
        return beta in self._delta_l_set or \
            tuple(-x for x in beta) in self._delta_l_set

    def has_croot(self, lam: Vector) -> bool:
        return lam in self._phi_set

    def fiber(self, lam: Iterable[int]) -> tuple[Vector, ...]:
        """All roots restricting to a given C-root, sorted by (height, lex)."""
        v = tuple(lam)
        if v in self._fibers:
            return self._fibers[v]
        neg = tuple(-x for x in v)
        if neg in self._fibers:
            return tuple(tuple(-x for x in r) for r in self._fibers[neg])
        raise EmptyFiber(f"{v} is not a restricted root for this Levi")

    def hat(self, lam: Iterable[int]) -> Vector:
        """Highest weight of the fiber of a positive C-root."""
        v = tuple(lam)
        if v not in self._hat:
            raise EmptyFiber(f"{v} is not a positive restricted root")
        return self._hat[v]

    def tilde(self, lam: Iterable[int]) -> Vector:
        """Lowest weight of the fiber of a positive C-root."""
        v = tuple(lam)
        if v not in self._tilde:
            raise EmptyFiber(f"{v} is not a positive restricted root")
        return self._tilde[v]

    def croot_support(self, lam: Iterable[int]) -> frozenset[int]:
        """Ambient support of a C-root, read off its highest fiber element."""
        supp, _ = support_and_height(self.hat(lam))
        return supp

    def __eq__(self, other):
        return isinstance(other, LeviDatum) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"LeviDatum({self.rs!r}, levi={sorted(self.levi)})"


_levi_cache: dict[tuple, LeviDatum] = {}


def levi_datum(rs: RootSystem, levi: Iterable[int]) -> LeviDatum:
    """Interned constructor for LeviDatum (fibers are precomputed once)."""
    key = (rs.cartan, tuple(sorted(set(levi))))
    if key not in _levi_cache:
        _levi_cache[key] = LeviDatum(rs, key[1])
    return _levi_cache[key]


def restrict(L: LeviDatum, beta: Iterable[int]) -> Vector:
    """Restriction of a root; raises NotARoot on non-roots."""
    b = tuple(beta)
    if not rsmod.is_root(L.rs, b):
        raise NotARoot(f"{b} is not a root")
    return L.restrict(b)


def phi_plus(L: LeviDatum) -> tuple[Vector, ...]:
    """Positive restricted roots, deduplicated and lex-sorted."""
    return L.phi_plus


def fiber(L: LeviDatum, lam: Iterable[int]) -> tuple[Vector, ...]:
    return L.fiber(lam)


def extreme_weights(L: LeviDatum, lam: Iterable[int]) -> tuple[Vector, Vector]:
    """Highest and lowest weight of the fiber of a positive C-root."""
    return L.hat(lam), L.tilde(lam)


def croot_support(L: LeviDatum, lam: Iterable[int]) -> frozenset[int]:
    return L.croot_support(lam)
