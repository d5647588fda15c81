"""The combinatorial datum of a Levi-split subgroup of a parabolic.

A subgroup with Levi part equal to the full standard Levi of its parabolic
is determined, up to the data this package cares about, by the set of
positive restricted roots whose weight spaces are missing from it (the
"active" set).  Validity of the datum is exactly the subalgebra condition:
the inactive positive restricted roots are closed under addition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from . import rootsystem as rsmod
from .croots import LeviDatum, levi_datum
from .errors import ClosureViolation, InvariantViolation, PsiNotInPhiPlus
from .rootsystem import RootSystem, Vector


class SubgroupDatum:
    """An immutable (root system, Levi, active set) triple.

    ``u_roots`` is the derived union of the fibers of the active set: the
    weight set of the module whose sphericity governs everything downstream.
    """

    def __init__(self, L: LeviDatum, psi: Iterable[Vector]):
        self.L = L
        self.psi = tuple(sorted(tuple(v) for v in psi))
        roots: list[Vector] = []
        for lam in self.psi:
            roots.extend(L.fiber(lam))
        self.u_roots = tuple(sorted(roots, key=lambda r: (sum(r), r)))
        self._u_set = frozenset(self.u_roots)
        self.key = (L.key, self.psi)

    @property
    def rs(self) -> RootSystem:
        return self.L.rs

    def has_u_root(self, beta: Vector) -> bool:
        return beta in self._u_set

    def __eq__(self, other):
        return isinstance(other, SubgroupDatum) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return (f"SubgroupDatum(levi={sorted(self.L.levi)}, "
                f"psi={list(self.psi)})")

    def to_wire(self) -> dict:
        """Canonical JSON form: type, rank, complement nodes, active set."""
        label = self.rs.type_label
        if label is None:
            raise InvariantViolation("derived systems have no wire form")
        return {
            "type": label,
            "rank": self.rs.rank,
            "levi_complement": list(self.L.complement),
            "psi": [list(v) for v in self.psi],
        }


_subgroup_cache: dict[tuple, SubgroupDatum] = {}


def make_subgroup(L: LeviDatum, psi: Iterable[Iterable[int]]) -> SubgroupDatum:
    """Validated, interned construction of a subgroup datum.

    An empty active set is legal and encodes the parabolic itself.  Raises
    PsiNotInPhiPlus for vectors outside the positive restricted roots and
    ClosureViolation (naming the offending triple) when some active root
    decomposes into two inactive positive restricted roots.
    """
    psi_t = tuple(sorted(tuple(v) for v in psi))
    key = (L.key, psi_t)
    if key in _subgroup_cache:
        return _subgroup_cache[key]
    psi_set = set(psi_t)
    for lam in psi_t:
        if not L.has_croot(lam):
            raise PsiNotInPhiPlus(f"{lam} is not a positive restricted root")
    for lam in psi_t:
        for a, b in L.decompositions[lam]:
            if a not in psi_set and b not in psi_set:
                raise ClosureViolation(a, b, lam)
    datum = SubgroupDatum(L, psi_t)
    _subgroup_cache[key] = datum
    return datum


def subgroup_from_wire(payload) -> SubgroupDatum:
    """Parse the canonical JSON form (a dict or a JSON string)."""
    if isinstance(payload, str):
        payload = json.loads(payload)
    rs = rsmod.build(payload["type"], payload["rank"])
    complement = [int(a) for a in payload["levi_complement"]]
    levi = [a for a in range(1, rs.rank + 1) if a not in set(complement)]
    L = levi_datum(rs, levi)
    if L.complement != tuple(sorted(complement)):
        raise PsiNotInPhiPlus(f"bad complement {complement}")
    return make_subgroup(L, [tuple(int(x) for x in v) for v in payload["psi"]])


@dataclass(frozen=True)
class SMDecomposition:
    """Partition of the active set by shared simple Levi factors.

    Two active roots land in the same block when some Dynkin component of
    the Levi pairs nontrivially with both of their highest fiber weights.
    ``factor_assignment`` maps each component acting nontrivially to the
    index of the unique block it touches.  Blocks are ordered by their
    lexicographically least member.
    """

    components: tuple[tuple[Vector, ...], ...]
    factor_assignment: dict

    @property
    def trivial(self) -> bool:
        return len(self.components) <= 1

    def block_of(self, lam: Vector) -> int:
        for i, block in enumerate(self.components):
            if lam in block:
                return i
        raise KeyError(lam)


_sm_cache: dict[tuple, SMDecomposition] = {}


def sm_decomposition(H: SubgroupDatum) -> SMDecomposition:
    if H.key in _sm_cache:
        return _sm_cache[H.key]
    L, rs = H.L, H.rs
    levi_comps = [comp for comp in
                  rsmod._components(rs.cartan, tuple(sorted(L.levi)))]
    parent = {lam: lam for lam in H.psi}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touches: dict[tuple, list[Vector]] = {}
    for comp in levi_comps:
        touched = [lam for lam in H.psi
                   if any(rsmod.pairing(rs, a, L.hat(lam)) != 0 for a in comp)]
        if touched:
            touches[comp] = touched
            first = touched[0]
            for lam in touched[1:]:
                parent[find(lam)] = find(first)
    groups: dict[Vector, list[Vector]] = {}
    for lam in H.psi:
        groups.setdefault(find(lam), []).append(lam)
    components = tuple(sorted((tuple(sorted(g)) for g in groups.values())))
    block_index = {block[0]: i for i, block in enumerate(components)}
    assignment = {}
    for comp, touched in touches.items():
        blocks = {block_index[tuple(sorted(groups[find(lam)]))[0]]
                  for lam in touched}
        if len(blocks) != 1:
            raise InvariantViolation(f"factor {comp} touches several blocks")
        assignment[frozenset(comp)] = blocks.pop()
    result = SMDecomposition(components, assignment)
    _sm_cache[H.key] = result
    return result


def upper_elements(L: LeviDatum, theta: Iterable[Vector]) -> tuple[Vector, ...]:
    """Elements no other member exceeds by a positive restricted root."""
    t = [tuple(v) for v in theta]
    out = []
    for nu in t:
        if all(mu == nu or
               not L.has_croot(tuple(a - b for a, b in zip(mu, nu)))
               for mu in t):
            out.append(nu)
    if t and not out:
        raise InvariantViolation("nonempty set without upper elements")
    return tuple(sorted(out))


def upsilon_and_hat(H: SubgroupDatum, i: int) -> tuple[tuple[Vector, ...], SubgroupDatum]:
    """Enlarged-block data for one block of the decomposition.

    Returns the set of active roots outside block i whose support sits
    inside the block's support, together with the datum keeping only the
    block and that set.  The shrunken datum is revalidated: a closure
    failure here would be an internal bug, not bad input.
    """
    blocks = sm_decomposition(H).components
    block = blocks[i]
    supp = frozenset().union(*(H.L.croot_support(nu) for nu in block))
    upsilon = tuple(sorted(
        mu for mu in H.psi
        if mu not in block and H.L.croot_support(mu) <= supp))
    hat = make_subgroup(H.L, block + upsilon)
    return upsilon, hat


@dataclass(frozen=True)
class ReducedDatum:
    """A datum re-expressed over the span of its active supports.

    ``nodes[i]`` is the ambient 1-based node behind the reduced node i+1;
    ``embed`` lifts reduced-coordinate weights back to the ambient system.
    """

    datum: SubgroupDatum
    nodes: tuple[int, ...]
    ambient_rank: int

    def embed(self, w: Iterable[int]) -> Vector:
        out = [0] * self.ambient_rank
        for pos, coeff in enumerate(w):
            out[self.nodes[pos] - 1] = coeff
        return tuple(out)


def ambient_reduction(H: SubgroupDatum) -> ReducedDatum:
    """Shrink the ambient system to the union of active supports.

    The active set, its fibers, and the block structure carry over
    unchanged; an empty active set reduces to the empty system.
    """
    rs = H.rs
    if not H.psi:
        sub = rsmod.subsystem(rs, ())
        L0 = levi_datum(sub.system, ())
        return ReducedDatum(make_subgroup(L0, ()), (), rs.rank)
    pi0 = sorted(frozenset().union(*(H.L.croot_support(lam) for lam in H.psi)))
    sub = rsmod.subsystem(rs, pi0)
    new_levi = [pos + 1 for pos, a in enumerate(sub.nodes) if a in H.L.levi]
    L0 = levi_datum(sub.system, new_levi)
    ambient_complement = [a for a in sub.nodes if a not in H.L.levi]
    new_psi = []
    for lam in H.psi:
        by_node = dict(zip(H.L.complement, lam))
        new_psi.append(tuple(by_node.get(a, 0) for a in ambient_complement))
    reduced = make_subgroup(L0, new_psi)
    if len(reduced.psi) != len(H.psi):
        raise InvariantViolation("ambient reduction collapsed active roots")
    return ReducedDatum(reduced, sub.nodes, rs.rank)
