"""Simple root systems over the integers, in Bourbaki numbering.

Roots are integer coefficient vectors on the simple-root basis, stored as
plain tuples.  Positive roots are generated from the Cartan matrix by the
root-string closure rule; no floating point or Euclidean coordinates are
used anywhere (the coordinate realization serves only as an independent
test oracle).  Simple-root indices are 1-based throughout the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from .errors import (
    DimensionMismatch,
    InvalidType,
    InvariantViolation,
    NegativeCoefficient,
    UnrecognizedDiagram,
)

Vector = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")

_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}

_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E6": lambda n: 36,
    "E7": lambda n: 63,
    "E8": lambda n: 120,
    "F4": lambda n: 24,
    "G2": lambda n: 6,
}


@dataclass(frozen=True)
class RootSystem:
    """Cartan data plus the full set of positive roots.

    ``cartan[i][j]`` is the pairing of the i-th simple coroot with the j-th
    simple root (rows indexed by coroots).  ``symmetrizer`` holds positive
    integers d_i making ``d_i * cartan[i][j]`` symmetric.  ``type_label`` is
    the family name for systems built by :func:`build` and ``None`` for
    derived subsystems.
    """

    type_label: Optional[str]
    rank: int
    cartan: tuple[Vector, ...]
    symmetrizer: Vector
    positive_roots: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "_positive_set", frozenset(self.positive_roots))

    @property
    def positive_set(self) -> frozenset[Vector]:
        return self._positive_set

    def simple_root(self, i: int) -> Vector:
        """Coefficient vector of the i-th simple root (1-based)."""
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def zero(self) -> Vector:
        return (0,) * self.rank

    def __hash__(self):
        return hash((self.cartan, self.symmetrizer))

    def __repr__(self):
        label = self.type_label if self.type_label else "derived"
        return f"RootSystem({label}, rank={self.rank})"


def normalize_type(type_label: str, rank: Optional[int] = None) -> tuple[str, int]:
    """Resolve a (family, rank) pair, accepting forms like B/3, E6, E/6."""
    label = type_label.strip().upper()
    if label in ("E", "F", "G") and rank is not None:
        label = f"{label}{rank}"
    if label not in FAMILIES:
        if len(label) > 1 and label[0] in "ABCD" and label[1:].isdigit():
            if rank is not None and rank != int(label[1:]):
                raise InvalidType(f"conflicting rank for {type_label}")
            label, rank = label[0], int(label[1:])
        else:
            raise InvalidType(f"unknown type {type_label!r}")
    if label in _FIXED_RANK:
        fixed = _FIXED_RANK[label]
        if rank is not None and rank != fixed:
            raise InvalidType(f"type {label} has rank {fixed}, got {rank}")
        return label, fixed
    if rank is None:
        raise InvalidType(f"type {label} needs an explicit rank")
    if rank < _MIN_RANK[label]:
        raise InvalidType(f"type {label} requires rank >= {_MIN_RANK[label]}")
    return label, rank


def _cartan_matrix(family: str, n: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        c[i - 1][j - 1] = cij
        c[j - 1][i - 1] = cji

    if family in ("A", "B", "C"):
        for i in range(1, n):
            bond(i, i + 1)
        if family == "B" and n >= 2:
            bond(n - 1, n, -1, -2)  # last node short
        if family == "C" and n >= 2:
            bond(n - 1, n, -2, -1)  # last node long
    elif family == "D":
        # chain 1..n-2, with nodes n-1 and n both attached to node n-2
        for i in range(1, n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1)
        bond(n - 2, n)
    elif family in ("E6", "E7", "E8"):
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(2, 4)
    elif family == "F4":
        bond(1, 2)
        bond(2, 3, -1, -2)  # nodes 3, 4 short
        bond(3, 4)
    elif family == "G2":
        bond(1, 2, -3, -1)  # node 1 short
    return c


def _symmetrizer(family: str, n: int) -> Vector:
    if family == "B":
        return (2,) * (n - 1) + (1,)
    if family == "C":
        return (1,) * (n - 1) + (2,)
    if family == "F4":
        return (2, 2, 1, 1)
    if family == "G2":
        return (1, 3)
    return (1,) * n


def _symmetrizer_from_cartan(cartan: tuple[Vector, ...]) -> Vector:
    """Positive integers d with d_i c_ij = d_j c_ji, per connected component."""
    n = len(cartan)
    d: list[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                    queue.append(j)
    denom = 1
    for x in d:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    out = tuple(int(x * denom) for x in d)
    scale = 0
    for x in out:
        scale = _gcd(scale, x)
    return tuple(x // scale for x in out)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _close_positive_roots(cartan: tuple[Vector, ...]) -> tuple[Vector, ...]:
    """Generate all positive roots from the Cartan matrix by string closure."""
    n = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots: set[Vector] = set(simples)
    level = list(simples)
    while level:
        fresh: set[Vector] = set()
        for beta in level:
            for i, alpha in enumerate(simples):
                if beta == alpha:
                    continue  # 2*alpha is never a root
                down = tuple(b - a for b, a in zip(beta, alpha))
                p = 0
                while down in roots:
                    p += 1
                    down = tuple(b - a for b, a in zip(down, alpha))
                pair = sum(cartan[i][j] * beta[j] for j in range(n))
                if p - pair > 0:
                    up = tuple(b + a for b, a in zip(beta, alpha))
                    if up not in roots:
                        roots.add(up)
                        fresh.add(up)
        level = sorted(fresh)
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


@lru_cache(maxsize=None)
def build(type_label: str, rank: Optional[int] = None) -> RootSystem:
    """Construct the root system of a simple type.

    Positive roots come sorted by (height, lexicographic coefficients).
    Raises InvalidType for out-of-range family/rank combinations.
    """
    family, n = normalize_type(type_label, rank)
    cartan = tuple(tuple(row) for row in _cartan_matrix(family, n))
    sym = _symmetrizer(family, n)
    positive = _close_positive_roots(cartan)
    expected = _POSITIVE_COUNT[family](n)
    if len(positive) != expected:
        raise InvariantViolation(
            f"{family}{n}: closure produced {len(positive)} positive roots, "
            f"expected {expected}"
        )
    return RootSystem(family, n, cartan, sym, positive)


@lru_cache(maxsize=None)
def _from_cartan_cached(cartan: tuple[Vector, ...]) -> RootSystem:
    sym = _symmetrizer_from_cartan(cartan) if cartan else ()
    positive = _close_positive_roots(cartan)
    return RootSystem(None, len(cartan), cartan, sym, positive)


def from_cartan(cartan: Iterable[Iterable[int]]) -> RootSystem:
    """Root system of an arbitrary (semisimple) Cartan matrix."""
    return _from_cartan_cached(tuple(tuple(row) for row in cartan))


def _check_length(rs: RootSystem, w: Iterable[int]) -> Vector:
    v = tuple(w)
    if len(v) != rs.rank:
        raise DimensionMismatch(f"expected length {rs.rank}, got {len(v)}")
    return v


def is_root(rs: RootSystem, w: Iterable[int]) -> bool:
    """Membership test in the full root set (positives and negatives)."""
    v = _check_length(rs, w)
    return v in rs.positive_set or tuple(-x for x in v) in rs.positive_set


def pairing(rs: RootSystem, i: int, w: Iterable[int]) -> int:
    """Pairing of the i-th simple coroot (1-based) with a lattice vector."""
    v = _check_length(rs, w)
    row = rs.cartan[i - 1]
    return sum(row[j] * v[j] for j in range(rs.rank))


def inner(rs: RootSystem, v: Iterable[int], w: Iterable[int]):
    """Weyl-invariant inner product via the symmetrized Cartan matrix.

    The normalization depends on the symmetrizer scale; only signs and
    ratios of these values are meaningful.
    """
    a = _check_length(rs, v)
    b = _check_length(rs, w)
    total = 0
    for i in range(rs.rank):
        if a[i] == 0:
            continue
        di = rs.symmetrizer[i]
        row = rs.cartan[i]
        total += a[i] * di * sum(row[j] * b[j] for j in range(rs.rank))
    return total


def coroot_pairing(rs: RootSystem, gamma: Iterable[int], w: Iterable[int]) -> int:
    """Pairing of the coroot of an arbitrary root with a lattice vector."""
    g = tuple(gamma)
    value = Fraction(2 * inner(rs, g, w), inner(rs, g, g))
    if value.denominator != 1:
        raise InvariantViolation(f"non-integral coroot pairing for {g}")
    return int(value)


def support_and_height(w: Iterable[int]) -> tuple[frozenset[int], int]:
    """Support (1-based index set) and height of a nonnegative vector."""
    v = tuple(w)
    if any(x < 0 for x in v):
        raise NegativeCoefficient(f"negative entry in {v}")
    return frozenset(i + 1 for i, x in enumerate(v) if x > 0), sum(v)


@dataclass(frozen=True)
class Subsystem:
    """A parabolic root subsystem, re-expressed on its own simple basis.

    ``nodes[i]`` is the ambient 1-based index of the (i+1)-th simple root of
    the derived system, in ascending ambient order.
    """

    system: RootSystem
    nodes: tuple[int, ...]

    def embed(self, w: Iterable[int], ambient_rank: int) -> Vector:
        """Lift a vector from subsystem coordinates to ambient coordinates."""
        out = [0] * ambient_rank
        for pos, coeff in enumerate(w):
            out[self.nodes[pos] - 1] = coeff
        return tuple(out)

    def project(self, w: Iterable[int]) -> Vector:
        """Drop an ambient vector supported on the nodes to subsystem coordinates."""
        v = tuple(w)
        for i, x in enumerate(v):
            if x != 0 and (i + 1) not in self.nodes:
                raise NotImplementedError(f"{v} not supported on {self.nodes}")
        return tuple(v[a - 1] for a in self.nodes)


@lru_cache(maxsize=None)
def _subsystem_cached(cartan, sym, positive, nodes) -> Subsystem:
    idx = [a - 1 for a in nodes]
    sub_cartan = tuple(tuple(cartan[i][j] for j in idx) for i in idx)
    sub = from_cartan(sub_cartan)
    filtered = set()
    node_set = set(nodes)
    for beta in positive:
        if all(beta[i] == 0 or (i + 1) in node_set for i in range(len(beta))):
            filtered.add(tuple(beta[i] for i in idx))
    if filtered != set(sub.positive_roots):
        raise InvariantViolation("subsystem filter disagrees with closure")
    return Subsystem(sub, nodes)


def subsystem(rs: RootSystem, S: Iterable[int]) -> Subsystem:
    """Root subsystem on a subset of simple roots (1-based indices)."""
    nodes = tuple(sorted(set(S)))
    if any(a < 1 or a > rs.rank for a in nodes):
        raise DimensionMismatch(f"nodes {nodes} out of range for rank {rs.rank}")
    return _subsystem_cached(rs.cartan, rs.symmetrizer, rs.positive_roots, nodes)


# --- Dynkin diagram recognition -------------------------------------------

def _components(cartan, nodes: tuple[int, ...]) -> list[tuple[int, ...]]:
    remaining = set(nodes)
    comps = []
    while remaining:
        start = min(remaining)
        seen = {start}
        queue = [start]
        while queue:
            i = queue.pop()
            for j in remaining:
                if j not in seen and cartan[i - 1][j - 1] != 0:
                    seen.add(j)
                    queue.append(j)
        comps.append(tuple(sorted(seen)))
        remaining -= seen
    return comps


def _edge_label(cartan, a: int, b: int) -> tuple[int, int]:
    return (cartan[a - 1][b - 1], cartan[b - 1][a - 1])


def _isomorphisms_onto(cartan, comp: tuple[int, ...], target: RootSystem) -> list[dict]:
    """All bijections comp -> {1..m} preserving the labeled Dynkin graph."""
    m = len(comp)
    if m != target.rank:
        return []
    tc = target.cartan
    # order source nodes so each one after the first touches an earlier one
    order = [comp[0]]
    rest = set(comp[1:])
    while rest:
        nxt = min(j for j in rest if any(cartan[j - 1][i - 1] != 0 for i in order))
        order.append(nxt)
        rest.remove(nxt)
    results = []

    def extend(assign: dict):
        if len(assign) == m:
            results.append(dict(assign))
            return
        u = order[len(assign)]
        used = set(assign.values())
        for t in range(1, m + 1):
            if t in used:
                continue
            ok = True
            for v, tv in assign.items():
                if _edge_label(cartan, u, v) != (tc[t - 1][tv - 1], tc[tv - 1][t - 1]):
                    ok = False
                    break
            if ok:
                assign[u] = t
                extend(assign)
                del assign[u]

    extend({})
    return results


def _candidate_families(m: int) -> list[tuple[str, int]]:
    out = [("A", m)]
    if m >= 2:
        out += [("B", m), ("C", m)]
    if m >= 3:
        out.append(("D", m))
    for fam, r in _FIXED_RANK.items():
        if r == m:
            out.append((fam, m))
    return out


def classify_diagram(rs: RootSystem, S: Iterable[int]) -> list[tuple[tuple[str, int], dict]]:
    """Split a node subset into Dynkin components and recognize each one.

    Returns one ``((family, rank), mapping)`` pair per connected component,
    where ``mapping`` sends each ambient node to its Bourbaki index in the
    standard diagram of that type.  Among valid relabelings the
    lexicographically least (ordered by ambient node) is returned; the family
    chosen is the first match in the order A, B, C, D, E6, E7, E8, F4, G2,
    so ambiguous shapes get a canonical name (a rank-2 double bond is B2).
    """
    nodes = tuple(sorted(set(S)))
    out = []
    for comp in _components(rs.cartan, nodes):
        found = None
        for family, m in _candidate_families(len(comp)):
            target = build(family, m)
            isos = _isomorphisms_onto(rs.cartan, comp, target)
            if isos:
                best = min(isos, key=lambda f: tuple(f[a] for a in comp))
                found = ((family, m), best)
                break
        if found is None:
            raise UnrecognizedDiagram(f"component {comp} matches no simple type")
        out.append(found)
    return out


def diagram_isomorphisms(rs: RootSystem, comp: Iterable[int], family: str,
                         m: int) -> list[dict]:
    """All relabelings of a connected node set onto a standard diagram."""
    try:
        target = build(family, m)
    except InvalidType:
        return []
    return _isomorphisms_onto(rs.cartan, tuple(sorted(set(comp))), target)


@lru_cache(maxsize=None)
def diagram_automorphisms(type_label: str, rank: Optional[int] = None) -> tuple[tuple[int, ...], ...]:
    """Graph automorphisms of a standard diagram, identity first.

    Each permutation is a tuple whose (i-1)-th entry is the image of node i.
    """
    family, n = normalize_type(type_label, rank)
    rs = build(family, n)
    isos = _isomorphisms_onto(rs.cartan, tuple(range(1, n + 1)), rs)
    perms = sorted(tuple(f[i] for i in range(1, n + 1)) for f in isos)
    ident = tuple(range(1, n + 1))
    return (ident,) + tuple(p for p in perms if p != ident)
