"""Additive degeneration of a subgroup datum along one active root.

Conjugating the subalgebra by the one-parameter group of the lowest root
vector for delta (the highest fiber weight of the chosen active root) and
passing to the limit shifts every line of the orthogonal complement to the
bottom of its delta-string.  The normalizer of the limit is again a
Levi-split datum, with one spherical root fewer; everything here is pure
line bookkeeping on root vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import rootsystem as rsmod
from .croots import levi_datum
from .errors import AmbiguousComponent, InvariantViolation, LambdaNotActive
from .rootsystem import RootSystem, Vector
from .sphericity import is_spherical_and_rank
from .subgroup import SubgroupDatum, make_subgroup, sm_decomposition


@dataclass(frozen=True)
class Line:
    """A one-dimensional torus-stable subspace: a root line, or the line
    spanned by the coroot of delta when ``root`` is None."""

    root: Optional[Vector]

    @property
    def is_cartan(self) -> bool:
        return self.root is None


@dataclass(frozen=True)
class DeltaString:
    """The line string of one simple s(delta)-module, top weight first.

    ``lines[i]`` is the root ``top - i*delta``, except the zero weight
    (possible only in the string topped by delta itself) which is the
    Cartan line.
    """

    top: Vector
    p: int
    lines: tuple[Line, ...]


def delta_strings(rs: RootSystem, delta: Vector) -> tuple[DeltaString, ...]:
    """Partition all root lines plus the Cartan line into delta-strings.

    Tops are the roots that cannot be raised by delta, excluding -delta
    itself (its string is the one topped by delta), so every root appears
    in exactly one string.
    """
    if delta not in rs.positive_set:
        raise LambdaNotActive(f"{delta} is not a positive root")
    zero = rs.zero()
    all_roots = [r for r in rs.positive_roots]
    all_roots += [tuple(-x for x in r) for r in rs.positive_roots]
    root_set = set(all_roots)
    neg_delta = tuple(-x for x in delta)
    strings = []
    seen = 0
    for alpha in sorted(all_roots, key=lambda r: (-sum(r), r)):
        up = tuple(a + d for a, d in zip(alpha, delta))
        if up in root_set or alpha == neg_delta:
            continue
        p = rsmod.coroot_pairing(rs, delta, alpha)
        if p < 0:
            raise InvariantViolation(f"negative string length at top {alpha}")
        lines = []
        for i in range(p + 1):
            v = tuple(a - i * d for a, d in zip(alpha, delta))
            if v == zero:
                lines.append(Line(None))
            elif v in root_set:
                lines.append(Line(v))
            else:
                raise InvariantViolation(f"string through {alpha} leaves the roots")
        seen += len(lines)
        strings.append(DeltaString(alpha, p, tuple(lines)))
    if seen != len(all_roots) + 1:
        raise InvariantViolation("delta-strings do not partition the roots")
    return tuple(strings)


@dataclass(frozen=True)
class DegenerationResult:
    """Everything the limit produces: the new datum and the line movements."""

    source: SubgroupDatum
    lam: Vector
    delta: Vector
    target: SubgroupDatum
    pi_m: tuple[int, ...]
    u_infinity: tuple[Vector, ...]
    shift_map: dict = field(repr=False)
    limit_lines: tuple[Line, ...] = field(repr=False)


def degenerate(H: SubgroupDatum, lam: Vector, check: bool = True) -> DegenerationResult:
    """Degenerate a datum along one of its active roots.

    With ``check`` on, the limit is verified against the structure the
    theory guarantees: the whole opposite nilradical survives, the Levi part
    of the limit is the expected nilpotent cone plus the Cartan line, the
    new module is a union of full fibers, dimensions grow by exactly one,
    and (for spherical sources) the rank drops by exactly one.
    """
    lam = tuple(lam)
    if lam not in H.psi:
        raise LambdaNotActive(f"{lam} is not active in {H!r}")
    rs, L = H.rs, H.L
    delta = L.hat(lam)
    pu = {tuple(-x for x in beta) for beta in rs.positive_roots
          if not L.in_levi(beta)}
    h_perp = pu | set(H.u_roots)

    shift: dict[Vector, Line] = {}
    limit: list[Line] = []
    for string in delta_strings(rs, delta):
        members = [i for i, line in enumerate(string.lines)
                   if line.root is not None and line.root in h_perp]
        base = string.p - len(members) + 1
        for j, i in enumerate(members):
            target_line = string.lines[base + j]
            shift[string.lines[i].root] = target_line
            limit.append(target_line)

    pi_m = tuple(a for a in sorted(L.levi) if rsmod.pairing(rs, a, delta) == 0)
    u_inf = sorted(
        (line.root for line in limit
         if line.root is not None and min(line.root) >= 0
         and not L.in_levi(line.root)),
        key=lambda r: (sum(r), r))

    L_target = levi_datum(rs, pi_m)
    psi_target = sorted({L_target.restrict(beta) for beta in u_inf})
    target = make_subgroup(L_target, psi_target)

    result = DegenerationResult(H, lam, delta, target, pi_m,
                                tuple(u_inf), shift, tuple(limit))
    if check:
        _check_limit_structure(result, pu)
    return result


#: count of limit-structure verifications that ran (each raises on failure)
checks_run = 0


def _check_limit_structure(d: DegenerationResult, pu: set) -> None:
    global checks_run
    checks_run += 1
    H, rs, L = d.source, d.source.rs, d.source.L
    limit_roots = {line.root for line in d.limit_lines if line.root is not None}
    cartan_count = sum(1 for line in d.limit_lines if line.is_cartan)
    if cartan_count != 1:
        raise InvariantViolation("limit must contain the Cartan line exactly once")
    if len(d.limit_lines) != len(pu) + len(H.u_roots):
        raise InvariantViolation("limit changed dimension")

    # the opposite nilradical survives untouched
    if not pu <= limit_roots:
        raise InvariantViolation("limit lost part of the opposite nilradical")

    # Levi part of the limit: negatives of the Levi roots moved by delta
    levi_part = {r for r in limit_roots if L.in_levi(r)}
    expected = set()
    for gamma in L.delta_l_plus:
        value = rsmod.inner(rs, gamma, d.delta)
        if value < 0:
            raise InvariantViolation("highest fiber weight not Levi-dominant")
        if value > 0:
            expected.add(tuple(-x for x in gamma))
    if levi_part != expected:
        raise InvariantViolation("limit Levi part has the wrong shape")

    # the new module is a union of full fibers
    target = d.target
    fiber_union = set()
    for mu in target.psi:
        fiber_union.update(target.L.fiber(mu))
    if fiber_union != set(d.u_infinity):
        raise InvariantViolation("limit module is not fiber-saturated")

    # dim N = dim H + 1, in root-counting form
    dl = len(L.delta_l_plus)
    dm = len(target.L.delta_l_plus)
    total = len(rs.positive_roots)
    lhs = 2 * dl + (total - dl) - len(H.u_roots) + 1
    rhs = 2 * dm + (total - dm) - len(d.u_infinity)
    if lhs != rhs:
        raise InvariantViolation("degeneration dimension bookkeeping failed")

    spherical, rank = is_spherical_and_rank(H)
    if spherical:
        t_spherical, t_rank = is_spherical_and_rank(target)
        if not t_spherical or t_rank != rank - 1:
            raise InvariantViolation("rank did not drop by exactly one")


def track_component(d: DegenerationResult, i: int) -> int:
    """Follow one block of the source decomposition through the limit.

    The block must not contain the degeneration pivot.  Returns the index
    of the unique block of the target decomposition receiving the shifted
    fibers; straddling blocks or landing nowhere signals a bug.
    """
    source_blocks = sm_decomposition(d.source).components
    block = source_blocks[i]
    if d.lam in block:
        raise LambdaNotActive("cannot track the pivot's own block")
    u_inf = set(d.u_infinity)
    images = []
    for mu in block:
        for beta in d.source.L.fiber(mu):
            line = d.shift_map[beta]
            if line.root is not None and line.root in u_inf:
                images.append(line.root)
    if not images:
        raise AmbiguousComponent(f"block {block} has no image in the limit")
    target_blocks = sm_decomposition(d.target).components
    landed = {
        j
        for j, tb in enumerate(target_blocks)
        for beta in images
        if d.target.L.restrict(beta) in tb
    }
    if len(landed) != 1:
        raise AmbiguousComponent(f"block {block} straddles target blocks {landed}")
    return landed.pop()
