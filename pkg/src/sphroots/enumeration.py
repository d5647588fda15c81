"""Exhaustive case enumeration and classification-table verification.

For a fixed ambient type, enumerate every parabolic with a one- or
two-node complement and every admissible active set, decide sphericity and
block-triviality, solve the surviving cases, and compare the outcome with
the instantiated table rows.  Cases are canonicalized modulo diagram
automorphisms before comparison, and the spherical-root sets are compared
in canonical coordinates.

Only cases whose active supports cover the whole diagram are kept: a case
with smaller support is the same case inside a smaller ambient group and
is enumerated there.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import rootsystem as rsmod
from .croots import levi_datum
from .errors import ClosureViolation, UnclassifiedCase, UnclassifiedLeaf
from .rootsystem import RootSystem, Vector, diagram_automorphisms
from .solver import base_solve
from .sphericity import is_spherical_and_rank
from .subgroup import SubgroupDatum, make_subgroup, sm_decomposition
from .tables import MatchResult, iter_instances, match_datum

CaseKey = tuple[tuple[int, ...], tuple[Vector, ...]]


@dataclass(frozen=True)
class CaseRecord:
    """One enumerated case, stored by its canonical representative."""

    datum: SubgroupDatum
    spherical: bool
    rank: Optional[int]
    sm_trivial: bool
    sigma: Optional[tuple[Vector, ...]] = None
    matched_row: Optional[tuple] = None  # (table, row, params, automorphism)

    def to_json(self) -> dict:
        out = dict(self.datum.to_wire())
        out["spherical"] = self.spherical
        out["spherical_rank"] = self.rank
        out["sm_trivial"] = self.sm_trivial
        out["sigma"] = [list(v) for v in self.sigma] if self.sigma is not None else None
        if self.matched_row is not None:
            table, row, params, auto = self.matched_row
            out["matched_row"] = {"table": table, "row": row,
                                  "params": list(params), "automorphism": list(auto)}
        else:
            out["matched_row"] = None
        return out


def _apply_automorphism(perm: tuple[int, ...], complement, psi) -> CaseKey:
    new_complement = tuple(sorted(perm[c - 1] for c in complement))
    new_psi = []
    for lam in psi:
        weights = {perm[c - 1]: x for c, x in zip(complement, lam)}
        new_psi.append(tuple(weights.get(a, 0) for a in new_complement))
    return new_complement, tuple(sorted(new_psi))


def _map_vector(perm: tuple[int, ...], v: Vector) -> Vector:
    out = [0] * len(perm)
    for i, x in enumerate(v):
        out[perm[i] - 1] = x
    return tuple(out)


def canonical_key(rs: RootSystem, complement, psi) -> tuple[CaseKey, tuple[int, ...]]:
    """Least image of (complement, psi) over the diagram automorphisms.

    Returns the key together with the automorphism achieving it.
    """
    best = None
    best_perm = None
    for perm in diagram_automorphisms(rs.type_label, rs.rank):
        key = _apply_automorphism(perm, complement, psi)
        if best is None or key < best:
            best, best_perm = key, perm
    return best, best_perm


def _candidate_psis(L, psi_size: int) -> list[tuple[Vector, ...]]:
    units = sorted({L.restrict(L.rs.simple_root(a)) for a in L.complement})
    if psi_size == 1:
        return [(lam,) for lam in units]
    out = set()
    for lam in units:
        for mu in L.phi_plus:
            if mu != lam:
                out.add(tuple(sorted((lam, mu))))
    return sorted(out)


def enumerate_cases(rs: RootSystem, complement_size: int, psi_size: int,
                    solve: bool = True, check: bool = True) -> list[CaseRecord]:
    """All canonical full-support cases for the given shape.

    Candidate active sets pair a complement simple root with any other
    positive restricted root; the subalgebra closure condition prunes the
    rest.  Two-root cases where either fiber is a line are dropped (their
    block structure is never trivial).  Spherical cases with one block are
    solved and matched against the tables when ``solve`` is set.
    """
    if psi_size not in (1, 2):
        raise ValueError("psi_size must be 1 or 2")
    if psi_size == 1 and complement_size != 1:
        raise ValueError("single active root cases use one complement node")
    records: dict[CaseKey, CaseRecord] = {}
    full = frozenset(range(1, rs.rank + 1))
    for complement in itertools.combinations(range(1, rs.rank + 1),
                                             complement_size):
        levi = [a for a in range(1, rs.rank + 1) if a not in complement]
        L = levi_datum(rs, levi)
        for psi in _candidate_psis(L, psi_size):
            key, perm = canonical_key(rs, complement, psi)
            if key in records:
                continue
            try:
                H = make_subgroup(L, psi)
            except ClosureViolation:
                continue
            if psi_size == 2 and any(len(L.fiber(lam)) == 1 for lam in psi):
                continue
            support = frozenset().union(
                *(L.croot_support(lam) for lam in psi))
            if support != full:
                continue
            records[key] = _build_record(rs, key, H, perm, solve, check)
    return [records[key] for key in sorted(records)]


def _build_record(rs, key, H, perm, solve, check) -> CaseRecord:
    complement, psi = key
    levi = [a for a in range(1, rs.rank + 1) if a not in set(complement)]
    canonical = make_subgroup(levi_datum(rs, levi), psi)
    spherical, rank = is_spherical_and_rank(canonical)
    trivial = sm_decomposition(canonical).trivial
    sigma = None
    matched = None
    if spherical and solve:
        sigma = base_solve(canonical, check=check).roots
        if trivial:
            try:
                match = _match_full(canonical)
                matched = (match.table_id, match.row_id, match.params,
                           tuple(match.iso[a] for a in range(1, rs.rank + 1)))
            except (UnclassifiedCase, UnclassifiedLeaf):
                matched = None
    return CaseRecord(canonical, spherical, rank, trivial, sigma, matched)


def _match_full(H: SubgroupDatum) -> MatchResult:
    tables = (1,) if len(H.psi) == 1 else tuple(range(2, 10))
    return match_datum(H, tables)


@dataclass
class DiffReport:
    """Outcome of comparing enumerated cases against table instantiations."""

    scope: str
    missing: list = field(default_factory=list)   # expected but not found
    extra: list = field(default_factory=list)     # found but not expected
    rank_mismatches: list = field(default_factory=list)
    sigma_mismatches: list = field(default_factory=list)
    checked: int = 0

    @property
    def empty(self) -> bool:
        return not (self.missing or self.extra or
                    self.rank_mismatches or self.sigma_mismatches)

    def to_json(self) -> dict:
        return {
            "scope": self.scope,
            "checked": self.checked,
            "missing": self.missing,
            "extra": self.extra,
            "rank_mismatches": self.rank_mismatches,
            "sigma_mismatches": self.sigma_mismatches,
            "empty": self.empty,
        }


@dataclass(frozen=True)
class ExpectedCase:
    key: CaseKey
    rank: int
    sigma: frozenset[Vector]
    rows: tuple[str, ...]


def expected_cases(family: str, n: int) -> dict[CaseKey, ExpectedCase]:
    """Canonicalized table instantiations for one ambient type.

    Several rows may instantiate to the same case (conjugate encodings);
    they must then agree on rank and canonical root set.
    """
    rs = rsmod.build(family, n)
    out: dict[CaseKey, ExpectedCase] = {}
    for inst in iter_instances(family, n, tables=range(2, 10)):
        key, perm = canonical_key(rs, inst.complement, inst.psi)
        sigma = frozenset(_map_vector(perm, v) for v in inst.sigma)
        label = f"t{inst.table_id}r{inst.row_id}{list(inst.params)}"
        if key in out:
            prev = out[key]
            if prev.rank != inst.rank or prev.sigma != sigma:
                raise UnclassifiedCase(
                    f"conflicting expected rows {prev.rows} vs {label}")
            out[key] = ExpectedCase(key, prev.rank, prev.sigma,
                                    prev.rows + (label,))
        else:
            out[key] = ExpectedCase(key, inst.rank, sigma, (label,))
    return out


def actual_cases(family: str, n: int, check: bool = True) -> dict[CaseKey, CaseRecord]:
    """Spherical one-block cases found by exhaustive enumeration."""
    rs = rsmod.build(family, n)
    found: dict[CaseKey, CaseRecord] = {}
    sizes = [1, 2] if n >= 2 else [1]
    for complement_size in sizes:
        for record in enumerate_cases(rs, complement_size, psi_size=2,
                                      solve=True, check=check):
            if record.spherical and record.sm_trivial:
                key = (record.datum.L.complement, record.datum.psi)
                found[key] = record
    return found


def diff_cases(scope: str, expected: dict[CaseKey, ExpectedCase],
               actual: dict[CaseKey, CaseRecord]) -> DiffReport:
    report = DiffReport(scope=scope)
    for key in sorted(set(expected) | set(actual)):
        if key not in actual:
            report.missing.append({"case": _key_json(key),
                                   "rows": list(expected[key].rows)})
            continue
        if key not in expected:
            report.extra.append({"case": _key_json(key)})
            continue
        exp, act = expected[key], actual[key]
        report.checked += 1
        if act.rank != exp.rank:
            report.rank_mismatches.append(
                {"case": _key_json(key), "expected": exp.rank, "actual": act.rank})
        if frozenset(act.sigma or ()) != exp.sigma:
            report.sigma_mismatches.append({
                "case": _key_json(key),
                "expected": sorted(map(list, exp.sigma)),
                "actual": sorted(map(list, act.sigma or ())),
            })
    return report


def _key_json(key: CaseKey) -> dict:
    complement, psi = key
    return {"complement": list(complement), "psi": [list(v) for v in psi]}


def verify_tables(family: str, ranks: Optional[Iterable[int]] = None,
                  max_rank: int = 10, check: bool = True) -> DiffReport:
    """Regenerate one type's table rows by enumeration and diff them.

    Classical families default to every rank from their minimum through
    ``max_rank``; exceptional types have one rank.  The report is empty
    exactly when the enumeration reproduces the tables.
    """
    family, fixed = _family_ranks(family, ranks, max_rank)
    combined = DiffReport(scope=f"{family}[{','.join(map(str, fixed))}]")
    for n in fixed:
        expected = expected_cases(family, n)
        actual = actual_cases(family, n, check=check)
        part = diff_cases(f"{family}{n}", expected, actual)
        combined.missing += part.missing
        combined.extra += part.extra
        combined.rank_mismatches += part.rank_mismatches
        combined.sigma_mismatches += part.sigma_mismatches
        combined.checked += part.checked
    return combined


def _family_ranks(family: str, ranks, max_rank) -> tuple[str, list[int]]:
    label = family.strip().upper()
    if label in rsmod._FIXED_RANK:
        return label, [rsmod._FIXED_RANK[label]]
    if label not in ("A", "B", "C", "D"):
        raise rsmod.InvalidType(f"unknown family {family!r}")
    if ranks is not None:
        return label, sorted(set(ranks))
    lo = {"A": 3, "B": 3, "C": 3, "D": 4}[label]
    return label, list(range(lo, max_rank + 1))
