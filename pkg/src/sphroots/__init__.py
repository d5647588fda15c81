"""Exact computation of spherical root sets for Levi-split spherical subgroups.

The engine works entirely with root-system combinatorics over the integers:
a subgroup is encoded by its ambient simple type, the simple roots of a
standard Levi subgroup, and the set of active restricted roots of its
unipotent part.  From that datum it decides sphericity, computes the rank,
runs the degeneration-based solvers for the spherical root set, and
regenerates the classification tables by exhaustive enumeration.
"""

from .rootsystem import RootSystem, build
from .croots import LeviDatum, levi_datum
from .subgroup import SubgroupDatum, make_subgroup

__all__ = [
    "RootSystem",
    "build",
    "LeviDatum",
    "levi_datum",
    "SubgroupDatum",
    "make_subgroup",
]
