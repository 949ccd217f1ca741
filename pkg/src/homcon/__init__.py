"""Mod-2 homology of orbit complexes, partitions in a rectangle, plane
partitions in a box and necklaces, with discrete Morse certification."""

from .chain import GradedComplex, euler_characteristic, homology_ranks
from .errors import ClaimViolation, GroupSpecError, HomconError, LimitExceeded, Limits
from .gf2 import F2Matrix, kernel, multiply, rank
from .orbit_complex import ComplexKind, build, homology, masked_homotopy_check
from .permgroup import PermGroup, Permutation, parse_group
from .qpoly import QPolynomial, cyclic_orbit_polynomial, macmahon, q_binomial

__version__ = "0.1.0"

__all__ = [
    "ClaimViolation",
    "ComplexKind",
    "F2Matrix",
    "GradedComplex",
    "GroupSpecError",
    "HomconError",
    "LimitExceeded",
    "Limits",
    "PermGroup",
    "Permutation",
    "QPolynomial",
    "build",
    "cyclic_orbit_polynomial",
    "euler_characteristic",
    "homology",
    "homology_ranks",
    "kernel",
    "macmahon",
    "masked_homotopy_check",
    "multiply",
    "parse_group",
    "q_binomial",
    "rank",
]
