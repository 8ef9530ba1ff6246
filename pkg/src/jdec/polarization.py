"""Polarizations induced on factor lattices."""
from __future__ import annotations

from typing import Sequence

from . import linalg as la
from .linalg import IntMatrix, SubLattice


class PolarizationError(ValueError):
    pass


def induced_form(lattice: SubLattice | Sequence[Sequence[int]], E: IntMatrix) -> IntMatrix:
    """Restriction of E to the lattice, in its basis: B E B^t."""
    B = lattice.matrix() if isinstance(lattice, SubLattice) else [list(r) for r in lattice]
    F = la.matmul(la.matmul(B, E), la.transpose(B))
    if F != [[-x for x in row] for row in la.transpose(F)]:
        raise PolarizationError("restricted form is not skew-symmetric")
    return F


def polarization_type(F: IntMatrix) -> tuple[int, ...]:
    """(d_1, ..., d_k) for a nondegenerate skew form of size 2k.

    The Smith divisors of a skew form come in equal pairs; one of each pair
    is kept.
    """
    n = len(F)
    if n % 2:
        raise PolarizationError("skew form of odd size")
    divs = la.elementary_divisors(F)
    if len(divs) != n:
        raise PolarizationError("degenerate form")
    if any(divs[2 * k] != divs[2 * k + 1] for k in range(n // 2)):
        raise PolarizationError(f"divisors {divs} are not paired; not a skew form")
    return tuple(divs[0::2])
