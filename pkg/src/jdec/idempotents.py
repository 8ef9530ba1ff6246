"""Group algebra idempotents acting on the homology lattice.

A ``SymplecticRep`` assigns a 2g x 2g integer symplectic matrix to each
generator of a group. Group algebra elements are sent to rational matrices by
linearity, and their images give sublattices by saturation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping

from . import linalg as la
from .characters import RationalCharacter
from .groups import FiniteGroup, Subgroup
from .linalg import IntMatrix, RatMatrix, SubLattice


class RepError(ValueError):
    pass


def standard_form(g: int) -> IntMatrix:
    """[[0, I_g], [-I_g, 0]]."""
    n = 2 * g
    E = la.zeros(n, n)
    for i in range(g):
        E[i][g + i] = 1
        E[g + i][i] = -1
    return E


def is_symplectic(M, E) -> bool:
    return la.matmul(la.matmul(la.transpose(M), E), M) == E


@dataclass(eq=False)
class SymplecticRep:
    group: FiniteGroup
    genus: int
    images: list[IntMatrix]
    form: IntMatrix = field(default_factory=list)

    def __post_init__(self):
        if not self.form:
            self.form = standard_form(self.genus)

    @property
    def dim(self) -> int:
        return 2 * self.genus

    @cached_property
    def matrices(self) -> list[IntMatrix]:
        """Image of every group element, indexed like the group."""
        G = self.group
        out: list[IntMatrix | None] = [None] * G.order
        out[0] = la.identity(self.dim)
        if not G.words:
            raise RepError("group was not built from generators")
        # words come from breadth-first closure, so prefixes are computed first
        order = sorted(range(G.order), key=lambda i: sum(k for _, k in G.words[i]))
        for i in order[1:]:
            w = G.words[i]
            gi, k = w[-1]
            prefix = w[:-1] + (((gi, k - 1),) if k > 1 else ())
            j = _word_index(G, prefix)
            out[i] = la.matmul(out[j], self.images[gi])
        return out  # type: ignore[return-value]

    def check(self) -> list[str]:
        """Problems with the rep, empty when it is a symplectic homomorphism."""
        errs = []
        if len(self.images) != len(self.group.generators):
            return [f"{len(self.images)} generator images for {len(self.group.generators)} generators"]
        for k, M in enumerate(self.images):
            if la.shape(M) != (self.dim, self.dim):
                return [f"image of generator {k} is not {self.dim}x{self.dim}"]
            if not is_symplectic(M, self.form):
                errs.append(f"image of {self.group.names[k]} does not preserve the symplectic form")
        if errs:
            return errs
        mats = self.matrices
        G = self.group
        for x in range(G.order):
            for k, g in enumerate(G.generators):
                if la.matmul(mats[x], self.images[k]) != mats[G.mul[x][g]]:
                    return [f"relation fails: rho({G.word_of(x)}) rho({G.names[k]}) != rho({G.word_of(G.mul[x][g])})"]
        return errs


def _word_index(G: FiniteGroup, w) -> int:
    x = 0
    for gi, k in w:
        x = G.mul[x][G.power(G.generators[gi], k)]
    return x


# ----------------------------------------------------------- group algebra

@dataclass(frozen=True)
class GroupAlgebraElement:
    """A finitely supported map element index -> rational coefficient."""

    coeffs: tuple[tuple[int, Fraction], ...]

    @classmethod
    def from_dict(cls, d: Mapping[int, Fraction | int]) -> GroupAlgebraElement:
        return cls(tuple(sorted((k, Fraction(v)) for k, v in d.items() if v)))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coeffs)

    def add(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, Fraction(0)) + v
        return GroupAlgebraElement.from_dict(d)

    def mul(self, other: GroupAlgebraElement, G: FiniteGroup) -> GroupAlgebraElement:
        d: dict[int, Fraction] = {}
        for a, x in self.coeffs:
            row = G.mul[a]
            for b, y in other.coeffs:
                k = row[b]
                d[k] = d.get(k, Fraction(0)) + x * y
        return GroupAlgebraElement.from_dict(d)

    def is_zero(self) -> bool:
        return not self.coeffs


ONE = GroupAlgebraElement(((0, Fraction(1)),))


def p_H(H: Subgroup) -> GroupAlgebraElement:
    """(1/|H|) sum of the elements of H."""
    c = Fraction(1, H.order)
    return GroupAlgebraElement.from_dict({h: c for h in H.members})


def central_idempotent(W: RationalCharacter, G: FiniteGroup, column_of: list[int]) -> GroupAlgebraElement:
    """e_W, with coefficient (chi(1)/|G|) * Tr chi(g^-1) at g."""
    c = Fraction(W.degree, G.order)
    return GroupAlgebraElement.from_dict({g: c * W.values[column_of[G.inv[g]]] for g in range(G.order)})


def f_H_i(H: Subgroup, e_i: GroupAlgebraElement) -> GroupAlgebraElement:
    return p_H(H).mul(e_i, H.parent)


def rho(rep: SymplecticRep, alpha: GroupAlgebraElement) -> RatMatrix:
    n = rep.dim
    out = [[Fraction(0)] * n for _ in range(n)]
    mats = rep.matrices
    for g, a in alpha.coeffs:
        M = mats[g]
        for i in range(n):
            Mi, oi = M[i], out[i]
            for j in range(n):
                if Mi[j]:
                    oi[j] += a * Mi[j]
    return out


@dataclass(frozen=True)
class FactorVariety:
    label: str
    lattice: SubLattice
    source: GroupAlgebraElement = field(repr=False)

    @property
    def dim(self) -> int:
        return self.lattice.rank // 2

    @property
    def is_zero(self) -> bool:
        return self.lattice.rank == 0


def lattice_of_matrix(M: RatMatrix, ambient_rank: int) -> SubLattice:
    """Saturated lattice spanned by the columns of M."""
    return la.saturate(la.rational_column_space(M), ambient_rank)


def image_lattice(rep: SymplecticRep, alpha: GroupAlgebraElement, label: str = "") -> FactorVariety:
    """Lattice of Im(alpha): rho(alpha)(Q^2g) intersected with Z^2g."""
    M = rho(rep, alpha)
    if la.matmul(M, M) != M:
        raise RepError(f"rho({label or 'alpha'}) is not idempotent")
    lat = lattice_of_matrix(M, rep.dim)
    if lat.rank % 2:
        raise RepError(f"image of {label or 'alpha'} has odd rank {lat.rank}; input is not symplectic")
    return FactorVariety(label, lat, alpha)


def quotient_genus(rep: SymplecticRep, H: Subgroup) -> int:
    """Genus of X/H, read off as rank(rho(p_H)) / 2."""
    r = la.rank(rho(rep, p_H(H)))
    if r % 2:
        raise RepError(f"rho(p_H) has odd rank {r}")
    return r // 2
