"""Effective sets of subgroups and kernel minimization.

For each rational irreducible W_i with a nonzero isotypical component, the
pool holds every subgroup H with dim V_i^H = m_i whose idempotent f_H^i has a
nonzero image. A choice of n_i distinct pool members per W_i stacks the factor
lattices into the square matrix L_S; |det L_S| is the order of the kernel of
the sum map from the product of the factors onto JX.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg as la
from .characters import CharacterTable, RationalCharacter, fixed_dim, galois_orbits
from .groups import FiniteGroup, Subgroup, SubgroupClass
from .idempotents import (
    FactorVariety,
    SymplecticRep,
    central_idempotent,
    f_H_i,
    image_lattice,
    p_H,
    quotient_genus,
    rho,
)
from .linalg import IntMatrix


class MethodInapplicable(RuntimeError):
    pass


@dataclass(frozen=True)
class PoolMember:
    subgroup: Subgroup
    factor: FactorVariety
    class_index: int
    condition_ii: bool

    @property
    def order(self) -> int:
        return self.subgroup.order


@dataclass
class Pool:
    index: int  # position in the list of rational characters
    character: RationalCharacter
    isotypical_rank: int
    members: list[PoolMember]

    @property
    def n_factors(self) -> int:
        return self.character.n_factors


@dataclass
class CandidatePools:
    rep: SymplecticRep
    table: CharacterTable
    characters: list[RationalCharacter]
    isotypical_ranks: list[int]
    pools: list[Pool]
    missing: list[str] = field(default_factory=list)

    @property
    def applicable(self) -> bool:
        return not self.missing


@dataclass
class EffectiveSet:
    choices: tuple[tuple[int, ...], ...]  # per pool, indices into pool.members
    L: IntMatrix
    kernel_order: int
    diagnostic: str = ""

    @property
    def is_effective(self) -> bool:
        return self.kernel_order != 0

    @property
    def is_isomorphism(self) -> bool:
        return self.kernel_order == 1


@dataclass
class SearchResult:
    best: EffectiveSet | None
    evaluated: int
    total: int
    exhausted: bool
    trace: list[tuple[tuple[tuple[int, ...], ...], int]] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.evaluated == self.total or (self.best is not None and self.best.kernel_order == 1)


def isotypical_ranks(rep: SymplecticRep, table: CharacterTable, chars: Sequence[RationalCharacter]) -> list[int]:
    G = rep.group
    return [la.rank(rho(rep, central_idempotent(W, G, table.column_of))) for W in chars]


def check_condition_ii(
    table: CharacterTable,
    chars: Sequence[RationalCharacter],
    ranks: Sequence[int],
    H: Subgroup,
    i: int,
) -> bool:
    """dim V_l^H = 0 for every l != i whose isotypical component is nonzero."""
    return all(
        fixed_dim(table, W.representative, H) == 0
        for l, (W, r) in enumerate(zip(chars, ranks))
        if l != i and r > 0
    )


def build_pools(
    rep: SymplecticRep,
    table: CharacterTable,
    subgroup_classes: Sequence[SubgroupClass],
) -> CandidatePools:
    """Candidate subgroups per rational irreducible with nonzero component.

    Raises ``MethodInapplicable`` when X/G has positive genus or g = 0.
    Empty pools are listed in ``missing`` rather than raised.
    """
    G = rep.group
    if rep.genus == 0:
        raise MethodInapplicable("genus 0: nothing to decompose")
    whole = Subgroup(G, frozenset(range(G.order)))
    if quotient_genus(rep, whole) != 0:
        raise MethodInapplicable("X/G has positive genus; the method needs a genus-0 total quotient")
    chars = galois_orbits(table)
    ranks = isotypical_ranks(rep, table, chars)
    pools, missing = [], []
    for i, (W, r) in enumerate(zip(chars, ranks)):
        if r == 0:
            continue
        e_i = central_idempotent(W, G, table.column_of)
        members = []
        for ci, cl in enumerate(subgroup_classes):
            if fixed_dim(table, W.representative, cl.representative) != W.schur_index:
                continue
            cond_ii = check_condition_ii(table, chars, ranks, cl.representative, i)
            for H in cl.conjugates:
                alpha = p_H(H) if cond_ii else f_H_i(H, e_i)
                factor = image_lattice(rep, alpha, label=f"{'p_H' if cond_ii else 'f_H'}[{W.name}]")
                if factor.is_zero:
                    continue
                members.append(PoolMember(H, factor, ci, cond_ii))
        if not members:
            missing.append(W.name)
        pools.append(Pool(i, W, r, members))
    return CandidatePools(rep, table, chars, ranks, pools, missing)


def assemble_L(pools: Sequence[Pool], choices: Sequence[Sequence[int]], ambient_rank: int) -> EffectiveSet:
    """Stack the chosen factor lattices and take |det|."""
    rows: IntMatrix = []
    for pool, pick in zip(pools, choices):
        for k in pick:
            rows.extend(pool.members[k].factor.lattice.matrix())
    choices = tuple(tuple(c) for c in choices)
    if len(rows) != ambient_rank:
        return EffectiveSet(choices, rows, 0, f"dimension mismatch: {len(rows)} rows for rank {ambient_rank}")
    return EffectiveSet(choices, rows, abs(la.det_exact(rows)))


def enumerate_choices(pools: Sequence[Pool]):
    """Unordered selections of n_i distinct members per pool, in lexicographic order."""
    per_pool = [itertools.combinations(range(len(p.members)), p.n_factors) for p in pools]
    return itertools.product(*per_pool)


def count_choices(pools: Sequence[Pool]) -> int:
    from math import comb, prod

    return prod(comb(len(p.members), p.n_factors) for p in pools)


def minimize_kernel(
    pools: Sequence[Pool],
    ambient_rank: int,
    budget: int | None = None,
    time_limit: float | None = None,
    keep_trace: bool = False,
) -> SearchResult:
    """Exhaustive search for the smallest positive kernel order.

    Stops at the first set with kernel order 1. ``budget`` caps the number of
    sets evaluated; ``budget=0`` evaluates nothing. Ties go to the first set in
    enumeration order, i.e. the lexicographically smallest choice.
    """
    total = count_choices(pools)
    best: EffectiveSet | None = None
    evaluated = 0
    trace = []
    start = time.monotonic()
    exhausted = False
    for choice in enumerate_choices(pools):
        if budget is not None and evaluated >= budget:
            exhausted = True
            break
        if time_limit is not None and time.monotonic() - start > time_limit:
            exhausted = True
            break
        es = assemble_L(pools, choice, ambient_rank)
        evaluated += 1
        if keep_trace:
            trace.append((es.choices, es.kernel_order))
        if es.kernel_order and (best is None or es.kernel_order < best.kernel_order):
            best = es
            if best.kernel_order == 1:
                break
    return SearchResult(best, evaluated, total, exhausted and (best is None or best.kernel_order != 1), trace)
